#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cvd {

// Exit codes used by the CLI. Library code throws the matching exception
// type; the CLI maps it to the code.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 2,
    kExitDataError = 3,
    kExitTrainError = 4,
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

struct TrainError : std::runtime_error {
    explicit TrainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cvd
