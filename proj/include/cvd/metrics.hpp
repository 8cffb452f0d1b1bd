#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace cvd::metrics {

struct ConfusionMatrix {
    std::uint64_t tp = 0;
    std::uint64_t fp = 0;
    std::uint64_t fn = 0;
    std::uint64_t tn = 0;

    std::uint64_t total() const { return tp + fp + fn + tn; }
};

struct MetricsReport {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    double mcc = 0.0;
    double kappa = 0.0;
};

// Counts (true, pred) pairs; labels must be 0/1 and the vectors non-empty
// and of equal length.
ConfusionMatrix confusion(const std::vector<int>& y_true,
                          const std::vector<int>& y_pred);

// All six scores from the counts. Precision/recall/F1 are positive-class
// scores. Any zero denominator yields 0.0.
MetricsReport evaluate(const ConfusionMatrix& cm);

// One table row per model, in the given order. Columns: Model, Test Accuracy
// (percent, 2 decimals, trailing '%'), Precision, Recall, F1, MCC, CK (all 2
// decimals).
std::string metrics_table_csv(
    const std::vector<std::pair<std::string, MetricsReport>>& rows);
std::string metrics_table_text(
    const std::vector<std::pair<std::string, MetricsReport>>& rows);

}  // namespace cvd::metrics
