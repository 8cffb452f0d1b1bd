#pragma once

#include <set>
#include <string>
#include <vector>

namespace cvd::dictionary {

enum class Category { kClinical, kBehavioral, kPsychological };

const char* category_name(Category c);
Category category_from_name(const std::string& name);

struct Entry {
    std::string phrase;  // lowercase, single-spaced
    Category category;

    bool operator==(const Entry&) const = default;
};

// Immutable after construction; matching is pure.
struct KeywordDictionary {
    std::vector<Entry> entries;

    bool operator==(const KeywordDictionary&) const = default;
};

// The 12-entry CVD keyword dictionary: 8 clinical terms, 3 behavioral risk
// factors, 1 psychological.
KeywordDictionary default_dictionary();

// Case-insensitive phrase match against raw text. Multi-token phrases match
// across any run of whitespace; boundaries are alphanumeric transitions, so
// "#smoking" matches "smoking" but "smokingly" does not. Returns the set of
// matched phrases.
std::set<std::string> match_keywords(const std::string& text,
                                     const KeywordDictionary& dict);

// CSV, two columns `phrase,category`, no header. Phrases are trimmed,
// lowercased and inner-whitespace-collapsed before validation; duplicates,
// unknown categories and empty files are errors.
KeywordDictionary load_dictionary(const std::string& path);

void save_dictionary(const KeywordDictionary& dict, const std::string& path);

}  // namespace cvd::dictionary
