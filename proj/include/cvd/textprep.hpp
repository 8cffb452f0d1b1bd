#pragma once

#include <string>
#include <unordered_set>
#include <vector>

namespace cvd::textprep {

// Ordered lowercase tokens; no empties, no internal whitespace.
struct TokenStream {
    std::vector<std::string> tokens;

    bool operator==(const TokenStream&) const = default;
};

// Social-media cleanup: drops URL tokens (http://, https://, www. prefixes,
// case-insensitive) and @mentions, strips leading '#' from hashtags, and
// collapses whitespace. Casing and punctuation are otherwise preserved —
// sentiment scoring needs them.
std::string normalize(const std::string& text);

// Splits on runs of non-alphanumeric characters, keeping apostrophes that
// sit between two alphanumerics ("don't"); lowercases ASCII letters.
// Non-ASCII bytes act as separators.
TokenStream tokenize(const std::string& text);

// Order-preserving filter. The stoplist must be lowercase.
TokenStream remove_stopwords(const TokenStream& ts,
                             const std::unordered_set<std::string>& stoplist);

// 100-word common-English function-word list minus the negators
// {no, not, nor, never}, which stay in the stream as polarity cues.
// data/stoplist_en.txt ships the same 96 words.
const std::unordered_set<std::string>& default_stoplist();

// Loads a one-word-per-line stoplist file.
std::unordered_set<std::string> load_stoplist(const std::string& path);

// Porter stemmer, steps 1a-5b as originally published, plus the customary
// guard that leaves words of length <= 2 untouched. Input must be lowercase.
std::string stem(const std::string& token);

// normalize -> tokenize -> remove_stopwords -> stem, in that order.
TokenStream preprocess_for_features(const std::string& text);
TokenStream preprocess_for_features(const std::string& text,
                                    const std::unordered_set<std::string>& stoplist);

}  // namespace cvd::textprep
