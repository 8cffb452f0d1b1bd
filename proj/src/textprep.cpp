#include "cvd/textprep.hpp"

#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cvd/common.hpp"

namespace cvd::textprep {
namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char ascii_lower(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

bool starts_with_nocase(const std::string& token, const char* prefix) {
    std::size_t i = 0;
    for (; prefix[i] != '\0'; ++i) {
        if (i >= token.size()) return false;
        if (ascii_lower(static_cast<unsigned char>(token[i])) != prefix[i]) return false;
    }
    return true;
}

std::vector<std::string> split_whitespace(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty()) {
                out.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

}  // namespace

std::string normalize(const std::string& text) {
    std::string out;
    for (std::string& token : split_whitespace(text)) {
        if (starts_with_nocase(token, "http://") || starts_with_nocase(token, "https://") ||
            starts_with_nocase(token, "www."))
            continue;
        if (token.front() == '@') continue;
        std::size_t start = 0;
        while (start < token.size() && token[start] == '#') ++start;
        if (start == token.size()) continue;
        if (!out.empty()) out.push_back(' ');
        out.append(token, start, std::string::npos);
    }
    return out;
}

TokenStream tokenize(const std::string& text) {
    TokenStream ts;
    std::string cur;
    const std::size_t n = text.size();
    for (std::size_t i = 0; i < n; ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_ascii_alnum(c)) {
            cur.push_back(ascii_lower(c));
        } else if (c == '\'' && !cur.empty() && i + 1 < n &&
                   is_ascii_alnum(static_cast<unsigned char>(text[i + 1]))) {
            cur.push_back('\'');
        } else if (!cur.empty()) {
            ts.tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) ts.tokens.push_back(std::move(cur));
    return ts;
}

TokenStream remove_stopwords(const TokenStream& ts,
                             const std::unordered_set<std::string>& stoplist) {
    TokenStream out;
    out.tokens.reserve(ts.tokens.size());
    for (const auto& tok : ts.tokens)
        if (!stoplist.count(tok)) out.tokens.push_back(tok);
    return out;
}

const std::unordered_set<std::string>& default_stoplist() {
    // 100 function words minus {no, not, nor, never}.
    static const std::unordered_set<std::string> words = {
        "a",      "about",  "after", "again",  "against", "all",    "am",
        "an",     "and",    "any",   "are",    "as",      "at",     "be",
        "because", "been",  "before", "being", "but",     "by",     "can",
        "could",  "did",    "do",    "does",   "doing",   "down",   "during",
        "each",   "few",    "for",   "from",   "had",     "has",    "have",
        "he",     "her",    "here",  "him",    "his",     "how",    "i",
        "if",     "in",     "into",  "is",     "it",      "its",    "just",
        "me",     "more",   "most",  "my",     "now",     "of",     "off",
        "on",     "only",   "or",    "other",  "our",     "out",    "over",
        "own",    "she",    "so",    "some",   "than",    "that",   "the",
        "their",  "them",   "then",  "there",  "these",   "they",   "this",
        "those",  "through", "to",   "up",     "very",    "was",    "we",
        "were",   "what",   "when",  "where",  "which",   "who",    "why",
        "will",   "with",   "would", "you",    "your",
    };
    return words;
}

std::unordered_set<std::string> load_stoplist(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("stoplist: cannot open " + path);
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        for (char c : line)
            if (std::isspace(static_cast<unsigned char>(c)) ||
                std::isupper(static_cast<unsigned char>(c)))
                throw DataError("stoplist: entries must be single lowercase words: '" +
                                line + "'");
        words.insert(line);
    }
    return words;
}

TokenStream preprocess_for_features(const std::string& text,
                                    const std::unordered_set<std::string>& stoplist) {
    TokenStream ts = remove_stopwords(tokenize(normalize(text)), stoplist);
    for (auto& tok : ts.tokens) tok = stem(tok);
    return ts;
}

TokenStream preprocess_for_features(const std::string& text) {
    return preprocess_for_features(text, default_stoplist());
}

}  // namespace cvd::textprep
