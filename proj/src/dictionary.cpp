#include "cvd/dictionary.hpp"

#include <cctype>
#include <fstream>
#include <unordered_set>

#include "cvd/common.hpp"

namespace cvd::dictionary {
namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

char ascii_lower(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

// Maximal alphanumeric runs with the text offset of the character following
// each run, so that separators between adjacent words can be inspected.
struct WordSpan {
    std::string lower;
    std::size_t begin = 0;
    std::size_t end = 0;  // one past the last character
};

std::vector<WordSpan> word_spans(const std::string& text) {
    std::vector<WordSpan> spans;
    const std::size_t n = text.size();
    std::size_t i = 0;
    while (i < n) {
        if (!is_ascii_alnum(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        WordSpan span;
        span.begin = i;
        while (i < n && is_ascii_alnum(static_cast<unsigned char>(text[i]))) {
            span.lower.push_back(ascii_lower(static_cast<unsigned char>(text[i])));
            ++i;
        }
        span.end = i;
        spans.push_back(std::move(span));
    }
    return spans;
}

std::vector<std::string> phrase_words(const std::string& phrase) {
    std::vector<std::string> words;
    std::string cur;
    for (char c : phrase) {
        if (c == ' ') {
            if (!cur.empty()) words.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    return words;
}

bool whitespace_only(const std::string& text, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) return false;
    return true;
}

std::string canonical_phrase(const std::string& raw) {
    std::string out;
    bool pending_space = false;
    for (char c : raw) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!out.empty()) pending_space = true;
        } else {
            if (pending_space) out.push_back(' ');
            pending_space = false;
            out.push_back(ascii_lower(static_cast<unsigned char>(c)));
        }
    }
    return out;
}

}  // namespace

const char* category_name(Category c) {
    switch (c) {
        case Category::kClinical: return "clinical";
        case Category::kBehavioral: return "behavioral";
        case Category::kPsychological: return "psychological";
    }
    return "?";
}

Category category_from_name(const std::string& name) {
    if (name == "clinical") return Category::kClinical;
    if (name == "behavioral") return Category::kBehavioral;
    if (name == "psychological") return Category::kPsychological;
    throw DataError("dictionary: unknown category '" + name + "'");
}

KeywordDictionary default_dictionary() {
    return KeywordDictionary{{
        {"anesthesia", Category::kClinical},
        {"angiogram", Category::kClinical},
        {"cardiologist", Category::kClinical},
        {"echocardiogram", Category::kClinical},
        {"heart attack", Category::kClinical},
        {"heart failure", Category::kClinical},
        {"hypertension", Category::kClinical},
        {"chest pain", Category::kClinical},
        {"smoking", Category::kBehavioral},
        {"cholesterol", Category::kBehavioral},
        {"alcohol", Category::kBehavioral},
        {"stress", Category::kPsychological},
    }};
}

std::set<std::string> match_keywords(const std::string& text,
                                     const KeywordDictionary& dict) {
    if (dict.entries.empty()) throw DataError("match_keywords: empty dictionary");
    std::set<std::string> matched;
    if (text.empty()) return matched;
    const std::vector<WordSpan> spans = word_spans(text);
    for (const Entry& entry : dict.entries) {
        const std::vector<std::string> words = phrase_words(entry.phrase);
        if (words.empty() || words.size() > spans.size()) continue;
        for (std::size_t start = 0; start + words.size() <= spans.size(); ++start) {
            bool ok = true;
            for (std::size_t w = 0; w < words.size() && ok; ++w) {
                if (spans[start + w].lower != words[w]) {
                    ok = false;
                } else if (w > 0 && !whitespace_only(text, spans[start + w - 1].end,
                                                     spans[start + w].begin)) {
                    ok = false;
                }
            }
            if (ok) {
                matched.insert(entry.phrase);
                break;
            }
        }
    }
    return matched;
}

KeywordDictionary load_dictionary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("dictionary: cannot open " + path);
    KeywordDictionary dict;
    std::unordered_set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t comma = line.rfind(',');
        if (comma == std::string::npos)
            throw DataError("dictionary: line " + std::to_string(line_no) +
                            ": expected 'phrase,category'");
        const std::string phrase = canonical_phrase(line.substr(0, comma));
        const std::string category = line.substr(comma + 1);
        if (phrase.empty())
            throw DataError("dictionary: line " + std::to_string(line_no) +
                            ": empty phrase");
        if (!seen.insert(phrase).second)
            throw DataError("dictionary: line " + std::to_string(line_no) +
                            ": duplicate phrase '" + phrase + "'");
        dict.entries.push_back({phrase, category_from_name(category)});
    }
    if (dict.entries.empty()) throw DataError("dictionary: " + path + " is empty");
    return dict;
}

void save_dictionary(const KeywordDictionary& dict, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DataError("dictionary: cannot write " + path);
    for (const Entry& e : dict.entries)
        out << e.phrase << ',' << category_name(e.category) << '\n';
}

}  // namespace cvd::dictionary
