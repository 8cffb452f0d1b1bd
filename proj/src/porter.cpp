#include <string>

// Porter stemmer. Steps 1a through 5b of the original published algorithm.
// The word is held in a buffer `b`; `k` indexes its last letter and `j`
// marks the end of the candidate stem while a rule is being considered.

namespace cvd::textprep {
namespace {

class PorterState {
  public:
    explicit PorterState(const std::string& word) : b_(word), k_(word.size() - 1) {}

    std::string run() {
        if (b_.size() <= 2) return b_;
        step1a();
        step1b();
        step1c();
        step2();
        step3();
        step4();
        step5a();
        step5b();
        return b_.substr(0, k_ + 1);
    }

  private:
    // True when b_[i] is a consonant. 'y' counts as a consonant only when it
    // is the first letter or follows a vowel position.
    bool cons(int i) const {
        switch (b_[i]) {
            case 'a': case 'e': case 'i': case 'o': case 'u':
                return false;
            case 'y':
                return i == 0 ? true : !cons(i - 1);
            default:
                return true;
        }
    }

    // Measure of the stem b_[0..j_]: the number of vowel-consonant spans.
    int m() const {
        int n = 0;
        int i = 0;
        for (;;) {
            if (i > j_) return n;
            if (!cons(i)) break;
            ++i;
        }
        ++i;
        for (;;) {
            for (;;) {
                if (i > j_) return n;
                if (cons(i)) break;
                ++i;
            }
            ++i;
            ++n;
            for (;;) {
                if (i > j_) return n;
                if (!cons(i)) break;
                ++i;
            }
            ++i;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j_; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool double_cons(int i) const {
        if (i < 1) return false;
        if (b_[i] != b_[i - 1]) return false;
        return cons(i);
    }

    // consonant-vowel-consonant ending at i, where the final consonant is
    // not w, x or y. Restores a trailing e after certain deletions.
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        const char ch = b_[i];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(const char* s) {
        const int len = static_cast<int>(std::char_traits<char>::length(s));
        if (len > k_ + 1) return false;
        if (b_.compare(k_ - len + 1, len, s) != 0) return false;
        j_ = k_ - len;
        return true;
    }

    void set_to(const char* s) {
        const int len = static_cast<int>(std::char_traits<char>::length(s));
        b_.replace(j_ + 1, b_.size() - j_ - 1, s);
        k_ = j_ + len;
    }

    void replace_if_m_positive(const char* s) {
        if (m() > 0) set_to(s);
    }

    void step1a() {
        if (b_[k_] != 's') return;
        if (ends("sses")) {
            k_ -= 2;
        } else if (ends("ies")) {
            set_to("i");
        } else if (b_[k_ - 1] != 's') {
            --k_;
        }
    }

    void step1b() {
        if (ends("eed")) {
            if (m() > 0) --k_;
            return;
        }
        bool removed = false;
        if (ends("ed")) {
            if (vowel_in_stem()) {
                k_ = j_;
                removed = true;
            }
        } else if (ends("ing")) {
            if (vowel_in_stem()) {
                k_ = j_;
                removed = true;
            }
        }
        if (!removed) return;
        if (ends("at")) {
            set_to("ate");
        } else if (ends("bl")) {
            set_to("ble");
        } else if (ends("iz")) {
            set_to("ize");
        } else if (double_cons(k_)) {
            const char ch = b_[k_];
            if (ch != 'l' && ch != 's' && ch != 'z') --k_;
        } else {
            j_ = k_;
            if (m() == 1 && cvc(k_)) set_to("e");
        }
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
    }

    void step2() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
            case 'a':
                if (ends("ational")) { replace_if_m_positive("ate"); break; }
                if (ends("tional")) { replace_if_m_positive("tion"); break; }
                break;
            case 'c':
                if (ends("enci")) { replace_if_m_positive("ence"); break; }
                if (ends("anci")) { replace_if_m_positive("ance"); break; }
                break;
            case 'e':
                if (ends("izer")) { replace_if_m_positive("ize"); break; }
                break;
            case 'l':
                if (ends("abli")) { replace_if_m_positive("able"); break; }
                if (ends("alli")) { replace_if_m_positive("al"); break; }
                if (ends("entli")) { replace_if_m_positive("ent"); break; }
                if (ends("eli")) { replace_if_m_positive("e"); break; }
                if (ends("ousli")) { replace_if_m_positive("ous"); break; }
                break;
            case 'o':
                if (ends("ization")) { replace_if_m_positive("ize"); break; }
                if (ends("ation")) { replace_if_m_positive("ate"); break; }
                if (ends("ator")) { replace_if_m_positive("ate"); break; }
                break;
            case 's':
                if (ends("alism")) { replace_if_m_positive("al"); break; }
                if (ends("iveness")) { replace_if_m_positive("ive"); break; }
                if (ends("fulness")) { replace_if_m_positive("ful"); break; }
                if (ends("ousness")) { replace_if_m_positive("ous"); break; }
                break;
            case 't':
                if (ends("aliti")) { replace_if_m_positive("al"); break; }
                if (ends("iviti")) { replace_if_m_positive("ive"); break; }
                if (ends("biliti")) { replace_if_m_positive("ble"); break; }
                break;
            default:
                break;
        }
    }

    void step3() {
        switch (b_[k_]) {
            case 'e':
                if (ends("icate")) { replace_if_m_positive("ic"); break; }
                if (ends("ative")) { replace_if_m_positive(""); break; }
                if (ends("alize")) { replace_if_m_positive("al"); break; }
                break;
            case 'i':
                if (ends("iciti")) { replace_if_m_positive("ic"); break; }
                break;
            case 'l':
                if (ends("ical")) { replace_if_m_positive("ic"); break; }
                if (ends("ful")) { replace_if_m_positive(""); break; }
                break;
            case 's':
                if (ends("ness")) { replace_if_m_positive(""); break; }
                break;
            default:
                break;
        }
    }

    void step4() {
        if (k_ < 1) return;
        switch (b_[k_ - 1]) {
            case 'a':
                if (ends("al")) break;
                return;
            case 'c':
                if (ends("ance")) break;
                if (ends("ence")) break;
                return;
            case 'e':
                if (ends("er")) break;
                return;
            case 'i':
                if (ends("ic")) break;
                return;
            case 'l':
                if (ends("able")) break;
                if (ends("ible")) break;
                return;
            case 'n':
                if (ends("ant")) break;
                if (ends("ement")) break;
                if (ends("ment")) break;
                if (ends("ent")) break;
                return;
            case 'o':
                if (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) break;
                if (ends("ou")) break;
                return;
            case 's':
                if (ends("ism")) break;
                return;
            case 't':
                if (ends("ate")) break;
                if (ends("iti")) break;
                return;
            case 'u':
                if (ends("ous")) break;
                return;
            case 'v':
                if (ends("ive")) break;
                return;
            case 'z':
                if (ends("ize")) break;
                return;
            default:
                return;
        }
        if (m() > 1) k_ = j_;
    }

    void step5a() {
        j_ = k_;
        if (b_[k_] != 'e') return;
        const int a = m();
        if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }

    void step5b() {
        j_ = k_;
        if (b_[k_] == 'l' && double_cons(k_) && m() > 1) --k_;
    }

    std::string b_;
    int k_;
    int j_ = 0;
};

}  // namespace

std::string stem(const std::string& token) {
    if (token.empty()) return token;
    return PorterState(token).run();
}

}  // namespace cvd::textprep
