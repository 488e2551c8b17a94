#pragma once

#include <univoque/errors.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace univoque {

enum class Ordering { LT, EQ, GT };
enum class Finiteness { Finite, CoFinite, DoublyInfinite };

/// A finite digit string over {0,...,M}.
struct Word {
    std::vector<int> digits;
    int M = 1;

    Word() = default;
    Word(std::vector<int> d, int m) : digits(std::move(d)), M(m) { validate(); }

    size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }
    int operator[](size_t i) const { return digits[i]; }

    void validate() const {
        for (int d : digits)
            if (d < 0 || d > M)
                throw DigitOutOfRange("digit " + std::to_string(d) + " outside {0,...," +
                                      std::to_string(M) + "}");
    }

    Word subword(size_t begin, size_t end) const {
        return Word(std::vector<int>(digits.begin() + begin, digits.begin() + end), M);
    }

    friend Word operator+(const Word& a, const Word& b) {
        std::vector<int> d = a.digits;
        d.insert(d.end(), b.digits.begin(), b.digits.end());
        return Word(std::move(d), a.M);
    }

    Word repeated(size_t n) const {
        std::vector<int> d;
        d.reserve(size() * n);
        for (size_t i = 0; i < n; ++i) d.insert(d.end(), digits.begin(), digits.end());
        return Word(std::move(d), M);
    }

    bool operator==(const Word& o) const { return digits == o.digits && M == o.M; }
    bool operator<(const Word& o) const { return digits < o.digits; } // lexicographic
};

inline Word reflect(const Word& w) {
    std::vector<int> d(w.digits);
    for (auto& v : d) v = w.M - v;
    return Word(std::move(d), w.M);
}

/// w+: increment of the last digit; requires it below M.
inline Word plus(const Word& w) {
    if (w.empty()) throw LastDigitAtBound("cannot increment the empty word");
    if (w.digits.back() >= w.M) throw LastDigitAtBound("last digit already at M");
    Word r = w;
    ++r.digits.back();
    return r;
}

/// w-: decrement of the last digit; requires it above 0.
inline Word minus(const Word& w) {
    if (w.empty()) throw LastDigitAtBound("cannot decrement the empty word");
    if (w.digits.back() <= 0) throw LastDigitAtBound("last digit already at 0");
    Word r = w;
    --r.digits.back();
    return r;
}

/// An eventually periodic digit sequence in normal form: the period is
/// primitive and the preperiod is minimal. Finite sequences carry period "0".
class EPSequence {
public:
    EPSequence() : per_({0}, 1) {}

    EPSequence(Word preperiod, Word period) : pre_(std::move(preperiod)), per_(std::move(period)) {
        if (per_.empty()) throw Error("period must be nonempty");
        if (pre_.M != per_.M) throw Error("mismatched alphabet bounds");
        normalize();
    }

    /// A finite sequence w 0^infinity.
    static EPSequence finite(const Word& w) {
        return EPSequence(w, Word({0}, w.M));
    }

    static EPSequence periodic(const Word& period) {
        return EPSequence(Word({}, period.M), period);
    }

    int M() const { return per_.M; }
    const Word& preperiod() const { return pre_; }
    const Word& period() const { return per_; }

    /// 0-based digit access into the infinite sequence.
    int digit(size_t i) const {
        if (i < pre_.size()) return pre_[i];
        return per_[(i - pre_.size()) % per_.size()];
    }

    Word prefix(size_t n) const {
        std::vector<int> d(n);
        for (size_t i = 0; i < n; ++i) d[i] = digit(i);
        return Word(std::move(d), M());
    }

    /// Bound after which digit classes (digit, tail) repeat.
    size_t span() const { return pre_.size() + per_.size(); }

    bool operator==(const EPSequence& o) const { return pre_ == o.pre_ && per_ == o.per_; }

private:
    void normalize() {
        // primitive period: the smallest divisor-length block that tiles it
        size_t L = per_.size();
        for (size_t d = 1; d < L; ++d) {
            if (L % d != 0) continue;
            bool tiles = true;
            for (size_t i = d; i < L && tiles; ++i) tiles = per_.digits[i] == per_.digits[i % d];
            if (tiles) {
                per_.digits.resize(d);
                L = d;
                break;
            }
        }
        // minimal preperiod: absorb trailing digits equal to the period's last digit
        while (!pre_.empty() && pre_.digits.back() == per_.digits.back()) {
            per_.digits.insert(per_.digits.begin(), per_.digits.back());
            per_.digits.pop_back();
            pre_.digits.pop_back();
        }
    }

    Word pre_, per_;
};

inline EPSequence reflect(const EPSequence& s) {
    return EPSequence(reflect(s.preperiod()), reflect(s.period()));
}

inline EPSequence shift(const EPSequence& s, size_t n) {
    const size_t p = s.preperiod().size();
    if (n <= p) {
        Word pre(std::vector<int>(s.preperiod().digits.begin() + n, s.preperiod().digits.end()),
                 s.M());
        return EPSequence(pre, s.period());
    }
    size_t k = (n - p) % s.period().size();
    std::vector<int> rotated;
    rotated.reserve(s.period().size());
    for (size_t i = 0; i < s.period().size(); ++i)
        rotated.push_back(s.period()[(k + i) % s.period().size()]);
    return EPSequence(Word({}, s.M()), Word(std::move(rotated), s.M()));
}

inline Ordering lex_compare(const EPSequence& a, const EPSequence& b) {
    size_t bound = std::max(a.preperiod().size(), b.preperiod().size()) +
                   std::lcm(a.period().size(), b.period().size()) +
                   std::max(a.period().size(), b.period().size());
    for (size_t i = 0; i < bound; ++i) {
        int da = a.digit(i), db = b.digit(i);
        if (da < db) return Ordering::LT;
        if (da > db) return Ordering::GT;
    }
    return Ordering::EQ;
}

inline Finiteness classify_finiteness(const EPSequence& s) {
    const Word& per = s.period();
    if (per.size() == 1 && per[0] == 0) {
        for (int d : s.preperiod().digits)
            if (d != 0) return Finiteness::Finite;
        return Finiteness::DoublyInfinite; // 0^infinity has no last nonzero digit
    }
    if (per.size() == 1 && per[0] == s.M()) {
        for (int d : s.preperiod().digits)
            if (d != s.M()) return Finiteness::CoFinite;
        return Finiteness::DoublyInfinite; // M^infinity likewise
    }
    return Finiteness::DoublyInfinite;
}

/// Concatenation of a finite word in front of an eventually periodic tail.
inline EPSequence concat(const Word& w, const EPSequence& tail) {
    return EPSequence(w + tail.preperiod(), tail.period());
}

// ---- textual form: digits are character runs for M <= 9, comma-separated for M > 9;
// ---- "(...)" marks the period and an omitted period means "(0)".

inline std::string to_string(const Word& w) {
    std::string s;
    bool commas = w.M > 9;
    for (size_t i = 0; i < w.size(); ++i) {
        if (commas && i) s += ',';
        s += std::to_string(w[i]);
    }
    return s;
}

inline std::string to_string(const EPSequence& s) {
    return to_string(s.preperiod()) + "(" + to_string(s.period()) + ")";
}

inline Word parse_word(std::string_view text, int M) {
    std::vector<int> d;
    if (M > 9) {
        std::string cur;
        for (char c : text) {
            if (c == ',') {
                if (cur.empty()) throw ParseError("empty digit in word");
                d.push_back(std::stoi(cur));
                cur.clear();
            } else if (c >= '0' && c <= '9') {
                cur += c;
            } else {
                throw ParseError(std::string("unexpected character '") + c + "' in word");
            }
        }
        if (!cur.empty()) d.push_back(std::stoi(cur));
    } else {
        for (char c : text) {
            if (c < '0' || c > '9') throw ParseError(std::string("unexpected character '") + c +
                                                     "' in word");
            d.push_back(c - '0');
        }
    }
    return Word(std::move(d), M);
}

inline EPSequence parse_sequence(std::string_view text, int M) {
    auto open = text.find('(');
    if (open == std::string_view::npos) {
        return EPSequence::finite(parse_word(text, M));
    }
    auto close = text.find(')', open);
    if (close == std::string_view::npos || close != text.size() - 1)
        throw ParseError("malformed period in sequence literal");
    Word pre = parse_word(text.substr(0, open), M);
    Word per = parse_word(text.substr(open + 1, close - open - 1), M);
    if (per.empty()) throw ParseError("period must be nonempty");
    return EPSequence(pre, per);
}

} // namespace univoque
