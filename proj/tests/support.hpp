#pragma once

#include <univoque/univoque.hpp>

#include <random>
#include <vector>

namespace univoque::testing {

inline BaseValue golden() { return generalized_golden(1); }

inline BaseValue tribonacci() {
    return base_from_polynomial({Int(1), Int(-1), Int(-1), Int(-1)}, Rat(9, 5), Rat(15, 8), 1);
}

inline BaseValue base_1101() { return base_of_word(parse_word("1101", 1)); }

inline FieldElement fe(const BaseValue& q, const Rat& v) {
    return FieldElement::from_rational(q, v);
}

inline FieldElement fe(const BaseValue& q, long num, long den = 1) {
    return FieldElement::from_rational(q, Rat(num, den));
}

inline Word w(const std::string& text, int M = 1) { return parse_word(text, M); }

inline EPSequence seq(const std::string& text, int M = 1) { return parse_sequence(text, M); }

inline EPSequence random_ep(std::mt19937& rng, int M, size_t max_pre = 8, size_t max_per = 6) {
    std::uniform_int_distribution<size_t> pre_len(0, max_pre), per_len(1, max_per);
    std::uniform_int_distribution<int> digit(0, M);
    std::vector<int> pre(pre_len(rng)), per(per_len(rng));
    for (auto& d : pre) d = digit(rng);
    for (auto& d : per) d = digit(rng);
    return EPSequence(Word(pre, M), Word(per, M));
}

/// Rational grid point j/(parts+1) of [0, M/(q-1)].
inline FieldElement grid_point(const BaseValue& q, int j, int parts) {
    return j_q_sup(q) * Rat(j, parts + 1);
}

} // namespace univoque::testing
