#pragma once

#include <univoque/classify.hpp>
#include <univoque/expansions.hpp>
#include <univoque/parallel.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace univoque {

/// Thue-Morse digit: parity of the popcount of i (tau_0 = 0, tau_{2^N+i} = 1 - tau_i).
inline int thue_morse_tau(std::uint64_t i) {
    int bits = 0;
    while (i) {
        i &= i - 1;
        ++bits;
    }
    return bits & 1;
}

/// i-th digit (1-based) of alpha(q_KL(M)), from the Thue-Morse formulas:
/// m-1+tau_i for M = 2m-1, and m+tau_i-tau_{i-1} for M = 2m.
inline int kl_alpha_digit(int M, std::uint64_t i) {
    int m = (M + 1) / 2;
    if (M % 2 == 1) return m - 1 + thue_morse_tau(i);
    return M / 2 + thue_morse_tau(i) - thue_morse_tau(i - 1);
}

/// First n digits of alpha(q_KL(M)).
inline Word thue_morse_alpha(int M, size_t n) {
    if (M < 1) throw OutOfRange("M must be >= 1");
    std::vector<int> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = kl_alpha_digit(M, static_cast<std::uint64_t>(i) + 1);
    return Word(std::move(d), M);
}

struct KLResult {
    BaseValue base;
    DyadicInterval interval;
};

/// The Komornik-Loreti constant as a digit-stream base (the smallest univoque
/// base), together with an enclosure of the requested width.
inline KLResult kl_constant(int M, int precision_bits) {
    if (M < 1) throw OutOfRange("M must be >= 1");
    BaseValue b = base_from_digit_stream([M](std::uint64_t i) { return kl_alpha_digit(M, i); }, M,
                                         "kl(M=" + std::to_string(M) + ")",
                                         /*is_alpha_of_one=*/true);
    DyadicInterval iv = refine_interval(b, precision_bits);
    return {b, iv};
}

/// The generalized golden ratio, the smallest element of V:
/// m+1 for M = 2m, and the positive root of x^2 - m x - m for M = 2m-1.
inline BaseValue generalized_golden(int M) {
    if (M < 1) throw OutOfRange("M must be >= 1");
    int m = (M + 1) / 2;
    if (M % 2 == 0) return base_from_rational(Rat(M / 2 + 1), M);
    return base_from_polynomial({Int(1), Int(-m), Int(-m)}, Rat(2 * m + 1, 2), Rat(m + 1), M);
}

struct LadderSeed {
    enum class Kind { One, FiniteBeta };
    Kind kind = Kind::One;
    Word word; // for FiniteBeta: the finite beta word of q_0 in closure(U) \ U

    static LadderSeed one() { return {}; }
    static LadderSeed finite_beta(Word w) { return {Kind::FiniteBeta, std::move(w)}; }
};

/// The recursive word ladder s_{n+1} = s_n reflect(s_n^-) whose companion
/// roots are the V-elements inside one connected component of the complement
/// of closure(U). Returns s_0 ... s_n.
inline std::vector<Word> component_words(int M, const LadderSeed& seed, size_t n) {
    if (M < 1) throw OutOfRange("M must be >= 1");
    std::vector<Word> out;
    size_t recursion_start; // index from which the doubling recursion applies
    if (seed.kind == LadderSeed::Kind::One) {
        out.push_back(Word({1}, M));
        if (n >= 1) {
            int m = (M + 1) / 2;
            if (M % 2 == 0) out.push_back(Word({M / 2 + 1}, M));
            else out.push_back(Word({m, m}, M));
        }
        recursion_start = 1;
    } else {
        const Word& w = seed.word;
        if (w.empty() || w.digits.back() == 0)
            throw InadmissibleSeed("seed word must end in a nonzero digit");
        if (!is_admissible(EPSequence::finite(w), AdmissibleMode::BetaOfOne).is_in())
            throw InadmissibleSeed("seed word is not admissible as beta(q)");
        out.push_back(w);
        recursion_start = 0;
    }
    while (out.size() <= n) {
        if (out.size() <= recursion_start) break;
        const Word& s = out.back();
        out.push_back(s + reflect(minus(s)));
    }
    return out;
}

/// The unique base q in (1, M+1] with 1 = sum w_i q^-i, via the companion
/// polynomial x^n - w_1 x^(n-1) - ... - w_n. Verifies greedy_expand(1,q) == w 0^inf.
inline BaseValue base_of_word(const Word& w) {
    if (w.empty()) throw Inadmissible("empty word");
    if (!is_admissible(EPSequence::finite(w), AdmissibleMode::BetaOfOne).is_in())
        throw Inadmissible("word is not admissible as a greedy expansion of 1");
    std::vector<Int> coeffs(w.size() + 1);
    coeffs[0] = 1;
    for (size_t i = 0; i < w.size(); ++i) coeffs[i + 1] = Int(-w[i]);
    BaseValue q = base_from_polynomial(coeffs, Rat(1), Rat(w.M + 1), w.M);
    ExpansionResult beta = greedy_expand(FieldElement::one(q), q, static_cast<int>(w.size()) + 8);
    if (!beta.exact() || !(beta.sequence() == EPSequence::finite(w)))
        throw Inadmissible("companion root does not reproduce the word as beta(q)");
    return q;
}

/// Data of a connected component (q1, q2) of (1, M+1] \ V: its right endpoint,
/// the half-pattern alpha_1..alpha_k of alpha(q2), and the forbidden blocks of
/// the shift of finite type describing U'_q inside the component.
struct ComponentData {
    BaseValue q2;
    size_t k = 0;
    Word alpha_pattern;
    std::vector<Word> forbidden;
};

/// Forbidden blocks F = { j a_1..a_k : j < M and a_1..a_k >= alpha_1..alpha_k }.
/// A sequence lies in U'_q for q inside the component iff it avoids every block
/// of F and of reflect(F).
inline std::vector<Word> sft_blocks(const ComponentData& c, int M) {
    std::vector<Word> out;
    const size_t k = c.alpha_pattern.size();
    std::vector<int> a(c.alpha_pattern.digits);
    // enumerate all words a >= pattern in lexicographic order
    for (;;) {
        for (int j = 0; j < M; ++j) {
            std::vector<int> block;
            block.reserve(k + 1);
            block.push_back(j);
            block.insert(block.end(), a.begin(), a.end());
            out.push_back(Word(std::move(block), M));
        }
        // next word
        size_t i = k;
        while (i > 0 && a[i - 1] == M) {
            a[i - 1] = 0;
            --i;
        }
        if (i == 0) break;
        ++a[i - 1];
    }
    return out;
}

namespace detail {

/// Tests whether (pattern reflect(pattern))^inf is alpha(q2) of a component
/// right endpoint with this minimal k; if so returns the realized base.
inline std::optional<BaseValue> realize_component_endpoint(const Word& pattern) {
    const int M = pattern.M;
    if (pattern.empty() || pattern.digits.back() == 0) return std::nullopt;
    EPSequence alpha = EPSequence::periodic(pattern + reflect(pattern));
    if (classify_finiteness(alpha) != Finiteness::DoublyInfinite) return std::nullopt;
    // quasi-greedy admissibility of alpha as an expansion of 1 (non-strict tails)
    if (!is_admissible(alpha, AdmissibleMode::AlphaOfOne).is_in()) return std::nullopt;
    // V condition: reflected tails never exceed alpha
    auto self = SeqSource::from(alpha);
    if (!check_tail_conditions(self, self, M, {{true, false, DigitCond::AboveZero}}, 64).is_in())
        return std::nullopt;
    // minimality of k: no earlier reflected shift reproduces alpha
    for (size_t j = 1; j < pattern.size(); ++j)
        if (lex_compare(reflect(shift(alpha, j)), alpha) == Ordering::EQ) return std::nullopt;
    if (lex_compare(reflect(shift(alpha, pattern.size())), alpha) != Ordering::EQ)
        return std::nullopt;
    // beta(q2) = (alpha_1..alpha_p)^+ 0^inf with p the smallest period of alpha
    Word period = alpha.period();
    try {
        return base_of_word(plus(period));
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace detail

/// Right endpoint q2 of the component of (1, M+1] \ V containing q: the
/// minimum over admissible patterns (w reflect(w))^inf with |w| <= max_period
/// of the realized bases above q. Throws PeriodBoundExceeded when no pattern
/// within the bound lies above q.
inline ComponentData find_next_V_base(const BaseValue& q, size_t max_period,
                                      int depth = kDefaultDepth, bool parallel = false) {
    const int M = q.alphabet_m();
    {
        BaseClassification c = classify_base(q, depth);
        if (c.tag != BaseTag::NotInV || !c.exact)
            throw Error("find_next_V_base requires a base classified exactly outside V");
    }
    std::vector<Word> patterns;
    std::vector<int> w;
    for (size_t k = 1; k <= max_period; ++k) {
        w.assign(k, 0);
        for (;;) {
            if (w.back() > 0) patterns.push_back(Word(w, M));
            size_t i = k;
            while (i > 0 && w[i - 1] == M) {
                w[i - 1] = 0;
                --i;
            }
            if (i == 0) break;
            ++w[i - 1];
        }
    }
    // candidate evaluations are independent and pure
    auto realized = indexed_map<std::optional<BaseValue>>(
        patterns.size(),
        [&](size_t i) { return detail::realize_component_endpoint(patterns[i]); }, parallel);

    std::optional<ComponentData> best;
    for (size_t i = 0; i < patterns.size(); ++i) {
        if (!realized[i]) continue;
        auto above = compare_bases(*realized[i], q);
        if (!above || *above <= 0) continue;
        if (best) {
            auto better = compare_bases(*realized[i], best->q2);
            if (!better || *better >= 0) continue;
        }
        best = ComponentData{*realized[i], patterns[i].size(), patterns[i], {}};
    }
    if (!best) throw PeriodBoundExceeded("no V-element above q with pattern length <= " +
                                         std::to_string(max_period));
    best->forbidden = sft_blocks(*best, M);
    return *best;
}

struct DimensionResult {
    enum class Kind { Value, TwoPointSet, FullMeasure };
    Kind kind = Kind::Value;
    double value = 0.0; // Hausdorff dimension when kind == Value

    std::string to_text() const {
        switch (kind) {
        case Kind::TwoPointSet: return "two-point set {0, M/(q-1)}";
        case Kind::FullMeasure: return "Lebesgue measure one";
        default: return "dim_H = " + std::to_string(value);
        }
    }
};

/// Hausdorff dimension regime of U_q for integer bases q in (1, M+1]:
/// full measure at q = M+1, a two-point set when M >= 2q-2, and
/// log(2q-M-1)/log(q) otherwise.
inline DimensionResult hausdorff_dim_integer_base(int q, int M) {
    if (M < 1) throw OutOfRange("M must be >= 1");
    if (q <= 1 || q > M + 1) throw OutOfRange("integer base must lie in (1, M+1]");
    if (q == M + 1) return {DimensionResult::Kind::FullMeasure, 1.0};
    if (M >= 2 * q - 2) return {DimensionResult::Kind::TwoPointSet, 0.0};
    return {DimensionResult::Kind::Value,
            std::log(static_cast<double>(2 * q - M - 1)) / std::log(static_cast<double>(q))};
}

} // namespace univoque
