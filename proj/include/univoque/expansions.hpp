#pragma once

#include <univoque/base_value.hpp>
#include <univoque/field_element.hpp>
#include <univoque/words.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace univoque {

inline constexpr int kDefaultDepth = 4096;

/// Digits of an expansion: an exact eventually periodic sequence when the
/// remainder orbit repeats within the depth budget, otherwise a bare prefix.
struct ExpansionResult {
    std::optional<EPSequence> cycle;
    Word prefix;
    std::vector<FieldElement> remainders; // kept only on request

    bool exact() const { return cycle.has_value(); }

    const EPSequence& sequence() const {
        if (!cycle) throw Error("expansion did not close into a cycle (prefix only)");
        return *cycle;
    }

    int digit(size_t i) const {
        if (cycle) return cycle->digit(i);
        return prefix[i];
    }

    /// Number of digits that are known exactly.
    size_t known_digits() const { return cycle ? size_t(-1) : prefix.size(); }

    std::string to_text() const {
        if (cycle) return to_string(*cycle);
        return to_string(prefix) + "...";
    }
};

/// M/(q-1), the right endpoint of J_q. Cached per base: the field inverse
/// behind it is much more expensive than the lookup.
inline FieldElement j_q_sup(const BaseValue& q) {
    auto& impl = q.impl();
    {
        std::lock_guard<std::mutex> lock(impl.mu);
        if (impl.j_sup_cache)
            return *std::static_pointer_cast<const FieldElement>(impl.j_sup_cache);
    }
    FieldElement one = FieldElement::one(q);
    FieldElement sup = (FieldElement::q(q) - one).inverse() * Rat(q.alphabet_m());
    {
        std::lock_guard<std::mutex> lock(impl.mu);
        if (!impl.j_sup_cache) impl.j_sup_cache = std::make_shared<FieldElement>(sup);
    }
    return sup;
}

inline void require_in_j_q(const FieldElement& x, const BaseValue& q) {
    if (field_sign(x) < 0 || field_sign(x - j_q_sup(q)) > 0)
        throw OutOfJq("x outside [0, M/(q-1)]");
}

/// Exact value of a finite digit word: sum w_i q^-i.
inline FieldElement field_eval_prefix(const Word& w, const BaseValue& q) {
    w.validate();
    if (w.M != q.alphabet_m()) throw DigitOutOfRange("word alphabet does not match base");
    FieldElement qinv = FieldElement::q(q).inverse();
    FieldElement acc = FieldElement::zero(q);
    for (size_t i = w.size(); i-- > 0;) {
        acc = (acc + FieldElement::from_rational(q, Rat(w[i]))) * qinv;
    }
    return acc;
}

/// Exact value of an eventually periodic sequence under pi_q.
inline FieldElement pi_q(const EPSequence& s, const BaseValue& q) {
    if (s.M() != q.alphabet_m()) throw DigitOutOfRange("sequence alphabet does not match base");
    FieldElement pre_val = field_eval_prefix(s.preperiod(), q);
    // periodic tail: pi(period) / (1 - q^-L), shifted past the preperiod
    FieldElement per_val = field_eval_prefix(s.period(), q);
    FieldElement qL = FieldElement::one(q);
    for (size_t i = 0; i < s.period().size(); ++i) qL = qL.times_q();
    FieldElement denom = FieldElement::one(q) - qL.inverse();
    FieldElement tail = per_val * denom.inverse();
    // shift the tail past the preperiod
    FieldElement qP = FieldElement::one(q);
    for (size_t i = 0; i < s.preperiod().size(); ++i) qP = qP.times_q();
    return pre_val + tail * qP.inverse();
}

namespace detail {

/// Largest digit d in {0,...,M} with d <= y (greedy) or d < y (quasi-greedy).
inline int select_digit(const FieldElement& y, int M, bool strict) {
    for (int d = M; d >= 1; --d) {
        int s = field_sign(y - FieldElement::from_rational(y.base(), Rat(d)));
        if (strict ? s > 0 : s >= 0) return d;
    }
    return 0;
}

struct DigitRun {
    std::vector<int> digits;
    std::optional<std::pair<size_t, size_t>> cycle; // (start, length)
    std::vector<FieldElement> remainders;
};

/// Runs the digit recursion r -> q r - d with exact remainders and detects the
/// first repeated remainder representative. Repetition is sound (remainders
/// determine all later digits); aperiodic orbits exhaust the depth budget.
inline DigitRun run_digit_recursion(FieldElement x, const BaseValue& q, int depth, bool strict,
                                    bool keep_trace) {
    DigitRun out;
    std::map<std::vector<Rat>, size_t> seen; // exact coefficient vectors as orbit keys
    FieldElement r = std::move(x);
    for (int n = 0; n < depth; ++n) {
        auto it = seen.find(r.coeffs());
        if (it != seen.end()) {
            out.cycle = {it->second, static_cast<size_t>(n) - it->second};
            return out;
        }
        seen.emplace(r.coeffs(), static_cast<size_t>(n));
        if (keep_trace) out.remainders.push_back(r);
        FieldElement y = r.times_q();
        int d = select_digit(y, q.alphabet_m(), strict);
        out.digits.push_back(d);
        r = y - FieldElement::from_rational(q, Rat(d));
    }
    return out;
}

inline ExpansionResult pack(const DigitRun& run, int M) {
    ExpansionResult res;
    res.remainders = run.remainders;
    if (run.cycle) {
        auto [start, len] = *run.cycle;
        Word pre(std::vector<int>(run.digits.begin(), run.digits.begin() + start), M);
        Word per(std::vector<int>(run.digits.begin() + start, run.digits.begin() + start + len), M);
        res.cycle = EPSequence(pre, per);
    }
    res.prefix = Word(run.digits, M);
    return res;
}

} // namespace detail

/// Greedy expansion b(x,q): at each step the largest digit whose partial sum
/// stays <= x. Exact ties take the digit, which is what separates greedy from
/// quasi-greedy.
inline ExpansionResult greedy_expand(const FieldElement& x, const BaseValue& q,
                                     int depth = kDefaultDepth, bool keep_trace = false) {
    if (!q.is_exact()) throw UnsupportedBase("greedy expansion needs a rational or algebraic base");
    require_in_j_q(x, q);
    auto run = detail::run_digit_recursion(x, q, depth, /*strict=*/false, keep_trace);
    return detail::pack(run, q.alphabet_m());
}

/// Quasi-greedy expansion a(x,q): strict inequalities; a(0,q) = 0^infinity.
inline ExpansionResult quasi_greedy_expand(const FieldElement& x, const BaseValue& q,
                                           int depth = kDefaultDepth, bool keep_trace = false) {
    if (!q.is_exact())
        throw UnsupportedBase("quasi-greedy expansion needs a rational or algebraic base");
    require_in_j_q(x, q);
    if (field_sign(x) == 0) {
        ExpansionResult res;
        res.cycle = EPSequence::periodic(Word({0}, q.alphabet_m()));
        res.prefix = Word({0}, q.alphabet_m());
        return res;
    }
    auto run = detail::run_digit_recursion(x, q, depth, /*strict=*/true, keep_trace);
    return detail::pack(run, q.alphabet_m());
}

/// Lazy expansion: the reflection of the greedy expansion of M/(q-1) - x.
inline ExpansionResult lazy_expand(const FieldElement& x, const BaseValue& q,
                                   int depth = kDefaultDepth) {
    ExpansionResult g = greedy_expand(j_q_sup(q) - x, q, depth);
    ExpansionResult res;
    if (g.cycle) res.cycle = reflect(*g.cycle);
    res.prefix = reflect(g.prefix);
    return res;
}

/// First N digits of a greedy or quasi-greedy sequence; the truncation is
/// itself the greedy expansion of its own value.
inline Word truncate_to_greedy(const EPSequence& s, size_t N) { return s.prefix(N); }

namespace detail {

struct AlphaBetaPair {
    ExpansionResult beta, alpha;
};

} // namespace detail

/// (beta(q), alpha(q)) = (b(1,q), a(1,q)). When beta is finite with last
/// nonzero digit at m, alpha is built directly as ((beta_1..beta_m)^-)^infinity.
/// Results are cached inside the BaseValue.
inline std::pair<ExpansionResult, ExpansionResult> alpha_beta(const BaseValue& q,
                                                              int depth = kDefaultDepth) {
    if (q.kind() == BaseKind::DigitStream) {
        if (!q.stream_is_alpha_of_one())
            throw UnsupportedBase("digit-stream base does not carry alpha(q) digits");
        // the defining digits are alpha(q) = beta(q) (such bases are univoque)
        std::vector<int> d(static_cast<size_t>(depth));
        for (int i = 0; i < depth; ++i) d[static_cast<size_t>(i)] = q.stream_digit(
            static_cast<std::uint64_t>(i) + 1);
        ExpansionResult res;
        res.prefix = Word(std::move(d), q.alphabet_m());
        return {res, res};
    }

    auto& impl = q.impl();
    {
        std::lock_guard<std::mutex> lock(impl.mu);
        if (impl.alpha_beta_cache.depth >= depth && impl.alpha_beta_cache.data) {
            auto pair =
                std::static_pointer_cast<const detail::AlphaBetaPair>(impl.alpha_beta_cache.data);
            return {pair->beta, pair->alpha};
        }
    }

    ExpansionResult beta = greedy_expand(FieldElement::one(q), q, depth);
    ExpansionResult alpha;
    if (beta.exact() && classify_finiteness(beta.sequence()) == Finiteness::Finite) {
        // strip trailing zeros to the last nonzero digit
        Word w = beta.sequence().preperiod();
        while (!w.empty() && w.digits.back() == 0) w.digits.pop_back();
        alpha.cycle = EPSequence::periodic(minus(w));
        alpha.prefix = alpha.cycle->prefix(w.size());
    } else {
        alpha = quasi_greedy_expand(FieldElement::one(q), q, depth);
    }

    {
        std::lock_guard<std::mutex> lock(impl.mu);
        if (impl.alpha_beta_cache.depth < depth) {
            auto pair = std::make_shared<detail::AlphaBetaPair>();
            pair->beta = beta;
            pair->alpha = alpha;
            impl.alpha_beta_cache.data = pair;
            impl.alpha_beta_cache.depth = depth;
        }
    }
    return {beta, alpha};
}

} // namespace univoque
