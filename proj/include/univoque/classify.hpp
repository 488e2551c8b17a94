#pragma once

#include <univoque/expansions.hpp>
#include <univoque/words.hpp>

#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace univoque {

/// Three-valued test result. Out always carries the smallest index n at which
/// the defining inequality definitely fails; In is only issued when every
/// condition was decided exactly.
struct Verdict {
    enum class Status { In, Out, Unknown };
    Status status = Status::Unknown;
    std::optional<size_t> witness; // 1-based digit index n of the failing condition
    int depth_checked = 0;
    std::optional<EPSequence> alpha_used;

    bool is_in() const { return status == Status::In; }
    bool is_out() const { return status == Status::Out; }
    bool is_unknown() const { return status == Status::Unknown; }

    /// True when no violation was found (In or Unknown); the optimistic reading.
    bool leans_in() const { return status != Status::Out; }

    static Verdict in(int depth) { return {Status::In, std::nullopt, depth, std::nullopt}; }
    static Verdict out(size_t n, int depth) { return {Status::Out, n, depth, std::nullopt}; }
    static Verdict unknown(int depth) { return {Status::Unknown, std::nullopt, depth, std::nullopt}; }

    std::string to_text() const {
        switch (status) {
        case Status::In: return "In";
        case Status::Out: return "Out(n=" + std::to_string(witness.value_or(0)) + ")";
        default: return "UnknownAtDepth(" + std::to_string(depth_checked) + ")";
        }
    }
};

namespace detail {

/// A digit sequence that is either exactly known (eventually periodic) or
/// known only on a finite prefix.
struct SeqSource {
    std::optional<EPSequence> ep;
    Word prefix;

    static SeqSource from(const ExpansionResult& r) {
        SeqSource s;
        if (r.exact()) s.ep = r.sequence();
        else s.prefix = r.prefix;
        return s;
    }

    static SeqSource from(const EPSequence& e) {
        SeqSource s;
        s.ep = e;
        return s;
    }

    bool exact() const { return ep.has_value(); }
    int digit(size_t i) const { return ep ? ep->digit(i) : prefix[i]; }
    size_t span_bound(size_t depth) const { return ep ? ep->span() : std::min(depth, prefix.size()); }
};

enum class Cmp { LT, EQ, GT, Undecided };

/// Compares the tail s_{n+1} s_{n+2} ... (optionally reflected) against alpha.
/// Exact when both sides are eventually periodic; otherwise a window of
/// `depth` digits is inspected and agreement throughout is Undecided.
inline Cmp compare_tail(const SeqSource& s, size_t n, bool reflected, int M,
                        const SeqSource& alpha, size_t depth) {
    size_t window;
    bool exact_window = false;
    if (s.exact() && alpha.exact()) {
        const EPSequence& a = *s.ep;
        const EPSequence& b = *alpha.ep;
        window = std::max(a.preperiod().size() + a.period().size(), b.preperiod().size()) +
                 std::lcm(a.period().size(), b.period().size()) +
                 std::max(a.period().size(), b.period().size());
        exact_window = true;
    } else {
        window = depth;
        size_t avail_s = s.exact() ? window : (s.prefix.size() > n ? s.prefix.size() - n : 0);
        size_t avail_a = alpha.exact() ? window : alpha.prefix.size();
        window = std::min(window, std::min(avail_s, avail_a));
    }
    for (size_t i = 0; i < window; ++i) {
        int ds = s.digit(n + i);
        if (reflected) ds = M - ds;
        int da = alpha.digit(i);
        if (ds < da) return Cmp::LT;
        if (ds > da) return Cmp::GT;
    }
    return exact_window ? Cmp::EQ : Cmp::Undecided;
}

enum class DigitCond { BelowM, AboveZero };

struct TailTest {
    bool reflected;
    bool strict;
    DigitCond cond;
};

/// Scans the conditions "tail relation alpha whenever digit test holds" over
/// every digit class of s. For eventually periodic s the classes repeat after
/// preperiod+period, so In is an exact finite decision.
inline Verdict check_tail_conditions(const SeqSource& s, const SeqSource& alpha, int M,
                                     const std::vector<TailTest>& tests, int depth) {
    size_t span = s.span_bound(static_cast<size_t>(depth));
    bool undecided = false;
    for (size_t n = 1; n <= span; ++n) {
        int d = s.digit(n - 1);
        for (const auto& t : tests) {
            if (t.cond == DigitCond::BelowM && d >= M) continue;
            if (t.cond == DigitCond::AboveZero && d <= 0) continue;
            Cmp c = compare_tail(s, n, t.reflected, M, alpha, static_cast<size_t>(depth));
            if (c == Cmp::GT) return Verdict::out(n, depth);
            if (c == Cmp::EQ && t.strict) return Verdict::out(n, depth);
            if (c == Cmp::Undecided) undecided = true;
        }
    }
    if (!s.exact() || undecided) return Verdict::unknown(depth);
    return Verdict::in(depth);
}

inline SeqSource alpha_source(const BaseValue& q, int depth) {
    auto [beta, alpha] = alpha_beta(q, depth);
    (void)beta;
    return SeqSource::from(alpha);
}

inline Verdict attach_alpha(Verdict v, const SeqSource& alpha) {
    if (alpha.exact()) v.alpha_used = *alpha.ep;
    return v;
}

} // namespace detail

/// Greedy admissibility (the b_{n+1}b_{n+2}... < alpha(q) test at digits < M).
inline Verdict is_greedy_seq(const EPSequence& s, const BaseValue& q, int depth = kDefaultDepth) {
    auto alpha = detail::alpha_source(q, depth);
    return detail::attach_alpha(
        detail::check_tail_conditions(detail::SeqSource::from(s), alpha, s.M(),
                                      {{false, true, detail::DigitCond::BelowM}}, depth),
        alpha);
}

/// Quasi-greedy admissibility: infinite plus the non-strict tail test.
inline Verdict is_quasi_greedy_seq(const EPSequence& s, const BaseValue& q,
                                   int depth = kDefaultDepth) {
    if (classify_finiteness(s) == Finiteness::Finite) {
        Word w = s.preperiod();
        while (!w.empty() && w.digits.back() == 0) w.digits.pop_back();
        return Verdict::out(w.size(), depth); // finite sequences are not quasi-greedy
    }
    auto alpha = detail::alpha_source(q, depth);
    return detail::attach_alpha(
        detail::check_tail_conditions(detail::SeqSource::from(s), alpha, s.M(),
                                      {{false, false, detail::DigitCond::BelowM}}, depth),
        alpha);
}

/// Membership of s in U'_q: both strict tail conditions of the univoque test.
inline Verdict is_univoque_seq(const EPSequence& s, const BaseValue& q,
                               int depth = kDefaultDepth) {
    auto alpha = detail::alpha_source(q, depth);
    return detail::attach_alpha(
        detail::check_tail_conditions(detail::SeqSource::from(s), alpha, s.M(),
                                      {{false, true, detail::DigitCond::BelowM},
                                       {true, true, detail::DigitCond::AboveZero}},
                                      depth),
        alpha);
}

/// Membership of s in V'_q: infinite plus the non-strict versions.
inline Verdict in_V_prime(const EPSequence& s, const BaseValue& q, int depth = kDefaultDepth) {
    if (classify_finiteness(s) == Finiteness::Finite) {
        Word w = s.preperiod();
        while (!w.empty() && w.digits.back() == 0) w.digits.pop_back();
        return Verdict::out(w.size(), depth);
    }
    auto alpha = detail::alpha_source(q, depth);
    return detail::attach_alpha(
        detail::check_tail_conditions(detail::SeqSource::from(s), alpha, s.M(),
                                      {{false, false, detail::DigitCond::BelowM},
                                       {true, false, detail::DigitCond::AboveZero}},
                                      depth),
        alpha);
}

enum class AdmissibleMode { BetaOfOne, AlphaOfOne };

/// Realizability of s as beta(q) (strict self-comparisons at digits < M) or as
/// alpha(q) (infinite, non-strict) for some q in [1, M+1].
inline Verdict is_admissible(const EPSequence& s, AdmissibleMode mode, int depth = kDefaultDepth) {
    auto self = detail::SeqSource::from(s);
    if (mode == AdmissibleMode::BetaOfOne) {
        return detail::check_tail_conditions(self, self, s.M(),
                                             {{false, true, detail::DigitCond::BelowM}}, depth);
    }
    if (classify_finiteness(s) == Finiteness::Finite) {
        Word w = s.preperiod();
        while (!w.empty() && w.digits.back() == 0) w.digits.pop_back();
        return Verdict::out(w.size(), depth);
    }
    return detail::check_tail_conditions(self, self, s.M(),
                                         {{false, false, detail::DigitCond::BelowM}}, depth);
}

enum class BaseTag { InU, InClosureUNotU, InVNotClosureU, NotInV };

inline std::string to_text(BaseTag t) {
    switch (t) {
    case BaseTag::InU: return "U";
    case BaseTag::InClosureUNotU: return "closure(U) \\ U";
    case BaseTag::InVNotClosureU: return "V \\ closure(U)";
    default: return "not in V";
    }
}

struct BaseClassification {
    BaseTag tag = BaseTag::NotInV;
    bool exact = false;
    Verdict u, closure_u, v;
    std::optional<size_t> k; // smallest k with reflected shift-k tail equal to alpha
    ExpansionResult alpha, beta;
};

namespace detail {

inline BaseClassification classify_base_at(const BaseValue& q, int depth) {
    BaseClassification out;
    detail::SeqSource alpha, beta;
    if (q.kind() == BaseKind::DigitStream) {
        auto [b, a] = alpha_beta(q, depth);
        out.alpha = a;
        out.beta = b;
        alpha = detail::SeqSource::from(a);
        beta = alpha;
        // for stream bases tested through their alpha digits, q in U amounts to
        // alpha being a univoque sequence (both strict conditions)
        out.u = detail::check_tail_conditions(alpha, alpha, q.alphabet_m(),
                                              {{false, true, detail::DigitCond::BelowM},
                                               {true, true, detail::DigitCond::AboveZero}},
                                              depth);
    } else {
        auto [b, a] = alpha_beta(q, depth);
        out.alpha = a;
        out.beta = b;
        alpha = detail::SeqSource::from(a);
        beta = detail::SeqSource::from(b);
        out.u = detail::check_tail_conditions(beta, beta, q.alphabet_m(),
                                              {{true, true, detail::DigitCond::AboveZero}}, depth);
    }
    out.closure_u = detail::check_tail_conditions(alpha, alpha, q.alphabet_m(),
                                                  {{true, true, detail::DigitCond::AboveZero}},
                                                  depth);
    out.v = detail::check_tail_conditions(alpha, alpha, q.alphabet_m(),
                                          {{true, false, detail::DigitCond::AboveZero}}, depth);

    if (out.u.is_in()) {
        out.tag = BaseTag::InU;
        out.exact = true;
    } else if (out.closure_u.is_in()) {
        out.tag = BaseTag::InClosureUNotU;
        out.exact = out.u.is_out();
    } else if (out.v.is_in()) {
        out.tag = BaseTag::InVNotClosureU;
        out.exact = out.closure_u.is_out();
    } else if (out.v.is_out()) {
        out.tag = BaseTag::NotInV;
        out.exact = true;
    } else {
        // nothing decided In and V not excluded: report the deepest level not excluded
        if (out.u.leans_in()) out.tag = BaseTag::InU;
        else if (out.closure_u.leans_in()) out.tag = BaseTag::InClosureUNotU;
        else out.tag = BaseTag::InVNotClosureU;
        out.exact = false;
    }

    if (out.tag == BaseTag::InVNotClosureU && alpha.exact()) {
        const EPSequence& a = *alpha.ep;
        for (size_t k = 1; k <= a.span(); ++k) {
            if (lex_compare(reflect(shift(a, k)), a) == Ordering::EQ) {
                out.k = k;
                break;
            }
        }
    }
    return out;
}

} // namespace detail

/// Classifies q against U, closure(U) and V via the lexicographic tests on
/// beta(q) and alpha(q). Exact whenever the expansions close into cycles;
/// otherwise the tag is the deepest level not definitely excluded. The depth
/// budget is spent through iterative deepening, so small witnesses settle
/// long before the budget is reached.
inline BaseClassification classify_base(const BaseValue& q, int depth = kDefaultDepth) {
    int d = std::min(depth, 64);
    for (;;) {
        BaseClassification c = detail::classify_base_at(q, d);
        bool settled = !c.u.is_unknown() && !c.closure_u.is_unknown() && !c.v.is_unknown();
        if (settled || d >= depth) return c;
        d = std::min(depth, d * 4);
    }
}

enum class PointTag { InUq, InVqNotUq, NotInVq };
enum class PointPart { Aq, Bq };

inline std::string to_text(PointTag t) {
    switch (t) {
    case PointTag::InUq: return "U_q";
    case PointTag::InVqNotUq: return "V_q \\ U_q";
    default: return "not in V_q";
    }
}

struct PointClassification {
    PointTag tag = PointTag::NotInVq;
    std::optional<PointPart> part; // A_q vs B_q split of V_q \ U_q
    bool exact = false;
    Verdict uq, vq;
    ExpansionResult quasi, greedy;
};

namespace detail {

inline PointClassification classify_point_at(const FieldElement& x, const BaseValue& q,
                                             int depth) {
    PointClassification out;
    out.quasi = quasi_greedy_expand(x, q, depth);
    out.greedy = greedy_expand(x, q, depth);
    auto s = detail::SeqSource::from(out.quasi);
    auto alpha = detail::alpha_source(q, depth);
    out.uq = detail::attach_alpha(
        detail::check_tail_conditions(s, alpha, q.alphabet_m(),
                                      {{false, true, detail::DigitCond::BelowM},
                                       {true, true, detail::DigitCond::AboveZero}},
                                      depth),
        alpha);
    out.vq = detail::attach_alpha(
        detail::check_tail_conditions(s, alpha, q.alphabet_m(),
                                      {{true, false, detail::DigitCond::AboveZero}}, depth),
        alpha);

    if (out.uq.is_in()) {
        out.tag = PointTag::InUq;
        out.exact = true;
    } else if (out.uq.is_out() && out.vq.is_in()) {
        out.tag = PointTag::InVqNotUq;
        out.exact = true;
    } else if (out.vq.is_out()) {
        out.tag = PointTag::NotInVq;
        out.exact = true;
    } else {
        out.tag = out.uq.leans_in() ? PointTag::InUq : PointTag::InVqNotUq;
        out.exact = false;
    }

    if (out.tag == PointTag::InVqNotUq && out.greedy.exact()) {
        out.part = classify_finiteness(out.greedy.sequence()) == Finiteness::Finite ? PointPart::Aq
                                                                                    : PointPart::Bq;
    }
    return out;
}

} // namespace detail

/// Classifies x against U_q and V_q through the univoque and V' tests applied
/// to the quasi-greedy expansion a(x,q); A_q/B_q is read off the finiteness of
/// the greedy expansion. Iteratively deepened up to the depth budget.
inline PointClassification classify_point(const FieldElement& x, const BaseValue& q,
                                          int depth = kDefaultDepth) {
    require_in_j_q(x, q);
    int d = std::min(depth, 64);
    for (;;) {
        PointClassification c = detail::classify_point_at(x, q, d);
        bool settled = !c.uq.is_unknown() && !c.vq.is_unknown();
        if (settled || d >= depth) return c;
        d = std::min(depth, d * 4);
    }
}

/// The V_q test of x phrased against beta(q) instead of alpha(q); the two are
/// equivalent and the pair is kept as a cross-check.
inline Verdict in_V_q_via_beta(const FieldElement& x, const BaseValue& q,
                               int depth = kDefaultDepth) {
    require_in_j_q(x, q);
    ExpansionResult quasi = quasi_greedy_expand(x, q, depth);
    auto [beta, alpha] = alpha_beta(q, depth);
    (void)alpha;
    auto s = detail::SeqSource::from(quasi);
    auto b = detail::SeqSource::from(beta);
    return detail::check_tail_conditions(s, b, q.alphabet_m(),
                                         {{true, false, detail::DigitCond::AboveZero}}, depth);
}

} // namespace univoque
