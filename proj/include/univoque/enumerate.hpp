#pragma once

#include <univoque/classify.hpp>
#include <univoque/landmarks.hpp>
#include <univoque/parallel.hpp>

#include <cmath>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace univoque {

/// The set of length-n prefixes of expansions of x in base q, with the exact
/// counts N_1..N_n. A prefix w survives iff the remainder q^|w| x - sum w_i
/// q^(|w|-i) stays inside [0, M/(q-1)].
struct ExpansionTree {
    size_t depth = 0;
    std::vector<Word> prefixes;  // at the final depth, in lexicographic order
    std::vector<size_t> counts;  // counts[j-1] = N_j

    size_t count_at(size_t j) const { return counts.at(j - 1); }
};

struct TreeOptions {
    size_t node_cap = 10'000'000;
    bool parallel = false;
};

inline ExpansionTree expansion_tree(const FieldElement& x, const BaseValue& q, size_t n,
                                    const TreeOptions& opts = {}) {
    if (!q.is_exact()) throw UnsupportedBase("expansion trees need a rational or algebraic base");
    require_in_j_q(x, q);
    const int M = q.alphabet_m();
    const FieldElement sup = j_q_sup(q);

    struct Node {
        std::vector<int> word;
        FieldElement rem;
    };

    ExpansionTree out;
    out.depth = n;
    std::vector<Node> frontier{{std::vector<int>{}, x}};
    for (size_t level = 1; level <= n; ++level) {
        auto expanded = indexed_map<std::vector<Node>>(
            frontier.size(),
            [&](size_t i) {
                std::vector<Node> children;
                const Node& node = frontier[i];
                FieldElement y = node.rem.times_q();
                // viable digits d: 0 <= y - d <= M/(q-1)
                for (int d = 0; d <= M; ++d) {
                    FieldElement r = y - FieldElement::from_rational(q, Rat(d));
                    if (field_sign(r) < 0) break; // digits above y stay negative
                    if (field_sign(r - sup) > 0) continue;
                    Node child{node.word, r};
                    child.word.push_back(d);
                    children.push_back(std::move(child));
                }
                return children;
            },
            opts.parallel);
        std::vector<Node> next;
        for (auto& group : expanded)
            for (auto& c : group) next.push_back(std::move(c));
        frontier = std::move(next);
        out.counts.push_back(frontier.size());
        if (frontier.size() > opts.node_cap)
            throw BudgetExceeded("expansion tree exceeded node cap at depth " +
                                 std::to_string(level));
    }
    out.prefixes.reserve(frontier.size());
    for (auto& node : frontier) out.prefixes.push_back(Word(std::move(node.word), M));
    return out;
}

/// One closed-form family of expansions: prefix block^N suffix for N >= 0,
/// or a single sequence when not parametric.
struct Schema {
    Word prefix;
    Word block;
    EPSequence suffix;
    bool parametric = false;

    EPSequence instantiate(size_t N) const {
        if (!parametric) return concat(prefix, suffix);
        return concat(prefix + block.repeated(N), suffix);
    }

    std::string to_text() const {
        std::string s;
        if (!prefix.empty()) s += to_string(prefix) + " ";
        if (parametric) s += "(" + to_string(block) + ")^N ";
        s += to_string(suffix);
        return s;
    }
};

struct ExpansionList {
    std::vector<Schema> schemas;

    /// Every length-n prefix of every instantiation.
    std::set<std::vector<int>> prefixes(size_t n) const {
        std::set<std::vector<int>> out;
        for (const auto& s : blown_up(n)) out.insert(s.prefix(n).digits);
        return out;
    }

    /// All distinct instantiations that differ within the first n digits.
    std::vector<EPSequence> blown_up(size_t n) const {
        std::vector<EPSequence> out;
        for (const auto& sch : schemas) {
            if (!sch.parametric) {
                out.push_back(sch.instantiate(0));
                continue;
            }
            size_t reps = sch.block.empty() ? 0 : n / sch.block.size() + 2;
            for (size_t N = 0; N <= reps; ++N) out.push_back(sch.instantiate(N));
        }
        return out;
    }
};

namespace detail {

inline Schema single(const EPSequence& s) {
    return Schema{Word({}, s.M()), Word({}, s.M()), s, false};
}

inline Schema family(const Word& block, const EPSequence& suffix) {
    return Schema{Word({}, block.M), block, suffix, true};
}

inline Schema with_prefix(const Word& prefix, const Schema& s) {
    Schema out = s;
    out.prefix = prefix + s.prefix;
    return out;
}

} // namespace detail

/// The complete closed-form list of expansions of 1 in base q, available for
/// q in V (single sequence for q in U, the alpha-block families otherwise).
inline ExpansionList expansions_of_one(const BaseValue& q, int depth = kDefaultDepth) {
    const int M = q.alphabet_m();
    BaseClassification c = classify_base(q, depth);
    if (!c.exact || c.tag == BaseTag::NotInV)
        throw UnsupportedBase("no closed-form expansion list for bases outside V "
                              "(or not classified exactly)");
    ExpansionList out;
    const EPSequence alpha = c.alpha.sequence();
    if (c.tag == BaseTag::InU) {
        out.schemas.push_back(detail::single(alpha));
        return out;
    }
    if (!alpha.preperiod().empty()) throw Error("alpha of a V-base must be purely periodic");
    const Word block = alpha.period(); // primitive, so its length is the smallest period
    if (c.tag == BaseTag::InClosureUNotU) {
        out.schemas.push_back(detail::single(alpha));
        out.schemas.push_back(detail::family(block, EPSequence::finite(plus(block))));
        return out;
    }
    // q in V \ closure(U)
    out.schemas.push_back(detail::single(alpha));
    if (M % 2 == 0 && q.kind() == BaseKind::Rational && q.rational_value() == Rat(M / 2 + 1)) {
        // q here is the generalized golden ratio m+1 of an even alphabet
        int m = M / 2;
        out.schemas.push_back(
            detail::family(Word({m}, M), EPSequence::finite(Word({m + 1}, M))));
        out.schemas.push_back(detail::family(
            Word({m}, M), EPSequence(Word({m - 1}, M), Word({M}, M))));
        return out;
    }
    size_t half = block.size() / 2;
    out.schemas.push_back(detail::family(block, EPSequence::finite(plus(block))));
    out.schemas.push_back(detail::family(
        block, EPSequence(minus(block.subword(0, half)), Word({M}, M))));
    return out;
}

/// The complete expansion list of a point x in V_q \ U_q (for q in V).
inline ExpansionList expansions_of_point(const FieldElement& x, const BaseValue& q,
                                         int depth = kDefaultDepth) {
    const int M = q.alphabet_m();
    PointClassification pc = classify_point(x, q, depth);
    if (!pc.exact || pc.tag != PointTag::InVqNotUq)
        throw NotInVMinusU("x is not (exactly) in V_q \\ U_q");
    BaseClassification bc = classify_base(q, depth);
    if (!bc.exact || bc.tag == BaseTag::NotInV)
        throw NotInVMinusU("base must lie in V for the closed-form point lists");

    if (pc.part == PointPart::Bq) {
        // reflections of the expansions of the reflected point, which lies in A_q
        ExpansionList mirrored = expansions_of_point(j_q_sup(q) - x, q, depth);
        ExpansionList out;
        for (const auto& s : mirrored.schemas)
            out.schemas.push_back(Schema{reflect(s.prefix), reflect(s.block), reflect(s.suffix),
                                         s.parametric});
        return out;
    }

    Word w = pc.greedy.sequence().preperiod();
    while (!w.empty() && w.digits.back() == 0) w.digits.pop_back();
    if (w.empty()) throw NotInVMinusU("greedy expansion of x has no nonzero digit");
    const size_t n = w.size();

    ExpansionList out;
    out.schemas.push_back(detail::single(EPSequence::finite(w)));
    const Word head = minus(w);
    if (bc.tag == BaseTag::InU) {
        out.schemas.push_back(detail::with_prefix(head, detail::single(bc.alpha.sequence())));
        return out;
    }
    for (const auto& s : expansions_of_one(q, depth).schemas)
        out.schemas.push_back(detail::with_prefix(head, s));

    if (bc.tag == BaseTag::InVNotClosureU) {
        const size_t k = bc.k.value();
        const Word pattern = bc.alpha.sequence().prefix(k);
        bool at_even_golden = M % 2 == 0 && q.kind() == BaseKind::Rational &&
                              q.rational_value() == Rat(M / 2 + 1);
        if (at_even_golden && w.digits.back() >= 2) {
            Word head2 = w;
            head2.digits.back() -= 2;
            out.schemas.push_back(
                detail::single(EPSequence(head2, Word({M}, M))));
        }
        if (n > k && w[n - k - 1] > 0 &&
            w.subword(n - k, n) == reflect(minus(pattern))) {
            out.schemas.push_back(
                detail::single(EPSequence(minus(w.subword(0, n - k)), Word({M}, M))));
        }
    }
    return out;
}

/// Right endpoint of the V_q-gap starting at a point with finite greedy
/// expansion: the digits b_1..b_n reflect(alpha(q)) and their pi_q value.
inline std::pair<FieldElement, EPSequence> gap_right_endpoint(const FieldElement& xL,
                                                              const BaseValue& q,
                                                              int depth = kDefaultDepth) {
    BaseClassification bc = classify_base(q, depth);
    if (!bc.exact || (bc.tag != BaseTag::InClosureUNotU && bc.tag != BaseTag::InVNotClosureU))
        throw UnsupportedBase("gap endpoints need q in closure(U) \\ {M+1} or V \\ closure(U)");
    ExpansionResult b = greedy_expand(xL, q, depth);
    if (!b.exact() || classify_finiteness(b.sequence()) != Finiteness::Finite)
        throw NotFiniteGreedy("greedy expansion of the left endpoint must be finite");
    Word w = b.sequence().preperiod();
    while (!w.empty() && w.digits.back() == 0) w.digits.pop_back();
    if (w.empty()) throw NotFiniteGreedy("left endpoint must be positive");
    EPSequence bR = concat(w, reflect(bc.alpha.sequence()));
    return {pi_q(bR, q), bR};
}

/// Increasing approximants of a univoque point from inside A_q: the values of
/// the truncations c_1..c_{n_i} 0^inf of its unique expansion at admissible
/// cut indices. Each one is re-verified to lie in A_q.
inline std::vector<FieldElement> aq_approximants(const FieldElement& x, const BaseValue& q,
                                                 size_t count, int depth = kDefaultDepth) {
    {
        BaseClassification bc = classify_base(q, depth);
        if (!bc.exact || bc.tag == BaseTag::NotInV)
            throw UnsupportedBase("approximants need a base inside V");
    }
    if (field_sign(x) == 0) throw NotUnivoquePoint("x = 0 is excluded");
    PointClassification pc = classify_point(x, q, depth);
    if (pc.tag != PointTag::InUq || !pc.exact)
        throw NotUnivoquePoint("x is not (exactly) a univoque point");
    if (!pc.uq.alpha_used)
        throw UnsupportedBase("approximants need an eventually periodic alpha(q)");
    const EPSequence c = pc.quasi.sequence();
    const EPSequence alpha = *pc.uq.alpha_used;

    std::vector<FieldElement> out;
    const size_t scan = static_cast<size_t>(depth);
    for (size_t n = 1; n <= scan && out.size() < count; ++n) {
        if (c.digit(n - 1) <= 0) continue;
        bool ok = true;
        for (size_t m = 1; m < n && ok; ++m) {
            if (c.digit(m - 1) <= 0) continue;
            // reflect(c_{m+1}..c_n) < alpha_1..alpha_{n-m} as words
            bool decided = false;
            for (size_t i = 0; i < n - m; ++i) {
                int lhs = c.M() - c.digit(m + i);
                int rhs = alpha.digit(i);
                if (lhs < rhs) { decided = true; break; }
                if (lhs > rhs) { ok = false; decided = true; break; }
            }
            if (!decided) ok = false; // equality is not strict
        }
        if (!ok) continue;
        Word trunc = c.prefix(n);
        // defensive re-check: the quasi-greedy expansion (trunc)^- alpha of the
        // truncated value must satisfy the V' conditions
        EPSequence quasi = concat(minus(trunc), alpha);
        auto self = detail::SeqSource::from(quasi);
        auto av = detail::SeqSource::from(alpha);
        if (!detail::check_tail_conditions(self, av, c.M(),
                                           {{true, false, detail::DigitCond::AboveZero}}, depth)
                 .is_in())
            throw Error("constructed approximant failed the A_q verification");
        out.push_back(field_eval_prefix(trunc, q));
    }
    return out;
}

/// Smallest k >= 2 with 1 < (m-1)/q + M/q^2 + ... + M/q^k together with the
/// two tail inequalities that force a branching every k digits; the dimension
/// lower bound is log 2 / (k log(M+1)). Requires q below the generalized
/// golden ratio and x strictly inside J_q.
inline std::pair<size_t, double> branching_dim_lower_bound(const FieldElement& x,
                                                           const BaseValue& q) {
    const int M = q.alphabet_m();
    const int m = (M + 1) / 2;
    // exact test q < q~ : sign of q^2 - mq - m for odd M, q - (m+1) for even M
    FieldElement qe = FieldElement::q(q);
    int cmp_sign;
    if (M % 2 == 1) {
        cmp_sign = field_sign(qe * qe - qe * Rat(m) - FieldElement::from_rational(q, Rat(m)));
    } else {
        cmp_sign = field_sign(qe - FieldElement::from_rational(q, Rat(M / 2 + 1)));
    }
    if (cmp_sign >= 0) throw BaseTooLarge("q must lie strictly below the generalized golden ratio");
    if (field_sign(x) <= 0 || field_sign(x - j_q_sup(q)) >= 0)
        throw OutOfJq("x must lie strictly inside J_q");

    const FieldElement one = FieldElement::one(q);
    FieldElement qinv = qe.inverse();
    // partial = (m-1)/q + sum_{j=2}^{k} M/q^j
    FieldElement partial = qinv * Rat(m - 1);
    FieldElement power = qinv;
    for (size_t k = 2; k <= 4096; ++k) {
        power = power * qinv;
        partial = partial + power * Rat(M);
        if (field_sign(partial - one) > 0) {
            // the digit-sum inequality holds; now the two tail inequalities:
            // sum_j m q^{-kj} = m/(q^k - 1) <= 1/q  <=>  m q <= q^k - 1
            FieldElement qk = one;
            for (size_t i = 0; i < k; ++i) qk = qk.times_q();
            bool first = field_sign(qk - one - qe * Rat(m)) >= 0;
            // (M-1)/q + M/(q(q-1)) <= M/(q-1) - M/(q^k - 1)
            FieldElement lhs = qinv * Rat(M - 1) + (qe * (qe - one)).inverse() * Rat(M);
            FieldElement rhs =
                (qe - one).inverse() * Rat(M) - (qk - one).inverse() * Rat(M);
            bool second = field_sign(rhs - lhs) >= 0;
            if (first && second)
                return {k, std::log(2.0) / (static_cast<double>(k) *
                                            std::log(static_cast<double>(M + 1)))};
        }
    }
    throw Error("no branching index k found within bounds");
}

/// Number of length-n words that extend to a unique expansion in an integer
/// base q <= M: a four-state walk whose pending constraints watch the runs of
/// q-1 after a digit < M and of M-q+1 after a digit > 0.
inline Int univoque_prefix_count(int q, int M, size_t n) {
    if (q <= 1 || q > M) throw OutOfRange("integer base with 1 < q <= M required");
    const Int d = 2 * q - 1 - M; // size of the interior digit set [M-q+1, q-1]
    if (d < 2) throw OutOfRange("degenerate digit set: U_q is a two-point set");
    if (n == 0) return Int(1);
    // states: the all-zeros prefix, the all-Ms prefix, both constraints pending
    Int zeros = 1, ems = 1, both = M - 1;
    for (size_t i = 1; i < n; ++i) {
        // from the zero run: digits 1..q-1; from the M run: digits M-q+1..M-1
        both = both * d + (zeros + ems) * (q - 1);
    }
    return both + zeros + ems;
}

} // namespace univoque
