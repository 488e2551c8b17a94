#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

#include <cmath>
#include <set>

using namespace univoque;
using namespace univoque::testing;

namespace {

std::set<std::vector<int>> tree_prefix_set(const ExpansionTree& t) {
    std::set<std::vector<int>> out;
    for (const auto& w : t.prefixes) out.insert(w.digits);
    return out;
}

void check_list_matches_tree(const FieldElement& x, const BaseValue& q, const ExpansionList& list,
                             size_t depth) {
    ExpansionTree tree = expansion_tree(x, q, depth);
    REQUIRE(list.prefixes(depth) == tree_prefix_set(tree));
}

} // namespace

TEST_CASE("expansion trees enumerate exact prefix sets") {
    BaseValue two = base_from_rational(Int(2), Int(1), 1);
    ExpansionTree t = expansion_tree(fe(two, 1, 2), two, 3);
    REQUIRE(t.count_at(3) == 2);
    REQUIRE(tree_prefix_set(t) ==
            std::set<std::vector<int>>{{0, 1, 1}, {1, 0, 0}});

    ExpansionTree tg = expansion_tree(FieldElement::one(golden()), golden(), 4);
    // the four prefixes named by the classical list, plus 1001 from (10)^1 0 1^inf
    std::set<std::vector<int>> expect{
        {1, 1, 0, 0}, {1, 0, 1, 1}, {1, 0, 1, 0}, {0, 1, 1, 1}, {1, 0, 0, 1}};
    REQUIRE(tree_prefix_set(tg) == expect);

    ExpansionTree tt = expansion_tree(FieldElement::one(tribonacci()), tribonacci(), 3);
    REQUIRE(tt.count_at(3) == 2);
    REQUIRE(tree_prefix_set(tt) == std::set<std::vector<int>>{{1, 1, 0}, {1, 1, 1}});
}

TEST_CASE("expansion tree honours J_q and the node cap") {
    BaseValue phi = golden();
    REQUIRE_THROWS_AS(expansion_tree(fe(phi, 3), phi, 4), OutOfJq);
    TreeOptions opts;
    opts.node_cap = 2;
    BaseValue small = base_from_rational(Int(3), Int(2), 1);
    REQUIRE_THROWS_AS(expansion_tree(fe(small, 1, 2), small, 12, opts), BudgetExceeded);
}

TEST_CASE("parallel tree expansion is deterministic") {
    BaseValue small = base_from_rational(Int(3), Int(2), 1);
    TreeOptions par;
    par.parallel = true;
    ExpansionTree a = expansion_tree(fe(small, 1, 2), small, 14);
    ExpansionTree b = expansion_tree(fe(small, 1, 2), small, 14, par);
    REQUIRE(a.counts == b.counts);
    REQUIRE(tree_prefix_set(a) == tree_prefix_set(b));
}

TEST_CASE("expansions of 1 at the golden ratio: the three families") {
    ExpansionList list = expansions_of_one(golden(), 64);
    REQUIRE(list.schemas.size() == 3);
    REQUIRE(list.schemas[0].to_text() == "(10)");
    REQUIRE(list.schemas[1].to_text() == "(10)^N 11(0)");
    REQUIRE(list.schemas[2].to_text() == "(10)^N 0(1)");
    for (size_t depth : {4u, 8u, 12u})
        check_list_matches_tree(FieldElement::one(golden()), golden(), list, depth);
}

TEST_CASE("expansions of 1 at tribonacci: alpha plus one finite family") {
    ExpansionList list = expansions_of_one(tribonacci(), 64);
    REQUIRE(list.schemas.size() == 2);
    REQUIRE(list.schemas[0].to_text() == "(110)");
    REQUIRE(list.schemas[1].to_text() == "(110)^N 111(0)");
    check_list_matches_tree(FieldElement::one(tribonacci()), tribonacci(), list, 12);
}

TEST_CASE("expansions of 1 at q = 2 with alphabet {0,1,2}") {
    BaseValue q = generalized_golden(2); // = 2, the even-M golden ratio
    ExpansionList list = expansions_of_one(q, 64);
    REQUIRE(list.schemas.size() == 3);
    REQUIRE(list.schemas[0].to_text() == "(1)");
    REQUIRE(list.schemas[1].to_text() == "(1)^N 2(0)");
    REQUIRE(list.schemas[2].to_text() == "(1)^N 0(2)");
    check_list_matches_tree(FieldElement::one(q), q, list, 12);
}

TEST_CASE("expansions of 1 at the 1101 base") {
    BaseValue b = base_1101();
    ExpansionList list = expansions_of_one(b, 64);
    REQUIRE(list.schemas.size() == 3);
    REQUIRE(list.schemas[0].to_text() == "(1100)");
    REQUIRE(list.schemas[1].to_text() == "(1100)^N 1101(0)");
    REQUIRE(list.schemas[2].to_text() == "(1100)^N 10(1)");
    check_list_matches_tree(FieldElement::one(b), b, list, 12);
}

TEST_CASE("expansions_of_one rejects bases outside V") {
    REQUIRE_THROWS_AS(expansions_of_one(base_from_rational(Int(9), Int(5), 1), 64),
                      UnsupportedBase);
}

TEST_CASE("point expansion lists cross-check against the tree") {
    // x = 1 at golden is the A_q case with b = 11 0^inf
    ExpansionList l1 = expansions_of_point(FieldElement::one(golden()), golden(), 64);
    check_list_matches_tree(FieldElement::one(golden()), golden(), l1, 12);

    // x = 1/q at tribonacci: 0 prefixed to each expansion of 1, plus 1(0)
    BaseValue trib = tribonacci();
    FieldElement inv_q = FieldElement::q(trib).inverse();
    ExpansionList l2 = expansions_of_point(inv_q, trib, 64);
    check_list_matches_tree(inv_q, trib, l2, 12);

    // x = 1 at q = 2, M = 2: the even-M branch contributes 0(2)
    BaseValue q2 = generalized_golden(2);
    ExpansionList l3 = expansions_of_point(FieldElement::one(q2), q2, 64);
    bool has_02 = false;
    for (const auto& s : l3.schemas)
        if (!s.parametric && s.instantiate(0) == seq("0(2)", 2)) has_02 = true;
    REQUIRE(has_02);
    check_list_matches_tree(FieldElement::one(q2), q2, l3, 10);

    // a B_q point at tribonacci: the right gap endpoint over 1/q
    auto [xr, br] = gap_right_endpoint(inv_q, trib, 64);
    PointClassification pc = classify_point(xr, trib, 128);
    REQUIRE(pc.tag == PointTag::InVqNotUq);
    REQUIRE(pc.part == PointPart::Bq);
    ExpansionList l4 = expansions_of_point(xr, trib, 64);
    check_list_matches_tree(xr, trib, l4, 10);

    REQUIRE_THROWS_AS(expansions_of_point(fe(golden(), 1, 2), golden(), 64), NotInVMinusU);

    // deeper conditional branch at the 1101 base: b(x) = 101 ends with the
    // reflected decremented pattern, so (b_1)^- M^inf joins the list
    BaseValue b1101 = base_1101();
    FieldElement x101 = field_eval_prefix(w("101"), b1101);
    ExpansionList l5 = expansions_of_point(x101, b1101, 64);
    bool has_tail_branch = false;
    for (const auto& s : l5.schemas)
        if (!s.parametric && s.instantiate(0) == seq("0(1)")) has_tail_branch = true;
    REQUIRE(has_tail_branch);
    check_list_matches_tree(x101, b1101, l5, 12);
}

TEST_CASE("gap right endpoints") {
    BaseValue phi = golden();
    FieldElement inv_phi = FieldElement::q(phi).inverse();
    auto [xr, br] = gap_right_endpoint(inv_phi, phi, 64);
    REQUIRE(br == seq("1(01)"));
    REQUIRE(field_sign(xr - FieldElement::one(phi)) == 0); // reaches 1 in one step

    BaseValue trib = tribonacci();
    auto [xr2, br2] = gap_right_endpoint(FieldElement::q(trib).inverse(), trib, 64);
    REQUIRE(br2 == seq("1(001)"));
    // the digits are the greedy expansion of the right endpoint itself
    REQUIRE(greedy_expand(xr2, trib, 64).sequence() == br2);

    // a generic rational has an aperiodic (prefix-only) greedy expansion
    REQUIRE_THROWS_AS(gap_right_endpoint(fe(phi, 2, 5), phi, 64), NotFiniteGreedy);
    BaseValue small = base_from_rational(Int(3), Int(2), 1);
    REQUIRE_THROWS_AS(gap_right_endpoint(fe(small, 1, 2), small, 64), UnsupportedBase);
}

TEST_CASE("the KL gap endpoint digits at the word level") {
    // b_R = 1 reflect(alpha(q_KL)) begins 1 0010110...
    Word alpha8 = thue_morse_alpha(1, 8);
    Word br = w("1") + reflect(alpha8);
    REQUIRE(to_string(br) == "100101100");
}

TEST_CASE("A_q approximants of a univoque point") {
    BaseValue b = base_1101();
    FieldElement x = pi_q(seq("(10)"), b);
    auto approx = aq_approximants(x, b, 4, 128);
    REQUIRE(approx.size() == 4);
    // truncations of (10)^inf at the odd cut indices: 1, 101, 10101, ...
    REQUIRE(field_sign(approx[0] - field_eval_prefix(w("1"), b)) == 0);
    REQUIRE(field_sign(approx[1] - field_eval_prefix(w("101"), b)) == 0);
    for (size_t i = 0; i + 1 < approx.size(); ++i)
        REQUIRE(field_sign(approx[i + 1] - approx[i]) > 0);
    for (const auto& a : approx) {
        REQUIRE(field_sign(a - x) < 0);
        PointClassification pc = classify_point(a, b, 128);
        REQUIRE(pc.tag == PointTag::InVqNotUq);
        REQUIRE(pc.part == PointPart::Aq);
    }

    REQUIRE_THROWS_AS(aq_approximants(FieldElement::zero(b), b, 2, 64), NotUnivoquePoint);
    REQUIRE_THROWS_AS(aq_approximants(FieldElement::one(golden()), golden(), 2, 64),
                      NotUnivoquePoint);

    // the right endpoint M/(q-1) is univoque with expansion M^inf; its
    // approximants are the truncation values pi(M^n 0^inf)
    FieldElement sup = j_q_sup(b);
    auto tops = aq_approximants(sup, b, 3, 64);
    REQUIRE(tops.size() == 3);
    REQUIRE(field_sign(tops[0] - field_eval_prefix(w("1"), b)) == 0);
    REQUIRE(field_sign(tops[1] - field_eval_prefix(w("11"), b)) == 0);
    REQUIRE(field_sign(tops[2] - field_eval_prefix(w("111"), b)) == 0);
}

TEST_CASE("branching index and dimension lower bound") {
    BaseValue q = base_from_rational(Int(3), Int(2), 1);
    auto [k, bound] = branching_dim_lower_bound(fe(q, 1, 2), q);
    REQUIRE(k == 5);
    REQUIRE(std::abs(bound - 0.2) < 1e-12);

    REQUIRE_THROWS_AS(branching_dim_lower_bound(FieldElement::one(golden()), golden()),
                      BaseTooLarge);

    BaseValue q2 = base_from_rational(Int(3), Int(2), 2);
    auto [k2, bound2] = branching_dim_lower_bound(fe(q2, 1, 2), q2);
    REQUIRE(k2 == 4); // the digit-sum inequality first holds at 3; a tail inequality defers to 4
    REQUIRE(std::abs(bound2 - std::log(2.0) / (4 * std::log(3.0))) < 1e-12);

    REQUIRE_THROWS_AS(branching_dim_lower_bound(FieldElement::zero(q), q), OutOfJq);
}

TEST_CASE("univoque prefix counts in integer bases") {
    REQUIRE(univoque_prefix_count(3, 3, 1) == 4);
    REQUIRE(univoque_prefix_count(3, 3, 2) == 10);
    REQUIRE(univoque_prefix_count(3, 3, 16) == Int(3) * 65536 - 2);
    double rate = to_double(Rat(univoque_prefix_count(3, 3, 16), univoque_prefix_count(3, 3, 15)));
    REQUIRE(std::abs(rate - 2.0) < 0.05 * 2.0);
    REQUIRE_THROWS_AS(univoque_prefix_count(2, 2, 4), OutOfRange);
}

TEST_CASE("uniqueness oracle: tree counts agree with classify_point") {
    BaseValue phi = golden();
    for (int j = 0; j <= 12; ++j) {
        FieldElement x = grid_point(phi, j, 12);
        ExpansionTree t = expansion_tree(x, phi, 14);
        bool unique14 = true;
        for (size_t lvl = 1; lvl <= 14; ++lvl) unique14 = unique14 && t.count_at(lvl) == 1;
        PointClassification pc = classify_point(x, phi, 96);
        REQUIRE((pc.tag == PointTag::InUq) == unique14);
    }
}
