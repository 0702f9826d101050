#include "ptorder/asm_permute.hpp"

#include "ptorder/io.hpp"
#include "ptorder/order_engine.hpp"
#include "ptorder/theorems.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ptorder;

namespace {

const IntMatrix& fixture(const std::string& name) {
    for (const auto& [key, m] : paper_fixtures())
        if (key == name) return m;
    throw std::logic_error("unknown fixture " + name);
}

Classification classify_standard(GraphType type, const std::vector<int>& params) {
    return classify(build_graph(standard_matrix(type, params)));
}

using ConstraintTriple = std::array<int, 3>;

std::set<ConstraintTriple> triples(const std::vector<BetweennessConstraint>& cs) {
    std::set<ConstraintTriple> out;
    for (const auto& c : cs) {
        REQUIRE_FALSE(c.degenerate);
        out.insert({c.middle, std::min(c.left, c.right), std::max(c.left, c.right)});
    }
    return out;
}

}  // namespace

TEST_CASE("betweenness constraints of the type 1 standard form, d=5 j=1") {
    const auto cs = betweenness_constraints(classify_standard(GraphType::Type1, {10, 5, 9, 1}));
    REQUIRE(cs.size() == 4);
    // j between n-j and n; n-j between j and d; 1 between j+1 and d+1;
    // d+1 between 1 and n-j+1.
    const std::set<ConstraintTriple> expected{{1, 9, 10}, {9, 1, 5}, {1, 2, 6}, {6, 1, 10}};
    CHECK(triples(cs) == expected);
}

TEST_CASE("betweenness constraints of type 2(d) and 3(c) forms") {
    const auto c2d = triples(betweenness_constraints(classify_standard(GraphType::Type2d, {9, 1, 2, 9})));
    // p between i1-1 and n; n between i2-1 and p; i1 between 1 and i2;
    // i2 between i1 and p+1.
    CHECK(c2d == std::set<ConstraintTriple>{{9, 1, 10}, {10, 8, 9}, {2, 1, 9}, {9, 2, 10}});

    const auto c3c = triples(betweenness_constraints(classify_standard(GraphType::Type3c, {4, 2, 6, 3})));
    // n between p and p+q; p+q between i-1 and n; i between 1 and p+1;
    // 1 between i and p+q+1.
    CHECK(c3c == std::set<ConstraintTriple>{{12, 4, 6}, {6, 2, 12}, {3, 1, 5}, {1, 3, 7}});
}

TEST_CASE("find_asm_ordering") {
    SUBCASE("an ASM input is returned unchanged") {
        const auto w = find_asm_ordering(fixture("example1"));
        REQUIRE(w.has_value());
        CHECK(*w == Permutation::identity(5));
    }
    SUBCASE("the order-16 matrix has an ASM witness") {
        const IntMatrix m = fixture("type2d-order16");
        const auto w = find_asm_ordering(m);
        REQUIRE(w.has_value());
        const IntMatrix b = conjugate(m, *w);
        CHECK(is_asm(b));
        CHECK(brute_force_order(b, 200) == 16ull);
    }
    SUBCASE("the type 2(c) exception (2,3,1,1) has none") {
        CHECK_FALSE(find_asm_ordering(standard_matrix(GraphType::Type2c, {2, 3, 1, 1})).has_value());
    }
    SUBCASE("row sums not equal to 1 settle the question immediately") {
        CHECK_FALSE(find_asm_ordering(t_block(3, {1, 1, 2, 2})).has_value());
    }
    SUBCASE("capacity guard") {
        CHECK_THROWS_AS(find_asm_ordering(IntMatrix::identity(11)), capacity_error);
    }
}

TEST_CASE("every returned ordering satisfies the betweenness constraints") {
    for (const auto& [type, params] : std::vector<std::pair<GraphType, std::vector<int>>>{
             {GraphType::Type1, {6, 3, 5, 1}},
             {GraphType::Type2c, {3, 4, 1, 2}},
             {GraphType::Type2d, {9, 1, 2, 9}},
             {GraphType::Type3c, {3, 2, 2, 2}}}) {
        const IntMatrix m = standard_matrix(type, params);
        const auto w = find_asm_ordering(m);
        REQUIRE(w.has_value());
        for (const auto& c : betweenness_constraints(classify(build_graph(m)))) CHECK(satisfies(c, *w));
    }
}

TEST_CASE("asm_permutable_theorem") {
    CHECK(asm_permutable_theorem(classify_standard(GraphType::Type1, {10, 5, 9, 1})));
    CHECK_FALSE(asm_permutable_theorem(classify_standard(GraphType::Type2d, {9, 1, 9, 2})));
    CHECK_FALSE(asm_permutable_theorem(classify_standard(GraphType::Type3c, {2, 1, 1, 2})));
    CHECK(asm_permutable_theorem(classify_standard(GraphType::Type2d, {9, 1, 2, 9})));
    CHECK_FALSE(asm_permutable_theorem(classify_standard(GraphType::Type2c, {2, 3, 1, 1})));
    CHECK(asm_permutable_theorem(classify_standard(GraphType::Type2c, {3, 4, 1, 2})));
    CHECK_THROWS_AS(asm_permutable_theorem(classify(build_graph(IntMatrix::identity(3)))), std::invalid_argument);
}

TEST_CASE("type2c_asm_orderable_graph") {
    CHECK_FALSE(type2c_asm_orderable_graph(2, 3, 1, 1));
    CHECK_FALSE(type2c_asm_orderable_graph(2, 5, 1, 4));
    CHECK_FALSE(type2c_asm_orderable_graph(5, 2, 4, 1));
    CHECK(type2c_asm_orderable_graph(3, 4, 1, 2));
    CHECK(type2c_asm_orderable_graph(2, 4, 1, 2));
}

TEST_CASE("reversal symmetry of the ordering search") {
    for (const auto& [type, params] : std::vector<std::pair<GraphType, std::vector<int>>>{
             {GraphType::Type2c, {2, 3, 1, 1}},
             {GraphType::Type2c, {3, 4, 1, 2}},
             {GraphType::Type2d, {4, 1, 4, 2}},
             {GraphType::Type2d, {4, 1, 2, 4}},
             {GraphType::Type3c, {2, 1, 3, 2}}}) {
        const IntMatrix m = standard_matrix(type, params);
        CHECK(find_asm_ordering(m).has_value() == find_asm_ordering(transpose(m)).has_value());
    }
}

TEST_CASE("theorem verdict matches the search on every finite-order record up to n = 7") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& rec : enumerate_finite_order(n))
            CHECK(rec.asm_permutable == find_asm_ordering(rec.standard).has_value());
}
