#include "ptorder/theorems.hpp"

#include "ptorder/io.hpp"
#include "ptorder/order_engine.hpp"
#include "ptorder/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>

using namespace ptorder;

namespace {

const IntMatrix& fixture(const std::string& name) {
    for (const auto& [key, m] : paper_fixtures())
        if (key == name) return m;
    throw std::logic_error("unknown fixture " + name);
}

bool has_record(const std::vector<FiniteOrderRecord>& records, GraphType type, unsigned long long order) {
    return std::any_of(records.begin(), records.end(),
                       [&](const FiniteOrderRecord& r) { return r.type == type && r.order == order; });
}

}  // namespace

TEST_CASE("two_adic") {
    CHECK(two_adic(1) == 1);
    CHECK(two_adic(12) == 4);
    CHECK(two_adic(8) == 8);
    CHECK(two_adic(40) == 8);
    CHECK_THROWS_AS(two_adic(0), std::invalid_argument);
}

TEST_CASE("type1_order") {
    CHECK(type1_order(5, 1) == 40ull);
    CHECK(type1_order(5, 2) == 60ull);
    CHECK_FALSE(type1_order(2, 1).has_value());
    CHECK(type1_order(3, 1) == 12ull);
}

TEST_CASE("type1_charpoly") {
    // Matches the displayed expansion of (x^j+1)(x^(d-j)+1)(x^d-1) at j=1, d=5.
    CHECK(type1_charpoly(10, 9, 1, 5) == IntPolynomial::from_ints({-1, -1, 0, 0, -1, 0, 1, 0, 0, 1, 1}));
    CHECK(type1_charpoly(6, 1, 2, 3) == char_poly(cycle_companion(6) + t_block(6, {1, 1, 4, 2})));
    // x = 1 is always a root: the matrix has all row sums 1.
    for (const auto& [n, j1, j2, d] : std::vector<std::array<int, 4>>{{6, 1, 2, 3}, {9, 2, 7, 4}, {10, 9, 1, 5}}) {
        const IntPolynomial p = type1_charpoly(n, j1, j2, d);
        Int at_one = 0;
        for (int i = 0; i <= p.degree(); ++i) at_one += p.coeff(i);
        CHECK(at_one == 0);
    }
}

TEST_CASE("type2b_charpoly") {
    CHECK(type2b_charpoly(3, 4, 2, 3) == char_poly(type2b_matrix(3, 4, 2, 3)));
    // Cancellation case k1 = m1, k2 = m2 collapses to x^n - 1.
    CHECK(type2b_charpoly(3, 4, 3, 4) == binomial(7, -1));
    CHECK(palindrome_class(type2b_charpoly(3, 4, 1, 1)) == PalindromeClass::neither);
}

TEST_CASE("type2c_order") {
    CHECK(type2c_order(2, 3, 1, 1) == 6ull);
    CHECK(type2c_order(4, 6, 2, 3) == 12ull);
    CHECK_FALSE(type2c_order(4, 6, 3, 1).has_value());
}

TEST_CASE("type2d_order") {
    CHECK(type2d_order(9, 1, 2, 9) == 16ull);
    CHECK(type2d_order(4, 1, 4, 2) == 6ull);
    CHECK(type2d_order(4, 1, 2, 4) == 6ull);
    CHECK_FALSE(type2d_order(3, 1, 3, 2).has_value());
}

TEST_CASE("type3c_order") {
    CHECK(type3c_order(4, 2, 6, 3) == 12ull);
    CHECK(type3c_order(2, 1, 1, 2) == 2ull);
    CHECK_FALSE(type3c_order(4, 2, 6, 2).has_value());
}

TEST_CASE("standard_matrix reproduces the displayed matrices") {
    CHECK(standard_matrix(GraphType::Type1, {10, 5, 9, 1}) == fixture("type1-order40"));
    CHECK(standard_matrix(GraphType::Type1, {10, 5, 8, 2}) == fixture("type1-order60"));
    CHECK(standard_matrix(GraphType::Type2d, {9, 1, 2, 9}) == fixture("type2d-order16"));
    const IntMatrix m3c = standard_matrix(GraphType::Type3c, {2, 1, 1, 2});
    CHECK(m3c.size() == 4);
    CHECK(finite_order(m3c).order == 2ull);
}

TEST_CASE("negative-family builders reject malformed tuples") {
    CHECK_THROWS_AS(type2a_matrix(2, 2, 2, 3), std::invalid_argument);  // doubles the (1,2) arc
    CHECK_THROWS_AS(type3b_matrix(2, 1, 1, 2), std::invalid_argument);  // cancels the red chord
    CHECK_THROWS_AS(type4_matrix(0, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("enumerate_finite_order") {
    SUBCASE("n = 10 realizes the exotic orders 16, 40, 60") {
        const auto records = enumerate_finite_order(10);
        CHECK(has_record(records, GraphType::Type1, 40));
        CHECK(has_record(records, GraphType::Type1, 60));
        CHECK(has_record(records, GraphType::Type2d, 16));
        for (const auto& r : records) {
            // Cross-module consistency: the engine agrees with the predicate.
            CHECK(finite_order(r.standard).order == r.order);
        }
    }
    SUBCASE("n = 4 contains the expected small records") {
        const auto records = enumerate_finite_order(4);
        CHECK(has_record(records, GraphType::Type2d, 4));
        CHECK(has_record(records, GraphType::Type3c, 2));
    }
    SUBCASE("no non-permutation records exist below n = 4") {
        CHECK(enumerate_finite_order(2).empty());
        CHECK(enumerate_finite_order(3).empty());
    }
    SUBCASE("records deduplicate transposes") {
        // Both (i1,i2) orderings of a 2(d) pair are visited; conjugation or
        // transposition-equivalent tuples must collapse to one record.
        const auto records = enumerate_finite_order(5);
        long long order6_2d = std::count_if(records.begin(), records.end(), [](const FiniteOrderRecord& r) {
            return r.type == GraphType::Type2d && r.order == 6;
        });
        // (4,1,2,4) and (4,1,4,2) are genuinely inequivalent (different traces).
        CHECK(order6_2d == 2);
    }
    SUBCASE("guards") {
        CHECK_THROWS_AS(enumerate_finite_order(1), std::invalid_argument);
        CHECK_THROWS_AS(enumerate_finite_order(15), std::invalid_argument);
    }
}

TEST_CASE("no 6x6 record carries Phi_12 in its minimum polynomial") {
    for (const auto& r : enumerate_finite_order(6)) {
        const OrderResult o = finite_order(r.standard);
        REQUIRE(o.finite);
        const auto factors = factor_into_cyclotomics(*o.min_poly);
        REQUIRE(factors.has_value());
        for (const auto& [d, mult] : factors->factors) CHECK(d != 12);
    }
}

TEST_CASE("exotic_orders") {
    const auto e10 = exotic_orders(10);
    for (unsigned long long v : {16ull, 40ull, 60ull}) CHECK(std::binary_search(e10.begin(), e10.end(), v));
    CHECK(exotic_orders(5).empty());
    CHECK(exotic_orders(2).empty());
}

TEST_CASE("injected faults are caught by the verification harness") {
    // Sanity of the sweep itself: a predicate with the 2-part condition
    // dropped claims finite order where none exists and must be flagged.
    const auto mutant = [](int d, int j) -> std::optional<unsigned long long> {
        return std::lcm(std::lcm(2ull * j, 2ull * (d - j)), static_cast<unsigned long long>(d));
    };
    CHECK_FALSE(verify_type1_orders(mutant, 8).pass);
    CHECK(verify_type1_orders([](int d, int j) { return type1_order(d, j); }, 8).pass);
}
