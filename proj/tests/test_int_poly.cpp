#include "ptorder/int_poly.hpp"

#include "ptorder/int_matrix.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace ptorder;

namespace {

IntMatrix example1() {
    return IntMatrix::from_rows({{0, 0, 1, 0, 0},
                                 {1, 0, -1, 1, 0},
                                 {0, 0, 1, -1, 1},
                                 {0, 0, 0, 1, 0},
                                 {0, 1, 0, 0, 0}});
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
    const auto p = IntPolynomial::from_ints({-1, 0, 1});  // x^2 - 1
    const auto q = IntPolynomial::from_ints({1, 1});      // x + 1
    CHECK((p + (-p)).is_zero());
    CHECK(p * q == IntPolynomial::from_ints({-1, -1, 1, 1}));
    CHECK(IntPolynomial::from_ints({0, 0, 0}).is_zero());
    CHECK(IntPolynomial::from_ints({0, 0, 0}).degree() == -1);
    CHECK(*divide_exact(p, q) == IntPolynomial::from_ints({-1, 1}));
    CHECK_FALSE(divide_exact(IntPolynomial::from_ints({1, 1, 1}), q).has_value());
}

TEST_CASE("char_poly") {
    // (x-1)^2 (x+1) (x^2-x+1) expanded
    CHECK(char_poly(example1()) == IntPolynomial::from_ints({1, -2, 1, 1, -2, 1}));
    for (int k = 1; k <= 8; ++k) CHECK(char_poly(cycle_companion(k)) == binomial(k, -1));
    // (x+1)(x^2+1)(x^3-1) expanded
    const IntMatrix a = cycle_companion(6) + t_block(6, {1, 5, 4, 1});
    CHECK(char_poly(a) == IntPolynomial::from_ints({-1, -1, -1, 0, 1, 1, 1}));
}

TEST_CASE("char_poly of a generic small matrix") {
    const IntMatrix a = IntMatrix::from_rows({{2, 1}, {3, 4}});
    // x^2 - (trace) x + det = x^2 - 6x + 5
    CHECK(char_poly(a) == IntPolynomial::from_ints({5, -6, 1}));
}

TEST_CASE("char_poly is invariant under conjugation") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 15; ++trial) {
        IntMatrix a(5);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) a(i, j) = entry(rng);
        std::vector<int> img{1, 2, 3, 4, 5};
        std::shuffle(img.begin(), img.end(), rng);
        CHECK(char_poly(conjugate(a, Permutation(img))) == char_poly(a));
    }
}

TEST_CASE("cyclotomic") {
    CHECK(cyclotomic(1) == IntPolynomial::from_ints({-1, 1}));
    CHECK(cyclotomic(2) == IntPolynomial::from_ints({1, 1}));
    CHECK(cyclotomic(6) == IntPolynomial::from_ints({1, -1, 1}));
    CHECK(cyclotomic(12) == IntPolynomial::from_ints({1, 0, -1, 0, 1}));
    for (int d = 1; d <= 40; ++d) CHECK(cyclotomic(d).degree() == euler_totient(d));
    for (int k = 1; k <= 30; ++k) {
        IntPolynomial prod = IntPolynomial::one();
        for (int d = 1; d <= k; ++d)
            if (k % d == 0) prod = prod * cyclotomic(d);
        CHECK(prod == binomial(k, -1));
    }
}

TEST_CASE("factor_into_cyclotomics") {
    const auto f = factor_into_cyclotomics(char_poly(example1()));
    REQUIRE(f.has_value());
    CHECK(f->unit == 1);
    CHECK(f->factors == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {6, 1}});

    const auto g = factor_into_cyclotomics(binomial(5, -1));
    REQUIRE(g.has_value());
    CHECK(g->factors == std::vector<std::pair<int, int>>{{1, 1}, {5, 1}});

    CHECK_FALSE(factor_into_cyclotomics(IntPolynomial::from_ints({2, 1, 1})).has_value());
    CHECK_FALSE(factor_into_cyclotomics(IntPolynomial::from_ints({-1, 1, 1})).has_value());

    const auto neg = factor_into_cyclotomics(-binomial(3, -1));
    REQUIRE(neg.has_value());
    CHECK(neg->unit == -1);
    CHECK(expand(*neg) == -binomial(3, -1));
}

TEST_CASE("factor_into_cyclotomics round-trips random products") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> index(1, 24), count(1, 4);
    for (int trial = 0; trial < 40; ++trial) {
        CyclotomicFactorization f;
        f.unit = trial % 2 == 0 ? 1 : -1;
        std::map<int, int> mult;
        int degree = 0;
        const int parts = count(rng);
        for (int i = 0; i < parts; ++i) {
            const int d = index(rng);
            if (degree + euler_totient(d) > 20) break;
            degree += euler_totient(d);
            ++mult[d];
        }
        if (mult.empty()) continue;
        f.factors.assign(mult.begin(), mult.end());
        const auto back = factor_into_cyclotomics(expand(f));
        REQUIRE(back.has_value());
        CHECK(back->unit == f.unit);
        CHECK(back->factors == f.factors);
    }
}

TEST_CASE("palindrome_class") {
    CHECK(palindrome_class(IntPolynomial::from_ints({-1, 1})) == PalindromeClass::skew_palindromic);
    CHECK(palindrome_class(IntPolynomial::from_ints({1, -1, 1})) == PalindromeClass::palindromic);
    CHECK(palindrome_class(IntPolynomial::from_ints({-1, 1, 0, 1})) == PalindromeClass::neither);
    for (int d = 2; d <= 30; ++d) CHECK(palindrome_class(cyclotomic(d)) == PalindromeClass::palindromic);
}

TEST_CASE("products of cyclotomics are palindromic or skew by the parity of Phi_1") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> index(1, 12), count(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        IntPolynomial p = IntPolynomial::one();
        int ones = 0;
        const int parts = count(rng);
        for (int i = 0; i < parts; ++i) {
            const int d = index(rng);
            if (d == 1) ++ones;
            p = p * cyclotomic(d);
        }
        const auto expected = ones % 2 == 0 ? PalindromeClass::palindromic : PalindromeClass::skew_palindromic;
        CHECK(palindrome_class(p) == expected);
    }
}

TEST_CASE("binomial_gcd closed forms") {
    CHECK(binomial_gcd(4, -1, 6, -1) == IntPolynomial::from_ints({-1, 0, 1}));  // x^2 - 1
    CHECK(binomial_gcd(2, 1, 4, 1) == IntPolynomial::one());
    CHECK(binomial_gcd(4, -1, 2, 1) == IntPolynomial::from_ints({1, 0, 1}));  // x^2 + 1
    CHECK(binomial_gcd(2, 1, 4, -1) == IntPolynomial::from_ints({1, 0, 1}));
    CHECK(binomial_gcd(2, 1, 6, 1) == IntPolynomial::from_ints({1, 0, 1}));
}

TEST_CASE("binomial_gcd equals the generic polynomial gcd") {
    for (int s = 1; s <= 20; ++s)
        for (int t = 1; t <= 20; ++t)
            for (int ss : {-1, 1})
                for (int st : {-1, 1}) CHECK(binomial_gcd(s, ss, t, st) == poly_gcd(binomial(s, ss), binomial(t, st)));
}

TEST_CASE("poly_gcd handles content and signs") {
    const auto a = IntPolynomial::from_ints({-2, 0, 2});          // 2x^2 - 2
    const auto b = IntPolynomial::from_ints({3, 3});              // 3x + 3
    CHECK(poly_gcd(a, b) == IntPolynomial::from_ints({1, 1}));    // primitive, positive leading
    CHECK(poly_gcd(-a, b) == IntPolynomial::from_ints({1, 1}));
    CHECK(poly_gcd(a, IntPolynomial::zero()) == IntPolynomial::from_ints({-1, 0, 1}));
}

TEST_CASE("poly_eval_matrix") {
    CHECK(poly_eval_matrix(binomial(6, -1), example1()).is_zero());
    CHECK(poly_eval_matrix(IntPolynomial::from_ints({-1, 1}), IntMatrix::identity(4)).is_zero());
    // Minimum polynomial (x-1)(x+1)(x^2-x+1) annihilates; dropping (x+1) does not.
    const auto min_poly = IntPolynomial::from_ints({-1, 1, 0, -1, 1});
    CHECK(poly_eval_matrix(min_poly, example1()).is_zero());
    const auto dropped = cyclotomic(1) * cyclotomic(6);
    CHECK_FALSE(poly_eval_matrix(dropped, example1()).is_zero());
}
