#pragma once

#include "ptorder/int_matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ptorder {

/// Integer polynomial, coefficient of x^i at index i, trailing zeros stripped.
/// The zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial zero() { return IntPolynomial(); }
    static IntPolynomial one() { return monomial(0); }
    static IntPolynomial monomial(int deg, Int coeff = 1);
    static IntPolynomial from_ints(const std::vector<long long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& coeff(int i) const;
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const { return c_.back(); }

    bool operator==(const IntPolynomial&) const = default;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial& operator-=(const IntPolynomial& o);

private:
    void normalize();
    std::vector<Int> c_;
};

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

/// x^k + sign, for sign = +1 / -1.
IntPolynomial binomial(int k, int sign);

/// Quotient when b divides a exactly over the integers, otherwise nullopt.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

Int content(const IntPolynomial& p);
IntPolynomial primitive_part(const IntPolynomial& p);

/// Gcd over Q via a content-normalized pseudo-remainder sequence; the result
/// is primitive with positive leading coefficient.
IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b);

enum class PalindromeClass { palindromic, skew_palindromic, neither };

/// palindromic: coeff(i) == coeff(deg-i) for all i; skew: coeff(i) == -coeff(deg-i).
PalindromeClass palindrome_class(const IntPolynomial& p);

/// d-th cyclotomic polynomial, by exact division of x^d - 1 by the Phi_e for
/// proper divisors e of d. Cached; degree is Euler's totient of d.
const IntPolynomial& cyclotomic(int d);

int euler_totient(int n);

struct CyclotomicFactorization {
    std::vector<std::pair<int, int>> factors;  // (d, multiplicity), d ascending
    int unit = 1;                              // +1 or -1

    bool operator==(const CyclotomicFactorization&) const = default;
};

IntPolynomial expand(const CyclotomicFactorization& f);

/// Full factorization when p is +-(a product of cyclotomic polynomials),
/// otherwise nullopt. Trial-divides by Phi_d over all candidates d with
/// phi(d) <= deg(p); since phi(d) >= sqrt(d/2), candidates are sieved up to
/// 2*deg(p)^2 + 1.
std::optional<CyclotomicFactorization> factor_into_cyclotomics(const IntPolynomial& p);

/// gcd(x^s + sign_s, x^t + sign_t) in closed form via the 2-parts of s and t:
///   gcd(x^s-1, x^t-1) = x^g - 1,
///   gcd(x^s+1, x^t+1) = x^g + 1 if [s]_2 == [t]_2, else 1,
///   gcd(x^s-1, x^t+1) = x^g + 1 if [s]_2 >  [t]_2, else 1,
/// where g = gcd(s, t).
IntPolynomial binomial_gcd(int s, int sign_s, int t, int sign_t);

/// Characteristic polynomial det(xI - a) by the division-free
/// Samuelson-Berkowitz scheme; all intermediates are exact integers.
IntPolynomial char_poly(const IntMatrix& a);

/// Exact p(a) by Horner's scheme.
IntMatrix poly_eval_matrix(const IntPolynomial& p, const IntMatrix& a);

}  // namespace ptorder
