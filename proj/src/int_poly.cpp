#include "ptorder/int_poly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ptorder {

namespace {
const Int kZero = 0;
}

void IntPolynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(int deg, Int coeff) {
    if (coeff == 0) return IntPolynomial();
    std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
    c.back() = std::move(coeff);
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::from_ints(const std::vector<long long>& coeffs) {
    std::vector<Int> c(coeffs.begin(), coeffs.end());
    return IntPolynomial(std::move(c));
}

const Int& IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> c(c_);
    for (auto& v : c) v = -v;
    return IntPolynomial(std::move(c));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<Int> c(static_cast<std::size_t>(a.degree()) + b.degree() + 1);
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.coeff(i) == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) c[static_cast<std::size_t>(i) + j] += a.coeff(i) * b.coeff(j);
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial binomial(int k, int sign) {
    if (k < 1 || (sign != 1 && sign != -1)) throw std::invalid_argument("binomial: need k >= 1 and sign +-1");
    std::vector<Int> c(static_cast<std::size_t>(k) + 1);
    c[0] = sign;
    c.back() = 1;
    return IntPolynomial(std::move(c));
}

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::invalid_argument("divide_exact: division by zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> rem(a.coeffs());
    std::vector<Int> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Int& lead = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k) + b.degree()];
        if (top % lead != 0) return std::nullopt;
        Int q = top / lead;
        if (q != 0)
            for (int i = 0; i <= b.degree(); ++i) rem[static_cast<std::size_t>(k) + i] -= q * b.coeff(i);
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    for (const Int& v : rem)
        if (v != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

Int content(const IntPolynomial& p) {
    Int g = 0;
    for (const Int& v : p.coeffs()) g = boost::multiprecision::gcd(g, v);
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Int g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<Int> c(p.coeffs());
    for (auto& v : c) v /= g;
    return IntPolynomial(std::move(c));
}

namespace {

// Pseudo-remainder of a by b: scale by lc(b) at each cancellation step so the
// arithmetic stays integral. The caller strips content immediately afterwards,
// so the exact scaling power is irrelevant.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const Int& lead = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const int shift = a.degree() - b.degree();
        Int top = a.leading();
        std::vector<Int> c(a.coeffs());
        for (auto& v : c) v *= lead;
        for (int i = 0; i <= b.degree(); ++i) c[static_cast<std::size_t>(shift) + i] -= top * b.coeff(i);
        a = IntPolynomial(std::move(c));
    }
    return a;
}

}  // namespace

IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = primitive_part(pseudo_remainder(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

PalindromeClass palindrome_class(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("palindrome_class: zero polynomial");
    const int d = p.degree();
    bool pal = true, skew = true;
    for (int i = 0; i <= d; ++i) {
        if (p.coeff(i) != p.coeff(d - i)) pal = false;
        if (p.coeff(i) != -p.coeff(d - i)) skew = false;
    }
    if (pal) return PalindromeClass::palindromic;
    if (skew) return PalindromeClass::skew_palindromic;
    return PalindromeClass::neither;
}

int euler_totient(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Entries are never mutated once inserted, so references stay valid after the
// cache lock in cyclotomic() is released.
const IntPolynomial& cyclotomic_cached(int d, std::map<int, IntPolynomial>& cache) {
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    IntPolynomial p = binomial(d, -1);
    for (int e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        p = *divide_exact(p, cyclotomic_cached(e, cache));  // x^d - 1 is divisible by Phi_e for e | d
    }
    return cache.emplace(d, std::move(p)).first->second;
}

}  // namespace

const IntPolynomial& cyclotomic(int d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    static std::map<int, IntPolynomial> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_cached(d, cache);
}

IntPolynomial expand(const CyclotomicFactorization& f) {
    IntPolynomial p = IntPolynomial::monomial(0, f.unit);
    for (const auto& [d, mult] : f.factors)
        for (int i = 0; i < mult; ++i) p = p * cyclotomic(d);
    return p;
}

std::optional<CyclotomicFactorization> factor_into_cyclotomics(const IntPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("factor_into_cyclotomics: zero polynomial");
    CyclotomicFactorization out;
    IntPolynomial rest = p;
    if (rest.leading() < 0) {
        out.unit = -1;
        rest = -rest;
    }
    const int deg = rest.degree();
    if (rest.leading() != 1) return std::nullopt;
    if (deg > 0 && (rest.coeff(0) != 1 && rest.coeff(0) != -1)) return std::nullopt;
    const int bound = 2 * deg * deg + 1;
    for (int d = 1; d <= bound && rest.degree() > 0; ++d) {
        if (euler_totient(d) > deg) continue;
        int mult = 0;
        while (true) {
            auto q = divide_exact(rest, cyclotomic(d));
            if (!q) break;
            rest = std::move(*q);
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(d, mult);
    }
    if (rest != IntPolynomial::one()) return std::nullopt;
    return out;
}

IntPolynomial binomial_gcd(int s, int sign_s, int t, int sign_t) {
    if (s < 1 || t < 1) throw std::invalid_argument("binomial_gcd: s, t must be positive");
    auto two_part = [](int v) {
        int r = 1;
        while (v % 2 == 0) {
            r *= 2;
            v /= 2;
        }
        return r;
    };
    const int g = std::gcd(s, t);
    if (sign_s == -1 && sign_t == -1) return binomial(g, -1);
    if (sign_s == 1 && sign_t == 1) return two_part(s) == two_part(t) ? binomial(g, 1) : IntPolynomial::one();
    // Mixed signs: orient as gcd(x^s - 1, x^t + 1).
    if (sign_s == 1) {
        std::swap(s, t);
    }
    return two_part(s) > two_part(t) ? binomial(g, 1) : IntPolynomial::one();
}

IntPolynomial char_poly(const IntMatrix& a) {
    const int n = a.size();
    // Samuelson-Berkowitz: iteratively transform the characteristic
    // coefficients of the leading principal r x r submatrix via a lower
    // triangular Toeplitz product, leading coefficient first.
    std::vector<Int> c{1};
    for (int r = 1; r <= n; ++r) {
        std::vector<Int> t(static_cast<std::size_t>(r) + 1);
        t[0] = 1;
        t[1] = -a(r - 1, r - 1);
        if (r >= 2) {
            std::vector<Int> w(static_cast<std::size_t>(r) - 1);  // A_{r-1}^i * S
            for (int i = 0; i < r - 1; ++i) w[i] = a(i, r - 1);
            for (int k = 2; k <= r; ++k) {
                Int dot = 0;
                for (int i = 0; i < r - 1; ++i) dot += a(r - 1, i) * w[i];
                t[static_cast<std::size_t>(k)] = -dot;
                if (k < r) {
                    std::vector<Int> nw(static_cast<std::size_t>(r) - 1);
                    for (int i = 0; i < r - 1; ++i) {
                        Int s = 0;
                        for (int j = 0; j < r - 1; ++j) s += a(i, j) * w[j];
                        nw[i] = std::move(s);
                    }
                    w = std::move(nw);
                }
            }
        }
        std::vector<Int> nc(static_cast<std::size_t>(r) + 1);
        for (std::size_t i = 0; i < nc.size(); ++i)
            for (std::size_t j = 0; j < c.size() && j <= i; ++j)
                if (i - j < t.size()) nc[i] += t[i - j] * c[j];
        c = std::move(nc);
    }
    std::vector<Int> low_first(c.rbegin(), c.rend());
    return IntPolynomial(std::move(low_first));
}

IntMatrix poly_eval_matrix(const IntPolynomial& p, const IntMatrix& a) {
    const int n = a.size();
    IntMatrix result(n);
    for (int i = p.degree(); i >= 0; --i) {
        result = result * a;
        for (int d = 0; d < n; ++d) result(d, d) += p.coeff(i);
    }
    return result;
}

}  // namespace ptorder
