#pragma once

#include "ptorder/int_matrix.hpp"
#include "ptorder/int_poly.hpp"
#include "ptorder/pt_graph.hpp"

#include <optional>
#include <vector>

namespace ptorder {

/// Largest power of 2 dividing t (the 2-part [t]_2).
unsigned long long two_adic(unsigned long long t);

/// Order of C_2d + T(1, 2d-j, d+1, j) for 1 <= j < d: lcm(2j, 2d-2j, d) when
/// [j]_2 != [d-j]_2, otherwise no finite order.
std::optional<unsigned long long> type1_order(int d, int j);

/// Characteristic polynomial of C_n + T(1, j1, d+1, j2) for d <= n/2:
///   x^n - x^(n-j1) + x^([n-j1+d]) + x^(n-j2) - x^([n-j2+d]) - 1
/// with [t] = t mod n; coefficients accumulate when exponents collide.
IntPolynomial type1_charpoly(int n, int j1, int j2, int d);

/// Characteristic polynomial of C_m1 (+) C_m2 + T(1, m1+k2, m1+1, k1):
/// the eight-term sum
///   x^n + x^(n-k1) + x^(n-k2) - x^m1 - x^m2 - x^(m1-k1) - x^(m2-k2) + 1
/// with n = m1 + m2, again accumulating on collisions.
IntPolynomial type2b_charpoly(int m1, int m2, int k1, int k2);

/// Order of C_p (+) C_q + T(1, n, h+1, n-l): lcm(p, q) when gcd(p, q)
/// divides h or l, otherwise no finite order.
std::optional<unsigned long long> type2c_order(int p, int q, int h, int l);

/// Order of C_p (+) C_q + T(i1, n, i2, p). Finite iff
///   (a) i1 + i2 = p + 2 and [i2-1]_2 >= [p-i2+1]_2,
///   (b) gcd(q, p-i2+1) divides p,
///   (c) [q]_2 <= [i2-1]_2, or [q]_2 > [i2-1]_2 and p/d is an even integer
///       with d = gcd(q/2, i2-1);
/// the order is then lcm(p-i2+1, 2(i2-1), q). The pair (i1, i2) is ordered.
std::optional<unsigned long long> type2d_order(int p, int q, int i1, int i2);

/// Order of C_p (+) C_q (+) C_m + T(1, p+q, i, p+q+m): lcm(p, q, m) when
/// gcd(p, q) and gcd(p, m) both divide i-1, otherwise no finite order.
std::optional<unsigned long long> type3c_order(int p, int q, int m, int i);

/// Standard-form matrix for Type1 {n,d,j1,j2}, Type2b {m1,m2,k1,k2},
/// Type2c {p,q,h,l}, Type2d {p,q,i1,i2} or Type3c {p,q,m,i} parameters.
IntMatrix standard_matrix(GraphType type, const std::vector<int>& params);

/// Standard forms for the types without finite non-permutation order, used by
/// the verification sweeps. Cycles are rotated so the distinguished vertices
/// sit at fixed positions; tuples that would produce an entry of 2 or cancel
/// a -1 are rejected with std::invalid_argument.
IntMatrix type2a_matrix(int a, int b, int alpha, int beta);
IntMatrix type2b_matrix(int m1, int m2, int k1, int k2);
IntMatrix type3a_matrix(int a, int b, int c, int alpha);
IntMatrix type3b_matrix(int a, int b, int c, int alpha);
IntMatrix type4_matrix(int a, int b, int c, int d);

struct FiniteOrderRecord {
    GraphType type = GraphType::NotPT;
    std::vector<int> params;  // canonical, as produced by classify()
    IntMatrix standard;
    unsigned long long order = 0;
    bool exotic = false;          // order not attained by any permutation in S_n
    bool asm_permutable = false;  // verdict of the closed-form theorems
};

/// All elementary PT-matrices of finite order of size n, up to permutation
/// similarity and transposition: every parameter tuple of Types 1, 2(c),
/// 2(d), 3(c) is visited, kept when its order predicate accepts, and
/// deduplicated by the canonical key (type, min of the classified parameters
/// of the matrix and of its transpose). Guarded to 2 <= n <= 14.
std::vector<FiniteOrderRecord> enumerate_finite_order(int n);

/// Orders of records of enumerate_finite_order(n) that no n x n permutation
/// matrix attains.
std::vector<unsigned long long> exotic_orders(int n);

}  // namespace ptorder
