#pragma once

#include "ptorder/int_matrix.hpp"
#include "ptorder/int_poly.hpp"

#include <optional>
#include <vector>

namespace ptorder {

struct OrderResult {
    bool finite = false;
    std::optional<unsigned long long> order;     // present iff finite
    std::optional<IntPolynomial> min_poly;       // present iff finite; squarefree
    IntPolynomial characteristic;                // always computed
    std::optional<CyclotomicFactorization> char_factors;  // present iff characteristic is cyclotomic
};

/// Decides finite multiplicative order exactly. A matrix whose characteristic
/// polynomial is a product of cyclotomics has finite order iff it is
/// diagonalizable, iff the radical (product of the distinct Phi_d) annihilates
/// it; the order is then the lcm of the indices d. Rejects early when the
/// constant term of the characteristic polynomial is not +-1.
OrderResult finite_order(const IntMatrix& a);

/// Smallest k <= bound with a^k = I, by iterated exact multiplication.
std::optional<unsigned long long> brute_force_order(const IntMatrix& a, unsigned long long bound);

/// All finite orders of elements of GL(n, Q): lcm(d_1..d_k) over multisets
/// with phi(d_1) + ... + phi(d_k) = n. Guarded to n <= 30.
std::vector<unsigned long long> possible_gl_orders(int n);

/// All orders of n x n permutation matrices: lcms of partitions of n. n <= 30.
std::vector<unsigned long long> permutation_orders(int n);

/// max(possible_gl_orders(n)) — the default brute-force search bound.
unsigned long long default_order_bound(int n);

/// Rank of an integer matrix given as rows, by fraction-free (Bareiss)
/// elimination. Rows may have any common width.
int integer_rank(std::vector<std::vector<Int>> rows);

/// Integer basis of the right nullspace of a, via exact rational elimination.
std::vector<std::vector<Int>> right_nullspace(const IntMatrix& a);

/// True iff v lies in the column space of a (exact rank comparison).
bool in_column_space(const IntMatrix& a, const std::vector<Int>& v);

/// [[P, M], [0, Q]] with M given as p rows of q entries.
IntMatrix assemble_block_triangular(const IntMatrix& p, const std::vector<std::vector<Int>>& m,
                                    const IntMatrix& q);

/// Decides diagonalizability of the assembled block-triangular matrix by the
/// column-space criterion: with g = gcd of the two minimum polynomials and N
/// the upper-right block of g(A), the matrix is diagonalizable iff N*v lies in
/// the column space of g(P) for every v in the right nullspace of g(Q).
/// Preconditions (finite order of both blocks, matching shape of m) are
/// checked and reported via std::invalid_argument.
bool block_diagonalizable(const IntMatrix& p_block, const IntMatrix& q_block,
                          const std::vector<std::vector<Int>>& m_block);

}  // namespace ptorder
