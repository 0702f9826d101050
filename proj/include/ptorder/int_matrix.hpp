#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ptorder {

/// Arbitrary-precision integer. All matrix and polynomial arithmetic in this
/// library is exact; no floating point appears anywhere.
using Int = boost::multiprecision::cpp_int;

/// Dense square matrix of exact integers, row-major. Entry access is 0-based;
/// every index that crosses a public API boundary (permutations, T-block
/// specs, graph vertices, CLI output) is 1-based to match the usual
/// combinatorial conventions.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static IntMatrix identity(int n);
    /// Convenience constructor for literals in tests and fixtures.
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    int size() const { return n_; }

    Int& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * n_ + c]; }
    const Int& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * n_ + c]; }

    bool operator==(const IntMatrix&) const = default;

    bool is_zero() const;
    bool is_identity() const;
    /// True when every entry lies in {-1, 0, 1}.
    bool is_sign_matrix() const;
    Int trace() const;

    IntMatrix& operator+=(const IntMatrix& o);
    IntMatrix& operator-=(const IntMatrix& o);

private:
    int n_ = 0;
    std::vector<Int> a_;
};

IntMatrix operator+(IntMatrix a, const IntMatrix& b);
IntMatrix operator-(IntMatrix a, const IntMatrix& b);
IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

IntMatrix transpose(const IntMatrix& a);
IntMatrix mat_pow(const IntMatrix& a, unsigned long long k);

/// Permutation of {1..n}, stored by images: image(i) = sigma(i).
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless `images` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(img_.size()); }
    int image(int i) const { return img_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;
    /// Cycles sorted by smallest member, each listed from its smallest member.
    std::vector<std::vector<int>> cycles() const;
    std::vector<int> cycle_lengths() const;  // descending

    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> img_;
};

/// T(i1,j1,i2,j2): +1 at (i1,j1),(i2,j2) and -1 at (i1,j2),(i2,j1), 1-based.
/// Requires i1 != i2 and j1 != j2. T(i1,j1,i2,j2) = T(i2,j2,i1,j1); the
/// normalized() form puts the smaller row first.
struct TBlockSpec {
    int i1 = 0, j1 = 0, i2 = 0, j2 = 0;

    TBlockSpec normalized() const { return i1 <= i2 ? *this : TBlockSpec{i2, j2, i1, j1}; }
    bool operator==(const TBlockSpec&) const = default;
};

IntMatrix permutation_matrix(const Permutation& p);

/// Companion matrix of x^k - 1: 1 at (i+1, i) for 1 <= i <= k-1 and at (1, k).
/// It is the permutation matrix of a k-cycle. Throws for k < 1.
IntMatrix cycle_companion(int k);

IntMatrix t_block(int n, const TBlockSpec& spec);
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// result(i, j) = a(p(i), p(j)); conjugation by the permutation matrix of p.
IntMatrix conjugate(const IntMatrix& a, const Permutation& p);

bool is_permutation_matrix(const IntMatrix& a);
std::optional<Permutation> as_permutation(const IntMatrix& a);

/// Alternating sign matrix test: all row and column partial sums lie in
/// {0, 1} and the full sums equal 1 (equivalently, the non-zero entries of
/// every line alternate in sign, beginning and ending with +1).
bool is_asm(const IntMatrix& a);

struct PTDecomposition {
    Permutation p;
    std::optional<TBlockSpec> t;  // empty when the input was a permutation matrix
};

/// Splits a (0,1,-1)-matrix into P + T when the two -1 entries determine a
/// valid T-block whose +1 entries do not overlap P. Permutation matrices
/// decompose as (P, nullopt). Anything else (a non-sign matrix, one or three
/// -1 entries, -1s sharing a line, leftover not a permutation) yields nullopt.
std::optional<PTDecomposition> decompose_pt(const IntMatrix& a);

/// All n x n alternating sign matrices, by backtracking over partial row and
/// column sums. Guarded to n <= 5 (429 matrices); throws beyond.
std::vector<IntMatrix> enumerate_asms(int n);

}  // namespace ptorder
