#pragma once

#include "ptorder/int_matrix.hpp"
#include "ptorder/pt_graph.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ptorder {

struct SuiteResult {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string detail;                // first discrepancy, when failing
    std::vector<std::string> covered;  // names of the theorem operations exercised
};

using OrderPredicate2 = std::function<std::optional<unsigned long long>(int, int)>;
using OrderPredicate4 = std::function<std::optional<unsigned long long>(int, int, int, int)>;

/// Theorem-vs-brute-force sweeps. Each takes the predicate as an argument so
/// the harness sanity test can inject a mutated one and watch it fail.
SuiteResult verify_type1_orders(const OrderPredicate2& predicate, int max_n);
SuiteResult verify_type2c_orders(const OrderPredicate4& predicate, int max_n);
SuiteResult verify_type2d_orders(const OrderPredicate4& predicate, int max_n);
SuiteResult verify_type3c_orders(const OrderPredicate4& predicate, int max_n);

/// Types 2(a), 2(b), 3(a), 3(b), 4 never reach the identity: brute force over
/// every parameter tuple with n <= min(max_n, 8) whose matrix is not a
/// permutation.
SuiteResult verify_negative_taxonomy(int max_n);

/// type1_charpoly / type2b_charpoly against the Berkowitz characteristic
/// polynomial on every valid tuple with n <= max_n.
SuiteResult verify_charpoly_formulas(int max_n);

/// For every finite-order record with n <= min(max_n, 9): the closed-form
/// ASM-permutability verdict equals the outcome of the exhaustive ordering
/// search; witnesses are ASMs of unchanged order satisfying the betweenness
/// constraints. Also sweeps the graph-level type 2(c) statement with no
/// finite-order assumption.
SuiteResult verify_asm_permutability(int max_n);

/// (A^k)_{uv} = w_k^+(u,v) - w_k^-(u,v) on random sign matrices, n <= 6, k <= 8.
SuiteResult verify_walk_identity(int samples);

/// ASM pairs with product I consist of permutation matrices (n <= 4), and the
/// backtracking enumeration reproduces the counts 1, 2, 7, 42.
SuiteResult verify_group_lemma();

/// binomial_gcd against the generic pseudo-remainder gcd, all s,t <= limit,
/// all four sign pairs.
SuiteResult verify_binomial_gcd(int limit);

/// prod_{d | k} Phi_d = x^k - 1 for k <= limit.
SuiteResult verify_cyclotomic_roundtrip(int limit);

/// block_diagonalizable against the radical-annihilation verdict on random
/// block-triangular assemblies with block sizes <= 6.
SuiteResult verify_block_diagonalizability(int instances);

/// finite_order against brute_force_order: every standard-form tuple with
/// n <= min(max_n, 7) plus 500 random PT-matrices with n <= 8.
SuiteResult verify_oracle_equivalence(int max_n);

/// All suites at their spec limits, clamped by max_n where applicable; jobs
/// may fan the suites out over a small thread pool (merge order is fixed).
/// Appends a synthetic failing entry if any theorem operation went unexercised.
std::vector<SuiteResult> run_verification(int max_n, int jobs);

}  // namespace ptorder
