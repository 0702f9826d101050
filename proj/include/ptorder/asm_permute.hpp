#pragma once

#include "ptorder/int_matrix.hpp"
#include "ptorder/pt_graph.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace ptorder {

/// Thrown when an exhaustive search is asked for a size beyond its guard; the
/// closed-form theorem answers remain available at any size.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// "middle occurs between left and right" in a candidate vertex ordering.
/// One constraint arises from each row and column that contains a -1: the
/// vertex at the -1 must separate the vertices at the two +1 entries.
struct BetweennessConstraint {
    int middle = 0, left = 0, right = 0;
    bool degenerate = false;  // the line did not have exactly two +1 entries

    bool operator==(const BetweennessConstraint&) const = default;
};

/// The four ordering constraints of a classified Type 1 / 2(c) / 2(d) / 3(c)
/// matrix, in standard-form vertex labels; derived from the rows and columns
/// of the standard matrix that contain a -1.
std::vector<BetweennessConstraint> betweenness_constraints(const Classification& c);

/// Constraints read off an explicit (0,1,-1)-matrix, one per line with a -1.
std::vector<BetweennessConstraint> betweenness_constraints(const IntMatrix& a);

bool satisfies(const BetweennessConstraint& c, const Permutation& ordering);

/// Searches for a vertex ordering sigma with is_asm(conjugate(a, sigma)), by
/// backtracking with row/column partial-sum pruning. Returns nullopt when no
/// ordering exists. Exhaustive, guarded to n <= 10 (capacity_error beyond).
std::optional<Permutation> find_asm_ordering(const IntMatrix& a);

/// Closed-form ASM-permutability for finite-order classifications:
///   Type 1: always permutable.
///   Type 2(c): not permutable iff p = 2 and l in {1, q-1}, or q = 2 and
///              h in {1, p-1}.
///   Type 2(d): not permutable iff q = 1, i2 = 2 and i1 = p, or p = 3 with
///              (i1, i2) = (2, 3).
///   Type 3(c): not permutable iff p = i = 2 and 1 in {q, m}; or i = p and
///              q = m = 1; or i = 2 and q = m = 1.
/// The classification must carry finite order per its type predicate.
bool asm_permutable_theorem(const Classification& c);

/// Graph-level variant for type 2(c), with no finite-order assumption: an
/// ASM-ordering exists unless one cycle has length 2 and the two T-vertices
/// of the other cycle are consecutive in it.
bool type2c_asm_orderable_graph(int p, int q, int h, int l);

}  // namespace ptorder
