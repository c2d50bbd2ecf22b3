#ifndef FLOWRES_LINALG_HPP
#define FLOWRES_LINALG_HPP

#include "flowres/rat.hpp"

#include <optional>
#include <vector>

namespace flowres {

using RatMatrix = std::vector<std::vector<Rat>>;
using IntMatrix = std::vector<std::vector<Int>>;

// Rank over Q via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
int rank(const RatMatrix& a);

// Solves A x = b exactly.  Returns nullopt when inconsistent; free
// variables are set to zero, so the answer is deterministic.
std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b);

// Basis of the integer kernel lattice {x in Z^k : M x = 0} of a rational
// d x k matrix, computed with unimodular column operations.  The result is
// saturated (it spans the full rational kernel).
IntMatrix integer_kernel_basis(const RatMatrix& m);

// Row-style Hermite normal form: pivots positive, entries above each pivot
// reduced into [0, pivot).  Zero rows are dropped.  Canonical per lattice.
IntMatrix hnf_rows(IntMatrix rows);

// Clears denominators row by row (rank and kernel are unchanged).
IntMatrix clear_denominators(const RatMatrix& a);

}  // namespace flowres

#endif
