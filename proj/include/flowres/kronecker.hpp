#ifndef FLOWRES_KRONECKER_HPP
#define FLOWRES_KRONECKER_HPP

#include "flowres/linalg.hpp"

#include <utility>
#include <vector>

namespace flowres {

// Rational coordinates of the weight tuple (alpha_1..alpha_k) over an
// unspecified Q-basis of a field extension; irrationality is encoded by
// d > 1.  Row i gives the coordinates of alpha_i.
struct WeightMatrix {
    RatMatrix rows;  // k x d

    int k() const { return static_cast<int>(rows.size()); }
    int d() const { return rows.empty() ? 0 : static_cast<int>(rows[0].size()); }
    void validate() const;
};

// dim_Q{alpha_1..alpha_k} together with the annihilator dimension; the two
// always sum to k.
std::pair<int, int> closure_dimension(const WeightMatrix& w);

// Canonical basis (primitive integer vectors in Hermite normal form) of
// {beta in Q^k : beta . alpha = 0}.
IntMatrix annihilator_basis(const WeightMatrix& w);

}  // namespace flowres

#endif
