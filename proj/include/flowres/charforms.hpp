#ifndef FLOWRES_CHARFORMS_HPP
#define FLOWRES_CHARFORMS_HPP

#include "flowres/poly.hpp"

#include <string>
#include <vector>

namespace flowres {

// An ad(SO(2m))-invariant symmetric form of degree m, stored fully expanded
// in the Chern roots a_1..a_m.  Construction validates homogeneity,
// permutation symmetry, and invariance under even sign flips.
struct InvariantPoly {
    int m;
    TruncatedPoly psi_hat;
    std::string label;

    InvariantPoly(int m, TruncatedPoly psi_hat, std::string label);
};

// psi-hat = a_1 a_2 ... a_m, label "euler".
InvariantPoly pfaffian_poly(int m);

// psi-hat = prod_l e_{i_l}(a_1^2..a_m^2); requires 2 * sum(partition) = m.
InvariantPoly pontryagin_poly(const std::vector<int>& partition, int m);

// Degree-m part of prod_j sum_n coth_series_coeff(n) a_j^{2n}; m even.
InvariantPoly l_genus_poly(int m);

// Parses a psi-hat expression over rational literals, variables a1..am,
// operators + - * ^, and the macros e[k](vars...), p[k], E.  Validation
// failures are reported distinctly with a witness.
InvariantPoly parse_invariant(const std::string& expr, int m);

// Canonical rendering of the underlying polynomial (shared with polyring).
std::string render(const InvariantPoly& p);

}  // namespace flowres

#endif
