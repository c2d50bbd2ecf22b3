#ifndef FLOWRES_POLY_HPP
#define FLOWRES_POLY_HPP

#include "flowres/errors.hpp"
#include "flowres/rat.hpp"

#include <map>
#include <string>
#include <vector>

namespace flowres {

using Expo = std::vector<int>;

inline int total_degree(const Expo& e)
{
    int d = 0;
    for (int x : e) d += x;
    return d;
}

// Exact multivariate polynomial in the Chern roots a_1..a_m, truncated above
// a total-degree cutoff.  Stored coefficients are never zero and never exceed
// the cutoff in degree.
class TruncatedPoly {
public:
    TruncatedPoly(int num_vars, int cutoff);

    static TruncatedPoly constant(int num_vars, int cutoff, const Rat& c);
    static TruncatedPoly variable(int num_vars, int cutoff, int index);  // 0-based

    int num_vars() const { return num_vars_; }
    int cutoff() const { return cutoff_; }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    Rat coeff(const Expo& e) const;
    Rat constant_term() const;

    // Accumulates c * a^e, pruning zeros and dropping degrees above cutoff.
    void add_term(Expo e, const Rat& c);

    TruncatedPoly homogeneous_part(int d) const;

    // Same term map re-housed at a different cutoff; terms above the new
    // cutoff are dropped.
    TruncatedPoly with_cutoff(int cutoff) const;

    // a_index -> -a_index
    TruncatedPoly negate_variable(int index) const;

    // Evaluation at a rational point (all variables substituted).
    Rat evaluate(const std::vector<Rat>& point) const;

    TruncatedPoly operator+(const TruncatedPoly& o) const;
    TruncatedPoly operator-(const TruncatedPoly& o) const;
    TruncatedPoly operator*(const TruncatedPoly& o) const;
    TruncatedPoly operator*(const Rat& c) const;
    TruncatedPoly operator-() const;
    bool operator==(const TruncatedPoly& o) const = default;

private:
    void check_compatible(const TruncatedPoly& o) const;

    int num_vars_;
    int cutoff_;
    std::map<Expo, Rat> terms_;
};

// Multiplicative inverse modulo truncation; requires a nonzero constant term.
TruncatedPoly invert_unit(const TruncatedPoly& u);

// Substitutes a_j -> offsets[j] + a_j, expanded binomially, truncated at
// p's cutoff.
TruncatedPoly shift_vars(const TruncatedPoly& p, const std::vector<Rat>& offsets);

// Same substitution but collected at an explicit output cutoff; this is how
// a degree-m form is pushed into the cutoff-m0 residue ring without losing
// the low-degree terms the offsets create.
TruncatedPoly shift_vars_truncated(const TruncatedPoly& p, const std::vector<Rat>& offsets,
                                   int out_cutoff);

// e_k of the variables named by var_indices (0-based), inside an
// (num_vars, cutoff) ring.
TruncatedPoly elementary_symmetric(int k, const std::vector<int>& var_indices,
                                   int num_vars, int cutoff);

// Canonical plain-text rendering: terms in graded-lex order
// ("1 - a1 + 2/3*a1^2*a2 + ...").
std::string render(const TruncatedPoly& p);
std::string render_monomial(const Expo& e);

// --- characteristic-class generator bases -------------------------------

// Partition of the variable range into one optional tangent group (first)
// and the normal skeigen groups, matching the listing of the lambda_j.
struct GroupSpec {
    struct Group {
        int size;
        bool tangent;
    };
    std::vector<Group> groups;

    int num_vars() const;
    void validate() const;
};

// Expresses p as a Rat-linear combination of monomials in the generators
//   tangent group:  p_i(E0) = e_i(a_1^2..a_{m0}^2),  e(E0) = a_1...a_{m0}
//   normal group i: c_k(Ei) = e_k(group-i variables)
// keyed by the canonical monomial rendering ("p1(E0)", "c2(E3)", products
// joined by "*", powers with "^").  Throws not_reducible_error with a
// witnessing monomial pair when p fails the per-group symmetry
// precondition.
std::map<std::string, Rat> reduce_to_generators(const TruncatedPoly& p, const GroupSpec& groups);

// Expands one canonical generator-monomial key back into Chern roots, and
// reports its total complex degree.  Used for oracle validation and for the
// recomposition property tests.
TruncatedPoly expand_generator_monomial(const std::string& key, const GroupSpec& groups,
                                        int cutoff);
int generator_monomial_degree(const std::string& key, const GroupSpec& groups);

}  // namespace flowres

#endif
