#ifndef FLOWRES_LOCALIZE_HPP
#define FLOWRES_LOCALIZE_HPP

#include "flowres/charforms.hpp"
#include "flowres/linalg.hpp"
#include "flowres/poly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace flowres {

// Integrals over one stratum component of degree-m0 monomials in the
// characteristic-class generators, keyed by their canonical rendering
// ("e(E0)", "p1(E0)", "c2(E3)", products joined by "*").  Lookups of valid
// monomials absent from the table are a hard error, never silently zero.
struct IntegrationOracle {
    std::map<std::string, Rat> entries;
};

struct NormalWeight {
    Rat mu;    // distinct, positive
    int mult;  // complex multiplicity
};

// One connected component of the singular stratum.
struct StratumComponent {
    std::string name;
    int m0 = 0;  // dim Sigma_j = 2*m0
    std::vector<NormalWeight> normal_weights;
    bool orientation_matches = true;  // meaningful only when m0 == 0
    IntegrationOracle oracle;         // meaningful only when m0 > 0

    int m() const;  // m0 + sum of multiplicities
    void validate(int ambient_m) const;
    GroupSpec group_spec() const;
    // The offset listing (0,...,0, mu_1,...,mu_1, ..., mu_tau,...,mu_tau).
    std::vector<Rat> offsets() const;
};

// The fixed-point dataset of a flow on M, dim M = 2m.  When flow_orientable
// is false the components describe the orientation double cover and all
// characteristic numbers are halved.
struct FlowFixedData {
    int m = 0;
    bool flow_orientable = true;
    std::vector<StratumComponent> components;

    void validate() const;
};

// Exact skew-symmetric rational matrix, A + A^T = 0.
struct SkewBlockMatrix {
    RatMatrix entries;

    explicit SkewBlockMatrix(RatMatrix e);
    int dim() const { return static_cast<int>(entries.size()); }

    // block-diag(R(alpha_1), ..., R(alpha_k)) with R(a) = [[0,-a],[a,0]].
    static SkewBlockMatrix rotation_blocks(const std::vector<Rat>& alphas);
};

// The multiset of skeigen-values of A (nonnegative, with multiplicities,
// sorted ascending), from the exact characteristic polynomial of -A^2.
// Throws irrational_skeigen_error when a skeigen-value is not rational.
std::vector<std::pair<Rat, int>> skeigen_decompose(const SkewBlockMatrix& a);

struct NormalizeResult {
    Rat c_squared;     // 1 / sum alpha_j^2; c itself is generally irrational
    std::string note;  // machine-readable scale-invariance notice
};
NormalizeResult normalize_weights(const std::vector<Rat>& weights);

// Verification of the commutant block structure {L : LA = AL}.
struct CommutantReport {
    enum class Status { ok, not_invertible, commutation_failure, not_block_diagonal,
                        not_complex_linear } status = Status::ok;
    struct Block {
        Rat skeigen;       // common skeigen-value of the block
        int first;         // first complex coordinate (0-based)
        int complex_dim;   // block is in GL_{complex_dim}(C)
    };
    std::vector<Block> blocks;                // valid when status == ok
    std::pair<int, int> witness{-1, -1};      // offending entry otherwise
    std::string message;
    bool ok() const { return status == Status::ok; }
};
CommutantReport verify_commutant(const RatMatrix& l, const SkewBlockMatrix& a);

// The residue phi(Lambda_X)/chi(Lambda_X^nu)[Sigma_j] at one component.
Rat residue_at_component(const InvariantPoly& psi, const StratumComponent& comp);

// Sum of residues over all components, halved for double-cover data.
// Components are evaluated concurrently; RESIDUE_THREADS caps the fan-out.
Rat characteristic_number(const InvariantPoly& psi, const FlowFixedData& data);

// +-prod sgn(alpha_i), the sign flipped when orientation_matches is false.
int signature_index(const std::vector<Rat>& weights, bool orientation_matches);

// sigma(M) as the sum of indices over isolated singular points.
long long signature_via_indices(const FlowFixedData& data);

// chi(M) as the sum of component Euler characteristics.
Rat euler_characteristic(const FlowFixedData& data, const std::vector<Rat>& chi_values);

// --- fixture builders ----------------------------------------------------

// CP^m with flow weights alpha = (0, alpha_1, ..., alpha_m), pairwise
// distinct; m+1 isolated fixed points with weights (alpha_i - alpha_j).
FlowFixedData cpm_model(const std::vector<Rat>& alphas);

// S^4 as a suspension of S^3: two isolated poles, weights (alpha, beta) and
// (alpha, -beta).  Asserts Euler = 2 and signature = 0 at build time.
FlowFixedData sphere_suspension_model(const Rat& alpha, const Rat& beta);

// Double cover T^2 x S^2 of the glued Klein-bottle disk-bundle example:
// non-orientable flow, two torus components with identically-zero oracles.
FlowFixedData klein_double_cover_model();

}  // namespace flowres

#endif
