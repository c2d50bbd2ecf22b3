#include "flowres/localize.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

namespace flowres {

// ---- data model ---------------------------------------------------------

int StratumComponent::m() const
{
    int n = m0;
    for (const auto& w : normal_weights)
        n += w.mult;
    return n;
}

GroupSpec StratumComponent::group_spec() const
{
    GroupSpec spec;
    if (m0 > 0)
        spec.groups.push_back({m0, true});
    for (const auto& w : normal_weights)
        spec.groups.push_back({w.mult, false});
    return spec;
}

std::vector<Rat> StratumComponent::offsets() const
{
    std::vector<Rat> out(static_cast<std::size_t>(m0), Rat(0));
    for (const auto& w : normal_weights)
        for (int i = 0; i < w.mult; ++i)
            out.push_back(w.mu);
    return out;
}

void StratumComponent::validate(int ambient_m) const
{
    if (m0 < 0)
        throw math_error("component '" + name + "': m0 must be nonnegative");
    for (const auto& w : normal_weights) {
        if (w.mu <= 0)
            throw degeneracy_error("component '" + name +
                                   "': skeigen-values must be positive (each alpha_j is "
                                   "nonzero); fold signs into orientation_matches");
        if (w.mult <= 0)
            throw math_error("component '" + name + "': multiplicities must be positive");
    }
    for (std::size_t i = 0; i < normal_weights.size(); ++i)
        for (std::size_t j = i + 1; j < normal_weights.size(); ++j)
            if (normal_weights[i].mu == normal_weights[j].mu)
                throw degeneracy_error("component '" + name +
                                       "': skeigen-values must be distinct (merge "
                                       "multiplicities instead)");
    if (m() != ambient_m)
        throw dimension_mismatch_error(
            "component '" + name + "': m0 + sum of multiplicities = " +
            std::to_string(m()) + " but ambient m = " + std::to_string(ambient_m));
    if (m0 == 0 && normal_weights.empty())
        throw math_error("component '" + name + "': empty weight data");
    if (m0 > 0) {
        GroupSpec spec = group_spec();
        for (const auto& [key, value] : oracle.entries) {
            int d = generator_monomial_degree(key, spec);
            if (d != m0)
                throw math_error("component '" + name + "': oracle monomial '" + key +
                                 "' has degree " + std::to_string(d) + ", expected m0 = " +
                                 std::to_string(m0));
        }
    }
}

void FlowFixedData::validate() const
{
    if (m <= 0)
        throw math_error("ambient m must be positive");
    if (components.empty())
        throw math_error("the singular stratum must have at least one component");
    for (const auto& c : components)
        c.validate(m);
}

// ---- skew matrices ------------------------------------------------------

SkewBlockMatrix::SkewBlockMatrix(RatMatrix e) : entries(std::move(e))
{
    const int n = static_cast<int>(entries.size());
    for (const auto& row : entries)
        if (static_cast<int>(row.size()) != n)
            throw dimension_mismatch_error("skew matrix must be square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (entries[i][j] != -entries[j][i])
                throw math_error("matrix is not skew-symmetric at entry (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
    if (n % 2 != 0)
        throw dimension_mismatch_error("skew matrix dimension must be even");
}

SkewBlockMatrix SkewBlockMatrix::rotation_blocks(const std::vector<Rat>& alphas)
{
    const int n = 2 * static_cast<int>(alphas.size());
    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        m[2 * j][2 * j + 1] = -alphas[j];
        m[2 * j + 1][2 * j] = alphas[j];
    }
    return SkewBlockMatrix(std::move(m));
}

namespace {

// Monic characteristic polynomial of an integer matrix, low degree first,
// by the Faddeev-LeVerrier recurrence (all divisions exact).
std::vector<Rat> char_poly(const IntMatrix& s)
{
    const int n = static_cast<int>(s.size());
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1, Rat(0));
    c[n] = 1;

    RatMatrix m(n, std::vector<Rat>(n, Rat(0)));  // M_0 = 0
    for (int k = 1; k <= n; ++k) {
        // M_k = S M_{k-1} + c_{n-k+1} I
        RatMatrix next(n, std::vector<Rat>(n, Rat(0)));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat acc = 0;
                for (int t = 0; t < n; ++t)
                    acc += Rat(s[i][t]) * m[t][j];
                next[i][j] = acc;
            }
        for (int i = 0; i < n; ++i)
            next[i][i] += c[n - k + 1];
        m = std::move(next);

        Rat tr = 0;
        for (int i = 0; i < n; ++i) {
            Rat acc = 0;
            for (int t = 0; t < n; ++t)
                acc += Rat(s[i][t]) * m[t][i];
            tr += acc;
        }
        c[n - k] = -tr / Rat(k);
    }
    return c;
}

Rat eval_poly(const std::vector<Rat>& c, const Rat& x)
{
    Rat acc = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

// Divides by (t - r); assumes r is a root.
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r)
{
    std::vector<Rat> out(c.size() - 1, Rat(0));
    Rat carry = 0;
    for (std::size_t i = c.size(); i-- > 1;) {
        carry = c[i] + carry * r;
        out[i - 1] = carry;
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rat, int>> skeigen_decompose(const SkewBlockMatrix& a)
{
    const int n = a.dim();

    // Clear denominators: A' = D*A is an integer skew matrix and the
    // skeigen-values scale by D.
    Int den = 1;
    for (const auto& row : a.entries)
        for (const auto& x : row) {
            Int d = rat_den(x);
            den = den / gcd(den, d) * d;
        }
    IntMatrix ai(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            ai[i][j] = rat_num(a.entries[i][j]) * (den / rat_den(a.entries[i][j]));

    // S = -A'^2 is positive semidefinite with eigenvalues (D*lambda_j)^2,
    // each twice.
    IntMatrix s(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int acc = 0;
            for (int t = 0; t < n; ++t)
                acc -= ai[i][t] * ai[t][j];
            s[i][j] = acc;
        }

    std::vector<Rat> poly = char_poly(s);
    Int trace = 0;
    for (int i = 0; i < n; ++i)
        trace += s[i][i];

    // Rational roots of a monic integer polynomial are integers; PSD bounds
    // every eigenvalue by the trace; a rational skeigen-value needs the
    // eigenvalue to be a perfect square.
    std::vector<std::pair<Rat, int>> out;
    for (Int root_base = 0; root_base * root_base <= trace; ++root_base) {
        Rat candidate(root_base * root_base);
        int mult = 0;
        while (poly.size() > 1 && eval_poly(poly, candidate) == 0) {
            poly = deflate(poly, candidate);
            ++mult;
        }
        if (mult == 0)
            continue;
        if (mult % 2 != 0)
            throw math_error("internal error: odd eigenvalue multiplicity in -A^2");
        out.emplace_back(Rat(root_base, den), mult / 2);
    }
    if (poly.size() > 1)
        throw irrational_skeigen_error(
            "some skeigen-value is irrational; supply block-form weights directly (the "
            "residue pipeline never requires this decomposition)");
    std::sort(out.begin(), out.end());
    return out;
}

NormalizeResult normalize_weights(const std::vector<Rat>& weights)
{
    if (weights.empty())
        throw degeneracy_error("weight list must be nonempty");
    Rat sum = 0;
    for (const auto& w : weights) {
        if (w == 0)
            throw degeneracy_error("each alpha_j must be nonzero");
        sum += w * w;
    }
    return {Rat(1) / sum,
            "scale-invariant: all residue operations are unchanged under rescaling the "
            "weights, so normalization is never applied internally"};
}

CommutantReport verify_commutant(const RatMatrix& l, const SkewBlockMatrix& a)
{
    const int n = a.dim();
    const int k = n / 2;

    // read the rotation blocks off A and insist on block form
    std::vector<Rat> alphas(k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            bool in_block = (i / 2 == j / 2) && i != j;
            if (!in_block && a.entries[i][j] != 0)
                throw math_error("A must be block-diagonal with 2x2 rotation blocks");
        }
    for (int j = 0; j < k; ++j)
        alphas[j] = a.entries[2 * j + 1][2 * j];

    // group by skeigen-value |alpha|; equal values must be adjacent
    std::vector<Rat> skeigen(k);
    for (int j = 0; j < k; ++j)
        skeigen[j] = alphas[j] < 0 ? Rat(-alphas[j]) : alphas[j];
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j)
            if (skeigen[i] == skeigen[j] && skeigen[i] != skeigen[j - 1])
                throw math_error("equal skeigen-values must occupy adjacent blocks");

    CommutantReport report;
    if (static_cast<int>(l.size()) != n)
        throw dimension_mismatch_error("L must match the dimension of A");
    for (const auto& row : l)
        if (static_cast<int>(row.size()) != n)
            throw dimension_mismatch_error("L must be square");

    if (rank(l) != n) {
        report.status = CommutantReport::Status::not_invertible;
        report.message = "L is singular";
        return report;
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat la = 0, al = 0;
            for (int t = 0; t < n; ++t) {
                la += l[i][t] * a.entries[t][j];
                al += a.entries[i][t] * l[t][j];
            }
            if (la != al) {
                report.status = CommutantReport::Status::commutation_failure;
                report.witness = {i, j};
                report.message = "LA != AL at entry (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")";
                return report;
            }
        }

    // partition of complex coordinates by distinct skeigen-value
    std::vector<CommutantReport::Block> blocks;
    for (int j = 0; j < k;) {
        int e = j;
        while (e < k && skeigen[e] == skeigen[j])
            ++e;
        blocks.push_back({skeigen[j], j, e - j});
        j = e;
    }

    auto block_of = [&](int real_index) {
        int cplx = real_index / 2;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            if (cplx >= blocks[b].first && cplx < blocks[b].first + blocks[b].complex_dim)
                return static_cast<int>(b);
        return -1;
    };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (l[i][j] != 0 && block_of(i) != block_of(j)) {
                report.status = CommutantReport::Status::not_block_diagonal;
                report.witness = {i, j};
                report.message = "L mixes distinct skeigen-values at entry (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")";
                return report;
            }

    // complex-linearity: each diagonal block commutes with the per-block
    // rotation generator J = block-diag(R(1),...); in 2x2 cells this reads
    // L[2p][2q] = L[2p+1][2q+1] and L[2p][2q+1] = -L[2p+1][2q]
    for (int p = 0; p < k; ++p)
        for (int q = 0; q < k; ++q) {
            if (block_of(2 * p) != block_of(2 * q))
                continue;
            if (l[2 * p][2 * q] != l[2 * p + 1][2 * q + 1] ||
                l[2 * p][2 * q + 1] != -l[2 * p + 1][2 * q]) {
                report.status = CommutantReport::Status::not_complex_linear;
                report.witness = {2 * p, 2 * q};
                report.message = "L is not complex-linear on the block containing complex "
                                 "coordinate " + std::to_string(p);
                return report;
            }
        }

    report.blocks = std::move(blocks);
    return report;
}

// ---- the residue formula ------------------------------------------------

Rat residue_at_component(const InvariantPoly& psi, const StratumComponent& comp)
{
    comp.validate(psi.m);
    const int m = psi.m;
    const int m0 = comp.m0;

    if (m0 == 0) {
        // Isolated fixed point: psi-hat(lambda) / prod(lambda).  When the
        // complex orientation disagrees with M, the first argument of every
        // invariant form (chi included) is negated, so the first factor of
        // the denominator flips sign as well.
        std::vector<Rat> lambda = comp.offsets();
        if (!comp.orientation_matches)
            lambda[0] = -lambda[0];
        Rat den = 1;
        for (const auto& x : lambda)
            den *= x;
        return psi.psi_hat.evaluate(lambda) / den;
    }

    if (comp.oracle.entries.empty())
        throw incomplete_oracle_error("component '" + comp.name +
                                      "': an integration oracle is required when m0 > 0");

    std::vector<Rat> offsets = comp.offsets();

    // numerator psi(Lambda_X), collected in the cutoff-m0 residue ring
    TruncatedPoly num = shift_vars_truncated(psi.psi_hat, offsets, m0);

    // denominator chi(Lambda_X^nu) = prod over normal variables (mu + a_j)
    TruncatedPoly den = TruncatedPoly::constant(m, m0, Rat(1));
    for (int j = m0; j < m; ++j) {
        TruncatedPoly factor = TruncatedPoly::variable(m, m0, j);
        factor.add_term(Expo(m, 0), offsets[j]);
        den = den * factor;
    }

    TruncatedPoly top = (num * invert_unit(den)).homogeneous_part(m0);

    auto reduced = reduce_to_generators(top, comp.group_spec());
    Rat acc = 0;
    for (const auto& [key, coeff] : reduced) {
        auto it = comp.oracle.entries.find(key);
        if (it == comp.oracle.entries.end())
            throw incomplete_oracle_error("component '" + comp.name +
                                          "': oracle entry missing for monomial '" + key +
                                          "'");
        acc += coeff * it->second;
    }
    return acc;
}

namespace {

std::size_t thread_cap()
{
    if (const char* env = std::getenv("RESIDUE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1)
            return static_cast<std::size_t>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

}  // namespace

Rat characteristic_number(const InvariantPoly& psi, const FlowFixedData& data)
{
    data.validate();
    if (data.m != psi.m)
        throw dimension_mismatch_error("psi has m = " + std::to_string(psi.m) +
                                       " but the dataset has m = " + std::to_string(data.m));

    const std::size_t n = data.components.size();
    std::vector<Rat> residues(n);
    std::vector<std::exception_ptr> errors(n);

    std::size_t workers = std::min(thread_cap(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            residues[i] = residue_at_component(psi, data.components[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                    try {
                        residues[i] = residue_at_component(psi, data.components[i]);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (auto& t : pool)
            t.join();
        for (std::size_t i = 0; i < n; ++i)
            if (errors[i])
                std::rethrow_exception(errors[i]);
    }

    Rat total = 0;
    for (const auto& r : residues)
        total += r;
    if (!data.flow_orientable)
        total /= 2;
    return total;
}

int signature_index(const std::vector<Rat>& weights, bool orientation_matches)
{
    if (weights.empty())
        throw degeneracy_error("weight list must be nonempty");
    int sign = orientation_matches ? 1 : -1;
    for (const auto& w : weights) {
        if (w == 0)
            throw degeneracy_error("each alpha_j must be nonzero");
        if (w < 0)
            sign = -sign;
    }
    return sign;
}

long long signature_via_indices(const FlowFixedData& data)
{
    data.validate();
    long long sum = 0;
    for (const auto& comp : data.components) {
        if (comp.m0 != 0)
            throw unsupported_stratum_error(
                "component '" + comp.name +
                "' is not an isolated point; use characteristic_number with l_genus_poly "
                "instead");
        sum += signature_index(comp.offsets(), comp.orientation_matches);
    }
    if (!data.flow_orientable) {
        if (sum % 2 != 0)
            throw math_error("double-cover index sum is odd; the dataset is inconsistent");
        sum /= 2;
    }
    return sum;
}

Rat euler_characteristic(const FlowFixedData& data, const std::vector<Rat>& chi_values)
{
    data.validate();
    if (chi_values.size() != data.components.size())
        throw dimension_mismatch_error("chi list length " + std::to_string(chi_values.size()) +
                                       " does not match " +
                                       std::to_string(data.components.size()) +
                                       " components");
    Rat total = 0;
    for (const auto& v : chi_values)
        total += v;
    if (!data.flow_orientable)
        total /= 2;
    return total;
}

// ---- fixture builders ---------------------------------------------------

namespace {

// Builds an isolated-point component from signed weights: skeigen-values are
// the absolute values, and each negative weight flips the orientation once
// (a pair of flips is a rotation).
StratumComponent isolated_component(std::string name, const std::vector<Rat>& signed_weights)
{
    int negatives = 0;
    std::vector<Rat> mus;
    for (const auto& w : signed_weights) {
        if (w == 0)
            throw degeneracy_error("component '" + name + "': zero weight");
        if (w < 0) {
            ++negatives;
            mus.push_back(-w);
        } else {
            mus.push_back(w);
        }
    }
    std::sort(mus.begin(), mus.end());

    StratumComponent comp;
    comp.name = std::move(name);
    comp.m0 = 0;
    comp.orientation_matches = (negatives % 2 == 0);
    for (std::size_t i = 0; i < mus.size();) {
        std::size_t j = i;
        while (j < mus.size() && mus[j] == mus[i])
            ++j;
        comp.normal_weights.push_back({mus[i], static_cast<int>(j - i)});
        i = j;
    }
    return comp;
}

}  // namespace

FlowFixedData cpm_model(const std::vector<Rat>& alphas)
{
    if (alphas.size() < 2)
        throw math_error("cpm model needs at least two alphas (m >= 1)");
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (std::size_t j = i + 1; j < alphas.size(); ++j)
            if (alphas[i] == alphas[j])
                throw degeneracy_error("cpm model requires pairwise-distinct alphas");

    const int m = static_cast<int>(alphas.size()) - 1;
    FlowFixedData data;
    data.m = m;
    data.flow_orientable = true;
    for (std::size_t j = 0; j < alphas.size(); ++j) {
        std::vector<Rat> weights;
        for (std::size_t i = 0; i < alphas.size(); ++i)
            if (i != j)
                weights.push_back(alphas[i] - alphas[j]);
        data.components.push_back(
            isolated_component("point" + std::to_string(j), weights));
    }
    return data;
}

FlowFixedData sphere_suspension_model(const Rat& alpha, const Rat& beta)
{
    if (alpha == 0 || beta == 0)
        throw degeneracy_error("sphere suspension weights must be nonzero");

    FlowFixedData data;
    data.m = 2;
    data.flow_orientable = true;
    data.components.push_back(isolated_component("north", {alpha, beta}));
    data.components.push_back(isolated_component("south", {alpha, -beta}));

    // The model is pinned by its outcomes, not the weight assignment; assert both.
    if (characteristic_number(pfaffian_poly(2), data) != 2)
        throw math_error("sphere suspension model failed the Euler check");
    if (signature_via_indices(data) != 0)
        throw math_error("sphere suspension model failed the signature check");
    return data;
}

FlowFixedData klein_double_cover_model()
{
    FlowFixedData data;
    data.m = 2;
    data.flow_orientable = false;

    for (int i = 1; i <= 2; ++i) {
        StratumComponent comp;
        comp.name = "torus" + std::to_string(i);
        comp.m0 = 1;
        comp.normal_weights.push_back({Rat(1), 1});
        comp.oracle.entries["e(E0)"] = 0;   // chi(T^2) = 0
        comp.oracle.entries["c1(E1)"] = 0;  // trivial normal bundle
        data.components.push_back(std::move(comp));
    }
    return data;
}

}  // namespace flowres
