#include "flowres/poly.hpp"
#include "flowres/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace flowres {

TruncatedPoly::TruncatedPoly(int num_vars, int cutoff)
    : num_vars_(num_vars), cutoff_(cutoff)
{
    if (num_vars < 0 || cutoff < 0)
        throw dimension_mismatch_error("num_vars and cutoff must be nonnegative");
}

TruncatedPoly TruncatedPoly::constant(int num_vars, int cutoff, const Rat& c)
{
    TruncatedPoly p(num_vars, cutoff);
    p.add_term(Expo(num_vars, 0), c);
    return p;
}

TruncatedPoly TruncatedPoly::variable(int num_vars, int cutoff, int index)
{
    if (index < 0 || index >= num_vars)
        throw dimension_mismatch_error("variable index out of range");
    TruncatedPoly p(num_vars, cutoff);
    Expo e(num_vars, 0);
    e[index] = 1;
    p.add_term(std::move(e), Rat(1));
    return p;
}

int TruncatedPoly::degree() const
{
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, total_degree(e));
    return d;
}

Rat TruncatedPoly::coeff(const Expo& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat TruncatedPoly::constant_term() const
{
    return coeff(Expo(num_vars_, 0));
}

void TruncatedPoly::add_term(Expo e, const Rat& c)
{
    if (static_cast<int>(e.size()) != num_vars_)
        throw dimension_mismatch_error("exponent vector length mismatch");
    if (c == 0 || total_degree(e) > cutoff_)
        return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

TruncatedPoly TruncatedPoly::homogeneous_part(int d) const
{
    TruncatedPoly out(num_vars_, cutoff_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d)
            out.terms_.emplace(e, c);
    return out;
}

TruncatedPoly TruncatedPoly::with_cutoff(int cutoff) const
{
    TruncatedPoly out(num_vars_, cutoff);
    for (const auto& [e, c] : terms_)
        out.add_term(e, c);
    return out;
}

TruncatedPoly TruncatedPoly::negate_variable(int index) const
{
    TruncatedPoly out(num_vars_, cutoff_);
    for (const auto& [e, c] : terms_)
        out.add_term(e, (e[index] % 2 == 0) ? c : Rat(-c));
    return out;
}

Rat TruncatedPoly::evaluate(const std::vector<Rat>& point) const
{
    if (static_cast<int>(point.size()) != num_vars_)
        throw dimension_mismatch_error("evaluation point length mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (int j = 0; j < num_vars_; ++j)
            for (int i = 0; i < e[j]; ++i)
                t *= point[j];
        acc += t;
    }
    return acc;
}

void TruncatedPoly::check_compatible(const TruncatedPoly& o) const
{
    if (num_vars_ != o.num_vars_ || cutoff_ != o.cutoff_)
        throw dimension_mismatch_error("operands disagree in num_vars or cutoff");
}

TruncatedPoly TruncatedPoly::operator+(const TruncatedPoly& o) const
{
    check_compatible(o);
    TruncatedPoly out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, c);
    return out;
}

TruncatedPoly TruncatedPoly::operator-(const TruncatedPoly& o) const
{
    check_compatible(o);
    TruncatedPoly out = *this;
    for (const auto& [e, c] : o.terms_)
        out.add_term(e, -c);
    return out;
}

TruncatedPoly TruncatedPoly::operator*(const TruncatedPoly& o) const
{
    check_compatible(o);
    TruncatedPoly out(num_vars_, cutoff_);
    for (const auto& [e1, c1] : terms_) {
        int d1 = total_degree(e1);
        for (const auto& [e2, c2] : o.terms_) {
            if (d1 + total_degree(e2) > cutoff_)
                continue;
            Expo e(num_vars_);
            for (int i = 0; i < num_vars_; ++i)
                e[i] = e1[i] + e2[i];
            out.add_term(std::move(e), c1 * c2);
        }
    }
    return out;
}

TruncatedPoly TruncatedPoly::operator*(const Rat& c) const
{
    TruncatedPoly out(num_vars_, cutoff_);
    if (c == 0)
        return out;
    for (const auto& [e, k] : terms_)
        out.terms_.emplace(e, k * c);
    return out;
}

TruncatedPoly TruncatedPoly::operator-() const
{
    return *this * Rat(-1);
}

TruncatedPoly invert_unit(const TruncatedPoly& u)
{
    Rat c0 = u.constant_term();
    if (c0 == 0)
        throw non_unit_error("cannot invert: constant term is zero");
    // u = c0 (1 + w), w without constant term; inverse is the finite
    // geometric series (1/c0) sum (-w)^i up to the cutoff.
    TruncatedPoly w = u * (Rat(1) / c0);
    w.add_term(Expo(u.num_vars(), 0), Rat(-1));
    TruncatedPoly acc = TruncatedPoly::constant(u.num_vars(), u.cutoff(), Rat(1));
    TruncatedPoly pw = TruncatedPoly::constant(u.num_vars(), u.cutoff(), Rat(1));
    for (int i = 1; i <= u.cutoff(); ++i) {
        pw = pw * w;
        if (pw.is_zero())
            break;
        acc = (i % 2 == 0) ? acc + pw : acc - pw;
    }
    return acc * (Rat(1) / c0);
}

TruncatedPoly shift_vars_truncated(const TruncatedPoly& p, const std::vector<Rat>& offsets,
                                   int out_cutoff)
{
    if (static_cast<int>(offsets.size()) != p.num_vars())
        throw dimension_mismatch_error("offset vector length must equal num_vars");
    TruncatedPoly out(p.num_vars(), out_cutoff);
    for (const auto& [e, c] : p.terms()) {
        TruncatedPoly acc = TruncatedPoly::constant(p.num_vars(), out_cutoff, c);
        for (int j = 0; j < p.num_vars() && !acc.is_zero(); ++j) {
            if (e[j] == 0)
                continue;
            // (offset + a_j)^{e_j} by the binomial theorem
            TruncatedPoly factor(p.num_vars(), out_cutoff);
            Rat pow = 1;
            for (int t = e[j]; t >= 0; --t) {
                // coefficient of a_j^t is C(e_j, t) offset^{e_j - t}
                if (t <= out_cutoff) {
                    Expo ex(p.num_vars(), 0);
                    ex[j] = t;
                    Rat off_pow = 1;
                    for (int i = 0; i < e[j] - t; ++i)
                        off_pow *= offsets[j];
                    factor.add_term(std::move(ex),
                                    Rat(binomial(static_cast<unsigned>(e[j]),
                                                 static_cast<unsigned>(t))) *
                                        off_pow);
                }
            }
            (void)pow;
            acc = acc * factor;
        }
        out = out + acc;
    }
    return out;
}

TruncatedPoly shift_vars(const TruncatedPoly& p, const std::vector<Rat>& offsets)
{
    return shift_vars_truncated(p, offsets, p.cutoff());
}

TruncatedPoly elementary_symmetric(int k, const std::vector<int>& var_indices,
                                   int num_vars, int cutoff)
{
    if (k < 0 || k > static_cast<int>(var_indices.size()))
        throw math_error("elementary symmetric index out of range");
    for (int v : var_indices)
        if (v < 0 || v >= num_vars)
            throw dimension_mismatch_error("variable index out of range");

    std::vector<TruncatedPoly> e(static_cast<std::size_t>(k) + 1,
                                 TruncatedPoly(num_vars, cutoff));
    e[0] = TruncatedPoly::constant(num_vars, cutoff, Rat(1));
    for (int v : var_indices) {
        TruncatedPoly x = TruncatedPoly::variable(num_vars, cutoff, v);
        for (int i = k; i >= 1; --i)
            e[i] = e[i] + e[i - 1] * x;
    }
    return e[k];
}

// ---- rendering ----------------------------------------------------------

std::string render_monomial(const Expo& e)
{
    std::string out;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += "a" + std::to_string(j + 1);
        if (e[j] > 1)
            out += "^" + std::to_string(e[j]);
    }
    return out;
}

std::string render(const TruncatedPoly& p)
{
    if (p.is_zero())
        return "0";

    std::vector<std::pair<Expo, Rat>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = total_degree(a.first), db = total_degree(b.first);
        if (da != db)
            return da < db;
        return a.first > b.first;  // lex-descending within a grade
    });

    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [e, c] = terms[i];
        bool neg = c < 0;
        Rat mag = neg ? Rat(-c) : c;
        std::string mono = render_monomial(e);
        std::string body;
        if (mono.empty())
            body = rat_to_string(mag);
        else if (mag == 1)
            body = mono;
        else
            body = rat_to_string(mag) + "*" + mono;
        if (i == 0)
            out = (neg ? "-" : "") + body;
        else
            out += (neg ? " - " : " + ") + body;
    }
    return out;
}

// ---- generator reduction ------------------------------------------------

int GroupSpec::num_vars() const
{
    int n = 0;
    for (const auto& g : groups)
        n += g.size;
    return n;
}

void GroupSpec::validate() const
{
    int tangent_count = 0;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (groups[i].size <= 0)
            throw dimension_mismatch_error("group sizes must be positive");
        if (groups[i].tangent) {
            ++tangent_count;
            if (i != 0)
                throw dimension_mismatch_error("the tangent group must come first");
        }
    }
    if (tangent_count > 1)
        throw dimension_mismatch_error("at most one tangent group is allowed");
}

namespace {

struct Generator {
    int group;       // index into GroupSpec::groups
    char kind;       // 'p', 'e', or 'c'
    int index;       // i for p_i / c_i, unused for 'e'
    int degree;      // total complex degree
    int normal_num;  // 1-based number among normal groups, for rendering
};

std::string generator_name(const Generator& g)
{
    if (g.kind == 'e')
        return "e(E0)";
    if (g.kind == 'p')
        return "p" + std::to_string(g.index) + "(E0)";
    return "c" + std::to_string(g.index) + "(E" + std::to_string(g.normal_num) + ")";
}

std::vector<int> group_start_offsets(const GroupSpec& spec)
{
    std::vector<int> starts;
    int at = 0;
    for (const auto& g : spec.groups) {
        starts.push_back(at);
        at += g.size;
    }
    return starts;
}

std::vector<Generator> list_generators(const GroupSpec& spec)
{
    std::vector<Generator> gens;
    int normal_num = 0;
    for (std::size_t gi = 0; gi < spec.groups.size(); ++gi) {
        const auto& g = spec.groups[gi];
        if (g.tangent) {
            for (int i = 1; i <= g.size; ++i)
                gens.push_back({static_cast<int>(gi), 'p', i, 2 * i, 0});
            gens.push_back({static_cast<int>(gi), 'e', 0, g.size, 0});
        } else {
            ++normal_num;
            for (int k = 1; k <= g.size; ++k)
                gens.push_back({static_cast<int>(gi), 'c', k, k, normal_num});
        }
    }
    return gens;
}

TruncatedPoly expand_generator(const Generator& g, const GroupSpec& spec, int num_vars,
                               int cutoff)
{
    auto starts = group_start_offsets(spec);
    int start = starts[g.group];
    int size = spec.groups[g.group].size;
    std::vector<int> vars(size);
    for (int i = 0; i < size; ++i)
        vars[i] = start + i;

    if (g.kind == 'e') {
        TruncatedPoly out(num_vars, cutoff);
        Expo e(num_vars, 0);
        for (int v : vars)
            e[v] = 1;
        out.add_term(std::move(e), Rat(1));
        return out;
    }
    if (g.kind == 'c')
        return elementary_symmetric(g.index, vars, num_vars, cutoff);

    // p_i = e_i of the squared tangent variables: substitute a_v^2 for a_v.
    TruncatedPoly ek = elementary_symmetric(g.index, vars, num_vars, cutoff);
    TruncatedPoly out(num_vars, cutoff);
    for (const auto& [e, c] : ek.terms()) {
        Expo sq(e);
        for (int& x : sq)
            x *= 2;
        out.add_term(std::move(sq), c);
    }
    return out;
}

// All monomials over gens with the given total degree; Euler exponent
// capped at 1 since e(E0)^2 = p_{m0}(E0).
void enumerate_monomials(const std::vector<Generator>& gens, std::size_t at, int degree,
                         std::vector<int>& exps, std::vector<std::vector<int>>& out)
{
    if (degree == 0) {
        out.push_back(exps);
        return;
    }
    if (at == gens.size())
        return;
    int max_exp = degree / gens[at].degree;
    if (gens[at].kind == 'e')
        max_exp = std::min(max_exp, 1);
    for (int x = max_exp; x >= 0; --x) {
        exps[at] = x;
        enumerate_monomials(gens, at + 1, degree - x * gens[at].degree, exps, out);
    }
    exps[at] = 0;
}

std::string monomial_key(const std::vector<Generator>& gens, const std::vector<int>& exps)
{
    std::string key;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (exps[i] == 0)
            continue;
        if (!key.empty())
            key += "*";
        key += generator_name(gens[i]);
        if (exps[i] > 1)
            key += "^" + std::to_string(exps[i]);
    }
    return key.empty() ? "1" : key;
}

// Checks the per-group symmetry preconditions and throws with a witnessing
// monomial pair on failure.
void check_reducibility(const TruncatedPoly& p, const GroupSpec& spec)
{
    auto starts = group_start_offsets(spec);
    for (std::size_t gi = 0; gi < spec.groups.size(); ++gi) {
        const auto& g = spec.groups[gi];
        int start = starts[gi];
        // invariance under adjacent transpositions within the group
        for (int i = 0; i + 1 < g.size; ++i) {
            int va = start + i, vb = start + i + 1;
            for (const auto& [e, c] : p.terms()) {
                Expo swapped(e);
                std::swap(swapped[va], swapped[vb]);
                if (p.coeff(swapped) != c)
                    throw not_reducible_error(
                        "polynomial is not symmetric within group " + std::to_string(gi) +
                        ": coefficient of " + render_monomial(e) + " differs from " +
                        render_monomial(swapped));
            }
        }
        // tangent group: a pair flip sends a monomial to +-itself, so
        // invariance means even exponent sum on every tangent pair
        if (g.tangent) {
            for (int i = 0; i + 1 < g.size; ++i) {
                int va = start + i, vb = start + i + 1;
                for (const auto& [e, c] : p.terms()) {
                    if ((e[va] + e[vb]) % 2 != 0)
                        throw not_reducible_error(
                            "polynomial is not invariant under even sign flips in the "
                            "tangent group: monomial " +
                            render_monomial(e) + " changes sign under flipping a" +
                            std::to_string(va + 1) + ", a" + std::to_string(vb + 1));
                }
            }
        }
    }
}

}  // namespace

std::map<std::string, Rat> reduce_to_generators(const TruncatedPoly& p, const GroupSpec& spec)
{
    spec.validate();
    if (spec.num_vars() != p.num_vars())
        throw dimension_mismatch_error("group sizes must sum to num_vars");

    check_reducibility(p, spec);

    auto gens = list_generators(spec);
    std::map<std::string, Rat> result;

    // degrees occurring in p
    std::vector<int> degrees;
    for (const auto& [e, c] : p.terms()) {
        int d = total_degree(e);
        if (std::find(degrees.begin(), degrees.end(), d) == degrees.end())
            degrees.push_back(d);
    }
    std::sort(degrees.begin(), degrees.end());

    for (int d : degrees) {
        TruncatedPoly part = p.homogeneous_part(d);
        if (d == 0) {
            result["1"] = part.constant_term();
            continue;
        }

        std::vector<std::vector<int>> monos;
        std::vector<int> exps(gens.size(), 0);
        enumerate_monomials(gens, 0, d, exps, monos);

        // expand every candidate monomial and index the a-monomials
        std::vector<TruncatedPoly> expansions;
        expansions.reserve(monos.size());
        std::map<Expo, int> row_of;
        for (const auto& mexp : monos) {
            TruncatedPoly prod = TruncatedPoly::constant(p.num_vars(), d, Rat(1));
            for (std::size_t i = 0; i < gens.size(); ++i)
                for (int t = 0; t < mexp[i]; ++t)
                    prod = prod * expand_generator(gens[i], spec, p.num_vars(), d);
            for (const auto& [e, c] : prod.terms())
                row_of.emplace(e, 0);
            expansions.push_back(std::move(prod));
        }
        for (const auto& [e, c] : part.terms())
            row_of.emplace(e, 0);
        int nrow = 0;
        for (auto& [e, idx] : row_of)
            idx = nrow++;

        RatMatrix a(nrow, std::vector<Rat>(monos.size(), Rat(0)));
        std::vector<Rat> b(nrow, Rat(0));
        for (std::size_t col = 0; col < expansions.size(); ++col)
            for (const auto& [e, c] : expansions[col].terms())
                a[row_of[e]][col] = c;
        for (const auto& [e, c] : part.terms())
            b[row_of[e]] = c;

        auto x = solve(a, b);
        if (!x)
            throw not_reducible_error(
                "internal consistency failure: symmetric polynomial of degree " +
                std::to_string(d) + " is outside the generator span");
        for (std::size_t col = 0; col < monos.size(); ++col)
            if ((*x)[col] != 0)
                result[monomial_key(gens, monos[col])] += (*x)[col];
    }

    for (auto it = result.begin(); it != result.end();)
        it = (it->second == 0) ? result.erase(it) : std::next(it);
    return result;
}

namespace {

// Parses one factor of a generator-monomial key; returns (generator, power).
std::pair<Generator, int> parse_generator_factor(const std::string& tok,
                                                 const std::vector<Generator>& gens)
{
    std::string name = tok;
    int power = 1;
    auto caret = tok.find('^');
    if (caret != std::string::npos) {
        name = tok.substr(0, caret);
        try {
            power = std::stoi(tok.substr(caret + 1));
        } catch (const std::exception&) {
            throw input_error("malformed exponent in generator monomial '" + tok + "'");
        }
        if (power <= 0)
            throw input_error("generator exponents must be positive: '" + tok + "'");
    }
    for (const auto& g : gens)
        if (generator_name(g) == name)
            return {g, power};
    throw input_error("unknown generator '" + name + "' for this component");
}

}  // namespace

TruncatedPoly expand_generator_monomial(const std::string& key, const GroupSpec& spec,
                                        int cutoff)
{
    spec.validate();
    auto gens = list_generators(spec);
    TruncatedPoly out = TruncatedPoly::constant(spec.num_vars(), cutoff, Rat(1));
    if (key == "1")
        return out;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        auto [g, power] = parse_generator_factor(tok, gens);
        for (int t = 0; t < power; ++t)
            out = out * expand_generator(g, spec, spec.num_vars(), cutoff);
    }
    return out;
}

int generator_monomial_degree(const std::string& key, const GroupSpec& spec)
{
    spec.validate();
    auto gens = list_generators(spec);
    if (key == "1")
        return 0;
    int degree = 0;
    std::stringstream ss(key);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        auto [g, power] = parse_generator_factor(tok, gens);
        degree += g.degree * power;
    }
    return degree;
}

}  // namespace flowres
