#include "flowres/charforms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace flowres {

namespace {

// Parse-time cutoff: generous enough that any sane input survives intact,
// small enough to bound blowup from large '^' exponents.
constexpr int kParseCutoff = 128;

void validate_invariant(const TruncatedPoly& p, int m)
{
    if (p.is_zero())
        throw invariant_violation_error("psi-hat must be nonzero");

    // homogeneity of degree m
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) != m)
            throw invariant_violation_error(
                "homogeneity violation: monomial " + render_monomial(e) + " has degree " +
                std::to_string(total_degree(e)) + ", expected " + std::to_string(m));

    // symmetry under all permutations (adjacent transpositions generate)
    for (int i = 0; i + 1 < m; ++i) {
        for (const auto& [e, c] : p.terms()) {
            Expo swapped(e);
            std::swap(swapped[i], swapped[i + 1]);
            if (p.coeff(swapped) != c)
                throw invariant_violation_error(
                    "symmetry violation: coefficient of " + render_monomial(e) +
                    " differs from that of " + render_monomial(swapped) +
                    " under swapping a" + std::to_string(i + 1) + ", a" +
                    std::to_string(i + 2));
        }
    }

    // invariance under all C(m,2) pair sign flips (these generate the even
    // sign-change group); a flip maps each monomial to +-itself
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (const auto& [e, c] : p.terms()) {
                if ((e[i] + e[j]) % 2 != 0)
                    throw invariant_violation_error(
                        "sign-flip-invariance violation: monomial " + render_monomial(e) +
                        " changes sign under flipping a" + std::to_string(i + 1) + ", a" +
                        std::to_string(j + 1));
            }
        }
    }
}

}  // namespace

InvariantPoly::InvariantPoly(int m_, TruncatedPoly psi, std::string label_)
    : m(m_), psi_hat(std::move(psi)), label(std::move(label_))
{
    if (m <= 0)
        throw math_error("m must be positive");
    if (psi_hat.num_vars() != m)
        throw dimension_mismatch_error("psi-hat must live in m variables");
    validate_invariant(psi_hat, m);  // before truncation, so stray high-degree terms are caught
    psi_hat = psi_hat.with_cutoff(m);
}

InvariantPoly pfaffian_poly(int m)
{
    if (m < 1)
        throw math_error("m must be positive");
    TruncatedPoly p(m, m);
    p.add_term(Expo(m, 1), Rat(1));
    return InvariantPoly(m, std::move(p), "euler");
}

InvariantPoly pontryagin_poly(const std::vector<int>& partition, int m)
{
    int sum = 0;
    for (int i : partition) {
        if (i <= 0)
            throw invalid_partition_error("partition entries must be positive");
        sum += i;
    }
    if (partition.empty() || 2 * sum != m)
        throw invalid_partition_error(
            "partition degree mismatch: 2*sum(partition) = " + std::to_string(2 * sum) +
            " but m = " + std::to_string(m));

    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);

    TruncatedPoly prod = TruncatedPoly::constant(m, m, Rat(1));
    std::string label = "p_(";
    for (std::size_t l = 0; l < partition.size(); ++l) {
        TruncatedPoly ek = elementary_symmetric(partition[l], all, m, m);
        // e_i of the squares: double every exponent
        TruncatedPoly sq(m, m);
        for (const auto& [e, c] : ek.terms()) {
            Expo d(e);
            for (int& x : d)
                x *= 2;
            sq.add_term(std::move(d), c);
        }
        prod = prod * sq;
        label += (l ? "," : "") + std::to_string(partition[l]);
    }
    label += ")";
    return InvariantPoly(m, std::move(prod), label);
}

InvariantPoly l_genus_poly(int m)
{
    if (m % 2 != 0)
        throw unsupported_dimension_error(
            "L-genus requires dim M divisible by 4 (m even); got m = " + std::to_string(m));
    TruncatedPoly prod = TruncatedPoly::constant(m, m, Rat(1));
    for (int j = 0; j < m; ++j) {
        TruncatedPoly series(m, m);
        for (int n = 0; 2 * n <= m; ++n) {
            Expo e(m, 0);
            e[j] = 2 * n;
            series.add_term(std::move(e), coth_series_coeff(static_cast<unsigned>(n)));
        }
        prod = prod * series;
    }
    return InvariantPoly(m, prod.homogeneous_part(m), "L");
}

std::string render(const InvariantPoly& p)
{
    return render(p.psi_hat);
}

// ---- expression parser --------------------------------------------------

namespace {

struct Token {
    enum Kind { Num, Ident, Plus, Minus, Star, Caret, LParen, RParen, LBracket, RBracket,
                Comma, End } kind;
    Rat value;         // Num
    std::string text;  // Ident
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) {}

    Token next()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
        std::size_t pos = i_;
        if (i_ >= s_.size())
            return {Token::End, 0, "", pos};
        char c = s_[i_];
        switch (c) {
        case '+': ++i_; return {Token::Plus, 0, "", pos};
        case '-': ++i_; return {Token::Minus, 0, "", pos};
        case '*': ++i_; return {Token::Star, 0, "", pos};
        case '^': ++i_; return {Token::Caret, 0, "", pos};
        case '(': ++i_; return {Token::LParen, 0, "", pos};
        case ')': ++i_; return {Token::RParen, 0, "", pos};
        case '[': ++i_; return {Token::LBracket, 0, "", pos};
        case ']': ++i_; return {Token::RBracket, 0, "", pos};
        case ',': ++i_; return {Token::Comma, 0, "", pos};
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_integer();
            std::size_t save = i_;
            while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
                ++i_;
            if (i_ < s_.size() && s_[i_] == '/') {
                ++i_;
                while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
                    ++i_;
                if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
                    throw parse_error("expected denominator digits", i_);
                Int den = read_integer();
                if (den == 0)
                    throw parse_error("zero denominator", pos);
                return {Token::Num, Rat(num, den), "", pos};
            }
            i_ = save;
            return {Token::Num, Rat(num), "", pos};
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string id;
            while (i_ < s_.size() &&
                   std::isalnum(static_cast<unsigned char>(s_[i_])))
                id += s_[i_++];
            return {Token::Ident, 0, id, pos};
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos);
    }

private:
    Int read_integer()
    {
        Int out = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
            out = out * 10 + (s_[i_++] - '0');
        return out;
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

class Parser {
public:
    Parser(const std::string& s, int m) : lexer_(s), m_(m) { advance(); }

    TruncatedPoly parse()
    {
        TruncatedPoly p = parse_expr();
        if (tok_.kind != Token::End)
            throw parse_error("syntax error: unexpected trailing input", tok_.pos);
        return p;
    }

private:
    void advance() { tok_ = lexer_.next(); }

    void expect(Token::Kind k, const char* what)
    {
        if (tok_.kind != k)
            throw parse_error(std::string("syntax error: expected ") + what, tok_.pos);
        advance();
    }

    TruncatedPoly parse_expr()
    {
        TruncatedPoly p = parse_term();
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            bool minus = tok_.kind == Token::Minus;
            advance();
            TruncatedPoly q = parse_term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    TruncatedPoly parse_term()
    {
        TruncatedPoly p = parse_unary();
        while (tok_.kind == Token::Star) {
            advance();
            p = p * parse_unary();
        }
        return p;
    }

    TruncatedPoly parse_unary()
    {
        bool neg = false;
        while (tok_.kind == Token::Plus || tok_.kind == Token::Minus) {
            if (tok_.kind == Token::Minus)
                neg = !neg;
            advance();
        }
        TruncatedPoly p = parse_power();
        return neg ? -p : p;
    }

    TruncatedPoly parse_power()
    {
        TruncatedPoly base = parse_atom();
        if (tok_.kind != Token::Caret)
            return base;
        std::size_t pos = tok_.pos;
        advance();
        if (tok_.kind != Token::Num || rat_den(tok_.value) != 1 || tok_.value < 0)
            throw parse_error("exponent must be a nonnegative integer", pos);
        if (tok_.value > kParseCutoff)
            throw parse_error("exponent too large", pos);
        int n = static_cast<int>(rat_num(tok_.value));
        advance();
        TruncatedPoly out = TruncatedPoly::constant(m_, kParseCutoff, Rat(1));
        for (int i = 0; i < n; ++i)
            out = out * base;
        return out;
    }

    TruncatedPoly parse_atom()
    {
        if (tok_.kind == Token::Num) {
            Rat v = tok_.value;
            advance();
            return TruncatedPoly::constant(m_, kParseCutoff, v);
        }
        if (tok_.kind == Token::LParen) {
            advance();
            TruncatedPoly p = parse_expr();
            expect(Token::RParen, "')'");
            return p;
        }
        if (tok_.kind == Token::Ident)
            return parse_ident();
        throw parse_error("syntax error: expected a value", tok_.pos);
    }

    int parse_bracket_index()
    {
        expect(Token::LBracket, "'['");
        if (tok_.kind != Token::Num || rat_den(tok_.value) != 1 || tok_.value < 0)
            throw parse_error("expected a nonnegative integer index", tok_.pos);
        int k = static_cast<int>(rat_num(tok_.value));
        advance();
        expect(Token::RBracket, "']'");
        return k;
    }

    int parse_variable_index(const std::string& id, std::size_t pos)
    {
        if (id.size() < 2 || id[0] != 'a')
            throw parse_error("unknown identifier '" + id + "'", pos);
        int idx = 0;
        for (std::size_t i = 1; i < id.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(id[i])))
                throw parse_error("unknown identifier '" + id + "'", pos);
            idx = idx * 10 + (id[i] - '0');
        }
        if (idx < 1 || idx > m_)
            throw parse_error("variable " + id + " is out of range for m = " +
                                  std::to_string(m_),
                              pos);
        return idx - 1;
    }

    TruncatedPoly parse_ident()
    {
        std::string id = tok_.text;
        std::size_t pos = tok_.pos;
        advance();

        if (id == "E") {
            // Euler macro: a1 * ... * am
            TruncatedPoly p(m_, kParseCutoff);
            p.add_term(Expo(m_, 1), Rat(1));
            return p;
        }
        if (id == "p") {
            int k = parse_bracket_index();
            if (k > m_)
                throw parse_error("p[" + std::to_string(k) + "] vanishes for m = " +
                                      std::to_string(m_),
                                  pos);
            std::vector<int> all(m_);
            std::iota(all.begin(), all.end(), 0);
            TruncatedPoly ek = elementary_symmetric(k, all, m_, kParseCutoff);
            TruncatedPoly sq(m_, kParseCutoff);
            for (const auto& [e, c] : ek.terms()) {
                Expo d(e);
                for (int& x : d)
                    x *= 2;
                sq.add_term(std::move(d), c);
            }
            return sq;
        }
        if (id == "e") {
            int k = parse_bracket_index();
            expect(Token::LParen, "'('");
            std::vector<int> vars;
            if (tok_.kind != Token::RParen) {
                while (true) {
                    if (tok_.kind != Token::Ident)
                        throw parse_error("expected a variable inside e[...](...)",
                                          tok_.pos);
                    vars.push_back(parse_variable_index(tok_.text, tok_.pos));
                    advance();
                    if (tok_.kind != Token::Comma)
                        break;
                    advance();
                }
            }
            expect(Token::RParen, "')'");
            if (k > static_cast<int>(vars.size()))
                throw parse_error("e[" + std::to_string(k) + "] of " +
                                      std::to_string(vars.size()) + " variables vanishes",
                                  pos);
            return elementary_symmetric(k, vars, m_, kParseCutoff);
        }
        return TruncatedPoly::variable(m_, kParseCutoff, parse_variable_index(id, pos));
    }

    Lexer lexer_;
    Token tok_{Token::End, 0, "", 0};
    int m_;
};

}  // namespace

InvariantPoly parse_invariant(const std::string& expr, int m)
{
    if (m <= 0)
        throw math_error("m must be positive");
    Parser parser(expr, m);
    return InvariantPoly(m, parser.parse(), "expr");
}

}  // namespace flowres
