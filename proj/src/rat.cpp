#include "flowres/rat.hpp"
#include "flowres/errors.hpp"

#include <cctype>
#include <mutex>
#include <vector>

namespace flowres {

std::string rat_to_string(const Rat& r)
{
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1)
        s += "/" + rat_den(r).str();
    return s;
}

Rat rat_from_string(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    std::string_view t = s.substr(b, e - b);
    if (t.empty())
        throw input_error("empty rational literal");

    auto parse_int = [](std::string_view v) -> Int {
        std::size_t i = 0;
        bool neg = false;
        if (i < v.size() && (v[i] == '+' || v[i] == '-')) {
            neg = (v[i] == '-');
            ++i;
        }
        if (i == v.size())
            throw input_error("malformed integer literal");
        Int out = 0;
        for (; i < v.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(v[i])))
                throw input_error(std::string("malformed rational literal '") + std::string(v) + "'");
            out = out * 10 + (v[i] - '0');
        }
        return neg ? Int(-out) : out;
    };

    auto slash = t.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(t));
    Int num = parse_int(t.substr(0, slash));
    Int den = parse_int(t.substr(slash + 1));
    if (den == 0)
        throw input_error("zero denominator in rational literal");
    return Rat(num, den);
}

std::string rat_to_decimal(const Rat& r, int digits)
{
    if (digits < 0)
        throw input_error("negative digit count");
    Int num = rat_num(r), den = rat_den(r);
    bool neg = num < 0;
    if (neg) num = -num;
    Int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Int q = num * scale / den;
    Int rem = num * scale % den;
    // round half-even on the residue rem/den
    Int twice = rem * 2;
    if (twice > den || (twice == den && (q % 2) != 0))
        ++q;

    std::string body = q.str();
    std::string out;
    if (digits == 0) {
        out = body;
    } else {
        if (static_cast<int>(body.size()) <= digits)
            body.insert(0, digits + 1 - body.size(), '0');
        out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
    }
    if (neg && q != 0)
        out.insert(0, 1, '-');
    return out;
}

Int binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Int out = 1;
    for (unsigned i = 0; i < k; ++i) {
        out *= n - i;
        out /= i + 1;
    }
    return out;
}

Rat bernoulli(unsigned n)
{
    static std::mutex mtx;
    static std::vector<Rat> cache{Rat(1)};  // B_0 = 1

    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= n) {
        unsigned j = static_cast<unsigned>(cache.size());
        // B_j = -1/(j+1) * sum_{k<j} C(j+1,k) B_k
        Rat acc = 0;
        for (unsigned k = 0; k < j; ++k)
            acc += Rat(binomial(j + 1, k)) * cache[k];
        cache.push_back(-acc / Rat(j + 1));
    }
    return cache[n];
}

Rat coth_series_coeff(unsigned n)
{
    Int pow4 = Int(1) << (2 * n);
    Int fact = 1;
    for (unsigned i = 2; i <= 2 * n; ++i) fact *= i;
    return Rat(pow4) * bernoulli(2 * n) / Rat(fact);
}

}  // namespace flowres
