#ifndef FLOWRES_RAT_HPP
#define FLOWRES_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace flowres {

using Int = boost::multiprecision::cpp_int;

// The universal scalar: an arbitrary-precision rational, always in lowest
// terms with positive denominator (cpp_rational canonicalizes on every
// construction).  All arithmetic is exact.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline int rat_sign(const Rat& r) { return r.sign(); }

// "p/q", or just "p" when q = 1.
std::string rat_to_string(const Rat& r);

// Accepts "p", "p/q", optional leading sign, surrounding whitespace.
Rat rat_from_string(std::string_view s);

// Decimal approximation with the requested number of fractional digits,
// rounded half-even.
std::string rat_to_decimal(const Rat& r, int digits);

// Bernoulli number B_n with the convention B_1 = -1/2, via the recurrence
// sum_{k=0}^{n} C(n+1,k) B_k = 0.  Memoized; thread-safe.
Rat bernoulli(unsigned n);

// Coefficient of x^{2n} in x/tanh(x): 2^{2n} B_{2n} / (2n)!.
Rat coth_series_coeff(unsigned n);

// Exact binomial coefficient.
Int binomial(unsigned n, unsigned k);

}  // namespace flowres

#endif
