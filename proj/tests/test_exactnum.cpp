#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flowres/rat.hpp"
#include "flowres/errors.hpp"

using namespace flowres;

// Independent recurrence oracle: checks sum_{k=0}^{n} C(n+1,k) B_k == 0
// against a freshly computed table, without calling bernoulli().
static std::vector<Rat> bernoulli_table_oracle(unsigned n)
{
    std::vector<Rat> b{Rat(1)};
    for (unsigned j = 1; j <= n; ++j) {
        Rat acc = 0;
        for (unsigned k = 0; k < j; ++k)
            acc += Rat(binomial(j + 1, k)) * b[k];
        b.push_back(-acc / Rat(j + 1));
    }
    return b;
}

TEST_CASE("bernoulli base values")
{
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == Rat(-1, 2));
    // derived via the recurrence oracle: sum C(3,k) B_k = 0
    auto table = bernoulli_table_oracle(4);
    CHECK(Rat(binomial(3, 0)) * table[0] + Rat(binomial(3, 1)) * table[1] +
              Rat(binomial(3, 2)) * table[2] ==
          0);
    CHECK(bernoulli(2) == table[2]);
    CHECK(bernoulli(2) == Rat(1, 6));
    CHECK(bernoulli(4) == Rat(-1, 30));
}

TEST_CASE("odd bernoulli numbers vanish")
{
    for (unsigned n = 3; n <= 31; n += 2)
        CHECK(bernoulli(n) == 0);
}

TEST_CASE("bernoulli is deterministic on recomputation")
{
    Rat first = bernoulli(20);
    for (int i = 0; i < 3; ++i)
        CHECK(bernoulli(20) == first);
    // full recurrence identity at a larger index
    auto table = bernoulli_table_oracle(16);
    for (unsigned n = 0; n <= 16; ++n)
        CHECK(bernoulli(n) == table[n]);
}

TEST_CASE("coth series coefficients")
{
    CHECK(coth_series_coeff(0) == Rat(1));
    CHECK(coth_series_coeff(1) == Rat(1, 3));   // 4 * (1/6) / 2!
    CHECK(coth_series_coeff(2) == Rat(-1, 45)); // 16 * (-1/30) / 4!
}

TEST_CASE("degree-2 part of the truncated two-variable coth product")
{
    // prod_{j=1}^{2} sum_{n<=2} c_n x_j^{2n} has degree-2 part (x1^2+x2^2)/3.
    // Hand expansion: the only degree-2 contributions are c_1 x_j^2 * c_0.
    Rat c0 = coth_series_coeff(0), c1 = coth_series_coeff(1);
    CHECK(c0 * c1 == Rat(1, 3));
    CHECK(c1 * c0 == Rat(1, 3));
}

TEST_CASE("rational string round trip")
{
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_to_string(Rat(-2, 3)) == "-2/3");
    CHECK(rat_from_string("7/21") == Rat(1, 3));
    CHECK(rat_from_string(" -4 ") == Rat(-4));
    CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
    CHECK_THROWS_AS(rat_from_string("abc"), input_error);
}

TEST_CASE("decimal approximation with half-even rounding")
{
    CHECK(rat_to_decimal(Rat(5, 6), 4) == "0.8333");
    CHECK(rat_to_decimal(Rat(1, 2), 0) == "0");   // ties to even
    CHECK(rat_to_decimal(Rat(3, 2), 0) == "2");
    CHECK(rat_to_decimal(Rat(25, 1000), 2) == "0.02");  // 0.025 -> even
    CHECK(rat_to_decimal(Rat(35, 1000), 2) == "0.04");
    CHECK(rat_to_decimal(Rat(-5, 6), 3) == "-0.833");
    CHECK(rat_to_decimal(Rat(2), 2) == "2.00");
}
