#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flowres/kronecker.hpp"
#include "flowres/errors.hpp"

#include <random>

using namespace flowres;

namespace {

WeightMatrix make(std::vector<std::vector<int>> rows)
{
    WeightMatrix w;
    for (const auto& r : rows) {
        std::vector<Rat> row;
        for (int x : r)
            row.push_back(Rat(x));
        w.rows.push_back(std::move(row));
    }
    return w;
}

// beta . alpha = 0 entry-exactly, for every basis vector beta.
void check_annihilates(const IntMatrix& basis, const WeightMatrix& w)
{
    for (const auto& beta : basis)
        for (int col = 0; col < w.d(); ++col) {
            Rat acc = 0;
            for (int i = 0; i < w.k(); ++i)
                acc += Rat(beta[i]) * w.rows[i][col];
            CHECK(acc == 0);
        }
}

}  // namespace

TEST_CASE("equal weights over a one-dimensional span")
{
    WeightMatrix w = make({{1}, {1}});
    CHECK(closure_dimension(w) == std::pair<int, int>{1, 1});
    IntMatrix basis = annihilator_basis(w);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Int>{Int(1), Int(-1)});
    check_annihilates(basis, w);
}

TEST_CASE("rationally independent pair")
{
    WeightMatrix w = make({{1, 0}, {0, 1}});
    CHECK(closure_dimension(w) == std::pair<int, int>{2, 0});
    CHECK(annihilator_basis(w).empty());
}

TEST_CASE("dependent triple")
{
    WeightMatrix w = make({{1, 0}, {0, 1}, {1, 1}});
    CHECK(closure_dimension(w) == std::pair<int, int>{2, 1});
    IntMatrix basis = annihilator_basis(w);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == std::vector<Int>{Int(1), Int(1), Int(-1)});
    check_annihilates(basis, w);
}

TEST_CASE("rational coordinates and primitive basis vectors")
{
    WeightMatrix w;
    w.rows = {{Rat(1, 2)}, {Rat(1, 3)}};
    CHECK(closure_dimension(w) == std::pair<int, int>{1, 1});
    IntMatrix basis = annihilator_basis(w);
    REQUIRE(basis.size() == 1);
    // 2*(1/2) - 3*(1/3) = 0, with content 1 and positive HNF pivot
    CHECK(basis[0] == std::vector<Int>{Int(2), Int(-3)});
    check_annihilates(basis, w);
}

TEST_CASE("validation rejects zero weights")
{
    WeightMatrix w = make({{1, 0}, {0, 0}});
    CHECK_THROWS_AS(closure_dimension(w), degeneracy_error);
    CHECK_THROWS_AS(annihilator_basis(w), degeneracy_error);
}

TEST_CASE("dimension identity and exact annihilation on random data")
{
    std::mt19937 rng(8128);
    std::uniform_int_distribution<int> kdist(1, 6);
    std::uniform_int_distribution<int> ddist(1, 4);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        WeightMatrix w;
        int k = kdist(rng), d = ddist(rng);
        for (int i = 0; i < k; ++i) {
            std::vector<Rat> row(d, Rat(0));
            while (true) {
                bool nonzero = false;
                for (int j = 0; j < d; ++j) {
                    row[j] = Rat(num(rng), den(rng));
                    if (row[j] != 0)
                        nonzero = true;
                }
                if (nonzero)
                    break;
            }
            w.rows.push_back(row);
        }
        auto [span, ann] = closure_dimension(w);
        CHECK(span + ann == k);
        IntMatrix basis = annihilator_basis(w);
        CHECK(static_cast<int>(basis.size()) == ann);
        check_annihilates(basis, w);
    }
}

TEST_CASE("invariance under row scaling and basis change")
{
    std::mt19937 rng(65537);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> scale(1, 5);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 2 + trial % 4;
        int d = 1 + trial % 3;
        WeightMatrix w;
        for (int i = 0; i < k; ++i) {
            std::vector<Rat> row(d, Rat(0));
            while (true) {
                bool nonzero = false;
                for (int j = 0; j < d; ++j) {
                    row[j] = Rat(num(rng));
                    if (row[j] != 0)
                        nonzero = true;
                }
                if (nonzero)
                    break;
            }
            w.rows.push_back(row);
        }
        auto base = closure_dimension(w);

        // scaling the whole tuple by a common positive rational changes
        // nothing (it is a coordinate rescaling of the same weights)
        WeightMatrix scaled = w;
        Rat c(scale(rng), scale(rng));
        for (auto& row : scaled.rows)
            for (auto& x : row)
                x *= c;
        CHECK(closure_dimension(scaled) == base);
        CHECK(annihilator_basis(scaled) == annihilator_basis(w));

        // change of Q-basis of the extension: invertible column operations
        if (d >= 2) {
            WeightMatrix mixed = w;
            std::uniform_int_distribution<int> coef(-3, 3);
            int a = coef(rng);
            for (auto& row : mixed.rows) {
                // col0 += a * col1, then swap the two columns (unimodular)
                row[0] += Rat(a) * row[1];
                std::swap(row[0], row[1]);
            }
            CHECK(closure_dimension(mixed) == base);
            CHECK(annihilator_basis(mixed) == annihilator_basis(w));
        }
    }
}

TEST_CASE("Hermite-canonical output")
{
    // a 2-dimensional annihilator: rows 3 and 4 repeat rows 1 and 2
    WeightMatrix w = make({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
    IntMatrix basis = annihilator_basis(w);
    REQUIRE(basis.size() == 2);
    check_annihilates(basis, w);

    // row-style HNF: positive pivots, zeros below, entries above each pivot
    // reduced into [0, pivot)
    int prev_lead = -1;
    for (const auto& row : basis) {
        int lead = 0;
        while (lead < static_cast<int>(row.size()) && row[lead] == 0)
            ++lead;
        REQUIRE(lead < static_cast<int>(row.size()));
        CHECK(lead > prev_lead);
        CHECK(row[lead] > 0);
        prev_lead = lead;
    }
    for (size_t i = 1; i < basis.size(); ++i) {
        int lead = 0;
        while (basis[i][lead] == 0)
            ++lead;
        for (size_t r = 0; r < i; ++r) {
            CHECK(basis[r][lead] >= 0);
            CHECK(basis[r][lead] < basis[i][lead]);
        }
    }
}
