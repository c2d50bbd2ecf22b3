#include "flowres/kronecker.hpp"
#include "flowres/errors.hpp"

namespace flowres {

void WeightMatrix::validate() const
{
    if (rows.empty())
        throw degeneracy_error("weight matrix must have at least one row");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size() || rows[i].empty())
            throw dimension_mismatch_error("weight matrix rows must share a positive length");
        bool zero = true;
        for (const auto& x : rows[i])
            if (x != 0) {
                zero = false;
                break;
            }
        if (zero)
            throw degeneracy_error("weight row " + std::to_string(i) +
                                   " is zero (each alpha_i must be nonzero)");
    }
}

std::pair<int, int> closure_dimension(const WeightMatrix& w)
{
    w.validate();
    int span = rank(w.rows);
    return {span, w.k() - span};
}

IntMatrix annihilator_basis(const WeightMatrix& w)
{
    w.validate();
    // beta . alpha = 0 is the kernel of the transposed coordinate matrix.
    RatMatrix t(w.d(), std::vector<Rat>(w.k(), Rat(0)));
    for (int i = 0; i < w.k(); ++i)
        for (int j = 0; j < w.d(); ++j)
            t[j][i] = w.rows[i][j];
    return hnf_rows(integer_kernel_basis(t));
}

}  // namespace flowres
