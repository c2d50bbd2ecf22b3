#include "flowres/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace flowres {

IntMatrix clear_denominators(const RatMatrix& a)
{
    IntMatrix out;
    out.reserve(a.size());
    for (const auto& row : a) {
        Int lcm = 1;
        for (const auto& x : row) {
            Int d = rat_den(x);
            lcm = lcm / gcd(lcm, d) * d;
        }
        std::vector<Int> irow;
        irow.reserve(row.size());
        for (const auto& x : row)
            irow.push_back(rat_num(x) * (lcm / rat_den(x)));
        out.push_back(std::move(irow));
    }
    return out;
}

int rank(const RatMatrix& a)
{
    IntMatrix m = clear_denominators(a);
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;

    int r = 0;
    Int prev = 1;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0)
            continue;
        std::swap(m[r], m[piv]);
        // Bareiss step: entries stay integral, pivots are leading minors.
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

std::optional<std::vector<Rat>> solve(const RatMatrix& a, const std::vector<Rat>& b)
{
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;

    RatMatrix m(rows);
    for (int i = 0; i < rows; ++i) {
        m[i] = a[i];
        m[i].push_back(b[i]);
    }

    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0)
            continue;
        std::swap(m[r], m[piv]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j <= cols; ++j)
            m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0)
                continue;
            Rat f = m[i][c];
            for (int j = c; j <= cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    for (int i = r; i < rows; ++i)
        if (m[i][cols] != 0)
            return std::nullopt;

    std::vector<Rat> x(cols, Rat(0));
    for (int i = 0; i < r; ++i)
        x[pivot_col[i]] = m[i][cols];
    return x;
}

IntMatrix integer_kernel_basis(const RatMatrix& mat)
{
    IntMatrix m = clear_denominators(mat);
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    if (cols == 0)
        return {};

    // Column reduction with unimodular ops mirrored on U; kernel columns of
    // the reduced matrix give a saturated integer kernel basis.
    IntMatrix u(cols, std::vector<Int>(cols, 0));
    for (int i = 0; i < cols; ++i)
        u[i][i] = 1;

    auto col_is_zero_below = [&](int c, int from_row) {
        for (int i = from_row; i < rows; ++i)
            if (m[i][c] != 0) return false;
        return true;
    };

    int lead = 0;  // next column to place a pivot into
    for (int row = 0; row < rows && lead < cols; ++row) {
        // Euclidean elimination across columns lead..cols-1 on this row.
        while (true) {
            int nz = -1;
            for (int c = lead; c < cols; ++c)
                if (m[row][c] != 0) { nz = c; break; }
            if (nz < 0)
                break;
            // move smallest-magnitude nonzero to 'lead'
            int best = nz;
            for (int c = nz + 1; c < cols; ++c)
                if (m[row][c] != 0 && abs(m[row][c]) < abs(m[row][best]))
                    best = c;
            for (int i = 0; i < rows; ++i) std::swap(m[i][lead], m[i][best]);
            for (int i = 0; i < cols; ++i) std::swap(u[i][lead], u[i][best]);

            bool reduced = true;
            for (int c = lead + 1; c < cols; ++c) {
                if (m[row][c] == 0)
                    continue;
                Int q = m[row][c] / m[row][lead];
                if (q != 0) {
                    for (int i = 0; i < rows; ++i) m[i][c] -= q * m[i][lead];
                    for (int i = 0; i < cols; ++i) u[i][c] -= q * u[i][lead];
                }
                if (m[row][c] != 0)
                    reduced = false;
            }
            if (reduced)
                break;
        }
        if (m[row][lead] != 0)
            ++lead;
    }

    IntMatrix basis;
    for (int c = lead; c < cols; ++c) {
        if (!col_is_zero_below(c, 0))
            continue;
        std::vector<Int> v(cols);
        for (int i = 0; i < cols; ++i)
            v[i] = u[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

IntMatrix hnf_rows(IntMatrix rows)
{
    const int n = static_cast<int>(rows.size());
    const int cols = n ? static_cast<int>(rows[0].size()) : 0;

    int r = 0;
    for (int c = 0; c < cols && r < n; ++c) {
        // gcd the column entries below r into a single pivot row
        while (true) {
            int piv = -1;
            for (int i = r; i < n; ++i)
                if (rows[i][c] != 0 && (piv < 0 || abs(rows[i][c]) < abs(rows[piv][c])))
                    piv = i;
            if (piv < 0)
                break;
            std::swap(rows[r], rows[piv]);
            bool done = true;
            for (int i = r + 1; i < n; ++i) {
                if (rows[i][c] == 0)
                    continue;
                Int q = rows[i][c] / rows[r][c];
                for (int j = 0; j < cols; ++j)
                    rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (rows[r][c] == 0)
            continue;
        if (rows[r][c] < 0)
            for (int j = 0; j < cols; ++j)
                rows[r][j] = -rows[r][j];
        // reduce entries above the pivot into [0, pivot)
        for (int i = 0; i < r; ++i) {
            Int q = rows[i][c] / rows[r][c];
            if (rows[i][c] % rows[r][c] < 0)
                --q;
            if (q != 0)
                for (int j = 0; j < cols; ++j)
                    rows[i][j] -= q * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

}  // namespace flowres
