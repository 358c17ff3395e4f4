#include "planar/smith.hpp"

#include <utility>

namespace planar {

namespace {

using Grid = std::vector<std::vector<mpz_class>>;

// Moves a nonzero entry of minimal absolute value in the trailing block
// starting at (t, t) to position (t, t). Returns false if the block is zero.
bool bring_min_pivot(Grid& a, std::size_t t) {
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
            if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                pi = i;
                pj = j;
            }
    if (pi == rows)
        return false;
    std::swap(a[t], a[pi]);
    for (auto& row : a)
        std::swap(row[t], row[pj]);
    return true;
}

}  // namespace

std::vector<mpz_class> invariant_factors(const IntMatrix& m) {
    std::vector<mpz_class> factors;
    if (m.rows() == 0 || m.cols() == 0)
        return factors;

    Grid a(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = static_cast<long>(m(i, j));

    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        if (!bring_min_pivot(a, t))
            break;
        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                const mpz_class q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0)
                    dirty = true;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                const mpz_class q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0)
                    dirty = true;
            }
            if (!dirty) {
                // The pivot must divide the rest of the block; otherwise fold
                // an offending row in and keep reducing.
                std::size_t bad = rows;
                for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                    for (std::size_t j = t + 1; j < cols; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            bad = i;
                            break;
                        }
                if (bad == rows)
                    break;
                for (std::size_t j = t; j < cols; ++j)
                    a[t][j] += a[bad][j];
            }
            bring_min_pivot(a, t);
        }
        factors.push_back(abs(a[t][t]));
    }
    return factors;
}

}  // namespace planar
