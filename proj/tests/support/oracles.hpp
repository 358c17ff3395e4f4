#pragma once

// Test-only oracles. Everything here is deliberately independent of the
// library's own arithmetic. Numbers come from boost::multiprecision rather
// than GMP, and each quantity is computed by a different algorithm.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "planar/matrix.hpp"
#include "planar/openbook.hpp"
#include "planar/record.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using planar::Int;
using planar::IntMatrix;

/// Smith invariants by randomized elementary row/column reduction to a
/// diagonal, followed by gcd/lcm normalization. Returns the nonzero
/// invariant factors (all of them, including 1s), ascending.
inline std::vector<BigInt> smith_invariants(const IntMatrix& m, std::mt19937_64& rng) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = m(i, j);

    std::vector<BigInt> diag;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        std::vector<std::pair<std::size_t, std::size_t>> nonzero;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0)
                    nonzero.emplace_back(i, j);
        if (nonzero.empty())
            break;
        const auto [pi, pj] = nonzero[std::uniform_int_distribution<std::size_t>(0, nonzero.size() - 1)(rng)];
        std::swap(a[t], a[pi]);
        for (auto& row : a)
            std::swap(row[t], row[pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i)
                while (a[i][t] != 0) {
                    const BigInt q = a[i][t] / a[t][t];
                    for (std::size_t j = t; j < cols; ++j)
                        a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0)
                        std::swap(a[i], a[t]);
                }
            for (std::size_t j = t + 1; j < cols; ++j)
                while (a[t][j] != 0) {
                    const BigInt q = a[t][j] / a[t][t];
                    for (std::size_t i = t; i < rows; ++i)
                        a[i][j] -= q * a[i][t];
                    if (a[t][j] != 0) {
                        for (auto& row : a)
                            std::swap(row[j], row[t]);
                        clean = false;
                    }
                }
            for (std::size_t i = t + 1; i < rows; ++i)
                if (a[i][t] != 0)
                    clean = false;
        }
        diag.push_back(abs(a[t][t]));
    }

    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            const BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
            const BigInt l = diag[i] / g * diag[j];
            diag[i] = g;
            diag[j] = l;
        }
    std::sort(diag.begin(), diag.end());
    return diag;
}

/// Characteristic polynomial coefficients c₀..cₙ (cₙ = 1) by
/// Faddeev–LeVerrier over exact rationals.
inline std::vector<BigRational> characteristic_polynomial(const IntMatrix& m) {
    const std::size_t n = m.rows();
    using Grid = std::vector<std::vector<BigRational>>;
    Grid a(n, std::vector<BigRational>(n)), mk(n, std::vector<BigRational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = BigRational(m(i, j));
    std::vector<BigRational> c(n + 1, 0);
    c[n] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A·M_{k-1} + c_{n-k+1} I ; c_{n-k} = −tr(A·M_k)/k
        Grid mnew(n, std::vector<BigRational>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t l = 0; l < n; ++l)
                    mnew[i][j] += a[i][l] * mk[l][j];
                if (i == j)
                    mnew[i][j] += c[n - k + 1];
            }
        mk = mnew;
        BigRational trace = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                trace += a[i][l] * mk[l][i];
        c[n - k] = -trace / BigRational(static_cast<long>(k));
    }
    return c;
}

struct SignCount {
    std::size_t positive, negative, zero;
};

/// Inertia of a symmetric matrix from Descartes' rule, exact because a
/// symmetric matrix has only real eigenvalues.
inline SignCount inertia_by_descartes(const IntMatrix& m) {
    const auto c = characteristic_polynomial(m);
    std::size_t zero = 0;
    while (zero < c.size() && c[zero] == 0)
        ++zero;
    auto variations = [&](bool negate) {
        std::size_t count = 0;
        int last = 0;
        for (std::size_t k = zero; k < c.size(); ++k) {
            if (c[k] == 0)
                continue;
            int s = c[k] > 0 ? 1 : -1;
            if (negate && k % 2 == 1)
                s = -s;
            if (last != 0 && s != last)
                ++count;
            last = s;
        }
        return count;
    };
    return {variations(false), variations(true), zero};
}

/// Determinant by cofactor expansion (fine for n ≤ 8).
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
    const std::size_t n = a.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return a[0][0];
    BigInt det = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (a[0][col] == 0)
            continue;
        std::vector<std::vector<BigInt>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<BigInt> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != col)
                    row.push_back(a[i][j]);
            minor.push_back(row);
        }
        const BigInt term = a[0][col] * cofactor_det(minor);
        det += (col % 2 == 0) ? term : BigInt(-term);
    }
    return det;
}

inline BigInt cofactor_det(const IntMatrix& m) {
    std::vector<std::vector<BigInt>> a(m.rows(), std::vector<BigInt>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m(i, j);
    return cofactor_det(a);
}

/// d₃ via Cramer's rule for c₁² = rotᵀ adj(L) rot / det L and Descartes
/// for the signature. Returns {numerator, denominator}; denominator 0
/// means L is singular.
inline BigRational d3_by_cofactors(const planar::ContactSurgeryRecord& r, bool& degenerate) {
    const IntMatrix l = r.topological_matrix();
    const std::size_t n = l.rows();
    const BigInt det = cofactor_det(l);
    degenerate = det == 0;
    if (degenerate)
        return 0;
    BigInt quad = 0;  // rotᵀ adj(L) rot
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<BigInt>> minor;
            for (std::size_t a = 0; a < n; ++a) {
                if (a == j)
                    continue;
                std::vector<BigInt> row;
                for (std::size_t b = 0; b < n; ++b)
                    if (b != i)
                        row.push_back(l(a, b));
                minor.push_back(row);
            }
            BigInt cof = cofactor_det(minor);
            if ((i + j) % 2 == 1)
                cof = -cof;
            quad += BigInt(r.components()[i].rot) * cof * BigInt(r.components()[j].rot);
        }
    const auto s = inertia_by_descartes(l);
    const long sigma = static_cast<long>(s.positive) - static_cast<long>(s.negative);
    long plus = 0;
    for (const auto& c : r.components())
        plus += c.coeff == 1;
    const BigRational c1sq = det < 0 ? BigRational(-quad, -det) : BigRational(quad, det);
    return (c1sq - 3 * sigma - 2 * (1 + static_cast<long>(n))) / 4 + plus;
}

inline IntMatrix neg_e8() {
    return IntMatrix{{-2, 1, 0, 0, 0, 0, 0, 0}, {1, -2, 1, 0, 0, 0, 0, 0}, {0, 1, -2, 1, 0, 0, 0, 0},
                     {0, 0, 1, -2, 1, 0, 0, 0}, {0, 0, 0, 1, -2, 1, 0, 1}, {0, 0, 0, 0, 1, -2, 1, 0},
                     {0, 0, 0, 0, 0, 1, -2, 0}, {0, 0, 0, 0, 1, 0, 0, -2}};
}

inline IntMatrix random_symmetric(std::size_t n, Int lo, Int hi, std::mt19937_64& rng) {
    std::uniform_int_distribution<Int> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            m(i, j) = dist(rng);
            m(j, i) = m(i, j);
        }
    return m;
}

/// Random unimodular matrix: a product of a signed permutation and a few
/// elementary shears with small multipliers.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, std::size_t shears = 0) {
    if (shears == 0)
        shears = 2 * n;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    IntMatrix u(n, n);
    std::bernoulli_distribution flip(0.5);
    for (std::size_t i = 0; i < n; ++i)
        u(i, perm[i]) = flip(rng) ? 1 : -1;
    if (n < 2)
        return u;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<Int> mult(-1, 1);
    for (std::size_t s = 0; s < shears; ++s) {
        const std::size_t i = idx(rng), j = idx(rng);
        const Int k = mult(rng);
        if (i == j || k == 0)
            continue;
        for (std::size_t r = 0; r < n; ++r)
            u(r, i) += k * u(r, j);  // column op keeps det = ±1
    }
    return u;
}

/// Random open book whose word is laminar: letters drawn from intervals of
/// a random ordering of the holes, keeping only those nested in or disjoint
/// from every earlier letter.
inline planar::OpenBook random_laminar_book(int max_holes, std::size_t max_letters, std::mt19937_64& rng) {
    const int h = std::uniform_int_distribution<int>(0, max_holes)(rng);
    planar::OpenBook ob(planar::make_page(h));
    if (h == 0)
        return ob;
    std::vector<int> order(static_cast<std::size_t>(h));
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t letters = std::uniform_int_distribution<std::size_t>(0, max_letters)(rng);
    std::uniform_int_distribution<int> pos(0, h - 1);
    std::vector<planar::Curve> chosen;
    for (std::size_t attempt = 0; chosen.size() < letters && attempt < 20 * max_letters + 20; ++attempt) {
        int a = pos(rng), b = pos(rng);
        if (a > b)
            std::swap(a, b);
        planar::Curve c(std::vector<int>(order.begin() + a, order.begin() + b + 1));
        if (std::all_of(chosen.begin(), chosen.end(), [&](const planar::Curve& x) { return planar::laminar_pair(x, c); }))
            chosen.push_back(c);
    }
    std::bernoulli_distribution positive(0.6);
    for (const auto& c : chosen)
        ob = planar::append_twist(ob, c, positive(rng) ? 1 : -1);
    return ob;
}

}  // namespace oracle
