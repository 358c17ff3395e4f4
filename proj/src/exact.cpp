#include "planar/exact.hpp"

#include <stdexcept>
#include <utility>

namespace planar {

namespace {

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i][j] = Rational(static_cast<long>(m(i, j)));
    return r;
}

}  // namespace

mpz_class determinant(const IntMatrix& m) {
    if (!m.square())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = static_cast<long>(m(i, j));

    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap][k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

std::optional<RationalMatrix> solve(const IntMatrix& a, const RationalMatrix& rhs) {
    if (!a.square() || rhs.size() != a.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    const std::size_t n = a.rows();
    const std::size_t k = n == 0 ? 0 : rhs.front().size();
    RationalMatrix m = to_rational(a);
    RationalMatrix x = rhs;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(x[pivot], x[col]);
        const Rational inv = 1 / m[col][col];
        for (std::size_t j = col; j < n; ++j)
            m[col][j] *= inv;
        for (std::size_t j = 0; j < k; ++j)
            x[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0)
                continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < n; ++j)
                m[i][j] -= f * m[col][j];
            for (std::size_t j = 0; j < k; ++j)
                x[i][j] -= f * x[col][j];
        }
    }
    return x;
}

Inertia symmetric_inertia(const IntMatrix& input) {
    if (!input.symmetric())
        throw std::invalid_argument("symmetric_inertia: matrix not symmetric");
    const std::size_t n = input.rows();
    RationalMatrix a = to_rational(input);
    Inertia result;

    auto swap_index = [&](std::size_t p, std::size_t q) {
        std::swap(a[p], a[q]);
        for (auto& row : a)
            std::swap(row[p], row[q]);
    };

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a[pivot][pivot] == 0)
            ++pivot;
        if (pivot == n) {
            // All remaining diagonal entries vanish; look for an off-diagonal one.
            std::size_t pi = n, pj = n;
            for (std::size_t i = k; i < n && pi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi == n) {
                result.zero += n - k;
                break;
            }
            // e_i <- e_i + e_j turns the diagonal entry into 2·a_ij.
            for (std::size_t c = 0; c < n; ++c)
                a[pi][c] += a[pj][c];
            for (std::size_t r = 0; r < n; ++r)
                a[r][pi] += a[r][pj];
            pivot = pi;
        }
        swap_index(k, pivot);

        const Rational p = a[k][k];
        if (p > 0)
            ++result.positive;
        else
            ++result.negative;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0)
                continue;
            const Rational f = a[i][k] / p;
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= f * a[k][j];
            for (std::size_t r = k; r < n; ++r)
                a[r][i] -= f * a[r][k];
        }
    }
    return result;
}

std::string to_fraction_string(const Rational& r) {
    Rational c = r;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::optional<Rational> parse_fraction(const std::string& text) {
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };
    auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };

    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
        return std::nullopt;
    const mpz_class d(den);
    if (d == 0)
        return std::nullopt;
    Rational r(mpz_class(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

}  // namespace planar
