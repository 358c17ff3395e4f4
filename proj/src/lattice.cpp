#include "planar/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "planar/errors.hpp"
#include "planar/smith.hpp"

namespace planar {

IntersectionForm::IntersectionForm(IntMatrix matrix, int boundary_components, bool boundary_is_homology_sphere)
    : matrix_(std::move(matrix)),
      boundary_components_(boundary_components),
      boundary_is_homology_sphere_(boundary_is_homology_sphere) {
    if (!matrix_.symmetric())
        throw Error(Errc::NotSymmetric, "intersection form must be a symmetric square matrix");
    if (boundary_components_ < 1)
        throw Error(Errc::InvalidArgument, "a filling has at least one boundary component");
}

Inertia inertia(const IntersectionForm& f) { return symmetric_inertia(f.matrix()); }

EnumerationLimits limits_from_environment() {
    EnumerationLimits limits;
    if (const char* env = std::getenv("PLANAROB_ENUM_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            limits.node_budget = v;
    }
    return limits;
}

namespace {

class ShortVectorSearch {
public:
    ShortVectorSearch(const IntMatrix& positive_form, const EnumerationLimits& limits)
        : n_(positive_form.rows()), limits_(limits), q_(n_, std::vector<Rational>(n_)), x_(n_, 0) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                q_[i][j] = static_cast<long>(positive_form(i, j));
        // q(x) = Σ qᵢᵢ (xᵢ + Σ_{j>i} qᵢⱼ xⱼ)²
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                q_[j][i] = q_[i][j];
                q_[i][j] /= q_[i][i];
            }
            for (std::size_t k = i + 1; k < n_; ++k)
                for (std::size_t l = k; l < n_; ++l)
                    q_[k][l] -= q_[k][i] * q_[i][l];
        }
    }

    std::vector<std::vector<Int>> run() {
        if (n_ > 0)
            descend(n_ - 1, Rational(1));
        return found_;
    }

private:
    void descend(std::size_t i, const Rational& remaining) {
        Rational center = 0;
        for (std::size_t j = i + 1; j < n_; ++j)
            center -= q_[i][j] * x_[j];
        const double radius = std::sqrt(std::max(0.0, Rational(remaining / q_[i][i]).get_d()));
        const double c = center.get_d();
        const auto lo = static_cast<Int>(std::floor(c - radius)) - 1;
        const auto hi = static_cast<Int>(std::ceil(c + radius)) + 1;
        for (Int v = lo; v <= hi; ++v) {
            if (++nodes_ > limits_.node_budget)
                throw Error(Errc::ResourceExceeded, "short-vector enumeration exceeded " +
                                                        std::to_string(limits_.node_budget) + " nodes");
            const Rational offset = Rational(static_cast<long>(v)) - center;
            const Rational used = q_[i][i] * offset * offset;
            if (used > remaining)
                continue;
            x_[i] = static_cast<long>(v);
            if (i == 0)
                record();
            else
                descend(i - 1, remaining - used);
        }
        x_[i] = 0;
    }

    void record() {
        // Keep one of ±v: the last nonzero coordinate is positive.
        for (std::size_t k = n_; k-- > 0;) {
            if (x_[k] == 0)
                continue;
            if (x_[k] < 0)
                return;
            std::vector<Int> v(n_);
            for (std::size_t j = 0; j < n_; ++j)
                v[j] = x_[j].get_si();
            found_.push_back(std::move(v));
            return;
        }
    }

    std::size_t n_;
    EnumerationLimits limits_;
    RationalMatrix q_;
    std::vector<mpz_class> x_;
    std::vector<std::vector<Int>> found_;
    std::uint64_t nodes_ = 0;
};

void require_negative_definite(const IntMatrix& q) {
    const Inertia in = symmetric_inertia(q);
    if (in.negative != q.rows())
        throw Error(Errc::NotNegativeDefinite, "form has inertia (" + std::to_string(in.positive) + "," +
                                                   std::to_string(in.negative) + "," + std::to_string(in.zero) +
                                                   ")");
}

}  // namespace

std::vector<std::vector<Int>> unit_norm_vectors(const IntMatrix& q, const EnumerationLimits& limits) {
    if (!q.symmetric())
        throw Error(Errc::NotSymmetric, "form must be symmetric");
    if (q.rows() > limits.max_rank)
        throw Error(Errc::ResourceExceeded, "rank " + std::to_string(q.rows()) + " exceeds enumeration cap " +
                                                std::to_string(limits.max_rank));
    require_negative_definite(q);
    IntMatrix positive = q;
    for (std::size_t i = 0; i < q.rows(); ++i)
        for (std::size_t j = 0; j < q.cols(); ++j)
            positive(i, j) = -q(i, j);
    return ShortVectorSearch(positive, limits).run();
}

bool is_diagonalizable(const IntersectionForm& f, const EnumerationLimits& limits) {
    const IntMatrix& q = f.matrix();
    require_negative_definite(q);
    const mpz_class det = abs(determinant(q));
    if (det != 1)
        throw Error(Errc::NotUnimodular, "form has |det| = " + det.get_str());
    const std::size_t n = q.rows();
    if (n == 0)
        return true;

    const auto vectors = unit_norm_vectors(q, limits);
    if (vectors.size() < n)
        return false;
    IntMatrix generators(vectors.size(), n);
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            generators(r, c) = vectors[r][c];
    const auto factors = invariant_factors(generators);
    if (factors.size() != n)
        return false;
    for (const auto& d : factors)
        if (d != 1)
            return false;
    return true;
}

IntersectionForm legendrian_filling_form(const ContactSurgeryRecord& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r.components()[i].coeff != -1)
            throw Error(Errc::NotLegendrian, "component " + std::to_string(i + 1) + " has contact coefficient +1");
    IntMatrix m = r.topological_matrix();
    const bool homology_sphere = abs(determinant(m)) == 1;
    return IntersectionForm(std::move(m), 1, homology_sphere);
}

PlanarVerdict planar_support_verdict(const IntersectionForm& f, const EnumerationLimits& limits) {
    PlanarVerdict v;
    const Inertia in = inertia(f);
    if (in.positive > 0)
        v.reasons.emplace_back(kReasonPositive);
    if (in.zero > 0)
        v.reasons.emplace_back(kReasonDegenerate);
    if (f.boundary_components() > 1)
        v.reasons.emplace_back(kReasonDisconnected);
    if (f.boundary_is_homology_sphere() && in.positive == 0 && in.zero == 0 && !is_diagonalizable(f, limits))
        v.reasons.emplace_back(kReasonNonDiagonalizable);
    v.status = v.reasons.empty() ? VerdictStatus::Unobstructed : VerdictStatus::Obstructed;
    return v;
}

std::string to_string(VerdictStatus s) { return s == VerdictStatus::Obstructed ? "Obstructed" : "Unobstructed"; }

}  // namespace planar
