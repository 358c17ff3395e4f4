#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace planar {

using Int = std::int64_t;

/// Dense row-major integer matrix. Small by construction (surgery and
/// filling data), so no attempt is made at sparse storage.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix zero(std::size_t n) { return IntMatrix(n, n); }
    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(const std::vector<Int>& entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool symmetric() const;
    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Block diagonal sum [[a, 0], [0, b]].
IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// Uᵀ Q U.
IntMatrix congruent(const IntMatrix& q, const IntMatrix& u);

/// Rows and columns of m reordered so that new index k is old index perm[k].
IntMatrix permuted(const IntMatrix& m, const std::vector<std::size_t>& perm);

}  // namespace planar
