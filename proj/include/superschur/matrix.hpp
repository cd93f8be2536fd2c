#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superschur/rational.hpp"

namespace superschur {

using RatVec = std::vector<Rat>;

bool is_zero_vec(const RatVec& v);

// Dense matrix over Q with exact Gauss-Jordan elimination. Sizes in this
// project stay tiny (chain spaces of algebras of total dimension <= 7), so
// no effort is spent on sparsity or pivot strategies beyond determinism.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Mat identity(std::size_t k);
    static Mat from_rows(const std::vector<RatVec>& rows, std::size_t cols);
    static Mat vstack(const Mat& top, const Mat& bottom);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    RatVec row(std::size_t r) const;
    void set_row(std::size_t r, const RatVec& v);

    Mat transposed() const;
    Mat operator*(const Mat& rhs) const;
    bool operator==(const Mat& rhs) const = default;
    bool is_zero() const;

    // In-place reduced row echelon form; returns pivot columns in increasing
    // order. Fully deterministic: the pivot is always the first nonzero entry
    // in column order.
    std::vector<std::size_t> rref();
    std::size_t rank() const;

    // Rows spanning {x : (*this) x = 0}, one row per free column, in
    // increasing free-column order (hence canonical for a fixed matrix).
    Mat kernel() const;

    // Canonical row-space basis: RREF with zero rows dropped.
    Mat row_space() const;

    std::optional<Mat> inverse() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Reduces v against rows already in RREF; the zero remainder certifies
// membership in their row space.
RatVec reduce_row(RatVec v, const Mat& rref_rows);

// Coefficients lambda with lambda * rows == v, if v lies in the row space.
std::optional<RatVec> solve_row_combination(const Mat& rows, const RatVec& v);

// Canonical basis of rowspace(a) `intersect` rowspace(b); both matrices must
// share the ambient width.
Mat intersect_row_spaces(const Mat& a, const Mat& b);

}  // namespace superschur
