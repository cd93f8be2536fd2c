#include "superschur/matrix.hpp"

#include <stdexcept>

namespace superschur {

bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (x != 0) return false;
    return true;
}

Mat Mat::identity(std::size_t k) {
    Mat m(k, k);
    for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("from_rows: ragged row");
        m.set_row(r, rows[r]);
    }
    return m;
}

Mat Mat::vstack(const Mat& top, const Mat& bottom) {
    if (top.rows() == 0) return bottom;
    if (bottom.rows() == 0) return top;
    if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: width mismatch");
    Mat m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) m.set_row(r, top.row(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) m.set_row(top.rows() + r, bottom.row(r));
    return m;
}

RatVec Mat::row(std::size_t r) const {
    RatVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
    return v;
}

void Mat::set_row(std::size_t r, const RatVec& v) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Mat Mat::transposed() const {
    Mat m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows()) throw std::invalid_argument("operator*: shape mismatch");
    Mat m(rows_, rhs.cols());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(r, k) == 0) continue;
            for (std::size_t c = 0; c < rhs.cols(); ++c) m.at(r, c) += at(r, k) * rhs.at(k, c);
        }
    return m;
}

bool Mat::is_zero() const {
    for (const Rat& x : a_)
        if (x != 0) return false;
    return true;
}

std::vector<std::size_t> Mat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t pivot = lead;
        while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != lead)
            for (std::size_t c = 0; c < cols_; ++c) std::swap(at(pivot, c), at(lead, c));
        Rat inv = Rat(1) / at(lead, col);
        for (std::size_t c = 0; c < cols_; ++c) at(lead, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead || at(r, col) == 0) continue;
            Rat f = at(r, col);
            for (std::size_t c = 0; c < cols_; ++c) at(r, c) -= f * at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t Mat::rank() const {
    Mat copy = *this;
    return copy.rref().size();
}

Mat Mat::kernel() const {
    Mat red = *this;
    std::vector<std::size_t> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    Mat ker(cols_ - pivots.size(), cols_);
    std::size_t k = 0;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        ker.at(k, free) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) ker.at(k, pivots[r]) = -red.at(r, free);
        ++k;
    }
    return ker;
}

Mat Mat::row_space() const {
    Mat red = *this;
    std::size_t rk = red.rref().size();
    Mat out(rk, cols_);
    for (std::size_t r = 0; r < rk; ++r) out.set_row(r, red.row(r));
    return out;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    Mat aug(rows_, 2 * cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
        aug.at(r, cols_ + r) = 1;
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (pivots.size() != rows_ || pivots.back() >= cols_) return std::nullopt;
    Mat inv(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) inv.at(r, c) = aug.at(r, cols_ + c);
    return inv;
}

RatVec reduce_row(RatVec v, const Mat& rref_rows) {
    for (std::size_t r = 0; r < rref_rows.rows(); ++r) {
        std::size_t lead = 0;
        while (lead < rref_rows.cols() && rref_rows.at(r, lead) == 0) ++lead;
        if (lead == rref_rows.cols()) continue;
        if (v[lead] == 0) continue;
        Rat f = v[lead] / rref_rows.at(r, lead);
        for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * rref_rows.at(r, c);
    }
    return v;
}

std::optional<RatVec> solve_row_combination(const Mat& rows, const RatVec& v) {
    // Solve rows^T lambda = v by elimination on the augmented system.
    std::size_t k = rows.rows(), d = rows.cols();
    Mat aug(d, k + 1);
    for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < k; ++c) aug.at(r, c) = rows.at(c, r);
        aug.at(r, k) = v[r];
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == k) return std::nullopt;  // inconsistent
    RatVec lambda(k);
    for (std::size_t r = 0; r < pivots.size(); ++r) lambda[pivots[r]] = aug.at(r, k);
    return lambda;
}

Mat intersect_row_spaces(const Mat& a, const Mat& b) {
    Mat ra = a.row_space(), rb = b.row_space();
    if (ra.rows() == 0 || rb.rows() == 0) return Mat(0, a.cols());
    // (x, y) with x ra = y rb span the intersection; they are the left kernel
    // of the stack, i.e. the kernel of its transpose.
    Mat stacked = Mat::vstack(ra, rb);
    Mat left_ker = stacked.transposed().kernel();
    std::vector<RatVec> gens;
    for (std::size_t r = 0; r < left_ker.rows(); ++r) {
        RatVec w(a.cols());
        for (std::size_t i = 0; i < ra.rows(); ++i)
            for (std::size_t c = 0; c < a.cols(); ++c) w[c] += left_ker.at(r, i) * ra.at(i, c);
        gens.push_back(w);
    }
    return Mat::from_rows(gens, a.cols()).row_space();
}

}  // namespace superschur
