#include "halphen/field_matrix.hpp"

#include <stdexcept>

namespace halphen {

void FieldMatrix::append_row(const std::vector<std::uint64_t>& v) {
    if (v.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix t(f_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

FieldMatrix FieldMatrix::multiply(const FieldMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("multiply: shape mismatch");
    FieldMatrix out(f_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t v = (*this)(i, k);
            if (!v) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j)
                out(i, j) = f_.add(out(i, j), f_.mul(v, rhs(k, j)));
        }
    return out;
}

std::size_t FieldMatrix::reduce() {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rank;
        while (piv < rows_ && (*this)(piv, col) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t c = 0; c < cols_; ++c)
                std::swap(a_[piv * cols_ + c], a_[rank * cols_ + c]);
        std::uint64_t inv = f_.inv((*this)(rank, col));
        for (std::size_t c = col; c < cols_; ++c)
            (*this)(rank, c) = f_.mul((*this)(rank, c), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank) continue;
            std::uint64_t v = (*this)(r, col);
            if (!v) continue;
            for (std::size_t c = col; c < cols_; ++c)
                (*this)(r, c) = f_.sub((*this)(r, c), f_.mul(v, (*this)(rank, c)));
        }
        ++rank;
    }
    return rank;
}

std::size_t FieldMatrix::rank() const {
    FieldMatrix m = *this;
    return m.reduce();
}

FieldMatrix FieldMatrix::kernel_basis() const {
    FieldMatrix m = *this;
    std::size_t rank = m.reduce();
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t r = 0, c = 0; r < rank; ++r) {
        while (c < cols_ && m(r, c) == 0) ++c;
        pivot_col.push_back(c);
        is_pivot[c] = true;
    }
    FieldMatrix ker(f_, 0, cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::uint64_t> v(cols_, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = f_.neg(m(r, c));
        ker.append_row(v);
    }
    return ker;
}

FieldMatrix FieldMatrix::row_basis() const {
    FieldMatrix m = *this;
    std::size_t rank = m.reduce();
    FieldMatrix out(f_, 0, cols_);
    for (std::size_t r = 0; r < rank; ++r) out.append_row(m.row(r));
    return out;
}

FieldMatrix intersect_subspaces(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("intersect_subspaces: ambient mismatch");
    const PrimeField& f = a.field();
    std::size_t n = a.cols(), da = a.rows(), db = b.rows();
    /* kernel vectors (x, y) of [A^T | B^T] satisfy A^T x = -B^T y, so A^T x
     * runs through the intersection of the two row spans */
    FieldMatrix stacked(f, n, da + db);
    for (std::size_t r = 0; r < da; ++r)
        for (std::size_t c = 0; c < n; ++c) stacked(c, r) = a(r, c);
    for (std::size_t r = 0; r < db; ++r)
        for (std::size_t c = 0; c < n; ++c) stacked(c, da + r) = b(r, c);
    FieldMatrix ker = stacked.kernel_basis();
    FieldMatrix vecs(f, 0, n);
    for (std::size_t kr = 0; kr < ker.rows(); ++kr) {
        std::vector<std::uint64_t> v(n, 0);
        for (std::size_t r = 0; r < da; ++r) {
            std::uint64_t x = ker(kr, r);
            if (!x) continue;
            for (std::size_t c = 0; c < n; ++c) v[c] = f.add(v[c], f.mul(x, a(r, c)));
        }
        vecs.append_row(v);
    }
    return vecs.row_basis();
}

}  // namespace halphen
