// Dense row-major matrices over a prime field, with the exact linear algebra
// used everywhere else: rank, reduced row echelon form, kernel bases and
// subspace intersection.  Dimensions stay small (a few thousand columns), so
// plain Gaussian elimination is the whole story.
#pragma once

#include <cstdint>
#include <vector>

#include "halphen/prime_field.hpp"

namespace halphen {

class FieldMatrix {
public:
    FieldMatrix(const PrimeField& f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    const PrimeField& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    std::uint64_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    std::vector<std::uint64_t> row(std::size_t r) const {
        return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
    }
    void append_row(const std::vector<std::uint64_t>& v);

    FieldMatrix transpose() const;
    FieldMatrix multiply(const FieldMatrix& rhs) const;

    /* in-place reduction to RREF; returns the rank */
    std::size_t reduce();

    std::size_t rank() const;

    /* rows spanning { x : M x = 0 }, one per free column */
    FieldMatrix kernel_basis() const;

    /* drops zero rows, keeps an RREF basis of the row space */
    FieldMatrix row_basis() const;

private:
    PrimeField f_;
    std::size_t rows_, cols_;
    std::vector<std::uint64_t> a_;
};

/* rows of `a` and `b` span two subspaces of F^n; returns an RREF basis of the
 * intersection of the spans */
FieldMatrix intersect_subspaces(const FieldMatrix& a, const FieldMatrix& b);

}  // namespace halphen
