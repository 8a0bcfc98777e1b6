#pragma once

#include "pbwdeform/scalar.hpp"

#include <optional>
#include <vector>

namespace pbwdeform {

/// Dense rectangular matrix over a single field.  All elimination is exact,
/// with first-nonzero pivoting, so echelon forms are deterministic.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field f)
        : rows_(rows), cols_(cols), field_(f),
          entries_(rows * cols, FieldScalar::zero(f)) {}

    static Matrix identity(std::size_t n, Field f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }

    FieldScalar& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldScalar& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);

    /// Image of a column vector under this matrix.
    std::vector<FieldScalar> apply(const std::vector<FieldScalar>& v) const;

    /// Reduced row echelon form; returns pivot column indices.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Reduced-echelon basis of the kernel, as rows.  Deterministic.
    std::vector<std::vector<FieldScalar>> kernel_basis() const;

    std::optional<Matrix> inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    Field field_{};
    std::vector<FieldScalar> entries_;
};

}  // namespace pbwdeform
