#pragma once

#include <vector>

#include "eqca/field.hpp"

namespace eqca {

/// Dense square-or-rectangular matrix of field scalars.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(const FieldSpec* spec, std::size_t rows, std::size_t cols)
        : spec_(spec), rows_(rows), cols_(cols), e_(rows * cols, spec->zero()) {}

    static ScalarMatrix identity(const FieldSpec* spec, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec* spec() const { return spec_; }

    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool operator==(const ScalarMatrix& o) const;
    bool operator!=(const ScalarMatrix& o) const { return !(*this == o); }

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;

    /// Conjugate transpose.
    ScalarMatrix adjoint() const;

    bool is_unitary() const;

    /// Kronecker product (row-major, left factor most significant).
    ScalarMatrix kron(const ScalarMatrix& o) const;

private:
    const FieldSpec* spec_ = nullptr;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> e_;
};

}  // namespace eqca
