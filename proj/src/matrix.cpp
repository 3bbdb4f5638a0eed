#include "eqca/matrix.hpp"

namespace eqca {

ScalarMatrix ScalarMatrix::identity(const FieldSpec* spec, std::size_t n) {
    ScalarMatrix m(spec, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = spec->one();
    return m;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
    ScalarMatrix r(spec_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (b.is_zero()) continue;
                r.at(i, j) += a * b;
            }
        }
    return r;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    ScalarMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix dimension mismatch");
    ScalarMatrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
}

ScalarMatrix ScalarMatrix::adjoint() const {
    ScalarMatrix r(spec_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = conj(at(i, j));
    return r;
}

bool ScalarMatrix::is_unitary() const {
    if (rows_ != cols_) return false;
    return adjoint() * *this == identity(spec_, rows_);
}

ScalarMatrix ScalarMatrix::kron(const ScalarMatrix& o) const {
    ScalarMatrix r(spec_, rows_ * o.rows_, cols_ * o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
        }
    return r;
}

}  // namespace eqca
