#include "posreal/matrix.hpp"

#include "posreal/error.hpp"

namespace posreal {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(Errc::DimensionMismatch, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::column(const Vector& v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

Rational Matrix::trace() const {
    if (!is_square()) throw Error(Errc::NotSquare, "trace of a non-square matrix");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(Errc::DimensionMismatch, "matrix sum");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(Errc::DimensionMismatch, "matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    }
    return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix out = a;
    for (auto& v : out.data_) v *= s;
    return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.size()) throw Error(Errc::DimensionMismatch, "matrix-vector product");
    Vector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) {
            if (!a(i, j).is_zero()) out[i] += a(i, j) * x[j];
        }
    }
    return out;
}

Vector operator+(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector sum");
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "vector difference");
    Vector out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vector operator*(const Rational& s, const Vector& v) {
    Vector out = v;
    for (auto& x : out) x *= s;
    return out;
}

}  // namespace posreal
