#include "hopfcat/matrix.hpp"

#include <sstream>

namespace hopfcat {

Matrix Matrix::identity(FieldSpec f, int n) {
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::of(FieldSpec f, std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
    Matrix m(f, r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c) throw std::invalid_argument("Matrix::of: ragged rows");
        int j = 0;
        for (long v : row) m.at(i, j++) = Scalar::of(f, v);
        ++i;
    }
    return m;
}

Matrix Matrix::from_columns(FieldSpec f, int rows, const std::vector<Vec>& cols) {
    Matrix m(f, rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != rows) throw std::invalid_argument("from_columns: bad column length");
        for (int i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Matrix Matrix::column(const Vec& v) {
    if (v.empty()) return Matrix();
    Matrix m(v[0].field(), static_cast<int>(v.size()), 1);
    for (int i = 0; i < m.rows(); ++i) m.at(i, 0) = v[i];
    return m;
}

Matrix Matrix::basis_column(FieldSpec f, int dim, int index) {
    Matrix m(f, dim, 1);
    m.at(index, 0) = Scalar::one(f);
    return m;
}

Vec Matrix::col(int j) const {
    Vec v(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Matrix::set_col(int j, const Vec& v) {
    if (static_cast<int>(v.size()) != rows_) throw std::invalid_argument("set_col: bad length");
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::cols_subset(const std::vector<int>& indices) const {
    Matrix m(field_, rows_, static_cast<int>(indices.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, indices[j]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix*: shape mismatch");
    Matrix m(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) m.at(i, j) += a * b;
            }
        }
    return m;
}

Vec Matrix::operator*(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("Matrix*Vec: shape mismatch");
    Vec r(rows_, Scalar::zero(field_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

void Matrix::require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] += o.e_[i];
    return m;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix m = *this;
    for (size_t i = 0; i < e_.size(); ++i) m.e_[i] -= o.e_[i];
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.e_) x = -x;
    return m;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m = *this;
    for (auto& x : m.e_) x *= c;
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::kronecker(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b.at(k, l).is_zero())
                        m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    Matrix m(a.field(), a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) m.at(i, a.cols() + j) = b.at(i, j);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: col mismatch");
    Matrix m(a.field(), a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) m.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) m.at(a.rows() + i, j) = b.at(i, j);
    }
    return m;
}

Matrix Matrix::direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " over " << field_.str() << "\n";
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? " " : "");
        os << " ]\n";
    }
    return os.str();
}

Vec vec_zero(FieldSpec f, int n) { return Vec(n, Scalar::zero(f)); }

Vec vec_basis(FieldSpec f, int n, int index) {
    Vec v(n, Scalar::zero(f));
    v[index] = Scalar::one(f);
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vec_add: length mismatch");
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_scaled(const Vec& a, const Scalar& c) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace hopfcat
