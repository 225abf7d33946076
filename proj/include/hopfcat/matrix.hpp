#pragma once

#include <functional>
#include <initializer_list>
#include <vector>

#include "hopfcat/field.hpp"

namespace hopfcat {

using Vec = std::vector<Scalar>;

// Dense matrix over an exact field, row-major. Matrices act on the left of
// column coordinate vectors; the image of the j-th basis vector under a linear
// map is column j. Empty matrices (0 rows or 0 cols) are legal and stand for
// maps in or out of the zero space.
class Matrix {
  public:
    Matrix() : field_(FieldSpec::rationals()), rows_(0), cols_(0) {}
    Matrix(FieldSpec f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative shape");
    }

    static Matrix zero(FieldSpec f, int rows, int cols) { return Matrix(f, rows, cols); }
    static Matrix identity(FieldSpec f, int n);
    // Rows given as integer literals, mainly for tests and fixtures.
    static Matrix of(FieldSpec f, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix from_columns(FieldSpec f, int rows, const std::vector<Vec>& cols);
    static Matrix column(const Vec& v);
    static Matrix basis_column(FieldSpec f, int dim, int index);

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    Vec col(int j) const;
    void set_col(int j, const Vec& v);
    Matrix cols_subset(const std::vector<int>& indices) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vec operator*(const Vec& v) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    // Kronecker product for the (u,w) -> u*dim(W)+w tensor basis order used
    // throughout: (A (x) B)(u (x) w) = A u (x) B w.
    static Matrix kronecker(const Matrix& a, const Matrix& b);
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix direct_sum(const Matrix& a, const Matrix& b);

    std::string str() const;

  private:
    FieldSpec field_;
    int rows_, cols_;
    std::vector<Scalar> e_;

    void require_same_shape(const Matrix& o) const;
};

// Small vector helpers shared by the structure-constant code.
Vec vec_zero(FieldSpec f, int n);
Vec vec_basis(FieldSpec f, int n, int index);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& a, const Scalar& c);
bool vec_is_zero(const Vec& v);

}  // namespace hopfcat
