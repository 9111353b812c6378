#pragma once

#include <vector>

#include "tracelab/field.hpp"

namespace tracelab {

using Vec = std::vector<Scalar>;

// Dense row-major matrix over a fixed field. Dimensions of 0 are allowed and
// behave as the corresponding empty linear maps.
class Matrix {
  public:
    Matrix(FieldSpec field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * cols, field.zero()) {}

    static Matrix identity(FieldSpec field, int n);
    static Matrix from_rows(FieldSpec field, const std::vector<Vec>& rows, int cols);
    static Matrix from_cols(FieldSpec field, const std::vector<Vec>& cols, int rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * cols_ + c]; }

    const Vec& entries() const { return e_; }

    Vec row(int r) const;
    Vec col(int c) const;
    void set_row(int r, const Vec& v);

    Matrix mul(const Matrix& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Matrix pow(int k) const;  // square matrices

    bool is_zero() const;
    bool is_identity() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    FieldSpec field_;
    int rows_, cols_;
    Vec e_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

// Row-major flattening of a matrix, and its inverse.
Vec vec_of(const Matrix& m);
Matrix mat_of(FieldSpec field, const Vec& v, int rows, int cols);

Vec zero_vec(FieldSpec field, int n);
Vec unit_vec(FieldSpec field, int n, int i);
bool is_zero_vec(const FieldSpec& field, const Vec& v);
Vec add_vec(const FieldSpec& field, const Vec& a, const Vec& b);
Vec sub_vec(const FieldSpec& field, const Vec& a, const Vec& b);
Vec scale_vec(const FieldSpec& field, const Scalar& c, const Vec& v);
std::string vec_to_string(const FieldSpec& field, const Vec& v);

}  // namespace tracelab
