#include "tracelab/matrix.hpp"

namespace tracelab {

Matrix Matrix::identity(FieldSpec field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vec>& rows, int cols) {
    Matrix m(field, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r) {
        if (static_cast<int>(rows[r].size()) != cols) throw ShapeMismatch("bad row length");
        m.set_row(r, rows[r]);
    }
    return m;
}

Matrix Matrix::from_cols(FieldSpec field, const std::vector<Vec>& cols, int rows) {
    Matrix m(field, rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c) {
        if (static_cast<int>(cols[c].size()) != rows) throw ShapeMismatch("bad column length");
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::row(int r) const {
    return Vec(e_.begin() + static_cast<std::size_t>(r) * cols_,
               e_.begin() + static_cast<std::size_t>(r + 1) * cols_);
}

Vec Matrix::col(int c) const {
    Vec v;
    v.reserve(rows_);
    for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
    return v;
}

void Matrix::set_row(int r, const Vec& v) {
    for (int c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::mul(const Matrix& o) const {
    if (field_ != o.field_) throw FieldMismatch("matrix product across fields");
    if (cols_ != o.rows_) throw ShapeMismatch("matrix product shape");
    Matrix out(field_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (field_.is_zero(a)) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (field_.is_zero(b)) continue;
                out.at(i, j) = field_.add(out.at(i, j), field_.mul(a, b));
            }
        }
    }
    return out;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("matrix-vector shape");
    Vec out(rows_, field_.zero());
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            if (field_.is_zero(at(i, k)) || field_.is_zero(v[k])) continue;
            out[i] = field_.add(out[i], field_.mul(at(i, k), v[k]));
        }
    }
    return out;
}

Matrix Matrix::add(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.add(e_[i], o.e_[i]);
    return out;
}

Matrix Matrix::sub(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix diff shape");
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.sub(e_[i], o.e_[i]);
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(field_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.mul(e_[i], c);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

Matrix Matrix::pow(int k) const {
    if (rows_ != cols_) throw ShapeMismatch("matrix power of non-square matrix");
    Matrix acc = identity(field_, rows_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc.mul(base);
        k >>= 1;
        if (k) base = base.mul(base);
    }
    return acc;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!field_.is_zero(x)) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (r == c ? !field_.is_one(at(r, c)) : !field_.is_zero(at(r, c))) return false;
        }
    return true;
}

std::string Matrix::to_string() const {
    std::string s = "[";
    for (int r = 0; r < rows_; ++r) {
        s += r ? "; " : "";
        for (int c = 0; c < cols_; ++c) s += (c ? "," : "") + field_.to_string(at(r, c));
    }
    return s + "]";
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("hstack rows");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
        for (int c = 0; c < b.cols(); ++c) out.at(r, a.cols() + c) = b.at(r, c);
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw ShapeMismatch("vstack cols");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c) out.at(a.rows() + r, c) = b.at(r, c);
    return out;
}

Vec vec_of(const Matrix& m) { return m.entries(); }

Matrix mat_of(FieldSpec field, const Vec& v, int rows, int cols) {
    if (static_cast<int>(v.size()) != rows * cols) throw ShapeMismatch("mat_of size");
    Matrix m(field, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = v[static_cast<std::size_t>(r) * cols + c];
    return m;
}

Vec zero_vec(FieldSpec field, int n) { return Vec(n, field.zero()); }

Vec unit_vec(FieldSpec field, int n, int i) {
    Vec v(n, field.zero());
    v[i] = field.one();
    return v;
}

bool is_zero_vec(const FieldSpec& field, const Vec& v) {
    for (const auto& x : v)
        if (!field.is_zero(x)) return false;
    return true;
}

Vec add_vec(const FieldSpec& field, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector sum shape");
    Vec out(a.size(), field.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.add(a[i], b[i]);
    return out;
}

Vec sub_vec(const FieldSpec& field, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeMismatch("vector diff shape");
    Vec out(a.size(), field.zero());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = field.sub(a[i], b[i]);
    return out;
}

Vec scale_vec(const FieldSpec& field, const Scalar& c, const Vec& v) {
    Vec out(v.size(), field.zero());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = field.mul(c, v[i]);
    return out;
}

std::string vec_to_string(const FieldSpec& field, const Vec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + field.to_string(v[i]);
    return s + ")";
}

}  // namespace tracelab
