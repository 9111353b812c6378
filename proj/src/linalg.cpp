#include "tracelab/linalg.hpp"

#include <algorithm>

namespace tracelab {

RrefResult rref(const Matrix& m) {
    const FieldSpec& F = m.field();
    Matrix a = m;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pr = -1;
        for (int i = r; i < a.rows(); ++i) {
            if (!F.is_zero(a.at(i, c))) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != r) {
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
        }
        if (!F.is_one(a.at(r, c))) {
            Scalar inv = F.inv(a.at(r, c));
            for (int j = c; j < a.cols(); ++j) a.at(r, j) = F.mul(a.at(r, j), inv);
        }
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || F.is_zero(a.at(i, c))) continue;
            Scalar f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j) {
                if (F.is_zero(a.at(r, j))) continue;
                a.at(i, j) = F.sub(a.at(i, j), F.mul(f, a.at(r, j)));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return RrefResult{std::move(a), std::move(pivots), r};
}

int rank_of(const Matrix& m) { return rref(m).rank; }

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw ShapeMismatch("solve_linear shape");
    const FieldSpec& F = a.field();
    Matrix aug = hstack(a, Matrix::from_cols(F, {b}, a.rows()));
    RrefResult rd = rref(aug);
    for (int i = 0; i < rd.rank; ++i) {
        if (rd.pivot_columns[i] == a.cols()) return std::nullopt;  // pivot in RHS column
    }
    Vec x(a.cols(), F.zero());
    for (int i = 0; i < rd.rank; ++i) {
        x[rd.pivot_columns[i]] = rd.reduced.at(i, a.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const int n = m.rows();
    RrefResult rd = rref(hstack(m, Matrix::identity(m.field(), n)));
    if (rd.rank != n || (n > 0 && rd.pivot_columns[n - 1] != n - 1)) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = rd.reduced.at(r, n + c);
    return inv;
}

Subspace Subspace::zero(FieldSpec field, int ambient_dim) {
    return Subspace(ambient_dim, Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(FieldSpec field, int ambient_dim) {
    std::vector<int> piv(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i) piv[i] = i;
    return Subspace(ambient_dim, Matrix::identity(field, ambient_dim), std::move(piv));
}

Subspace Subspace::row_space(const Matrix& m) {
    RrefResult rd = rref(m);
    Matrix basis(m.field(), rd.rank, m.cols());
    for (int r = 0; r < rd.rank; ++r) basis.set_row(r, rd.reduced.row(r));
    return Subspace(m.cols(), std::move(basis), std::move(rd.pivot_columns));
}

Subspace Subspace::col_space(const Matrix& m) { return row_space(m.transpose()); }

Subspace Subspace::span_of(FieldSpec field, int ambient_dim, const std::vector<Vec>& vectors) {
    return row_space(Matrix::from_rows(field, vectors, ambient_dim));
}

Vec Subspace::reduce(const Vec& v) const {
    if (static_cast<int>(v.size()) != ambient_) throw AmbientMismatch("reduce: wrong length");
    const FieldSpec& F = field();
    Vec w = v;
    for (int r = 0; r < dim(); ++r) {
        const Scalar c = w[pivots_[r]];  // copy: the loop below overwrites w[pivot]
        if (F.is_zero(c)) continue;
        for (int j = pivots_[r]; j < ambient_; ++j) {
            if (F.is_zero(basis_.at(r, j))) continue;
            w[j] = F.sub(w[j], F.mul(c, basis_.at(r, j)));
        }
    }
    return w;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(field(), reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw AmbientMismatch("contains: ambient dims differ");
    for (int r = 0; r < other.dim(); ++r) {
        if (!contains(other.basis_.row(r))) return false;
    }
    return true;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
    if (!contains(v)) return std::nullopt;
    Vec c(dim(), field().zero());
    for (int r = 0; r < dim(); ++r) c[r] = v[pivots_[r]];
    return c;
}

Vec Subspace::from_coords(const Vec& coords) const {
    if (static_cast<int>(coords.size()) != dim()) throw ShapeMismatch("from_coords length");
    Vec v(ambient_, field().zero());
    for (int r = 0; r < dim(); ++r) {
        if (field().is_zero(coords[r])) continue;
        for (int j = 0; j < ambient_; ++j)
            v[j] = field().add(v[j], field().mul(coords[r], basis_.at(r, j)));
    }
    return v;
}

std::vector<int> Subspace::complement_columns() const {
    std::vector<int> comp;
    std::size_t k = 0;
    for (int c = 0; c < ambient_; ++c) {
        if (k < pivots_.size() && pivots_[k] == c) {
            ++k;
        } else {
            comp.push_back(c);
        }
    }
    return comp;
}

bool Subspace::operator<(const Subspace& o) const {
    if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
    if (dim() != o.dim()) return dim() < o.dim();
    const auto& a = basis_.entries();
    const auto& b = o.basis_.entries();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::string Subspace::to_string() const {
    return "span" + basis_.to_string();
}

SumIntersect subspace_sum_intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw AmbientMismatch("sum/intersect ambient dims");
    if (u.field() != v.field()) throw FieldMismatch("sum/intersect fields");
    const FieldSpec& F = u.field();
    const int n = u.ambient_dim();
    // Zassenhaus block matrix [[U, U], [V, 0]].
    Matrix block(F, u.dim() + v.dim(), 2 * n);
    for (int r = 0; r < u.dim(); ++r)
        for (int c = 0; c < n; ++c) {
            block.at(r, c) = u.basis().at(r, c);
            block.at(r, n + c) = u.basis().at(r, c);
        }
    for (int r = 0; r < v.dim(); ++r)
        for (int c = 0; c < n; ++c) block.at(u.dim() + r, c) = v.basis().at(r, c);
    RrefResult rd = rref(block);
    std::vector<Vec> sum_rows, int_rows;
    for (int r = 0; r < rd.rank; ++r) {
        Vec left(rd.reduced.entries().begin() + static_cast<std::size_t>(r) * 2 * n,
                 rd.reduced.entries().begin() + static_cast<std::size_t>(r) * 2 * n + n);
        if (is_zero_vec(F, left)) {
            Vec right(rd.reduced.entries().begin() + static_cast<std::size_t>(r) * 2 * n + n,
                      rd.reduced.entries().begin() + static_cast<std::size_t>(r + 1) * 2 * n);
            int_rows.push_back(std::move(right));
        } else {
            sum_rows.push_back(std::move(left));
        }
    }
    return SumIntersect{Subspace::span_of(F, n, sum_rows), Subspace::span_of(F, n, int_rows)};
}

SubspaceRelation subspace_compare(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw AmbientMismatch("compare ambient dims");
    if (u.field() != v.field()) throw FieldMismatch("compare fields");
    bool uv = v.contains(u);
    bool vu = u.contains(v);
    if (uv && vu) return SubspaceRelation::Equal;
    if (uv) return SubspaceRelation::UInsideV;
    if (vu) return SubspaceRelation::VInsideU;
    return SubspaceRelation::Incomparable;
}

Subspace kernel_basis(const Matrix& m) {
    const FieldSpec& F = m.field();
    RrefResult rd = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : rd.pivot_columns) is_pivot[p] = true;
    std::vector<Vec> rows;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        Vec x(m.cols(), F.zero());
        x[c] = F.one();
        for (int r = 0; r < rd.rank; ++r) {
            x[rd.pivot_columns[r]] = F.neg(rd.reduced.at(r, c));
        }
        rows.push_back(std::move(x));
    }
    return Subspace::span_of(F, m.cols(), rows);
}

bool IncrementalRref::insert(Vec row) {
    if (static_cast<int>(row.size()) != cols_) throw ShapeMismatch("IncrementalRref row length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = row[pivots_[r]];
        if (field_.is_zero(c)) continue;
        for (int j = pivots_[r]; j < cols_; ++j) {
            if (field_.is_zero(rows_[r][j])) continue;
            row[j] = field_.sub(row[j], field_.mul(c, rows_[r][j]));
        }
    }
    int piv = -1;
    for (int j = 0; j < cols_; ++j) {
        if (!field_.is_zero(row[j])) {
            piv = j;
            break;
        }
    }
    if (piv < 0) return false;
    if (!field_.is_one(row[piv])) {
        Scalar inv = field_.inv(row[piv]);
        for (int j = piv; j < cols_; ++j) row[j] = field_.mul(row[j], inv);
    }
    // Back-eliminate the new pivot column from the stored rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = rows_[r][piv];
        if (field_.is_zero(c)) continue;
        for (int j = piv; j < cols_; ++j) {
            if (field_.is_zero(row[j])) continue;
            rows_[r][j] = field_.sub(rows_[r][j], field_.mul(c, row[j]));
        }
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, piv);
    rows_.insert(rows_.begin() + idx, std::move(row));
    return true;
}

Matrix IncrementalRref::to_matrix() const {
    Matrix m(field_, rank(), cols_);
    for (int r = 0; r < rank(); ++r) m.set_row(r, rows_[r]);
    return m;
}

Subspace IncrementalRref::kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<Vec> out;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        Vec x(cols_, field_.zero());
        x[c] = field_.one();
        for (std::size_t r = 0; r < rows_.size(); ++r) x[pivots_[r]] = field_.neg(rows_[r][c]);
        out.push_back(std::move(x));
    }
    return Subspace::span_of(field_, cols_, out);
}

}  // namespace tracelab
