#include "tracelab/algebra.hpp"

namespace tracelab {

Algebra::Algebra(FieldSpec field, int dim, std::vector<std::string> basis_names,
                 std::vector<std::vector<Vec>> constants, Vec unit,
                 std::optional<std::vector<Vec>> supplied_radical)
    : field_(field), dim_(dim), names_(std::move(basis_names)), constants_(std::move(constants)),
      unit_(std::move(unit)), supplied_radical_(std::move(supplied_radical)) {
    if (static_cast<int>(names_.size()) != dim_) throw ShapeMismatch("basis_names size");
    if (static_cast<int>(constants_.size()) != dim_) throw ShapeMismatch("structure constants size");
    for (const auto& row : constants_) {
        if (static_cast<int>(row.size()) != dim_) throw ShapeMismatch("structure constants size");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != dim_) throw ShapeMismatch("structure constants size");
    }
    if (static_cast<int>(unit_.size()) != dim_) throw ShapeMismatch("unit size");
    left_mult_.reserve(dim_);
    right_mult_.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
        Matrix l(field_, dim_, dim_), r(field_, dim_, dim_);
        for (int j = 0; j < dim_; ++j) {
            for (int k = 0; k < dim_; ++k) {
                l.at(k, j) = constants_[i][j][k];  // column j = e_i * e_j
                r.at(k, j) = constants_[j][i][k];  // column j = e_j * e_i
            }
        }
        left_mult_.push_back(std::move(l));
        right_mult_.push_back(std::move(r));
    }
    commutative_ = true;
    for (int i = 0; i < dim_ && commutative_; ++i)
        for (int j = i + 1; j < dim_ && commutative_; ++j)
            if (constants_[i][j] != constants_[j][i]) commutative_ = false;
}

Vec Algebra::multiply(const Vec& a, const Vec& b) const {
    if (static_cast<int>(a.size()) != dim_ || static_cast<int>(b.size()) != dim_)
        throw ShapeMismatch("algebra multiply operand size");
    Vec out(dim_, field_.zero());
    for (int i = 0; i < dim_; ++i) {
        if (field_.is_zero(a[i])) continue;
        for (int j = 0; j < dim_; ++j) {
            if (field_.is_zero(b[j])) continue;
            Scalar f = field_.mul(a[i], b[j]);
            const Vec& prod = constants_[i][j];
            for (int k = 0; k < dim_; ++k) {
                if (field_.is_zero(prod[k])) continue;
                out[k] = field_.add(out[k], field_.mul(f, prod[k]));
            }
        }
    }
    return out;
}

Matrix Algebra::left_mult(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (field_.is_zero(x[i])) continue;
        m = m.add(left_mult_[i].scaled(x[i]));
    }
    return m;
}

Matrix Algebra::right_mult(const Vec& x) const {
    Matrix m(field_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        if (field_.is_zero(x[i])) continue;
        m = m.add(right_mult_[i].scaled(x[i]));
    }
    return m;
}

std::string Algebra::element_to_string(const Vec& coords) const {
    std::string s;
    for (int i = 0; i < dim_; ++i) {
        if (field_.is_zero(coords[i])) continue;
        if (!s.empty()) s += " + ";
        if (!field_.is_one(coords[i])) s += field_.to_string(coords[i]) + "*";
        s += names_[i];
    }
    return s.empty() ? "0" : s;
}

bool Algebra::structurally_equal(const Algebra& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && unit_ == o.unit_ && constants_ == o.constants_;
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->structurally_equal(*b);
}

namespace {

// Nilpotency of the span: multiply the span into itself until it stabilizes.
bool span_is_nilpotent(const Algebra& a, const std::vector<Vec>& gens) {
    Subspace power = Subspace::span_of(a.field(), a.dim(), gens);
    Subspace base = power;
    for (int step = 0; step < a.dim() + 1; ++step) {
        if (power.is_zero()) return true;
        std::vector<Vec> next;
        for (int i = 0; i < power.dim(); ++i)
            for (int j = 0; j < base.dim(); ++j)
                next.push_back(a.multiply(power.basis().row(i), base.basis().row(j)));
        Subspace np = Subspace::span_of(a.field(), a.dim(), next);
        if (np == power) return false;  // stabilized without reaching zero
        power = np;
    }
    return power.is_zero();
}

// The trace-form route is only valid over Q or when p exceeds the dimension.
bool trace_form_applicable(const Algebra& a) {
    return !a.field().is_prime_field() || a.field().p() > a.dim();
}

Subspace trace_form_radical(const Algebra& a) {
    const FieldSpec& F = a.field();
    const int n = a.dim();
    // Kernel of the bilinear form (x, y) -> Tr(L_x L_y).
    Matrix gram(F, n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Matrix prod = a.left_mult_basis(i).mul(a.left_mult_basis(j));
            Scalar tr = F.zero();
            for (int k = 0; k < n; ++k) tr = F.add(tr, prod.at(k, k));
            gram.at(i, j) = tr;
        }
    }
    return kernel_basis(gram);
}

Subspace frobenius_radical(const Algebra& a) {
    const FieldSpec& F = a.field();
    const int n = a.dim();
    const std::int64_t p = F.p();
    // x -> x^p is GF(p)-linear on a commutative algebra of characteristic p.
    std::vector<Vec> cols;
    for (int i = 0; i < n; ++i) {
        Vec acc = a.unit();
        Vec base = unit_vec(F, n, i);
        std::int64_t k = p;
        while (k > 0) {
            if (k & 1) acc = a.multiply(acc, base);
            k >>= 1;
            if (k) base = a.multiply(base, base);
        }
        cols.push_back(std::move(acc));
    }
    Matrix frob = Matrix::from_cols(F, cols, n);
    std::int64_t reach = p;
    Matrix power = frob;
    while (reach < n) {
        power = power.mul(frob);
        reach *= p;
    }
    return kernel_basis(power);
}

}  // namespace

std::vector<std::string> validate_algebra(const AlgebraPtr& a) {
    std::vector<std::string> bad;
    const FieldSpec& F = a->field();
    const int n = a->dim();
    for (int i = 0; i < n; ++i) {
        Vec lhs = a->multiply(a->unit(), unit_vec(F, n, i));
        Vec rhs = a->multiply(unit_vec(F, n, i), a->unit());
        if (lhs != unit_vec(F, n, i)) bad.push_back("unit law fails on 1*" + a->basis_names()[i]);
        if (rhs != unit_vec(F, n, i)) bad.push_back("unit law fails on " + a->basis_names()[i] + "*1");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                Vec left = a->multiply(a->product_of_basis(i, j), unit_vec(F, n, k));
                Vec right = a->multiply(unit_vec(F, n, i), a->product_of_basis(j, k));
                if (left != right) {
                    bad.push_back("associativity fails on (" + a->basis_names()[i] + "," +
                                  a->basis_names()[j] + "," + a->basis_names()[k] + ")");
                }
            }
        }
    }
    bool comm = true;
    for (int i = 0; i < n && comm; ++i)
        for (int j = 0; j < n && comm; ++j)
            if (a->product_of_basis(i, j) != a->product_of_basis(j, i)) comm = false;
    if (comm != a->commutative()) bad.push_back("commutativity flag is stale");

    if (a->supplied_radical()) {
        const auto& gens = *a->supplied_radical();
        Subspace span = Subspace::span_of(F, n, gens);
        for (int i = 0; i < span.dim(); ++i) {
            for (int j = 0; j < n; ++j) {
                Vec row = span.basis().row(i);
                if (!span.contains(a->multiply(unit_vec(F, n, j), row)))
                    bad.push_back("supplied radical not a left ideal");
                if (!span.contains(a->multiply(row, unit_vec(F, n, j))))
                    bad.push_back("supplied radical not a right ideal");
            }
        }
        if (bad.empty() && !span_is_nilpotent(*a, gens))
            bad.push_back("supplied radical is not nilpotent");
        if (bad.empty()) {
            QuotientAlgebra q = quotient_algebra(a, span);
            if (trace_form_applicable(*q.quotient) && !trace_form_radical(*q.quotient).is_zero())
                bad.push_back("quotient by supplied radical is not semisimple");
        }
    }
    return bad;
}

AlgebraPtr opposite_algebra(const AlgebraPtr& a) {
    const int n = a->dim();
    std::vector<std::vector<Vec>> c(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) c[i][j] = a->product_of_basis(j, i);
    return std::make_shared<Algebra>(a->field(), n, a->basis_names(), std::move(c), a->unit(),
                                     a->supplied_radical());
}

QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Subspace& ideal,
                                 std::optional<std::vector<Vec>> supplied_radical) {
    const FieldSpec& F = a->field();
    const int n = a->dim();
    if (ideal.ambient_dim() != n) throw AmbientMismatch("quotient_algebra ideal ambient");
    std::vector<int> rep = ideal.complement_columns();
    const int q = static_cast<int>(rep.size());
    auto project = [&](const Vec& v) {
        Vec red = ideal.reduce(v);
        Vec out(q, F.zero());
        for (int t = 0; t < q; ++t) out[t] = red[rep[t]];
        return out;
    };
    std::vector<std::vector<Vec>> c(q, std::vector<Vec>(q));
    std::vector<std::string> names;
    for (int s = 0; s < q; ++s) names.push_back(a->basis_names()[rep[s]] + "~");
    for (int s = 0; s < q; ++s)
        for (int t = 0; t < q; ++t)
            c[s][t] = project(a->multiply(unit_vec(F, n, rep[s]), unit_vec(F, n, rep[t])));
    Matrix proj(F, q, n);
    for (int j = 0; j < n; ++j) {
        Vec pj = project(unit_vec(F, n, j));
        for (int t = 0; t < q; ++t) proj.at(t, j) = pj[t];
    }
    auto alg = std::make_shared<Algebra>(F, q, std::move(names), std::move(c),
                                         project(a->unit()), std::move(supplied_radical));
    return QuotientAlgebra{std::move(alg), std::move(proj), std::move(rep)};
}

Subspace radical_subspace(const AlgebraPtr& a) {
    const FieldSpec& F = a->field();
    if (a->supplied_radical()) {
        return Subspace::span_of(F, a->dim(), *a->supplied_radical());
    }
    if (trace_form_applicable(*a)) {
        return trace_form_radical(*a);
    }
    if (a->commutative()) {
        return frobenius_radical(*a);
    }
    throw RadicalUnsupported("no radical method for noncommutative " + F.describe() +
                             " algebra of dim " + std::to_string(a->dim()) +
                             " in small characteristic; supply one");
}

}  // namespace tracelab
