#include "tracelab/module.hpp"

#include <set>

namespace tracelab {

Module::Module(AlgebraPtr algebra, std::vector<Matrix> action) {
    if (!algebra) throw Error("module needs an algebra");
    if (static_cast<int>(action.size()) != algebra->dim())
        throw ShapeMismatch("one action matrix per algebra basis element required");
    int d = action.empty() ? 0 : action[0].rows();
    for (const auto& a : action) {
        if (a.rows() != d || a.cols() != d) throw ShapeMismatch("action matrices must be square of equal size");
        if (a.field() != algebra->field()) throw FieldMismatch("action over wrong field");
    }
    if (algebra->dim() == 0) d = 0;
    impl_ = std::make_shared<Impl>(Impl{std::move(algebra), d, std::move(action)});
}

Module Module::zero(AlgebraPtr algebra) {
    std::vector<Matrix> action(algebra->dim(), Matrix(algebra->field(), 0, 0));
    return Module(std::move(algebra), std::move(action));
}

Matrix Module::action_of(const Vec& coords) const {
    const FieldSpec& F = algebra()->field();
    Matrix out(F, dim(), dim());
    for (int i = 0; i < algebra()->dim(); ++i) {
        if (F.is_zero(coords[i])) continue;
        out = out.add(action_basis(i).scaled(coords[i]));
    }
    return out;
}

std::vector<std::string> validate_module(const Module& m) {
    std::vector<std::string> bad;
    const AlgebraPtr& A = m.algebra();
    if (!m.action_of(A->unit()).is_identity()) bad.push_back("action of 1 is not the identity");
    for (int i = 0; i < A->dim(); ++i) {
        for (int j = 0; j < A->dim(); ++j) {
            Matrix lhs = m.action_basis(i).mul(m.action_basis(j));
            if (lhs != m.action_of(A->product_of_basis(i, j)))
                bad.push_back("action not multiplicative on (" + A->basis_names()[i] + "," +
                              A->basis_names()[j] + ")");
        }
    }
    return bad;
}

void require_same_algebra(const Module& a, const Module& b, const char* what) {
    if (!same_algebra(a.algebra(), b.algebra()))
        throw AlgebraMismatch(std::string(what) + ": modules over different algebras");
}

ModuleMap::ModuleMap(Module source, Module target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), mat_(std::move(matrix)) {
    require_same_algebra(source_, target_, "ModuleMap");
    if (mat_.rows() != target_.dim() || mat_.cols() != source_.dim())
        throw ShapeMismatch("ModuleMap matrix shape");
    const AlgebraPtr& A = source_.algebra();
    for (int i = 0; i < A->dim(); ++i) {
        if (mat_.mul(source_.action_basis(i)) != target_.action_basis(i).mul(mat_))
            throw InternalError("matrix does not intertwine the actions (basis element " +
                                A->basis_names()[i] + ")");
    }
}

ModuleMap ModuleMap::zero(const Module& source, const Module& target) {
    return ModuleMap(source, target, Matrix(source.algebra()->field(), target.dim(), source.dim()));
}

ModuleMap ModuleMap::identity(const Module& m) {
    return ModuleMap(m, m, Matrix::identity(m.algebra()->field(), m.dim()));
}

bool ModuleMap::is_injective() const { return rank_of(mat_) == source_.dim(); }
bool ModuleMap::is_surjective() const { return rank_of(mat_) == target_.dim(); }
bool ModuleMap::is_invertible() const { return source_.dim() == target_.dim() && is_injective(); }

ModuleMap ModuleMap::inverse() const {
    auto inv = tracelab::inverse(mat_);
    if (!inv) throw Error("module map is not invertible");
    return ModuleMap(target_, source_, *inv);
}

ModuleMap ModuleMap::scaled(const Scalar& c) const {
    return ModuleMap(source_, target_, mat_.scaled(c));
}

ModuleMap ModuleMap::plus(const ModuleMap& o) const {
    return ModuleMap(source_, target_, mat_.add(o.mat_));
}

ModuleMap compose(const ModuleMap& f, const ModuleMap& g) {
    if (!same_algebra(f.source().algebra(), g.target().algebra()) ||
        f.source().dim() != g.target().dim())
        throw ShapeMismatch("compose: inner modules differ");
    return ModuleMap(g.source(), f.target(), f.matrix().mul(g.matrix()));
}

Submodule::Submodule(Module ambient, Subspace space)
    : ambient_(std::move(ambient)), space_(std::move(space)) {
    if (space_.ambient_dim() != ambient_.dim()) throw AmbientMismatch("Submodule ambient dim");
    for (int i = 0; i < ambient_.algebra()->dim(); ++i) {
        for (int r = 0; r < space_.dim(); ++r) {
            if (!space_.contains(ambient_.action_basis(i).apply(space_.basis().row(r))))
                throw NotSubmodule("subspace is not action-invariant");
        }
    }
}

Submodule Submodule::zero(const Module& ambient) {
    return Submodule(ambient, Subspace::zero(ambient.algebra()->field(), ambient.dim()));
}

Submodule Submodule::whole(const Module& ambient) {
    return Submodule(ambient, Subspace::full(ambient.algebra()->field(), ambient.dim()));
}

Submodule::AsModule Submodule::as_module() const {
    const FieldSpec& F = ambient_.algebra()->field();
    const int d = dim();
    std::vector<Matrix> action;
    for (int i = 0; i < ambient_.algebra()->dim(); ++i) {
        Matrix a(F, d, d);
        for (int c = 0; c < d; ++c) {
            Vec img = ambient_.action_basis(i).apply(space_.basis().row(c));
            auto coords = space_.coords_of(img);
            if (!coords) throw InternalError("submodule lost invariance");
            for (int r = 0; r < d; ++r) a.at(r, c) = (*coords)[r];
        }
        action.push_back(std::move(a));
    }
    Module mod(ambient_.algebra(), std::move(action));
    Matrix incl = space_.basis().transpose();  // ambient coords of each basis vector
    return AsModule{mod, ModuleMap(mod, ambient_, std::move(incl))};
}

Module regular_module(const AlgebraPtr& a) {
    std::vector<Matrix> action;
    for (int i = 0; i < a->dim(); ++i) action.push_back(a->left_mult_basis(i));
    return Module(a, std::move(action));
}

DirectSum direct_sum(const Module& m, const Module& n) {
    require_same_algebra(m, n, "direct_sum");
    const FieldSpec& F = m.algebra()->field();
    const int dm = m.dim(), dn = n.dim();
    std::vector<Matrix> action;
    for (int i = 0; i < m.algebra()->dim(); ++i) {
        Matrix block(F, dm + dn, dm + dn);
        for (int r = 0; r < dm; ++r)
            for (int c = 0; c < dm; ++c) block.at(r, c) = m.action_basis(i).at(r, c);
        for (int r = 0; r < dn; ++r)
            for (int c = 0; c < dn; ++c) block.at(dm + r, dm + c) = n.action_basis(i).at(r, c);
        action.push_back(std::move(block));
    }
    Module sum(m.algebra(), std::move(action));
    Matrix il(F, dm + dn, dm), ir(F, dm + dn, dn), pl(F, dm, dm + dn), pr(F, dn, dm + dn);
    for (int i = 0; i < dm; ++i) {
        il.at(i, i) = F.one();
        pl.at(i, i) = F.one();
    }
    for (int i = 0; i < dn; ++i) {
        ir.at(dm + i, i) = F.one();
        pr.at(i, dm + i) = F.one();
    }
    return DirectSum{sum, ModuleMap(m, sum, std::move(il)), ModuleMap(n, sum, std::move(ir)),
                     ModuleMap(sum, m, std::move(pl)), ModuleMap(sum, n, std::move(pr))};
}

Submodule submodule_generated(const Module& x, const std::vector<Vec>& vectors) {
    const FieldSpec& F = x.algebra()->field();
    Subspace span = Subspace::span_of(F, x.dim(), vectors);
    for (;;) {
        std::vector<Vec> rows;
        for (int r = 0; r < span.dim(); ++r) rows.push_back(span.basis().row(r));
        std::size_t base = rows.size();
        for (int i = 0; i < x.algebra()->dim(); ++i)
            for (std::size_t r = 0; r < base; ++r)
                rows.push_back(x.action_basis(i).apply(rows[r]));
        Subspace next = Subspace::span_of(F, x.dim(), rows);
        if (next == span) break;
        span = next;
    }
    return Submodule(x, span);
}

Quotient quotient_module(const Module& x, const Submodule& s) {
    if (!x.structurally_equal(s.ambient())) throw NotSubmodule("quotient: submodule of a different module");
    const FieldSpec& F = x.algebra()->field();
    const Subspace& sp = s.space();
    std::vector<int> rep = sp.complement_columns();
    const int q = static_cast<int>(rep.size());
    auto project = [&](const Vec& v) {
        Vec red = sp.reduce(v);
        Vec out(q, F.zero());
        for (int t = 0; t < q; ++t) out[t] = red[rep[t]];
        return out;
    };
    std::vector<Matrix> action;
    for (int i = 0; i < x.algebra()->dim(); ++i) {
        Matrix a(F, q, q);
        for (int c = 0; c < q; ++c) {
            Vec img = project(x.action_basis(i).apply(unit_vec(F, x.dim(), rep[c])));
            for (int r = 0; r < q; ++r) a.at(r, c) = img[r];
        }
        action.push_back(std::move(a));
    }
    Module quot(x.algebra(), std::move(action));
    Matrix proj(F, q, x.dim());
    for (int j = 0; j < x.dim(); ++j) {
        Vec pj = project(unit_vec(F, x.dim(), j));
        for (int t = 0; t < q; ++t) proj.at(t, j) = pj[t];
    }
    ModuleMap pmap(x, quot, std::move(proj));
    if (kernel_basis(pmap.matrix()) != sp) throw InternalError("quotient kernel mismatch");
    return Quotient{std::move(quot), std::move(pmap)};
}

Submodule radical_ideal(const AlgebraPtr& a) {
    return Submodule(regular_module(a), radical_subspace(a));
}

Submodule socle(const Module& m) {
    Subspace rad = radical_subspace(m.algebra());
    const FieldSpec& F = m.algebra()->field();
    if (rad.is_zero()) return Submodule::whole(m);
    IncrementalRref sys(F, m.dim());
    for (int r = 0; r < rad.dim(); ++r) {
        Matrix act = m.action_of(rad.basis().row(r));
        for (int i = 0; i < act.rows(); ++i) sys.insert(act.row(i));
    }
    return Submodule(m, sys.kernel());
}

Module dual_module(const Module& m, const AlgebraPtr& rebind) {
    AlgebraPtr op = opposite_algebra(m.algebra());
    if (rebind) {
        if (!rebind->structurally_equal(*op)) throw AlgebraMismatch("dual_module rebind mismatch");
        op = rebind;
    }
    std::vector<Matrix> action;
    for (int i = 0; i < op->dim(); ++i) action.push_back(m.action_basis(i).transpose());
    return Module(op, std::move(action));
}

std::vector<Submodule> enumerate_submodules(const Module& m, long long cap) {
    const FieldSpec& F = m.algebra()->field();
    if (!F.is_prime_field()) throw FieldNotFinite("submodule enumeration needs a finite field");
    const int d = m.dim();
    // Cyclic generators: one submodule per nonzero coordinate vector.
    std::vector<Subspace> cyclic;
    std::set<Subspace> seen;
    long long total = 1;
    for (int i = 0; i < d; ++i) {
        total *= F.p();
        if (total > (1LL << 40)) throw EnumOverflow(cap);  // vector space itself too large
    }
    for (long long code = 1; code < total; ++code) {
        Vec v(d, F.zero());
        long long c = code;
        for (int i = 0; i < d; ++i) {
            v[i] = F.from_int(c % F.p());
            c /= F.p();
        }
        Subspace s = submodule_generated(m, {v}).space();
        if (seen.insert(s).second) cyclic.push_back(s);
    }
    std::set<Subspace> all(seen.begin(), seen.end());
    all.insert(Subspace::zero(F, d));
    if (static_cast<long long>(all.size()) > cap) throw EnumOverflow(cap);
    // Close under sums with cyclic generators; every submodule is such a sum.
    std::vector<Subspace> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const Subspace& s : frontier) {
            for (const Subspace& c : cyclic) {
                if (s.contains(c)) continue;
                Subspace sum = subspace_sum_intersect(s, c).sum;
                if (all.insert(sum).second) {
                    if (static_cast<long long>(all.size()) > cap) throw EnumOverflow(cap);
                    next.push_back(std::move(sum));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Submodule> out;
    out.reserve(all.size());
    for (const Subspace& s : all) out.emplace_back(m, s);
    return out;
}

Submodule annihilator_ideal(const Module& m) {
    const AlgebraPtr& A = m.algebra();
    const FieldSpec& F = A->field();
    std::vector<Vec> cols;
    for (int i = 0; i < A->dim(); ++i) cols.push_back(vec_of(m.action_basis(i)));
    Matrix rep = Matrix::from_cols(F, cols, m.dim() * m.dim());
    return Submodule(regular_module(A), kernel_basis(rep));
}

}  // namespace tracelab
