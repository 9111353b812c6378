#include "tracelab/hom.hpp"

#include <random>

namespace tracelab {

std::optional<Vec> HomSpace::coords_of_map(const Matrix& f) const {
    return coords.coords_of(vec_of(f));
}

ModuleMap HomSpace::map_from_coords(const Vec& c) const {
    Vec flat = coords.from_coords(c);
    return ModuleMap(source, target, mat_of(source.algebra()->field(), flat, target.dim(), source.dim()));
}

HomSpace hom_space(const Module& m, const Module& n) {
    require_same_algebra(m, n, "hom_space");
    const FieldSpec& F = m.algebra()->field();
    const int ds = m.dim(), dt = n.dim();
    const int cols = dt * ds;
    // Unknown F (dt x ds), flattened row-major. One constraint per algebra
    // basis element i and position (r, c):
    //   sum_b F[r,b] * act_m(i)[b,c] - sum_a act_n(i)[r,a] * F[a,c] = 0.
    IncrementalRref sys(F, cols);
    for (int i = 0; i < m.algebra()->dim(); ++i) {
        const Matrix& am = m.action_basis(i);
        const Matrix& an = n.action_basis(i);
        for (int r = 0; r < dt; ++r) {
            for (int c = 0; c < ds; ++c) {
                Vec row(cols, F.zero());
                for (int b = 0; b < ds; ++b) {
                    if (!F.is_zero(am.at(b, c)))
                        row[r * ds + b] = F.add(row[r * ds + b], am.at(b, c));
                }
                for (int a = 0; a < dt; ++a) {
                    if (!F.is_zero(an.at(r, a)))
                        row[a * ds + c] = F.sub(row[a * ds + c], an.at(r, a));
                }
                sys.insert(std::move(row));
            }
        }
    }
    Subspace coords = sys.kernel();
    std::vector<ModuleMap> basis;
    basis.reserve(coords.dim());
    for (int r = 0; r < coords.dim(); ++r) {
        basis.emplace_back(m, n, mat_of(F, coords.basis().row(r), dt, ds));
    }
    return HomSpace{m, n, std::move(coords), std::move(basis)};
}

EndAlgebra end_algebra(const Module& m) {
    HomSpace H = hom_space(m, m);
    const FieldSpec& F = m.algebra()->field();
    const int h = H.dim();
    std::vector<std::vector<Vec>> constants(h, std::vector<Vec>(h));
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < h; ++j) {
            auto c = H.coords_of_map(H.basis[i].matrix().mul(H.basis[j].matrix()));
            if (!c) throw InternalError("composition left the End space");
            constants[i][j] = std::move(*c);
        }
    }
    Vec unit;
    if (h > 0) {
        auto u = H.coords_of_map(Matrix::identity(F, m.dim()));
        if (!u) throw InternalError("identity not in End space");
        unit = std::move(*u);
    }
    std::vector<std::string> names;
    for (int i = 0; i < h; ++i) names.push_back("f" + std::to_string(i));
    auto alg = std::make_shared<Algebra>(F, h, std::move(names), std::move(constants), std::move(unit));
    return EndAlgebra{m, std::move(H), std::move(alg)};
}

Submodule image_of_map(const ModuleMap& f) {
    return Submodule(f.target(), Subspace::col_space(f.matrix()));
}

namespace {

Vec random_coords(const FieldSpec& F, int n, std::mt19937_64& rng) {
    Vec c(n, F.zero());
    for (int i = 0; i < n; ++i) {
        if (F.is_prime_field()) {
            c[i] = F.from_int(static_cast<std::int64_t>(rng() % F.p()));
        } else {
            c[i] = F.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
        }
    }
    return c;
}

}  // namespace

IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed, int trials) {
    require_same_algebra(m, n, "is_isomorphic");
    if (m.dim() != n.dim()) return {IsoVerdict::No, std::nullopt, "dimensions differ"};
    if (m.dim() == 0) return {IsoVerdict::Yes, ModuleMap::zero(m, n), "zero modules"};
    if (m.structurally_equal(n)) return {IsoVerdict::Yes, ModuleMap::identity(m), "identical presentation"};

    if (annihilator_ideal(m).space() != annihilator_ideal(n).space())
        return {IsoVerdict::No, std::nullopt, "annihilators differ"};
    try {
        if (socle(m).dim() != socle(n).dim())
            return {IsoVerdict::No, std::nullopt, "socle dimensions differ"};
    } catch (const RadicalUnsupported&) {
        // fall through to the Hom-based invariants
    }
    HomSpace H = hom_space(m, n);
    int de_m = hom_space(m, m).dim();
    int de_n = hom_space(n, n).dim();
    int d_nm = hom_space(n, m).dim();
    if (de_m != de_n || H.dim() != de_m || d_nm != de_m)
        return {IsoVerdict::No, std::nullopt, "Hom dimensions differ"};
    if (H.dim() == 0) return {IsoVerdict::No, std::nullopt, "no nonzero homomorphism"};

    const FieldSpec& F = m.algebra()->field();
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        Vec c = random_coords(F, H.dim(), rng);
        Matrix cand = mat_of(F, H.coords.from_coords(c), n.dim(), m.dim());
        if (rank_of(cand) == m.dim()) {
            return {IsoVerdict::Yes, ModuleMap(m, n, std::move(cand)), "random search"};
        }
    }
    if (F.is_prime_field()) {
        double size = 1;
        for (int i = 0; i < H.dim(); ++i) size *= static_cast<double>(F.p());
        if (size <= 65536.0) {
            long long total = static_cast<long long>(size);
            for (long long code = 1; code < total; ++code) {
                Vec c(H.dim(), F.zero());
                long long x = code;
                for (int i = 0; i < H.dim(); ++i) {
                    c[i] = F.from_int(x % F.p());
                    x /= F.p();
                }
                Matrix cand = mat_of(F, H.coords.from_coords(c), n.dim(), m.dim());
                if (rank_of(cand) == m.dim()) {
                    return {IsoVerdict::Yes, ModuleMap(m, n, std::move(cand)), "exhaustive search"};
                }
            }
            return {IsoVerdict::No, std::nullopt, "Hom space exhausted, no invertible element"};
        }
    }
    return {IsoVerdict::ProbablyNo, std::nullopt, "sampling found no invertible element"};
}

Module free_module(const AlgebraPtr& a, int copies) {
    const FieldSpec& F = a->field();
    const int n = a->dim();
    std::vector<Matrix> action;
    for (int i = 0; i < n; ++i) {
        Matrix block(F, n * copies, n * copies);
        for (int c = 0; c < copies; ++c)
            for (int r = 0; r < n; ++r)
                for (int s = 0; s < n; ++s) block.at(c * n + r, c * n + s) = a->left_mult_basis(i).at(r, s);
        action.push_back(std::move(block));
    }
    if (copies == 0) {
        action.assign(n, Matrix(F, 0, 0));
    }
    return Module(a, std::move(action));
}

namespace {

// Greedy generating set: walk the candidate vectors in order and keep those
// not already inside the generated submodule.
std::vector<Vec> greedy_generators(const Module& m, const std::vector<Vec>& candidates) {
    std::vector<Vec> gens;
    Subspace span = Subspace::zero(m.algebra()->field(), m.dim());
    for (const Vec& v : candidates) {
        if (span.contains(v)) continue;
        gens.push_back(v);
        std::vector<Vec> all = gens;
        span = submodule_generated(m, all).space();
        if (span.is_full()) break;
    }
    return gens;
}

// The covering map A^g -> m determined by a list of generators: the basis
// vector e_j of copy i goes to e_j * gens[i].
ModuleMap covering_map(const Module& f0, const Module& m, const std::vector<Vec>& gens) {
    const FieldSpec& F = m.algebra()->field();
    const int n = m.algebra()->dim();
    Matrix d(F, m.dim(), n * static_cast<int>(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (int j = 0; j < n; ++j) {
            Vec img = m.action_basis(j).apply(gens[i]);
            for (int r = 0; r < m.dim(); ++r) d.at(r, static_cast<int>(i) * n + j) = img[r];
        }
    }
    return ModuleMap(f0, m, std::move(d));
}

std::vector<Vec> kernel_generators(const Module& f0, const ModuleMap& d0, bool reverse) {
    Subspace ker = kernel_basis(d0.matrix());
    std::vector<Vec> rows;
    for (int r = 0; r < ker.dim(); ++r) rows.push_back(ker.basis().row(r));
    if (reverse) std::reverse(rows.begin(), rows.end());
    // Greedy against the submodule generated inside F0.
    std::vector<Vec> gens;
    Subspace span = Subspace::zero(f0.algebra()->field(), f0.dim());
    for (const Vec& v : rows) {
        if (span.contains(v)) continue;
        gens.push_back(v);
        span = submodule_generated(f0, gens).space();
    }
    return gens;
}

}  // namespace

FreePresentation free_presentation(const Module& m, bool reverse_generator_order) {
    const FieldSpec& F = m.algebra()->field();
    std::vector<Vec> candidates;
    for (int j = 0; j < m.dim(); ++j) {
        int idx = reverse_generator_order ? m.dim() - 1 - j : j;
        candidates.push_back(unit_vec(F, m.dim(), idx));
    }
    std::vector<Vec> gens0 = greedy_generators(m, candidates);
    Module f0 = free_module(m.algebra(), static_cast<int>(gens0.size()));
    ModuleMap d0 = gens0.empty() ? ModuleMap::zero(f0, m) : covering_map(f0, m, gens0);
    std::vector<Vec> gens1 = kernel_generators(f0, d0, reverse_generator_order);
    Module f1 = free_module(m.algebra(), static_cast<int>(gens1.size()));
    ModuleMap d1 = gens1.empty() ? ModuleMap::zero(f1, f0) : covering_map(f1, f0, gens1);
    if (!compose(d0, d1).matrix().is_zero()) throw InternalError("presentation composite is nonzero");
    if (Subspace::col_space(d1.matrix()) != kernel_basis(d0.matrix()))
        throw InternalError("presentation is not exact at F0");
    return FreePresentation{std::move(f0), std::move(f1), std::move(d0), std::move(d1),
                            std::move(gens0), std::move(gens1)};
}

namespace {

// Blocks of a vector in A^g, each block read as an algebra element.
std::vector<Vec> algebra_blocks(const AlgebraPtr& a, const Vec& v) {
    const std::size_t n = static_cast<std::size_t>(a->dim());
    std::vector<Vec> blocks;
    if (n == 0) return blocks;
    for (std::size_t off = 0; off + n <= v.size(); off += n)
        blocks.emplace_back(v.begin() + off, v.begin() + off + n);
    return blocks;
}

// Hom(A^g, n) ~ n^g by evaluating at the unit generators. The map induced by
// d : A^{g'} -> A^g (given by the generator images) is the block matrix of
// action_n over the algebra coefficients of d.
Matrix induced_hom_matrix(const Module& n, const std::vector<Vec>& generator_images, int g_from) {
    const FieldSpec& F = n.algebra()->field();
    const int dn = n.dim();
    const int g_to = static_cast<int>(generator_images.size());
    Matrix out(F, g_to * dn, g_from * dn);
    for (int j = 0; j < g_to; ++j) {
        std::vector<Vec> blocks = algebra_blocks(n.algebra(), generator_images[j]);
        for (int i = 0; i < g_from; ++i) {
            Matrix act = n.action_of(blocks[i]);
            for (int r = 0; r < dn; ++r)
                for (int c = 0; c < dn; ++c) out.at(j * dn + r, i * dn + c) = act.at(r, c);
        }
    }
    return out;
}

// Rebuild the full map F1 -> n from the images of the unit generators.
ModuleMap hom_from_generator_images(const Module& f1, const Module& n, const Vec& images) {
    const FieldSpec& F = n.algebra()->field();
    const int na = n.algebra()->dim();
    const int g = na == 0 ? 0 : f1.dim() / na;
    Matrix mat(F, n.dim(), f1.dim());
    for (int j = 0; j < g; ++j) {
        Vec vj(images.begin() + static_cast<std::size_t>(j) * n.dim(),
               images.begin() + static_cast<std::size_t>(j + 1) * n.dim());
        for (int k = 0; k < na; ++k) {
            Vec col = n.action_basis(k).apply(vj);
            for (int r = 0; r < n.dim(); ++r) mat.at(r, j * na + k) = col[r];
        }
    }
    return ModuleMap(f1, n, std::move(mat));
}

}  // namespace

Ext1Result ext1(const Module& m, const Module& n, bool reverse_generator_order) {
    require_same_algebra(m, n, "ext1");
    FreePresentation fp = free_presentation(m, reverse_generator_order);
    std::vector<Vec> gens2 = kernel_generators(fp.f1, fp.d1, reverse_generator_order);
    const int g0 = static_cast<int>(fp.generators0.size());
    const int g1 = static_cast<int>(fp.generators1.size());
    Matrix m10 = induced_hom_matrix(n, fp.generators1, g0);   // Hom(F0,n) -> Hom(F1,n)
    Matrix m21 = induced_hom_matrix(n, gens2, g1);            // Hom(F1,n) -> Hom(F2,n)
    if (!m21.mul(m10).is_zero()) throw InternalError("Hom complex is not a complex");
    Subspace cocycles = kernel_basis(m21);
    Subspace coboundaries = Subspace::col_space(m10);
    if (!cocycles.contains(coboundaries)) throw InternalError("coboundaries escape cocycles");
    int dim = cocycles.dim() - coboundaries.dim();
    // Representatives: cocycle basis vectors reduced modulo the coboundaries.
    std::vector<ModuleMap> reps;
    std::vector<Vec> kept;
    const FieldSpec& F = n.algebra()->field();
    for (int r = 0; r < cocycles.dim() && static_cast<int>(kept.size()) < dim; ++r) {
        Vec red = coboundaries.reduce(cocycles.basis().row(r));
        if (is_zero_vec(F, red)) continue;
        Subspace before = Subspace::span_of(F, static_cast<int>(red.size()), kept);
        if (before.contains(red)) continue;
        kept.push_back(red);
        reps.push_back(hom_from_generator_images(fp.f1, n, red));
    }
    if (static_cast<int>(kept.size()) != dim) throw InternalError("cocycle representative count");
    return Ext1Result{dim, fp.f1, std::move(reps)};
}

HomModule hom_as_module(const Module& m, const Module& x) {
    require_same_algebra(m, x, "hom_as_module");
    if (!m.algebra()->commutative()) throw NotCommutative("hom_as_module needs a commutative algebra");
    HomSpace H = hom_space(m, x);
    const FieldSpec& F = m.algebra()->field();
    const int h = H.dim();
    std::vector<Matrix> action;
    for (int i = 0; i < m.algebra()->dim(); ++i) {
        Matrix a(F, h, h);
        for (int j = 0; j < h; ++j) {
            Matrix composed = x.action_basis(i).mul(H.basis[j].matrix());
            auto c = H.coords_of_map(composed);
            if (!c) throw InternalError("scalar action left the Hom space");
            for (int r = 0; r < h; ++r) a.at(r, j) = (*c)[r];
        }
        action.push_back(std::move(a));
    }
    return HomModule{Module(m.algebra(), std::move(action)), std::move(H)};
}

EvalResult evaluation_map(const Module& m, const Module& x) {
    HomModule dual = hom_as_module(m, x);
    HomModule bidual = hom_as_module(dual.module, x);
    const FieldSpec& F = m.algebra()->field();
    const int h1 = dual.hom.dim();
    Matrix eval(F, bidual.hom.dim(), m.dim());
    for (int c = 0; c < m.dim(); ++c) {
        // ev_c : coordinates w.r.t. the Hom(m,x) basis |-> f(e_c), i.e. the
        // matrix whose j-th column is column c of the j-th basis map.
        Matrix phi(F, x.dim(), h1);
        for (int j = 0; j < h1; ++j)
            for (int r = 0; r < x.dim(); ++r) phi.at(r, j) = dual.hom.basis[j].matrix().at(r, c);
        auto coords = bidual.hom.coords_of_map(phi);
        if (!coords) throw InternalError("evaluation image is not an intertwiner");
        for (int r = 0; r < bidual.hom.dim(); ++r) eval.at(r, c) = (*coords)[r];
    }
    ModuleMap e(m, bidual.module, std::move(eval));
    return EvalResult{std::move(e), std::move(dual), std::move(bidual)};
}

ModuleMap hom_dual_map(const ModuleMap& g, const HomModule& of_target, const HomModule& of_source) {
    const FieldSpec& F = g.source().algebra()->field();
    Matrix out(F, of_source.hom.dim(), of_target.hom.dim());
    for (int j = 0; j < of_target.hom.dim(); ++j) {
        Matrix composed = of_target.hom.basis[j].matrix().mul(g.matrix());
        auto c = of_source.hom.coords_of_map(composed);
        if (!c) throw InternalError("precomposition left the Hom space");
        for (int r = 0; r < of_source.hom.dim(); ++r) out.at(r, j) = (*c)[r];
    }
    return ModuleMap(of_target.module, of_source.module, std::move(out));
}

}  // namespace tracelab
