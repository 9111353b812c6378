#pragma once

#include "tracelab/module.hpp"

namespace tracelab {

// Basis of the space of all module maps source -> target: the kernel of the
// stacked intertwining system, with the canonical RREF coordinates on
// vec(target.dim x source.dim).
struct HomSpace {
    Module source, target;
    Subspace coords;
    std::vector<ModuleMap> basis;

    int dim() const { return coords.dim(); }
    // Coordinates of an intertwiner in this basis; nullopt when the matrix
    // does not lie in the span.
    std::optional<Vec> coords_of_map(const Matrix& f) const;
    ModuleMap map_from_coords(const Vec& c) const;
};

HomSpace hom_space(const Module& m, const Module& n);

// Hom(m, m) with composition structure constants, packaged as an Algebra.
struct EndAlgebra {
    Module module;
    HomSpace underlying;
    AlgebraPtr algebra;
};

EndAlgebra end_algebra(const Module& m);

// Column space of the map's matrix, as a submodule of the target.
Submodule image_of_map(const ModuleMap& f);

enum class IsoVerdict { Yes, No, ProbablyNo };

struct IsoResult {
    IsoVerdict verdict;
    std::optional<ModuleMap> witness;  // exact invertible intertwiner when Yes
    std::string reason;
};

// Yes always carries a verified witness. No is certified either by an
// invariant mismatch or by exhausting the Hom space over a small finite
// field. ProbablyNo only when exhaustion was impossible.
IsoResult is_isomorphic(const Module& m, const Module& n, std::uint64_t seed, int trials = 64);

Module free_module(const AlgebraPtr& a, int copies);

// Exact pair F1 -> F0 -> m with both F free; generators picked greedily and
// deterministically, so presentations are reproducible.
struct FreePresentation {
    Module f0, f1;
    ModuleMap d0;  // F0 -> m, surjective
    ModuleMap d1;  // F1 -> F0, image = ker d0
    std::vector<Vec> generators0;  // in m's coordinates
    std::vector<Vec> generators1;  // in F0's coordinates
};

FreePresentation free_presentation(const Module& m, bool reverse_generator_order = false);

struct Ext1Result {
    int dim;
    Module f1;
    std::vector<ModuleMap> cocycles;  // representatives F1 -> n of a basis
};

Ext1Result ext1(const Module& m, const Module& n, bool reverse_generator_order = false);

// Hom(m, x) as a module, (a.f)(v) = a.f(v); commutative algebras only.
struct HomModule {
    Module module;  // coordinates w.r.t. hom.basis
    HomSpace hom;
};

HomModule hom_as_module(const Module& m, const Module& x);

// The natural map v |-> (f |-> f(v)) into Hom(Hom(m,x),x).
struct EvalResult {
    ModuleMap eval;     // m -> bidual.module
    HomModule dual;     // Hom(m, x)
    HomModule bidual;   // Hom(Hom(m,x), x)
};

EvalResult evaluation_map(const Module& m, const Module& x);

// Hom(-, x) applied to g: the map Hom(g.target, x) -> Hom(g.source, x),
// f |-> f o g, between the given hom-modules.
ModuleMap hom_dual_map(const ModuleMap& g, const HomModule& of_target, const HomModule& of_source);

}  // namespace tracelab
