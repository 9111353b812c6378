#pragma once

#include "tracelab/algebra.hpp"

namespace tracelab {

// A finite-dimensional left module: one action matrix per algebra basis
// element. Cheap to copy (shared immutable payload).
class Module {
  public:
    Module(AlgebraPtr algebra, std::vector<Matrix> action);
    static Module zero(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const { return impl_->algebra; }
    int dim() const { return impl_->dim; }
    const Matrix& action_basis(int i) const { return impl_->action[i]; }
    const std::vector<Matrix>& actions() const { return impl_->action; }

    // Action of an arbitrary algebra element given by coordinates.
    Matrix action_of(const Vec& coords) const;

    bool structurally_equal(const Module& o) const {
        return same_algebra(algebra(), o.algebra()) && impl_->action == o.impl_->action;
    }

  private:
    struct Impl {
        AlgebraPtr algebra;
        int dim;
        std::vector<Matrix> action;
    };
    std::shared_ptr<const Impl> impl_;
};

// Empty iff action(1) = id and action respects the structure constants.
std::vector<std::string> validate_module(const Module& m);

void require_same_algebra(const Module& a, const Module& b, const char* what);

// A matrix certified to intertwine the two actions; the constructor checks
// the equations and throws InternalError when they fail.
class ModuleMap {
  public:
    ModuleMap(Module source, Module target, Matrix matrix);
    static ModuleMap zero(const Module& source, const Module& target);
    static ModuleMap identity(const Module& m);

    const Module& source() const { return source_; }
    const Module& target() const { return target_; }
    const Matrix& matrix() const { return mat_; }

    Vec apply(const Vec& v) const { return mat_.apply(v); }
    bool is_injective() const;
    bool is_surjective() const;
    bool is_invertible() const;
    ModuleMap inverse() const;  // throws when not invertible
    ModuleMap scaled(const Scalar& c) const;
    ModuleMap plus(const ModuleMap& o) const;

  private:
    Module source_, target_;
    Matrix mat_;
};

// f after g.
ModuleMap compose(const ModuleMap& f, const ModuleMap& g);

// An action-invariant subspace of a module's coordinate space.
class Submodule {
  public:
    Submodule(Module ambient, Subspace space);
    static Submodule zero(const Module& ambient);
    static Submodule whole(const Module& ambient);

    const Module& ambient() const { return ambient_; }
    const Subspace& space() const { return space_; }
    int dim() const { return space_.dim(); }

    // The subspace with its inherited action, plus the inclusion map.
    struct AsModule {
        Module module;
        ModuleMap inclusion;
    };
    AsModule as_module() const;

  private:
    Module ambient_;
    Subspace space_;
};

Module regular_module(const AlgebraPtr& a);

struct DirectSum {
    Module sum;
    ModuleMap include_left, include_right;
    ModuleMap project_left, project_right;
};
DirectSum direct_sum(const Module& m, const Module& n);

// Smallest action-invariant subspace containing the given vectors.
Submodule submodule_generated(const Module& x, const std::vector<Vec>& vectors);

struct Quotient {
    Module module;
    ModuleMap projection;  // surjective, kernel exactly the submodule
};
Quotient quotient_module(const Module& x, const Submodule& s);

// Jacobson radical of the algebra, as an ideal of the regular module.
Submodule radical_ideal(const AlgebraPtr& a);

// Joint kernel of the radical action: the largest semisimple submodule.
Submodule socle(const Module& m);

// k-linear dual with transposed actions, a module over the opposite algebra.
// Pass `rebind` to attach the result to an existing structurally equal
// algebra object (e.g. the original one when it is commutative).
Module dual_module(const Module& m, const AlgebraPtr& rebind = nullptr);

// All submodules, from cyclic generators closed under pairwise sums.
// Requires a finite base field. Throws EnumOverflow past `cap` submodules.
std::vector<Submodule> enumerate_submodules(const Module& m, long long cap);

// {a in A : a acts as zero on m}, an ideal of the regular module.
Submodule annihilator_ideal(const Module& m);

}  // namespace tracelab
