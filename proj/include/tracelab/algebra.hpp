#pragma once

#include <memory>
#include <optional>

#include "tracelab/linalg.hpp"

namespace tracelab {

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

// A finite-dimensional associative unital algebra given by structure
// constants: e_i * e_j = sum_k c[i][j][k] e_k. Immutable once built.
class Algebra {
  public:
    // constants[i][j] is the coordinate vector of e_i * e_j.
    Algebra(FieldSpec field, int dim, std::vector<std::string> basis_names,
            std::vector<std::vector<Vec>> constants, Vec unit,
            std::optional<std::vector<Vec>> supplied_radical = std::nullopt);

    const FieldSpec& field() const { return field_; }
    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Vec& unit() const { return unit_; }
    bool commutative() const { return commutative_; }
    const std::optional<std::vector<Vec>>& supplied_radical() const { return supplied_radical_; }

    const Vec& product_of_basis(int i, int j) const { return constants_[i][j]; }
    Vec multiply(const Vec& a, const Vec& b) const;

    // Matrix of y |-> x*y, resp. y |-> y*x, on the coordinate space.
    const Matrix& left_mult_basis(int i) const { return left_mult_[i]; }
    const Matrix& right_mult_basis(int i) const { return right_mult_[i]; }
    Matrix left_mult(const Vec& x) const;
    Matrix right_mult(const Vec& x) const;

    std::string element_to_string(const Vec& coords) const;

    bool structurally_equal(const Algebra& o) const;

  private:
    FieldSpec field_;
    int dim_;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> constants_;
    Vec unit_;
    std::optional<std::vector<Vec>> supplied_radical_;
    std::vector<Matrix> left_mult_, right_mult_;
    bool commutative_;
};

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

// Empty iff the algebra satisfies associativity, the unit laws, the cached
// commutativity flag, and (when present) the supplied radical really spans a
// nilpotent two-sided ideal with semisimple quotient as far as checkable.
std::vector<std::string> validate_algebra(const AlgebraPtr& a);

AlgebraPtr opposite_algebra(const AlgebraPtr& a);

struct QuotientAlgebra {
    AlgebraPtr quotient;
    Matrix projection;  // quotient coords of each ambient basis vector, q.dim x a.dim
    std::vector<int> section_columns;  // ambient coordinates representing the new basis
};

// Quotient by a two-sided ideal, coordinates on the non-pivot complement of
// the ideal's canonical basis.
QuotientAlgebra quotient_algebra(const AlgebraPtr& a, const Subspace& ideal,
                                 std::optional<std::vector<Vec>> supplied_radical = std::nullopt);

// The Jacobson radical as a subspace of the coordinate space. Dispatch:
// supplied span; trace-form kernel over Q or GF(p) with p > dim; iterated
// Frobenius kernel for commutative algebras over GF(p). Otherwise throws
// RadicalUnsupported.
Subspace radical_subspace(const AlgebraPtr& a);

}  // namespace tracelab
