#pragma once

#include <optional>

#include "tracelab/matrix.hpp"

namespace tracelab {

struct RrefResult {
    Matrix reduced;
    std::vector<int> pivot_columns;
    int rank;
};

// Unique reduced row-echelon form: pivot entries 1, pivot columns otherwise
// zero, pivot columns strictly increasing, zero rows at the bottom.
RrefResult rref(const Matrix& m);

int rank_of(const Matrix& m);

// Some x with a*x = b (free variables set to zero), or nullopt when the
// system is inconsistent.
std::optional<Vec> solve_linear(const Matrix& a, const Vec& b);

std::optional<Matrix> inverse(const Matrix& m);

// A linear subspace in canonical form: the basis rows form an RREF matrix
// with no zero rows, so equality of subspaces is equality of the data.
class Subspace {
  public:
    static Subspace zero(FieldSpec field, int ambient_dim);
    static Subspace full(FieldSpec field, int ambient_dim);
    static Subspace span_of(FieldSpec field, int ambient_dim, const std::vector<Vec>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace col_space(const Matrix& m);

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }
    const FieldSpec& field() const { return basis_.field(); }

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    // Residual of v after eliminating the pivot coordinates; zero iff v lies
    // in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    // Coordinates w.r.t. the canonical basis (just the pivot entries of v);
    // nullopt when v is not a member.
    std::optional<Vec> coords_of(const Vec& v) const;
    Vec from_coords(const Vec& coords) const;

    // Ambient coordinates not used as pivots; a deterministic complement.
    std::vector<int> complement_columns() const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const;  // canonical order, for set keys

    std::string to_string() const;

  private:
    Subspace(int ambient, Matrix basis, std::vector<int> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    int ambient_;
    Matrix basis_;
    std::vector<int> pivots_;
};

struct SumIntersect {
    Subspace sum;
    Subspace intersection;
};

// Zassenhaus: one elimination yields both the sum and the intersection.
SumIntersect subspace_sum_intersect(const Subspace& u, const Subspace& v);

enum class SubspaceRelation { Equal, UInsideV, VInsideU, Incomparable };

SubspaceRelation subspace_compare(const Subspace& u, const Subspace& v);

// Null space of m in canonical form; dim = cols - rank.
Subspace kernel_basis(const Matrix& m);

// Row reducer that takes rows one at a time, keeping a fully reduced basis.
// Lets callers stream very sparse constraint systems without materializing
// the full matrix.
class IncrementalRref {
  public:
    IncrementalRref(FieldSpec field, int cols) : field_(field), cols_(cols) {}

    // Returns true when the row increased the rank. The argument is consumed.
    bool insert(Vec row);

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }
    const std::vector<int>& pivots() const { return pivots_; }

    Matrix to_matrix() const;
    // Kernel of the matrix whose rows were inserted.
    Subspace kernel() const;

  private:
    FieldSpec field_;
    int cols_;
    std::vector<Vec> rows_;    // sorted by pivot, mutually reduced
    std::vector<int> pivots_;  // strictly increasing
};

}  // namespace tracelab
