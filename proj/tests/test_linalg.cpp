#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "tracelab/linalg.hpp"

using namespace tracelab;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec Q = FieldSpec::rational();

Matrix mat(const FieldSpec& F, std::vector<std::vector<std::int64_t>> rows) {
    int cols = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Matrix m(F, static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = F.from_int(rows[r][c]);
    return m;
}

Vec vec(const FieldSpec& F, std::vector<std::int64_t> xs) {
    Vec v;
    for (auto x : xs) v.push_back(F.from_int(x));
    return v;
}

}  // namespace

TEST_CASE("field arithmetic basics") {
    CHECK(F2.add(F2.one(), F2.one()) == F2.zero());
    CHECK(F3.mul(F3.from_int(2), F3.from_int(2)) == F3.one());
    CHECK(F3.inv(F3.from_int(2)) == F3.from_int(2));
    CHECK(Q.div(Q.from_int(1), Q.from_int(3)) == Q.from_fraction(1, 3));
    CHECK(Q.from_fraction(6, 4) == Q.from_fraction(3, 2));
    CHECK(Q.from_fraction(3, -6) == Q.from_fraction(-1, 2));
    CHECK(Q.to_string(Q.from_fraction(-1, 2)) == "-1/2");
    CHECK(Q.parse("7/3") == Q.from_fraction(7, 3));
    CHECK(F3.parse("5") == F3.from_int(2));
    CHECK_THROWS_AS(FieldSpec::prime(6), Error);
    CHECK_THROWS_AS(F2.inv(F2.zero()), Error);
    CHECK_THROWS_AS(Q.parse("1/0"), Error);

    const FieldSpec big = FieldSpec::prime((std::int64_t(1) << 31) - 1);  // Mersenne prime
    Scalar x = big.from_int(123456789);
    CHECK(big.mul(x, big.inv(x)) == big.one());
}

TEST_CASE("rref examples") {
    SUBCASE("identity over GF(2)") {
        auto rd = rref(Matrix::identity(F2, 2));
        CHECK(rd.reduced == Matrix::identity(F2, 2));
        CHECK(rd.pivot_columns == std::vector<int>{0, 1});
        CHECK(rd.rank == 2);
    }
    SUBCASE("repeated rows over GF(2)") {
        auto rd = rref(mat(F2, {{1, 1}, {1, 1}}));
        CHECK(rd.reduced == mat(F2, {{1, 1}, {0, 0}}));
        CHECK(rd.rank == 1);
    }
    SUBCASE("zero over Q") {
        auto rd = rref(mat(Q, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
        CHECK(rd.reduced.is_zero());
        CHECK(rd.pivot_columns.empty());
        CHECK(rd.rank == 0);
    }
    SUBCASE("empty shapes") {
        CHECK(rref(Matrix(F2, 0, 3)).rank == 0);
        CHECK(rref(Matrix(Q, 3, 0)).rank == 0);
        CHECK(rref(Matrix(Q, 0, 0)).rank == 0);
    }
}

TEST_CASE("rref is idempotent on random matrices") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        const FieldSpec& F = it % 3 == 0 ? Q : (it % 3 == 1 ? F2 : F3);
        Matrix m = oracle::random_matrix(F, 1 + it % 5, 1 + (it / 2) % 5, rng);
        auto rd = rref(m);
        auto rd2 = rref(rd.reduced);
        CHECK(rd2.reduced == rd.reduced);
        CHECK(rd2.pivot_columns == rd.pivot_columns);
    }
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Matrix::identity(F2, 2)).dim() == 0);
    Subspace k = kernel_basis(mat(F2, {{1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.basis().row(0) == vec(F2, {1, 1}));
    CHECK(k == oracle::kernel_by_enumeration(mat(F2, {{1, 1}})));
    Subspace full = kernel_basis(mat(Q, {{0, 0}, {0, 0}}));
    CHECK(full.dim() == 2);
    CHECK(full.is_full());
}

TEST_CASE("kernel agrees with enumeration over GF(2), GF(3)") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        const FieldSpec& F = it % 2 ? F2 : F3;
        int r = 1 + static_cast<int>(rng() % 4);
        int c = 1 + static_cast<int>(rng() % 4);
        Matrix m = oracle::random_matrix(F, r, c, rng);
        Subspace k = kernel_basis(m);
        CHECK(k == oracle::kernel_by_enumeration(m));
        CHECK(k.dim() == c - rank_of(m));
        for (int i = 0; i < k.dim(); ++i) {
            CHECK(is_zero_vec(F, m.apply(k.basis().row(i))));
        }
    }
}

TEST_CASE("solve_linear") {
    SUBCASE("identity returns rhs") {
        auto x = solve_linear(Matrix::identity(F3, 3), vec(F3, {1, 2, 0}));
        REQUIRE(x.has_value());
        CHECK(*x == vec(F3, {1, 2, 0}));
    }
    SUBCASE("free variables set to zero") {
        auto x = solve_linear(mat(F2, {{1, 1}}), vec(F2, {1}));
        REQUIRE(x.has_value());
        CHECK(*x == vec(F2, {1, 0}));
    }
    SUBCASE("inconsistent") {
        CHECK(!solve_linear(mat(Q, {{0}}), vec(Q, {1})).has_value());
    }
    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(solve_linear(mat(Q, {{1, 2}}), vec(Q, {1, 2})), ShapeMismatch);
    }
    SUBCASE("substituting back is exact") {
        std::mt19937_64 rng(3);
        for (int it = 0; it < 100; ++it) {
            const FieldSpec& F = it % 2 ? Q : F3;
            Matrix a = oracle::random_matrix(F, 2 + it % 3, 2 + (it / 3) % 3, rng);
            Vec t;
            for (int j = 0; j < a.cols(); ++j) t.push_back(F.from_int(it + j));
            Vec b = a.apply(t);  // consistent by construction
            auto x = solve_linear(a, b);
            REQUIRE(x.has_value());
            CHECK(a.apply(*x) == b);
        }
    }
}

TEST_CASE("subspace sum and intersection") {
    SUBCASE("idempotence") {
        Subspace u = Subspace::span_of(F2, 3, {vec(F2, {1, 1, 0}), vec(F2, {0, 0, 1})});
        auto si = subspace_sum_intersect(u, u);
        CHECK(si.sum == u);
        CHECK(si.intersection == u);
    }
    SUBCASE("transverse lines") {
        Subspace e1 = Subspace::span_of(F2, 2, {vec(F2, {1, 0})});
        Subspace e2 = Subspace::span_of(F2, 2, {vec(F2, {0, 1})});
        auto si = subspace_sum_intersect(e1, e2);
        CHECK(si.sum.is_full());
        CHECK(si.intersection.is_zero());
    }
    SUBCASE("hand-checked overlap in GF(2)^3") {
        Subspace u = Subspace::span_of(F2, 3, {vec(F2, {1, 1, 0})});
        Subspace v = Subspace::span_of(F2, 3, {vec(F2, {0, 1, 1}), vec(F2, {1, 0, 1})});
        auto si = subspace_sum_intersect(u, v);
        CHECK(si.sum.dim() == 2);
        CHECK(si.intersection == u);
        // Oracle: intersect the enumerated member sets.
        std::vector<Vec> common;
        for (const Vec& w : oracle::all_vectors(F2, 3)) {
            if (u.contains(w) && v.contains(w)) common.push_back(w);
        }
        CHECK(si.intersection == Subspace::span_of(F2, 3, common));
    }
    SUBCASE("ambient mismatch") {
        CHECK_THROWS_AS(
            subspace_sum_intersect(Subspace::zero(F2, 2), Subspace::zero(F2, 3)),
            AmbientMismatch);
    }
}

TEST_CASE("dimension formula holds on random pairs") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 200; ++it) {
        const FieldSpec& F = it % 2 ? F2 : F3;
        int n = 2 + static_cast<int>(rng() % 4);
        Subspace u = Subspace::row_space(oracle::random_matrix(F, 1 + rng() % 3, n, rng));
        Subspace v = Subspace::row_space(oracle::random_matrix(F, 1 + rng() % 3, n, rng));
        auto si = subspace_sum_intersect(u, v);
        CHECK(si.sum.dim() + si.intersection.dim() == u.dim() + v.dim());
        CHECK(si.sum.contains(u));
        CHECK(si.sum.contains(v));
        CHECK(u.contains(si.intersection));
        CHECK(v.contains(si.intersection));
    }
}

TEST_CASE("subspace_compare") {
    Subspace z = Subspace::zero(F2, 2);
    Subspace e1 = Subspace::span_of(F2, 2, {vec(F2, {1, 0})});
    Subspace e2 = Subspace::span_of(F2, 2, {vec(F2, {0, 1})});
    CHECK(subspace_compare(e1, e1) == SubspaceRelation::Equal);
    CHECK(subspace_compare(z, e1) == SubspaceRelation::UInsideV);
    CHECK(subspace_compare(e1, z) == SubspaceRelation::VInsideU);
    CHECK(subspace_compare(e1, e2) == SubspaceRelation::Incomparable);
}

TEST_CASE("rational arithmetic stays exact through elimination") {
    // Hilbert-style matrix: notorious for floating point, trivial for exact.
    int n = 6;
    Matrix h(Q, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h.at(i, j) = Q.from_fraction(1, i + j + 1);
    auto inv = inverse(h);
    REQUIRE(inv.has_value());
    CHECK(h.mul(*inv).is_identity());
    Vec b;
    for (int i = 0; i < n; ++i) b.push_back(Q.from_fraction(i + 1, 7));
    auto x = solve_linear(h, b);
    REQUIRE(x.has_value());
    CHECK(h.apply(*x) == b);
}

TEST_CASE("incremental rref matches batch rref") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 150; ++it) {
        const FieldSpec& F = it % 3 == 0 ? Q : F2;
        Matrix m = oracle::random_matrix(F, 1 + it % 6, 1 + (it / 2) % 6, rng);
        IncrementalRref inc(F, m.cols());
        for (int r = 0; r < m.rows(); ++r) inc.insert(m.row(r));
        auto rd = rref(m);
        CHECK(inc.rank() == rd.rank);
        CHECK(inc.pivots() == rd.pivot_columns);
        CHECK(inc.kernel() == kernel_basis(m));
        for (int r = 0; r < rd.rank; ++r) CHECK(inc.to_matrix().row(r) == rd.reduced.row(r));
    }
}

TEST_CASE("subspace coords round-trip") {
    Subspace s = Subspace::span_of(F3, 4, {vec(F3, {1, 2, 0, 1}), vec(F3, {0, 0, 1, 2})});
    Vec member = add_vec(F3, s.basis().row(0), scale_vec(F3, F3.from_int(2), s.basis().row(1)));
    auto c = s.coords_of(member);
    REQUIRE(c.has_value());
    CHECK(s.from_coords(*c) == member);
    CHECK(!s.coords_of(vec(F3, {0, 1, 0, 0})).has_value());
    CHECK(s.complement_columns() == std::vector<int>{1, 3});
}
