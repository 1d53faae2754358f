#include <random>

#include "doctest.h"
#include "stt/matrix.hpp"

using namespace stt;

TEST_CASE("rref basics") {
    Matrix id3 = Matrix::identity(3, 2);
    auto r = id3.rref();
    CHECK(r.m == id3);
    CHECK(r.pivots == std::vector<int>{0, 1, 2});
    CHECK(r.rank == 3);

    Matrix z(2, 4, 3);
    auto rz = z.rref();
    CHECK(rz.m == z);
    CHECK(rz.pivots.empty());
    CHECK(rz.rank == 0);

    Matrix ones = Matrix::from_rows({{1, 1}, {1, 1}}, 2, 2);
    auto ro = ones.rref();
    CHECK(ro.rank == 1);
    CHECK(ro.m == Matrix::from_rows({{1, 1}, {0, 0}}, 2, 2));
}

TEST_CASE("solve: identity, zero, and the F_3 line") {
    Matrix id = Matrix::identity(3, 5);
    Matrix b = Matrix::from_rows({{1, 2}, {3, 4}, {0, 1}}, 2, 5);
    auto s = solve(id, b);
    REQUIRE(s.has_value());
    CHECK(s->particular == b);
    CHECK(s->nullspace.rows == 0);

    Matrix zero23(2, 3, 2);
    Matrix zb(2, 1, 2);
    auto s2 = solve(zero23, zb);
    REQUIRE(s2.has_value());
    CHECK(s2->particular.is_zero());
    CHECK(s2->nullspace.rows == 3);

    Matrix a = Matrix::from_rows({{1, 2}}, 2, 3);
    Matrix b0(1, 1, 3);
    auto s3 = solve(a, b0);
    REQUIRE(s3.has_value());
    CHECK(s3->nullspace.rows == 1);
    CHECK(s3->nullspace.rowspace_contains({1, 1}));

    // inconsistent system
    Matrix bad = Matrix::from_rows({{0, 0}}, 2, 2);
    Matrix rhs = Matrix::from_rows({{1}}, 1, 2);
    CHECK_FALSE(solve(bad, rhs).has_value());
}

TEST_CASE("intersect row spaces") {
    Matrix u = Matrix::from_rows({{1, 0, 1}, {0, 1, 0}}, 3, 2);
    CHECK(intersect_rowspaces({u}).rank() == 2);

    Matrix l1 = Matrix::from_rows({{1, 0}}, 2, 2);
    Matrix l2 = Matrix::from_rows({{0, 1}}, 2, 2);
    CHECK(intersect_rowspaces({l1, l2}).rows == 0);

    Matrix v = Matrix::from_rows({{1, 1, 1}}, 3, 2);
    Matrix w = intersect_rowspaces({u, v});
    CHECK(w.rows == 1);
    CHECK(w.rowspace_contains({1, 1, 1}));
}

TEST_CASE("rank-nullity and solve round-trips on random matrices") {
    std::mt19937 rng(12345);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 60; ++trial) {
            int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
            Matrix a(rows, cols, p);
            for (auto& c : a.a) c = rng() % p;
            CHECK(a.rank() + a.right_kernel().rows == cols);
            // rref idempotent
            auto r = a.rref();
            CHECK(r.m.rref().m == r.m);
            // solve a x = b for b in the column space
            Matrix x(cols, 2, p);
            for (auto& c : x.a) c = rng() % p;
            Matrix b = a.mul(x);
            auto s = solve(a, b);
            REQUIRE(s.has_value());
            CHECK(a.mul(s->particular) == b);
            // every kernel row really lies in the kernel
            Matrix k = a.right_kernel();
            if (k.rows > 0) CHECK(a.mul(k.transpose()).is_zero());
        }
    }
}
