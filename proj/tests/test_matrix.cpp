#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corkcalc/matrix.hpp"

#include <random>

using namespace corkcalc;

namespace {

IntegerMatrix random_matrix(std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> dim(0, 12);
    std::uniform_int_distribution<int> entry(-9, 9);
    IntegerMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    return m;
}

Int abs_det(const IntegerMatrix& m) {
    Int d = determinant(m);
    return d < 0 ? Int(-d) : d;
}

bool is_diagonal_chain(const IntegerMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d.at(i, j) != 0) return false;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i) {
        if (d.at(i, i) < 0) return false;
        if (i + 1 < n) {
            const Int& a = d.at(i, i);
            const Int& b = d.at(i + 1, i + 1);
            if (a == 0 && b != 0) return false;  // zeros must come last
            if (a != 0 && b % a != 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("smith normal form on pinned examples") {
    IntegerMatrix m(2, 2);
    m.at(0, 0) = 2;
    m.at(1, 1) = 3;
    SmithResult s = smith_normal_form(m);
    CHECK(s.d.at(0, 0) == 1);
    CHECK(s.d.at(1, 1) == 6);
    CHECK(s.u * m * s.v == s.d);

    CHECK(cokernel_invariants(m).to_string() == "Z/6");
    CHECK(cokernel_invariants(IntegerMatrix(3, 0)).to_string() == "Z^3");
    CHECK(cokernel_invariants(IntegerMatrix::identity(4)).to_string() == "0");
}

TEST_CASE("smith normal form contract on random matrices") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 120; ++trial) {
        IntegerMatrix m = random_matrix(rng);
        SmithResult s = smith_normal_form(m);
        REQUIRE(s.u.rows() == m.rows());
        REQUIRE(s.v.rows() == m.cols());
        CHECK(abs_det(s.u) == 1);
        CHECK(abs_det(s.v) == 1);
        CHECK(is_diagonal_chain(s.d));
        CHECK(s.u * m * s.v == s.d);
    }
}

TEST_CASE("determinant is multiplicative and matches the smith diagonal") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = dim(rng);
        IntegerMatrix a(n, n), b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                a.at(i, j) = entry(rng);
                b.at(i, j) = entry(rng);
            }
        CHECK(determinant(a * b) == determinant(a) * determinant(b));

        Int prod = 1;
        SmithResult s = smith_normal_form(a);
        for (std::size_t i = 0; i < n; ++i) prod *= s.d.at(i, i);
        CHECK(prod == abs_det(a));
    }
}

TEST_CASE("rank agrees with the smith diagonal") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        IntegerMatrix m = random_matrix(rng);
        SmithResult s = smith_normal_form(m);
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
            if (s.d.at(i, i) != 0) ++nonzero;
        CHECK(rank(m) == nonzero);
    }
}

TEST_CASE("cokernel invariants of stacked relations") {
    // Z^2 / <(2,0),(0,2),(1,1)>: the smith form is diag(1, 2)
    IntegerMatrix m(2, 3);
    m.at(0, 0) = 2;
    m.at(1, 1) = 2;
    m.at(0, 2) = 1;
    m.at(1, 2) = 1;
    CHECK(cokernel_invariants(m).to_string() == "Z/2");

    // torsion divisors are reported in chain order
    IntegerMatrix k(3, 3);
    k.at(0, 0) = 2;
    k.at(1, 1) = 6;
    k.at(2, 2) = 0;
    AbelianGroupInvariants g = cokernel_invariants(k);
    CHECK(g.rank == 1);
    REQUIRE(g.torsion.size() == 2);
    CHECK(g.torsion[0] == 2);
    CHECK(g.torsion[1] == 6);
    CHECK(g.to_string() == "Z + Z/2 + Z/6");
}

TEST_CASE("unimodular congruence preserves determinant sign class") {
    // E^T L E keeps the determinant exactly when E is unimodular
    IntegerMatrix l(2, 2);
    l.at(0, 1) = 1;
    l.at(1, 0) = 1;
    IntegerMatrix e = IntegerMatrix::identity(2);
    e.at(1, 0) = -3;
    IntegerMatrix lp = e.transposed() * l * e;
    CHECK(determinant(lp) == determinant(l));
}
