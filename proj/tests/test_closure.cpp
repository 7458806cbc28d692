#include <doctest.h>

#include <cmath>

#include "knotrep/closure.hpp"
#include "knotrep/golden.hpp"
#include "knotrep/rep_enum.hpp"
#include "knotrep/table.hpp"

using namespace knotrep;

namespace {
RationalAngle ang(std::int64_t n, std::int64_t d) { return RationalAngle::pi_multiple(n, d); }
} // namespace

TEST_CASE("the square closes") {
    const std::vector<RationalAngle> square(4, ang(1, 2));
    const auto sols = solve_closure_numeric(square, 60, 0);
    CHECK(!sols.empty());
    for (const auto& pts : sols) {
        REQUIRE(pts.size() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(std::abs(sphere_distance(pts[i], pts[(i + 1) % 4]) - M_PI / 2) < 1e-7);
    }
}

TEST_CASE("three-strand feasibility matches the gram verdict on the reference rows") {
    for (CentralCase c : {CentralCase::PlusOne, CentralCase::MinusOne}) {
        for (const golden::Row& row : golden::p357_table(c)) {
            const RationalAngle a12 = golden::row_a12(row), a23 = golden::row_a23(row),
                                a31 = golden::row_a31(row);
            const Verdict v = triangle_realizability(a12, a23, a31).verdict;
            const auto sols = solve_closure_numeric({a12, a23, a31}, 150, 0);
            CHECK((v != Verdict::Infeasible) == !sols.empty());
        }
    }
}

TEST_CASE("the adjudicated infeasible tuple yields nothing") {
    CHECK(solve_closure_numeric({ang(2, 3), ang(4, 5), ang(4, 7)}, 400, 0).empty());
    CHECK(solve_closure_numeric({ang(2, 3), ang(4, 5), ang(6, 7)}, 400, 0).empty());
}

TEST_CASE("family dimensions") {
    // any realizable non-degenerate triangle is rigid modulo conjugation
    const auto tri = construct_triangle(ang(1, 3), ang(1, 5), ang(3, 7), +1);
    const std::vector<ImVector> tri_pts(tri.begin(), tri.end());
    CHECK(family_dimension_estimate(tri_pts, {ang(1, 3), ang(1, 5), ang(3, 7)}) == 0);

    // generic square: one-parameter family
    const std::vector<ImVector> square_pts{axis_j, -axis_k, axis_i, axis_k};
    CHECK(family_dimension_estimate(square_pts, std::vector<RationalAngle>(4, ang(1, 2))) == 1);

    // the planar square is a singular point of the configuration variety
    // (fixed by the mirror involution); the Jacobian nullity reads the
    // larger Zariski dimension there
    const std::vector<ImVector> planar{axis_j, -axis_k, -axis_j, axis_k};
    CHECK(family_dimension_estimate(planar, std::vector<RationalAngle>(4, ang(1, 2))) == 2);

    // equilateral pentagon sample: two-parameter family
    const std::vector<ImVector> penta{axis_j, -axis_k, -axis_j, axis_k, axis_i};
    CHECK(family_dimension_estimate(penta, std::vector<RationalAngle>(5, ang(1, 2))) == 2);
}

TEST_CASE("solver solutions of the square all live in a one-parameter family") {
    const std::vector<RationalAngle> square(4, ang(1, 2));
    const auto sols = solve_closure_numeric(square, 40, 3);
    REQUIRE(!sols.empty());
    for (const auto& pts : sols)
        CHECK(family_dimension_estimate(pts, square) == 1);
}

TEST_CASE("great-circle chains sit on the singular stratum of the distance variety") {
    // collinear configurations are isolated modulo conjugation, but the
    // out-of-plane derivatives of the distance constraints vanish there, so
    // the Zariski-type estimate reads one extra dimension
    const PretzelKnot k({3, 5, 7});
    std::size_t seen = 0;
    for (const RepClass& rc : enumerate_binary_dihedral(k)) {
        CHECK(family_dimension_estimate(rc.points, rc.angles) == 1);
        ++seen;
    }
    CHECK(seen == 35);
}

TEST_CASE("degenerate configurations are rejected") {
    const std::vector<ImVector> pinched{axis_j, axis_j, axis_k};
    CHECK_THROWS_AS(
        family_dimension_estimate(pinched, {ang(0, 1), ang(1, 2), ang(1, 2)}),
        DegenerateConfiguration);
    const std::vector<ImVector> wrong{axis_j, axis_k, axis_i};
    CHECK_THROWS_AS(family_dimension_estimate(wrong, {ang(1, 2), ang(1, 2), ang(1, 4)}),
                    NumericalInconsistency);
    CHECK_THROWS_AS(solve_closure_numeric({ang(1, 2), ang(1, 2)}, 5, 0),
                    UnsupportedStrandCount);
}
