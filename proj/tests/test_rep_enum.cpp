#include <doctest.h>

#include <cmath>
#include <set>

#include "knotrep/golden.hpp"
#include "knotrep/rep_enum.hpp"
#include "knotrep/table.hpp"

using namespace knotrep;

namespace {
PretzelKnot knot(std::initializer_list<std::int64_t> p) { return PretzelKnot(std::vector(p)); }
RationalAngle ang(std::int64_t n, std::int64_t d) { return RationalAngle::pi_multiple(n, d); }

// Independent abelian count: every sign pattern, relations evaluated as
// quaternion words, classes counted modulo the global flip.
std::size_t abelian_oracle(const PretzelKnot& k) {
    const std::size_t n = k.strands();
    const Presentation pres = emit_presentation(k, PresentationKind::QuotientGroup);
    std::set<std::uint64_t> classes;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<Quaternion> gens;
        for (std::size_t i = 0; i < n; ++i)
            gens.push_back(Quaternion::from_imaginary(
                ImVector{0, (mask >> i) & 1 ? -1.0 : 1.0, 0}));
        bool ok = true;
        for (const Word& w : pres.relators)
            ok = ok && (evaluate_word(w, gens) - Quaternion::identity()).norm() < 1e-12;
        if (ok) {
            const std::uint64_t flipped = ~mask & ((std::uint64_t{1} << n) - 1);
            classes.insert(mask < flipped ? mask : flipped);
        }
    }
    return classes.size();
}

} // namespace

TEST_CASE("abelian classes") {
    const auto a357 = enumerate_abelian(knot({3, 5, 7}));
    REQUIRE(a357.size() == 1);
    CHECK(a357[0].abelian);
    CHECK(a357[0].binary_dihedral);
    CHECK(a357[0].orbit == OrbitType::Sphere);
    for (const ImVector& p : a357[0].points)
        CHECK((p - axis_j).norm() == 0.0);
    for (const RationalAngle& a : a357[0].angles)
        CHECK(a.is_zero());

    CHECK(enumerate_abelian(knot({3, 5, 7, 9})).size() == 2);
    CHECK(enumerate_abelian(knot({2, 3})).size() == 1);

    for (const std::vector<std::int64_t>& p :
         {std::vector<std::int64_t>{3, 5, 7}, {2, 3}, {3, 5, 7, 9}, {2, 4, 7}, {-2, 3, 7},
          {3, 3, 3}, {2, 4, 6}}) {
        const PretzelKnot k(p);
        CHECK(enumerate_abelian(k).size() == abelian_oracle(k));
        CHECK(enumerate_abelian(k).size() == (1ull << (component_count(k) - 1)));
    }
}

TEST_CASE("case tables for P(3,5,7) list the candidate interior tuples") {
    for (CentralCase c : {CentralCase::PlusOne, CentralCase::MinusOne}) {
        const auto rows = case_table(knot({3, 5, 7}), c);
        const auto& ref = golden::p357_table(c);
        REQUIRE(rows.size() == 6);
        for (std::size_t i = 0; i < 6; ++i) {
            CHECK(rows[i].a12 == golden::row_a12(ref[i]));
            CHECK(rows[i].a23 == golden::row_a23(ref[i]));
            CHECK(rows[i].a31 == golden::row_a31(ref[i]));
            CHECK(rows[i].lo == golden::row_lo(ref[i]));
            CHECK(rows[i].hi == golden::row_hi(ref[i]));
        }
    }
}

TEST_CASE("central case enumeration for P(3,5,7)") {
    const auto plus = enumerate_central_case(knot({3, 5, 7}), CentralCase::PlusOne);
    // feasible interior tuples: (1/3,1/5,1/7), (1/3,1/5,3/7), (1/3,3/5,3/7),
    // (1/3,3/5,5/7); each non-degenerate, hence a mirror pair
    CHECK(plus.size() == 8);
    bool found = false;
    for (const RepClass& rc : plus) {
        CHECK(!rc.binary_dihedral);
        CHECK(rc.tag == CaseTag::PlusOne);
        CHECK(rc.orbit == OrbitType::ProjectiveSpace);
        found = found || rc.angles == std::vector<RationalAngle>{ang(1, 3), ang(1, 5), ang(3, 7)};
    }
    CHECK(found);

    const auto minus = enumerate_central_case(knot({3, 5, 7}), CentralCase::MinusOne);
    CHECK(minus.size() == 8); // rows 1-4 of the second table are feasible
    CHECK_THROWS_AS(enumerate_central_case(knot({3, 5, 7, 9}), CentralCase::PlusOne),
                    UnsupportedStrandCount);
}

TEST_CASE("P(1,1,1) has no non-degenerate central tuples") {
    CHECK(enumerate_central_case(knot({1, 1, 1}), CentralCase::PlusOne).empty());
}

TEST_CASE("binary dihedral counts") {
    CHECK(enumerate_binary_dihedral(knot({3, 5, 7})).size() == 35);
    CHECK(enumerate_binary_dihedral(knot({-3, 5, 7})).empty());
    CHECK(enumerate_binary_dihedral(knot({-2, 3, 7})).empty());

    const auto bd333 = enumerate_binary_dihedral(knot({3, 3, 3}));
    CHECK(bd333.size() == 13);
    std::size_t central = 0;
    for (const RepClass& rc : bd333) {
        CHECK(rc.binary_dihedral);
        if (rc.tag == CaseTag::PlusOne || rc.tag == CaseTag::MinusOne)
            ++central;
    }
    CHECK(central > 0); // coprimality fails, so central-case chains appear
}

TEST_CASE("binary dihedral chains satisfy their congruences and lie in the jk-plane") {
    for (const RepClass& rc : enumerate_binary_dihedral(knot({3, 5, 7}))) {
        REQUIRE(rc.beta.has_value());
        for (const ImVector& p : rc.points)
            CHECK(p.x == 0.0);
        // distances match the folded chain
        for (std::size_t i = 0; i < 3; ++i) {
            const double d = sphere_distance(rc.points[i], rc.points[(i + 1) % 3]);
            CHECK(std::abs(d - rc.angles[i].radians()) < 1e-10);
        }
        // canonical under conjugation by j: first off-axis chain position in (0, pi)
        CHECK(rc.chain[0].num() < rc.chain[0].den());
    }
}

TEST_CASE("full reports") {
    const RepSpaceReport r357 = enumerate_all(knot({3, 5, 7}));
    CHECK(r357.counts.abelian == 1);
    CHECK(r357.counts.binary_dihedral == 35);
    CHECK(r357.counts.non_binary_dihedral % 2 == 0);
    CHECK(r357.counts.non_binary_dihedral == 16);
    CHECK(!r357.paper_discrepancies.empty());

    const RepSpaceReport rm357 = enumerate_all(knot({-3, 5, 7}));
    CHECK(rm357.counts.binary_dihedral == 0);
    CHECK(rm357.counts.non_binary_dihedral >= 2);

    const RepSpaceReport r135 = enumerate_all(knot({1, 3, 5}));
    CHECK(r135.counts.non_binary_dihedral == 0);
    CHECK(r135.two_bridge);
}

TEST_CASE("mirror involution fixes exactly the binary dihedral classes") {
    const RepSpaceReport r = enumerate_all(knot({3, 5, 7}));
    for (const RepClass& rc : r.non_bd_classes) {
        REQUIRE(rc.mirror_pair_id.has_value());
        bool partner_found = false;
        for (const RepClass& other : r.non_bd_classes) {
            if (other.mirror_pair_id != rc.mirror_pair_id || other.mirror_sign == rc.mirror_sign)
                continue;
            partner_found = true;
            REQUIRE(other.points.size() == rc.points.size());
            for (std::size_t i = 0; i < rc.points.size(); ++i) {
                CHECK(other.points[i].x == -rc.points[i].x);
                CHECK(other.points[i].y == rc.points[i].y);
                CHECK(other.points[i].z == rc.points[i].z);
            }
            bool has_off_plane = false;
            for (const ImVector& p : rc.points)
                has_off_plane = has_off_plane || p.x != 0.0;
            CHECK(has_off_plane);
        }
        CHECK(partner_found);
    }
    for (const RepClass& rc : r.binary_dihedral_classes)
        for (const ImVector& p : rc.points)
            CHECK(p.x == 0.0);
}

TEST_CASE("all enumerated classes satisfy both presentations' relations") {
    for (const std::vector<std::int64_t>& p :
         {std::vector<std::int64_t>{3, 5, 7}, {-3, 5, 7}, {-2, 3, 7}, {3, 3, 3}, {3, 3, 5},
          {2, 3, 5}, {2, 2, 3}, {2, -4, 5}}) {
        const PretzelKnot k(p);
        const RepSpaceReport r = enumerate_all(k);
        for (const RepClass* rc : all_classes(r)) {
            CHECK(relation_residual(*rc, k, PresentationKind::QuotientGroup) < 1e-9);
            CHECK(relation_residual(*rc, k, PresentationKind::KnotGroup) < 1e-9);
            for (std::size_t i = 0; i < rc->points.size(); ++i) {
                const double d =
                    sphere_distance(rc->points[i], rc->points[(i + 1) % rc->points.size()]);
                CHECK(std::abs(d - rc->angles[i].radians()) < 1e-10);
            }
            if (rc->abelian)
                CHECK(rc->binary_dihedral);
        }
    }
}

TEST_CASE("coprime arithmetic exclusions, small sweep") {
    for (std::int64_t p = 2; p <= 7; ++p)
        for (std::int64_t q = 2; q <= 7; ++q)
            for (std::int64_t r = 2; r <= 7; ++r) {
                const PretzelKnot k({p, q, r});
                if (!pairwise_coprime(k))
                    continue;
                for (CentralCase c : {CentralCase::PlusOne, CentralCase::MinusOne})
                    for (const RationalAngle& a12 : solve_edge_congruence(p, c))
                        for (const RationalAngle& a23 : solve_edge_congruence(q, c))
                            for (const RationalAngle& a31 : solve_edge_congruence(r, c)) {
                                const int boundary = (a12.is_zero_or_pi() ? 1 : 0) +
                                                     (a23.is_zero_or_pi() ? 1 : 0) +
                                                     (a31.is_zero_or_pi() ? 1 : 0);
                                const Verdict v =
                                    triangle_realizability(a12, a23, a31).verdict;
                                if (boundary == 1 || boundary == 2)
                                    CHECK(v == Verdict::Infeasible);
                                if (boundary != 3)
                                    CHECK(v != Verdict::Degenerate);
                            }
            }
}

TEST_CASE("klassen count equals the enumeration for non-coprime knots too") {
    for (const std::vector<std::int64_t>& p :
         {std::vector<std::int64_t>{3, 3, 5}, {3, 3, 3}, {3, 5, 5}, {3, 3, 7}, {2, 3, 9}}) {
        const PretzelKnot k(p);
        CHECK(static_cast<std::int64_t>(enumerate_binary_dihedral(k).size()) ==
              klassen_bd_count(k));
    }
}

TEST_CASE("bridge number estimates") {
    CHECK(bridge_number_estimate(knot({3, 5, 7})) == BridgeNumber::Three);
    CHECK(bridge_number_estimate(knot({1, 5, 7})) == BridgeNumber::Two);
    CHECK(bridge_number_estimate(knot({3, 3, 5})) == BridgeNumber::Unknown);
    CHECK(bridge_number_estimate(knot({-2, 3, 7})) == BridgeNumber::Three);
}

TEST_CASE("sigma-chain enumeration agrees with the degenerate triangles") {
    // the n >= 4 path and the triangle path must produce identical chains
    for (const std::vector<std::int64_t>& p :
         {std::vector<std::int64_t>{3, 3, 3}, {3, 3, 5}, {3, 5, 5}, {2, 3, 9}}) {
        const PretzelKnot k(p);
        for (CentralCase c : {CentralCase::PlusOne, CentralCase::MinusOne}) {
            std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> triangles, chains;
            for (const RepClass& rc : enumerate_central_case(k, c))
                if (rc.binary_dihedral) {
                    std::vector<std::pair<std::int64_t, std::int64_t>> key;
                    for (const RationalAngle& a : rc.chain)
                        key.emplace_back(a.num(), a.den());
                    triangles.insert(key);
                }
            for (const RepClass& rc : central_bd_chains(k, c)) {
                std::vector<std::pair<std::int64_t, std::int64_t>> key;
                for (const RationalAngle& a : rc.chain)
                    key.emplace_back(a.num(), a.den());
                chains.insert(key);
            }
            CHECK(triangles == chains);
        }
    }
}

TEST_CASE("binary dihedral chains for four strands close exactly") {
    // 2-component link: no count identity, but the chains must be valid
    const PretzelKnot k({3, 5, 7, 9});
    const auto bd = enumerate_binary_dihedral(k);
    CHECK(!bd.empty());
    for (const RepClass& rc : bd) {
        RationalAngle sum;
        for (const RationalAngle& c : rc.chain)
            sum = add_mod_2pi(sum, c);
        CHECK(sum.is_zero());
        CHECK(relation_residual(rc, k) < 1e-9);
    }
}
