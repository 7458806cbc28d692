#pragma once

/**
 * @file rep_enum.hpp
 * @brief Enumeration of the traceless-meridian representation classes of a
 *        pretzel knot or link up to conjugacy: abelian classes, the two
 *        central cases (exact for three strands), and the binary dihedral
 *        classes from the non-central congruences.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "knotrep/errors.hpp"
#include "knotrep/golden.hpp"
#include "knotrep/presentation.hpp"
#include "knotrep/pretzel.hpp"
#include "knotrep/quaternion.hpp"
#include "knotrep/rational_angle.hpp"
#include "knotrep/rep_class.hpp"
#include "knotrep/spherical.hpp"

namespace knotrep {

// ---------------------------------------------------------------------------
// Helpers

inline std::vector<Quaternion> rep_quaternions(const RepClass& rc) {
    std::vector<Quaternion> q;
    q.reserve(rc.points.size());
    for (const ImVector& v : rc.points)
        q.push_back(Quaternion::from_imaginary(v.normalized()));
    return q;
}

inline Quaternion evaluate_word(const Word& w, const std::vector<Quaternion>& gens) {
    Quaternion q = Quaternion::identity();
    for (int letter : w) {
        const int g = letter < 0 ? -letter : letter;
        if (g < 1 || static_cast<std::size_t>(g) > gens.size())
            throw UnknownGenerator("word references undeclared generator");
        const Quaternion& zg = gens[static_cast<std::size_t>(g - 1)];
        q = q * (letter > 0 ? zg : zg.conjugate());
    }
    return q;
}

// Largest deviation of any relator value from the identity.
inline double relation_residual(const RepClass& rc, const PretzelKnot& k,
                                PresentationKind kind = PresentationKind::QuotientGroup) {
    const Presentation pres = emit_presentation(k, kind);
    const std::vector<Quaternion> gens = rep_quaternions(rc);
    double worst = 0;
    for (const Word& w : pres.relators) {
        const Quaternion v = evaluate_word(w, gens) - Quaternion::identity();
        worst = std::max(worst, v.norm());
    }
    return worst;
}

inline std::string angles_str(const std::vector<RationalAngle>& as) {
    std::string s;
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (i)
            s += " ";
        s += as[i].str();
    }
    return s;
}

namespace detail {

inline bool angle_tuple_less(const std::vector<RationalAngle>& a,
                             const std::vector<RationalAngle>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline bool class_less(const RepClass& a, const RepClass& b) {
    if (a.angles != b.angles)
        return angle_tuple_less(a.angles, b.angles);
    if (a.chain != b.chain)
        return angle_tuple_less(a.chain, b.chain);
    return a.mirror_sign > b.mirror_sign; // +1 before -1
}

inline void sort_classes(std::vector<RepClass>& cs) {
    std::stable_sort(cs.begin(), cs.end(), class_less);
}

// Cumulative chain positions theta_1 = 0, theta_{i+1} = theta_i + c_i.
inline std::vector<RationalAngle> chain_positions(const std::vector<RationalAngle>& chain) {
    std::vector<RationalAngle> theta{RationalAngle()};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        theta.push_back(add_mod_2pi(theta.back(), chain[i]));
    return theta;
}

// Conjugation by j negates every chain position. The canonical
// representative has its first position outside {0, pi} in (0, pi).
inline bool chain_is_canonical(const std::vector<RationalAngle>& chain) {
    for (const RationalAngle& t : chain_positions(chain))
        if (!t.is_zero_or_pi())
            return t.num() < t.den();
    return true; // all positions in {0, pi}: fixed by the involution
}

inline std::vector<RationalAngle> negate_chain(const std::vector<RationalAngle>& chain) {
    std::vector<RationalAngle> out;
    out.reserve(chain.size());
    for (const RationalAngle& c : chain)
        out.push_back(negate_mod_2pi(c));
    return out;
}

inline std::vector<ImVector> chain_points(const std::vector<RationalAngle>& chain) {
    std::vector<ImVector> pts;
    pts.reserve(chain.size());
    for (const RationalAngle& t : chain_positions(chain))
        pts.push_back(ImVector{0, t.cos(), -t.sin()}); // j * e^{i*theta}
    return pts;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Abelian classes

/// All sign patterns eps in {+-1}^n with rho(s_i) = eps_i * j satisfying the
/// chain relations, up to the global flip; the representative fixes
/// eps_1 = +1. Knots have exactly one class.
inline std::vector<RepClass> enumerate_abelian(const PretzelKnot& k) {
    const std::size_t n = k.strands();
    if (n > 62)
        throw UnsupportedStrandCount("sign-pattern enumeration supports up to 62 strands");
    std::vector<RepClass> out;
    for (std::uint64_t mask = 0; mask < (1ull << (n - 1)); ++mask) {
        std::vector<int> eps(n, 1);
        for (std::size_t i = 1; i < n; ++i)
            eps[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
        // central value of (s_i s_{i+1})^{p_i}: the product eps_i*eps_{i+1}*j*j
        // is -eps_i*eps_{i+1}, so the power is (+1) for opposite signs and
        // (-1)^{p_i} for equal signs.
        int first = 0;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i) {
            const int prod = eps[i] * eps[(i + 1) % n];
            const int value = prod == -1 ? 1 : (k.p()[i] % 2 == 0 ? 1 : -1);
            if (i == 0)
                first = value;
            else if (value != first)
                ok = false;
        }
        if (!ok)
            continue;
        RepClass rc;
        rc.tag = CaseTag::Abelian;
        rc.abelian = true;
        rc.binary_dihedral = true;
        rc.orbit = OrbitType::Sphere;
        std::string signs;
        for (std::size_t i = 0; i < n; ++i) {
            rc.points.push_back(ImVector{0, static_cast<double>(eps[i]), 0});
            signs += eps[i] > 0 ? '+' : '-';
            const bool flip = eps[i] != eps[(i + 1) % n];
            rc.angles.push_back(RationalAngle::pi_multiple(flip ? 1 : 0, 1));
        }
        rc.chain = rc.angles;
        rc.id = "ab:" + signs;
        out.push_back(std::move(rc));
    }
    detail::sort_classes(out);
    return out;
}

// ---------------------------------------------------------------------------
// Central cases (exact classification for three strands)

/// Cartesian product of the per-strand congruence solutions, filtered by
/// spherical realizability. Non-degenerate triples yield a mirror pair of
/// classes, degenerate triples one binary dihedral class; all-{0,pi} triples
/// belong to the abelian enumeration and are skipped here.
inline std::vector<RepClass> enumerate_central_case(const PretzelKnot& k, CentralCase c,
                                                    int& next_pair_id) {
    if (k.strands() != 3)
        throw UnsupportedStrandCount("exact central-case enumeration requires three "
                                     "strands; use the numeric closure solver");
    const auto l1 = solve_edge_congruence(k.p()[0], c);
    const auto l2 = solve_edge_congruence(k.p()[1], c);
    const auto l3 = solve_edge_congruence(k.p()[2], c);
    const CaseTag tag = c == CentralCase::PlusOne ? CaseTag::PlusOne : CaseTag::MinusOne;
    const std::string prefix = c == CentralCase::PlusOne ? "c+1:" : "c-1:";

    std::vector<RepClass> out;
    for (const RationalAngle& a12 : l1)
        for (const RationalAngle& a23 : l2)
            for (const RationalAngle& a31 : l3) {
                if (a12.is_zero_or_pi() && a23.is_zero_or_pi() && a31.is_zero_or_pi())
                    continue; // abelian route
                const Realizability r = triangle_realizability(a12, a23, a31);
                if (r.verdict == Verdict::Infeasible)
                    continue;
                const std::vector<RationalAngle> angles{a12, a23, a31};
                if (r.verdict == Verdict::Degenerate) {
                    RepClass rc;
                    rc.tag = tag;
                    rc.binary_dihedral = true;
                    rc.angles = angles;
                    rc.points.assign(3, ImVector{});
                    const auto tri = construct_triangle(a12, a23, a31, +1);
                    std::copy(tri.begin(), tri.end(), rc.points.begin());
                    // exact chain increments recovered from the construction
                    RationalAngle theta2 = a12;
                    RationalAngle theta3 = a31; // z3 = (0, cos a31, -sin a31) or mirror
                    if (!a12.is_zero_or_pi() && rc.points[2].z > 0)
                        theta3 = negate_mod_2pi(a31);
                    rc.chain = {theta2, add_mod_2pi(theta3, negate_mod_2pi(theta2)),
                                negate_mod_2pi(theta3)};
                    rc.id = prefix + angles_str(angles) + ":bd";
                    out.push_back(std::move(rc));
                } else {
                    const int pair = next_pair_id++;
                    for (int mirror : {+1, -1}) {
                        RepClass rc;
                        rc.tag = tag;
                        rc.angles = angles;
                        rc.points.assign(3, ImVector{});
                        const auto tri = construct_triangle(a12, a23, a31, mirror);
                        std::copy(tri.begin(), tri.end(), rc.points.begin());
                        rc.mirror_pair_id = pair;
                        rc.mirror_sign = mirror;
                        rc.id = prefix + angles_str(angles) + (mirror > 0 ? ":+" : ":-");
                        out.push_back(std::move(rc));
                    }
                }
            }
    detail::sort_classes(out);
    return out;
}

inline std::vector<RepClass> enumerate_central_case(const PretzelKnot& k, CentralCase c) {
    int pair_id = 0;
    return enumerate_central_case(k, c, pair_id);
}

// Central-case binary dihedral chains for any strand count: sign choices
// sigma with sum(sigma_i * alpha_i) == 0 (mod 2*pi) close a great-circle
// chain. For three strands this reproduces the degenerate triangles.
inline std::vector<RepClass> central_bd_chains(const PretzelKnot& k, CentralCase c) {
    const std::size_t n = k.strands();
    if (n > 62)
        throw UnsupportedStrandCount("sign-closure enumeration supports up to 62 strands");
    std::vector<std::vector<RationalAngle>> lists;
    for (std::int64_t p : k.p())
        lists.push_back(solve_edge_congruence(p, c));
    const CaseTag tag = c == CentralCase::PlusOne ? CaseTag::PlusOne : CaseTag::MinusOne;
    const std::string prefix = c == CentralCase::PlusOne ? "c+1:" : "c-1:";

    std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> seen;
    std::vector<RepClass> out;
    std::vector<RationalAngle> tuple(n);
    auto emit = [&](const std::vector<RationalAngle>& chain) {
        std::vector<std::pair<std::int64_t, std::int64_t>> key;
        for (const RationalAngle& a : chain)
            key.emplace_back(a.num(), a.den());
        if (!seen.insert(key).second)
            return;
        RepClass rc;
        rc.tag = tag;
        rc.binary_dihedral = true;
        rc.chain = chain;
        for (const RationalAngle& a : chain)
            rc.angles.push_back(fold_to_distance(a));
        rc.points = detail::chain_points(chain);
        rc.id = prefix + angles_str(rc.angles) + ":bd";
        out.push_back(std::move(rc));
    };
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == n) {
            bool all_central = true;
            for (const RationalAngle& a : tuple)
                if (!a.is_zero_or_pi())
                    all_central = false;
            if (all_central)
                return; // abelian
            for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
                RationalAngle sum;
                std::vector<RationalAngle> chain;
                for (std::size_t s = 0; s < n; ++s) {
                    const RationalAngle inc =
                        (mask >> s) & 1 ? negate_mod_2pi(tuple[s]) : tuple[s];
                    chain.push_back(inc);
                    sum = add_mod_2pi(sum, inc);
                }
                if (!sum.is_zero())
                    continue;
                if (!detail::chain_is_canonical(chain))
                    chain = detail::negate_chain(chain);
                emit(chain);
            }
            return;
        }
        for (const RationalAngle& a : lists[i]) {
            tuple[i] = a;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    detail::sort_classes(out);
    return out;
}

// ---------------------------------------------------------------------------
// Binary dihedral classes

/// Union of the non-central (beta) classes, deduplicated under the
/// conjugation-by-j involution, and the degenerate central-case chains.
/// For a knot the total is Klassen's count (|det| - 1)/2.
inline std::vector<RepClass> enumerate_binary_dihedral(const PretzelKnot& k) {
    std::vector<RepClass> out;
    for (const BetaFamily& fam : solve_beta_congruences(k.p())) {
        for (const std::vector<RationalAngle>& tuple : fam.tuples) {
            if (!detail::chain_is_canonical(tuple))
                continue;
            RepClass rc;
            rc.tag = CaseTag::BinaryDihedral;
            rc.beta = fam.beta;
            rc.binary_dihedral = true;
            rc.chain = tuple;
            for (const RationalAngle& a : tuple)
                rc.angles.push_back(fold_to_distance(a));
            rc.points = detail::chain_points(tuple);
            rc.id = "bd:" + fam.beta.str() + ":" + angles_str(tuple);
            out.push_back(std::move(rc));
        }
    }
    if (k.strands() == 3) {
        int pair_id = 0;
        for (CentralCase c : {CentralCase::PlusOne, CentralCase::MinusOne})
            for (RepClass& rc : enumerate_central_case(k, c, pair_id))
                if (rc.binary_dihedral)
                    out.push_back(std::move(rc));
    } else {
        for (CentralCase c : {CentralCase::PlusOne, CentralCase::MinusOne})
            for (RepClass& rc : central_bd_chains(k, c))
                out.push_back(std::move(rc));
    }
    detail::sort_classes(out);
    if (is_knot(k) && static_cast<std::int64_t>(out.size()) != klassen_bd_count(k))
        throw NumericalInconsistency("binary dihedral enumeration disagrees with the "
                                     "determinant count for " + k.str());
    return out;
}

// ---------------------------------------------------------------------------
// Full report

inline std::vector<PaperDiscrepancy> reference_discrepancies(const PretzelKnot& k) {
    std::vector<PaperDiscrepancy> out;
    if (k.strands() != 3)
        return out;
    if (std::abs(k.p()[0]) != 3 || std::abs(k.p()[1]) != 5 || std::abs(k.p()[2]) != 7)
        return out;
    for (CentralCase c : {CentralCase::PlusOne, CentralCase::MinusOne}) {
        for (const golden::Row& row : golden::p357_table(c)) {
            const RationalAngle a12 = golden::row_a12(row), a23 = golden::row_a23(row),
                                a31 = golden::row_a31(row);
            const PlanarCheck pc = planar_triangle_check(a12, a23, a31);
            const Realizability r = triangle_realizability(a12, a23, a31);
            const bool gram_yes = r.verdict != Verdict::Infeasible;
            if (pc.holds != row.yes || gram_yes != row.yes) {
                PaperDiscrepancy d;
                d.central_case = c;
                d.tuple = {a12, a23, a31};
                d.paper_verdict = row.yes;
                d.planar_verdict = pc.holds;
                d.gram_verdict = r.verdict;
                d.gram_det = r.gram_det;
                out.push_back(d);
            }
        }
    }
    return out;
}

/// Merge of the abelian, central-case and binary dihedral enumerations,
/// with the printed-verdict discrepancies filled for P(+-3,+-5,+-7).
/// Exact and complete for three strands.
inline RepSpaceReport enumerate_all(const PretzelKnot& k) {
    RepSpaceReport report(k);
    report.two_bridge = two_bridge_pathology(k);
    report.abelian_classes = enumerate_abelian(k);
    report.binary_dihedral_classes = enumerate_binary_dihedral(k);
    if (k.strands() == 3) {
        int pair_id = 0;
        for (CentralCase c : {CentralCase::PlusOne, CentralCase::MinusOne})
            for (RepClass& rc : enumerate_central_case(k, c, pair_id))
                if (!rc.binary_dihedral)
                    report.non_bd_classes.push_back(std::move(rc));
        detail::sort_classes(report.non_bd_classes);
    }
    report.paper_discrepancies = reference_discrepancies(k);
    report.counts.abelian = report.abelian_classes.size();
    report.counts.binary_dihedral = report.binary_dihedral_classes.size();
    report.counts.non_binary_dihedral = report.non_bd_classes.size();

    std::set<std::string> ids;
    for (const auto* list :
         {&report.abelian_classes, &report.binary_dihedral_classes, &report.non_bd_classes})
        for (const RepClass& rc : *list)
            if (!ids.insert(rc.id).second)
                throw NumericalInconsistency("duplicate representation class " + rc.id);
    if (report.non_bd_classes.size() % 2 != 0)
        throw NumericalInconsistency("non-binary-dihedral classes failed to pair up");
    return report;
}

inline std::vector<const RepClass*> all_classes(const RepSpaceReport& r) {
    std::vector<const RepClass*> out;
    for (const auto* list : {&r.abelian_classes, &r.binary_dihedral_classes, &r.non_bd_classes})
        for (const RepClass& rc : *list)
            out.push_back(&rc);
    return out;
}

// ---------------------------------------------------------------------------
// Bridge number

enum class BridgeNumber { Two, Three, Unknown };

inline const char* to_string(BridgeNumber b) {
    switch (b) {
    case BridgeNumber::Two: return "2";
    case BridgeNumber::Three: return "3";
    default: return "unknown";
    }
}

/// Two if some |p_i| = 1; Three when all |p_i| > 1, certified by an actual
/// non-binary-dihedral class; Unknown outside the pairwise-coprime
/// three-strand hypotheses.
inline BridgeNumber bridge_number_estimate(const PretzelKnot& k) {
    if (k.strands() != 3 || !pairwise_coprime(k))
        return BridgeNumber::Unknown;
    if (two_bridge_pathology(k))
        return BridgeNumber::Two;
    const RepSpaceReport report = enumerate_all(k);
    return report.non_bd_classes.empty() ? BridgeNumber::Unknown : BridgeNumber::Three;
}

} // namespace knotrep
