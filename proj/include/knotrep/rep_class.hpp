#pragma once

// One conjugacy class of traceless-meridian representations, and the
// per-knot enumeration report.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "knotrep/pretzel.hpp"
#include "knotrep/quaternion.hpp"
#include "knotrep/rational_angle.hpp"
#include "knotrep/spherical.hpp"

namespace knotrep {

enum class CaseTag { PlusOne, MinusOne, BinaryDihedral, Abelian };
enum class OrbitType { Sphere, ProjectiveSpace };

inline const char* to_string(CaseTag t) {
    switch (t) {
    case CaseTag::PlusOne: return "+1";
    case CaseTag::MinusOne: return "-1";
    case CaseTag::BinaryDihedral: return "beta";
    default: return "abelian";
    }
}

inline const char* to_string(OrbitType o) {
    return o == OrbitType::Sphere ? "S2" : "RP3";
}

struct RepClass {
    std::string id;
    CaseTag tag = CaseTag::Abelian;
    std::optional<RationalAngle> beta;  // set iff tag == BinaryDihedral
    std::vector<RationalAngle> angles;  // consecutive spherical distances, in [0, pi]
    std::vector<RationalAngle> chain;   // great-circle chain increments in [0, 2*pi);
                                        // empty for non-binary-dihedral classes
    std::vector<ImVector> points;       // canonical representative, points[0] = j
    bool abelian = false;
    bool binary_dihedral = false;
    std::optional<int> mirror_pair_id;  // shared by the two mirror classes
    int mirror_sign = 0;                // +1 / -1 within a mirror pair, else 0
    OrbitType orbit = OrbitType::ProjectiveSpace;
};

struct PaperDiscrepancy {
    CentralCase central_case = CentralCase::PlusOne;
    std::array<RationalAngle, 3> tuple;
    bool paper_verdict = false;   // printed "yes"/"no"
    bool planar_verdict = false;  // computed flat triangle inequality
    Verdict gram_verdict = Verdict::Infeasible;
    double gram_det = 0;
};

struct ClassCounts {
    std::size_t abelian = 0;
    std::size_t binary_dihedral = 0;
    std::size_t non_binary_dihedral = 0;
};

struct RepSpaceReport {
    PretzelKnot knot;
    std::vector<RepClass> abelian_classes;
    std::vector<RepClass> binary_dihedral_classes;
    std::vector<RepClass> non_bd_classes; // mirror pairs, even cardinality
    std::vector<PaperDiscrepancy> paper_discrepancies;
    ClassCounts counts;
    bool two_bridge = false;

    explicit RepSpaceReport(PretzelKnot k) : knot(std::move(k)) {}
};

} // namespace knotrep
