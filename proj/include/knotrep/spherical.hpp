#pragma once

/**
 * @file spherical.hpp
 * @brief Realizability and construction of spherical triangles with
 *        prescribed pairwise geodesic distances.
 *
 * Three unit vectors at pairwise distances (a, b, c) exist in R^3 iff the
 * Gram determinant 1 + 2*cos(a)cos(b)cos(c) - cos^2(a) - cos^2(b) - cos^2(c)
 * is nonnegative; it vanishes exactly on the great-circle (collinear)
 * configurations. Degeneracy is decided by the exact rational identity
 * fold(a +- b) == c, never by a float threshold, because the degenerate
 * configurations are the binary dihedral ones and must be classified
 * exactly.
 */

#include <array>
#include <cmath>

#include "knotrep/errors.hpp"
#include "knotrep/quaternion.hpp"
#include "knotrep/rational_angle.hpp"

namespace knotrep {

enum class Verdict { NonDegenerate, Degenerate, Infeasible };

struct Realizability {
    Verdict verdict = Verdict::Infeasible;
    double gram_det = 0;
};

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::NonDegenerate: return "non-degenerate";
    case Verdict::Degenerate: return "degenerate";
    default: return "infeasible";
    }
}

inline void require_distance_range(const RationalAngle& a, const char* what) {
    if (a.num() < 0 || a.num() > a.den())
        throw OutOfRange(std::string(what) + " must lie in [0, pi]");
}

// Collinear on a great circle <=> c == fold(a + b) or c == fold(a - b).
inline bool exactly_degenerate(const RationalAngle& a, const RationalAngle& b,
                               const RationalAngle& c) {
    return fold_to_distance(add_mod_2pi(a, b)) == c ||
           fold_to_distance(add_mod_2pi(a, negate_mod_2pi(b))) == c;
}

inline double gram_determinant(const RationalAngle& a, const RationalAngle& b,
                               const RationalAngle& c) {
    const double ca = a.cos(), cb = b.cos(), cc = c.cos();
    return 1.0 + 2.0 * ca * cb * cc - ca * ca - cb * cb - cc * cc;
}

inline Realizability triangle_realizability(const RationalAngle& a, const RationalAngle& b,
                                            const RationalAngle& c) {
    require_distance_range(a, "triangle side a");
    require_distance_range(b, "triangle side b");
    require_distance_range(c, "triangle side c");
    Realizability r;
    r.gram_det = gram_determinant(a, b, c);
    if (exactly_degenerate(a, b, c)) {
        r.verdict = Verdict::Degenerate;
        return r;
    }
    // The exact pre-test bounds |gram| away from zero here.
    if (std::abs(r.gram_det) <= 1e-9)
        throw NumericalInconsistency("gram determinant too close to zero for a "
                                     "non-degenerate rational triangle");
    r.verdict = r.gram_det > 0 ? Verdict::NonDegenerate : Verdict::Infeasible;
    return r;
}

struct PlanarCheck {
    RationalAngle lo; // |a23 - a31|, exact
    RationalAngle hi; // a23 + a31, exact, NOT folded
    bool holds = false;
};

// The flat triangle inequality |a23 - a31| <= a12 <= a23 + a31 (non-strict).
// Necessary on the sphere but not sufficient; reported alongside the Gram
// verdict.
inline PlanarCheck planar_triangle_check(const RationalAngle& a12, const RationalAngle& a23,
                                         const RationalAngle& a31) {
    require_distance_range(a12, "a12");
    require_distance_range(a23, "a23");
    require_distance_range(a31, "a31");
    PlanarCheck pc;
    pc.lo = exact_abs_diff(a23, a31);
    pc.hi = exact_sum(a23, a31);
    pc.holds = pc.lo <= a12 && a12 <= pc.hi;
    return pc;
}

/// Canonical triangle with z1 = j and z2 = j*e^{i*a12}; z3 is the solution of
/// <z3,z1> = cos(a31), <z3,z2> = cos(a23), |z3| = 1 whose i-component carries
/// the requested mirror sign. The two mirror images coincide (i-component 0)
/// exactly in the degenerate case.
inline std::array<ImVector, 3> construct_triangle(const RationalAngle& a12,
                                                  const RationalAngle& a23,
                                                  const RationalAngle& a31, int mirror) {
    require_distance_range(a12, "a12");
    require_distance_range(a23, "a23");
    require_distance_range(a31, "a31");
    const ImVector z1 = axis_j;
    const ImVector z2{0, a12.cos(), -a12.sin()};
    const bool degenerate = exactly_degenerate(a12, a23, a31);

    if (a12.is_zero_or_pi()) {
        // z1, z2 colinear: any solution lies on a great circle through them.
        if (!degenerate)
            throw InfeasibleTriangle("no triangle with colinear first edge and "
                                     "inconsistent remaining distances");
        return {z1, z2, ImVector{0, a31.cos(), -a31.sin()}};
    }

    const double y = a31.cos();
    const double z = (y * a12.cos() - a23.cos()) / a12.sin();
    double x2 = 1.0 - y * y - z * z;
    if (degenerate)
        x2 = 0.0;
    if (x2 < 0) {
        if (x2 < -1e-12)
            throw InfeasibleTriangle("distance constraints admit no point on the sphere");
        x2 = 0.0;
    }
    const double x = (mirror >= 0 ? 1.0 : -1.0) * std::sqrt(x2);
    return {z1, z2, ImVector{x, y, z}};
}

} // namespace knotrep
