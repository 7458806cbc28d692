#pragma once

/**
 * @file golden.hpp
 * @brief Bundled reference tables for P(3,5,7): the candidate angle triples
 *        of both central cases together with the printed interval columns
 *        and feasibility verdicts they shipped with. The audit compares
 *        these against freshly computed values; reference data is typed
 *        here once and nowhere else.
 */

#include <array>
#include <cstdint>

#include "knotrep/rational_angle.hpp"

namespace knotrep::golden {

struct Row {
    // numerator/denominator of each angle as a fraction of pi
    std::int64_t a12n, a12d;
    std::int64_t a23n, a23d;
    std::int64_t a31n, a31d;
    std::int64_t lon, lod; // printed |a23 - a31|
    std::int64_t hin, hid; // printed a23 + a31
    bool yes;              // printed feasibility verdict
};

inline constexpr std::array<Row, 6> p357_plus{{
    {1, 3, 1, 5, 1, 7, 2, 35, 12, 35, false},
    {1, 3, 1, 5, 3, 7, 8, 35, 22, 35, true},
    {1, 3, 1, 5, 5, 7, 18, 35, 32, 35, false},
    {1, 3, 3, 5, 1, 7, 16, 35, 26, 35, false},
    {1, 3, 3, 5, 3, 7, 6, 35, 36, 35, true},
    {1, 3, 3, 5, 5, 7, 4, 35, 46, 35, true},
}};

inline constexpr std::array<Row, 6> p357_minus{{
    {2, 3, 2, 5, 2, 7, 4, 35, 24, 35, true},
    {2, 3, 2, 5, 4, 7, 6, 35, 34, 35, true},
    {2, 3, 2, 5, 6, 7, 16, 35, 44, 35, true},
    {2, 3, 4, 5, 2, 7, 18, 35, 38, 35, true},
    {2, 3, 4, 5, 4, 7, 8, 35, 48, 35, true},
    {2, 3, 4, 5, 6, 7, 2, 35, 58, 35, true},
}};

inline const std::array<Row, 6>& p357_table(CentralCase c) {
    return c == CentralCase::PlusOne ? p357_plus : p357_minus;
}

// The reference count of non binary dihedral conjugacy classes for
// P(+-3,+-5,+-7) (two per feasible row as printed). Reported alongside the
// computed count, never asserted.
inline constexpr std::size_t p357_reference_non_bd_classes = 18;

inline RationalAngle row_a12(const Row& r) { return RationalAngle::pi_multiple(r.a12n, r.a12d); }
inline RationalAngle row_a23(const Row& r) { return RationalAngle::pi_multiple(r.a23n, r.a23d); }
inline RationalAngle row_a31(const Row& r) { return RationalAngle::pi_multiple(r.a31n, r.a31d); }
inline RationalAngle row_lo(const Row& r) { return RationalAngle::exact_pi_multiple(r.lon, r.lod); }
inline RationalAngle row_hi(const Row& r) { return RationalAngle::exact_pi_multiple(r.hin, r.hid); }

} // namespace knotrep::golden
