#pragma once

/**
 * @file closure.hpp
 * @brief Numeric exploration of closed spherical chains with prescribed
 *        consecutive distances: random-restart closure solving and a local
 *        dimension estimate for the solution families.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "knotrep/errors.hpp"
#include "knotrep/linalg.hpp"
#include "knotrep/quaternion.hpp"
#include "knotrep/rational_angle.hpp"

namespace knotrep {

namespace detail {

inline void tangent_frame(const ImVector& z, ImVector& u, ImVector& v) {
    const ImVector e = std::abs(z.x) <= 0.9 ? axis_i : axis_j;
    u = e.cross(z).normalized();
    v = z.cross(u);
}

// Chain with z1 = j, z2 = j*e^{i*alpha_1}; each later point sits on the
// distance circle about its predecessor at azimuth phi.
inline std::vector<ImVector> build_chain(const std::vector<double>& alpha,
                                         const std::vector<double>& phi) {
    const std::size_t n = alpha.size();
    std::vector<ImVector> pts(n);
    pts[0] = axis_j;
    pts[1] = ImVector{0, std::cos(alpha[0]), -std::sin(alpha[0])};
    for (std::size_t k = 1; k + 1 < n; ++k) {
        ImVector u, v;
        tangent_frame(pts[k], u, v);
        const double a = alpha[k], f = phi[k - 1];
        pts[k + 1] = pts[k] * std::cos(a) + (u * std::cos(f) + v * std::sin(f)) * std::sin(a);
    }
    return pts;
}

// Nelder-Mead on [0, 2*pi)^d; deterministic given the start simplex.
inline std::vector<double> nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                                       std::vector<double> x0, double scale, int iterations) {
    const std::size_t d = x0.size();
    std::vector<std::vector<double>> simplex(d + 1, x0);
    for (std::size_t i = 0; i < d; ++i)
        simplex[i + 1][i] += scale;
    std::vector<double> val(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        val[i] = f(simplex[i]);

    auto order = [&] {
        std::vector<std::size_t> idx(d + 1);
        for (std::size_t i = 0; i <= d; ++i)
            idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
        std::vector<std::vector<double>> s2;
        std::vector<double> v2;
        for (std::size_t i : idx) {
            s2.push_back(simplex[i]);
            v2.push_back(val[i]);
        }
        simplex.swap(s2);
        val.swap(v2);
    };

    for (int it = 0; it < iterations; ++it) {
        order();
        if (val.front() < 1e-20)
            break;
        std::vector<double> centroid(d, 0.0);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k)
                centroid[k] += simplex[i][k];
        }
        for (double& c : centroid)
            c /= static_cast<double>(d);
        auto blend = [&](double t) {
            std::vector<double> p(d);
            for (std::size_t k = 0; k < d; ++k)
                p[k] = centroid[k] + t * (simplex[d][k] - centroid[k]);
            return p;
        };
        const auto refl = blend(-1.0);
        const double fr = f(refl);
        if (fr < val.front()) {
            const auto exp_p = blend(-2.0);
            const double fe = f(exp_p);
            simplex[d] = fe < fr ? exp_p : refl;
            val[d] = std::min(fe, fr);
        } else if (fr < val[d - 1]) {
            simplex[d] = refl;
            val[d] = fr;
        } else {
            const auto contr = blend(0.5);
            const double fc = f(contr);
            if (fc < val[d]) {
                simplex[d] = contr;
                val[d] = fc;
            } else {
                for (std::size_t i = 1; i <= d; ++i) {
                    for (std::size_t k = 0; k < d; ++k)
                        simplex[i][k] = simplex[0][k] + 0.5 * (simplex[i][k] - simplex[0][k]);
                    val[i] = f(simplex[i]);
                }
            }
        }
    }
    order();
    return simplex.front();
}

} // namespace detail

/// Random-restart search for closed chains realizing the angle tuple; every
/// solution with closure error below 1e-8 is kept, deduplicated at
/// resolution 1e-4. An empty list means nothing was found within the
/// attempt budget.
inline std::vector<std::vector<ImVector>>
solve_closure_numeric(const std::vector<RationalAngle>& angles, int attempts,
                      std::uint64_t seed) {
    const std::size_t n = angles.size();
    if (n < 3)
        throw UnsupportedStrandCount("closure solving needs at least three edges");
    std::vector<double> alpha;
    alpha.reserve(n);
    for (const RationalAngle& a : angles)
        alpha.push_back(a.radians());
    const double target = fold_to_distance(angles.back()).radians();

    auto closure_err = [&](const std::vector<double>& phi) {
        const auto pts = detail::build_chain(alpha, phi);
        const double d = std::acos(std::max(-1.0, std::min(1.0, pts.back().dot(pts.front()))));
        const double e = d - target;
        return e * e;
    };

    std::mt19937_64 rng(seed);
    auto uniform_angle = [&] {
        return 2.0 * M_PI * static_cast<double>(rng() >> 11) * 0x1.0p-53;
    };

    const std::size_t d = n - 2;
    std::vector<std::vector<ImVector>> solutions;
    for (int a = 0; a < attempts; ++a) {
        std::vector<double> x0(d);
        for (double& x : x0)
            x = uniform_angle();
        auto phi = detail::nelder_mead(closure_err, x0, 0.7, 300);
        if (std::sqrt(closure_err(phi)) >= 1e-8)
            continue;
        phi = detail::nelder_mead(closure_err, phi, 1e-3, 150); // polish
        const auto pts = detail::build_chain(alpha, phi);
        bool known = false;
        for (const auto& s : solutions) {
            bool same = true;
            for (std::size_t i = 0; i < n && same; ++i)
                same = std::abs(s[i].x - pts[i].x) < 1e-4 && std::abs(s[i].y - pts[i].y) < 1e-4 &&
                       std::abs(s[i].z - pts[i].z) < 1e-4;
            if (same) {
                known = true;
                break;
            }
        }
        if (!known)
            solutions.push_back(pts);
    }
    std::sort(solutions.begin(), solutions.end(),
              [](const std::vector<ImVector>& a, const std::vector<ImVector>& b) {
                  for (std::size_t i = 0; i < a.size(); ++i) {
                      if (a[i].x != b[i].x)
                          return a[i].x < b[i].x;
                      if (a[i].y != b[i].y)
                          return a[i].y < b[i].y;
                      if (a[i].z != b[i].z)
                          return a[i].z < b[i].z;
                  }
                  return false;
              });
    return solutions;
}

/// Local dimension of the solution family through a closed configuration:
/// nullity of the distance-constraint Jacobian on the product of tangent
/// planes, minus the three conjugation directions, floored at zero.
inline int family_dimension_estimate(const std::vector<ImVector>& points,
                                     const std::vector<RationalAngle>& angles) {
    const std::size_t n = points.size();
    if (n < 3 || angles.size() != n)
        throw UnsupportedStrandCount("configuration and angle tuple sizes disagree");
    std::vector<ImVector> pts;
    pts.reserve(n);
    for (const ImVector& p : points)
        pts.push_back(p.normalized());

    std::vector<double> dist(n), target(n);
    for (std::size_t i = 0; i < n; ++i) {
        dist[i] = sphere_distance(pts[i], pts[(i + 1) % n]);
        target[i] = fold_to_distance(angles[i]).radians();
        if (dist[i] < 1e-9 || M_PI - dist[i] < 1e-9)
            throw DegenerateConfiguration("consecutive points coincide or are antipodal");
        if (std::abs(dist[i] - target[i]) > 1e-8)
            throw NumericalInconsistency("configuration does not satisfy the distance "
                                         "constraints");
    }

    MatX jac(static_cast<int>(n), static_cast<int>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 1) % n;
        const double s = std::sin(dist[i]);
        ImVector ui, vi, uj, vj;
        detail::tangent_frame(pts[i], ui, vi);
        detail::tangent_frame(pts[j], uj, vj);
        jac(static_cast<int>(i), static_cast<int>(2 * i)) = -ui.dot(pts[j]) / s;
        jac(static_cast<int>(i), static_cast<int>(2 * i + 1)) = -vi.dot(pts[j]) / s;
        jac(static_cast<int>(i), static_cast<int>(2 * j)) = -uj.dot(pts[i]) / s;
        jac(static_cast<int>(i), static_cast<int>(2 * j + 1)) = -vj.dot(pts[i]) / s;
    }
    const RankDecision rd = rank_decision(jac, 1e-6, 0);
    return std::max(0, rd.nullity - 3);
}

} // namespace knotrep
