#pragma once

/**
 * @file linalg.hpp
 * @brief Dense matrices of the small sizes appearing here (at most a few
 *        dozen rows), singular values by one-sided Jacobi, and rank/nullity
 *        decisions with an explicit spectral-gap guard.
 */

#include <algorithm>
#include <cmath>
#include <vector>

#include "knotrep/errors.hpp"

namespace knotrep {

struct MatX {
    int rows = 0, cols = 0;
    std::vector<double> a; // row-major

    MatX() = default;
    MatX(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    MatX transposed() const {
        MatX t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }
};

// Singular values in descending order; length min(rows, cols).
inline std::vector<double> singular_values(const MatX& m) {
    // One-sided Jacobi on the thinner orientation: orthogonalize columns.
    const MatX& work = m.rows >= m.cols ? m : m.transposed();
    const int rows = work.rows, cols = work.cols;
    std::vector<std::vector<double>> col(static_cast<std::size_t>(cols),
                                         std::vector<double>(static_cast<std::size_t>(rows)));
    for (int c = 0; c < cols; ++c)
        for (int r = 0; r < rows; ++r)
            col[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = work(r, c);

    auto dot = [&](int i, int j) {
        double s = 0;
        for (int r = 0; r < rows; ++r)
            s += col[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                 col[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
        return s;
    };

    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < cols - 1; ++i)
            for (int j = i + 1; j < cols; ++j) {
                const double aii = dot(i, i), ajj = dot(j, j), aij = dot(i, j);
                if (std::abs(aij) <= 1e-15 * std::sqrt(aii * ajj) || aij == 0.0)
                    continue;
                rotated = true;
                const double tau = (ajj - aii) / (2.0 * aij);
                const double t = (tau >= 0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int r = 0; r < rows; ++r) {
                    const double vi = col[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
                    const double vj = col[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)];
                    col[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = c * vi - s * vj;
                    col[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] = s * vi + c * vj;
                }
            }
        if (!rotated)
            break;
    }

    std::vector<double> sv(static_cast<std::size_t>(cols));
    for (int c = 0; c < cols; ++c)
        sv[static_cast<std::size_t>(c)] = std::sqrt(dot(c, c));
    std::sort(sv.begin(), sv.end(), std::greater<double>());
    return sv;
}

struct RankDecision {
    int rank = 0;
    int nullity = 0;          // cols - rank
    double min_kept = 0;      // smallest singular value counted as nonzero
    double max_dropped = 0;   // largest singular value counted as zero
};

/// Rank of `m` with zeros decided by sigma < rel_tol * sigma_max. When
/// `required_gap` > 0 the ratio min_kept / max_dropped must exceed it, or
/// RankAmbiguous is thrown.
inline RankDecision rank_decision(const MatX& m, double rel_tol, double required_gap) {
    RankDecision rd;
    if (m.rows == 0 || m.cols == 0) {
        rd.nullity = m.cols;
        return rd;
    }
    const std::vector<double> sv = singular_values(m);
    const double smax = sv.front();
    if (smax == 0.0) {
        rd.nullity = m.cols;
        return rd;
    }
    const double tol = rel_tol * smax;
    for (double s : sv) {
        if (s >= tol) {
            ++rd.rank;
            rd.min_kept = s;
        } else {
            rd.max_dropped = std::max(rd.max_dropped, s);
        }
    }
    rd.nullity = m.cols - rd.rank;
    if (required_gap > 0 && rd.rank > 0 && rd.rank < static_cast<int>(sv.size()) &&
        rd.max_dropped > 0 && rd.min_kept / rd.max_dropped <= required_gap)
        throw RankAmbiguous("singular value gap too small to decide rank");
    return rd;
}

} // namespace knotrep
