#pragma once

/**
 * @file tangent.hpp
 * @brief Zariski tangent space at an enumerated representation: the word
 *        cocycle condition turns every relator of the quotient presentation
 *        into a 3-row linear constraint on the generator values
 *        (xi(s_1),...,xi(s_n)) in su(2)^n; the cocycle space is the kernel.
 *
 * The recursion xi(gh) = xi(g) + Ad_{rho(g)} xi(h), with
 * xi(g^-1) = -Ad_{rho(g)}^-1 xi(g), subsumes the whole case analysis:
 * meridian perpendicularity and the vanishing of xi at the central element
 * fall out of the relators s_1^4 and s_i^2 s_1^-2 mechanically.
 */

#include <string>
#include <vector>

#include "knotrep/errors.hpp"
#include "knotrep/linalg.hpp"
#include "knotrep/presentation.hpp"
#include "knotrep/quaternion.hpp"
#include "knotrep/rep_class.hpp"
#include "knotrep/rep_enum.hpp"

namespace knotrep {

/// Matrices M_g with xi(word) = sum_g M_g * xi(s_g) for every cocycle xi,
/// given the adjoint matrices of the generator images.
inline std::vector<Mat3> word_cocycle_coefficients(const Word& word,
                                                   const std::vector<Mat3>& ads) {
    std::vector<Mat3> coeff(ads.size(), Mat3::zero());
    Mat3 prefix = Mat3::identity();
    for (int letter : word) {
        const int g = (letter < 0 ? -letter : letter) - 1;
        if (g < 0 || static_cast<std::size_t>(g) >= ads.size())
            throw UnknownGenerator("word references undeclared generator");
        if (letter > 0) {
            coeff[static_cast<std::size_t>(g)] =
                coeff[static_cast<std::size_t>(g)] + prefix;
            prefix = prefix * ads[static_cast<std::size_t>(g)];
        } else {
            prefix = prefix * ads[static_cast<std::size_t>(g)].transposed();
            coeff[static_cast<std::size_t>(g)] =
                coeff[static_cast<std::size_t>(g)] - prefix;
        }
    }
    return coeff;
}

inline std::vector<Mat3> word_cocycle_coefficients(const Word& word, const RepClass& rep) {
    std::vector<Mat3> ads;
    for (const Quaternion& q : rep_quaternions(rep))
        ads.push_back(adjoint_matrix(q));
    return word_cocycle_coefficients(word, ads);
}

// B_{i,i+1} = sum_{k=0}^{p-1} Ad^k_{rho(s_i s_{i+1})}, p > 0.
inline Mat3 b_operator(std::int64_t p, const Quaternion& edge) {
    if (p <= 0)
        throw ZeroParameter("b_operator is defined for positive exponents");
    const Mat3 ad = adjoint_matrix(edge);
    Mat3 sum = Mat3::zero();
    Mat3 pow = Mat3::identity();
    for (std::int64_t k = 0; k < p; ++k) {
        sum = sum + pow;
        pow = pow * ad;
    }
    return sum;
}

struct CocycleSystem {
    int unknowns = 0;            // 3n
    MatX constraint_matrix;      // 3 rows per quotient relator
    int z1_dim = 0;
    int b1_dim = 0;
    int h1_dim = 0;
    double min_nonzero_sv = 0;   // smallest singular value counted as nonzero
};

inline MatX coboundary_matrix(const std::vector<Mat3>& ads) {
    MatX m(static_cast<int>(3 * ads.size()), 3);
    for (std::size_t g = 0; g < ads.size(); ++g) {
        const Mat3 blk = Mat3::identity() - ads[g];
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m(static_cast<int>(3 * g) + r, c) = blk(r, c);
    }
    return m;
}

inline CocycleSystem assemble_cocycle_system(const RepClass& rep, const PretzelKnot& k) {
    const double residual = relation_residual(rep, k);
    if (residual > 1e-9)
        throw NumericalInconsistency("representation violates the group relations "
                                     "(residual " + std::to_string(residual) + ")");
    std::vector<Mat3> ads;
    for (const Quaternion& q : rep_quaternions(rep))
        ads.push_back(adjoint_matrix(q));

    const Presentation pres = emit_presentation(k, PresentationKind::QuotientGroup);
    const int n = static_cast<int>(k.strands());
    CocycleSystem cs;
    cs.unknowns = 3 * n;
    cs.constraint_matrix = MatX(3 * static_cast<int>(pres.relators.size()), 3 * n);
    for (std::size_t ri = 0; ri < pres.relators.size(); ++ri) {
        const std::vector<Mat3> coeff = word_cocycle_coefficients(pres.relators[ri], ads);
        for (int g = 0; g < n; ++g)
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c)
                    cs.constraint_matrix(static_cast<int>(3 * ri) + r, 3 * g + c) =
                        coeff[static_cast<std::size_t>(g)](r, c);
    }

    // Rank decisions are protected by the spectral-gap guard: entries are
    // cosines of rational angles and observed gaps are many orders wide.
    const RankDecision z = rank_decision(cs.constraint_matrix, 1e-8, 1e3);
    cs.z1_dim = z.nullity;
    cs.min_nonzero_sv = z.min_kept;
    const RankDecision b = rank_decision(coboundary_matrix(ads), 1e-8, 0);
    cs.b1_dim = b.rank;
    cs.h1_dim = cs.z1_dim - cs.b1_dim;
    if (cs.h1_dim < 0)
        throw NumericalInconsistency("coboundary space exceeds cocycle space");
    return cs;
}

inline int cocycle_space_dim(const RepClass& rep, const PretzelKnot& k) {
    return assemble_cocycle_system(rep, k).z1_dim;
}

inline int coboundary_space_dim(const RepClass& rep) {
    std::vector<Mat3> ads;
    for (const Quaternion& q : rep_quaternions(rep))
        ads.push_back(adjoint_matrix(q));
    return rank_decision(coboundary_matrix(ads), 1e-8, 0).rank;
}

inline int h1_dim(const RepClass& rep, const PretzelKnot& k) {
    return assemble_cocycle_system(rep, k).h1_dim;
}

struct TangentRow {
    std::string class_id;
    int z1_dim = 0;
    int b1_dim = 0;
    int h1_dim = 0;
    double min_nonzero_sv = 0;
};

inline std::vector<TangentRow> tangent_rows(const RepSpaceReport& report) {
    std::vector<TangentRow> rows;
    for (const RepClass* rc : all_classes(report)) {
        const CocycleSystem cs = assemble_cocycle_system(*rc, report.knot);
        rows.push_back({rc->id, cs.z1_dim, cs.b1_dim, cs.h1_dim, cs.min_nonzero_sv});
    }
    return rows;
}

} // namespace knotrep
