#pragma once

// The pretzel parameter tuple and its classical invariants.

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "knotrep/errors.hpp"

namespace knotrep {

class PretzelKnot {
public:
    explicit PretzelKnot(std::vector<std::int64_t> params) : p_(std::move(params)) {
        if (p_.size() < 2)
            throw ZeroParameter("a pretzel knot needs at least two strands");
        for (std::int64_t v : p_)
            if (v == 0)
                throw ZeroParameter("a zero pretzel parameter splits the knot into a "
                                    "connected sum; rejected");
    }

    const std::vector<std::int64_t>& p() const { return p_; }
    std::size_t strands() const { return p_.size(); }

    std::string str() const {
        std::string s = "P(";
        for (std::size_t i = 0; i < p_.size(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(p_[i]);
        }
        return s + ")";
    }

private:
    std::vector<std::int64_t> p_;
};

struct KnotDeterminant {
    std::int64_t signed_value = 0; // sum over i of prod_{j != i} p_j
    std::int64_t absolute = 0;
};

inline KnotDeterminant determinant(const PretzelKnot& k) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < k.strands(); ++i) {
        std::int64_t prod = 1;
        for (std::size_t j = 0; j < k.strands(); ++j)
            if (j != i)
                prod *= k.p()[j];
        s += prod;
    }
    return {s, s < 0 ? -s : s};
}

inline std::size_t component_count(const PretzelKnot& k) {
    std::size_t evens = 0;
    for (std::int64_t v : k.p())
        if (v % 2 == 0)
            ++evens;
    if (evens == 0)
        return k.strands() % 2 == 1 ? 1 : 2;
    return evens;
}

inline bool is_knot(const PretzelKnot& k) { return component_count(k) == 1; }

// Klassen's count (|det| - 1)/2 of irreducible binary dihedral classes.
inline std::int64_t klassen_bd_count(const PretzelKnot& k) {
    if (!is_knot(k))
        throw NotAKnot("binary dihedral count is stated for knots only");
    return (determinant(k).absolute - 1) / 2;
}

// 2*V for the genus-1 Seifert surface of a 3-strand all-odd pretzel:
// V = 1/2 [[p+q, q+1], [q-1, q+r]].
struct SeifertMatrix {
    std::int64_t twice[2][2] = {{0, 0}, {0, 0}};
};

inline bool has_seifert_form(const PretzelKnot& k) {
    if (k.strands() != 3)
        return false;
    for (std::int64_t v : k.p())
        if (v % 2 == 0)
            return false;
    return true;
}

inline SeifertMatrix seifert_matrix(const PretzelKnot& k) {
    if (!has_seifert_form(k))
        throw UnsupportedShape("Seifert matrix implemented for 3-strand all-odd "
                               "pretzels only");
    const std::int64_t p = k.p()[0], q = k.p()[1], r = k.p()[2];
    SeifertMatrix v;
    v.twice[0][0] = p + q;
    v.twice[0][1] = q + 1;
    v.twice[1][0] = q - 1;
    v.twice[1][1] = q + r;
    return v;
}

// Signature of V + V^t = [[p+q, q], [q, q+r]], exact from trace and
// determinant of the symmetric 2x2 integer matrix.
inline int signature(const PretzelKnot& k) {
    const SeifertMatrix v = seifert_matrix(k);
    const std::int64_t a = v.twice[0][0];
    const std::int64_t b = (v.twice[0][1] + v.twice[1][0]) / 2;
    const std::int64_t c = v.twice[1][1];
    const std::int64_t det = a * c - b * b;
    const std::int64_t tr = a + c;
    if (det > 0)
        return tr > 0 ? 2 : -2;
    if (det < 0)
        return 0;
    return tr > 0 ? 1 : (tr < 0 ? -1 : 0);
}

inline int lin_invariant(const PretzelKnot& k) { return signature(k) / 2; }

inline bool pairwise_coprime(const PretzelKnot& k) {
    for (std::size_t i = 0; i < k.strands(); ++i)
        for (std::size_t j = i + 1; j < k.strands(); ++j) {
            std::int64_t a = std::abs(k.p()[i]), b = std::abs(k.p()[j]);
            while (b) {
                std::int64_t t = a % b;
                a = b;
                b = t;
            }
            if (a != 1)
                return false;
        }
    return true;
}

// Some |p_i| = 1 collapses the diagram to bridge number <= 2; such inputs
// are accepted but flagged, since they only carry binary dihedral classes.
inline bool two_bridge_pathology(const PretzelKnot& k) {
    for (std::int64_t v : k.p())
        if (v == 1 || v == -1)
            return true;
    return false;
}

} // namespace knotrep
