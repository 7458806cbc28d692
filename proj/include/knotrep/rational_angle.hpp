#pragma once

/**
 * @file rational_angle.hpp
 * @brief Exact arithmetic for angles that are rational multiples of pi, and
 *        the congruence solvers driving the representation enumeration.
 *
 * Every angle in the enumeration is an exact statement mod 2*pi, so angles
 * are stored as reduced fractions (numerator/denominator of the multiple of
 * pi) and never as floating-point radians. Trigonometric evaluation is
 * deferred to the geometry layer.
 */

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "knotrep/errors.hpp"

namespace knotrep {

class RationalAngle {
public:
    // Value is (num/den)*pi, reduced, den > 0. The default construction
    // path folds into the canonical window [0, 2*pi).
    constexpr RationalAngle() = default;

    static RationalAngle pi_multiple(std::int64_t num, std::int64_t den) {
        RationalAngle a = exact_pi_multiple(num, den);
        a.num_ = ((a.num_ % (2 * a.den_)) + 2 * a.den_) % (2 * a.den_);
        a.reduce();
        return a;
    }

    // Reduced but not folded; used where the exact (possibly out-of-window)
    // value is the point, e.g. the unfolded sum column of the tables.
    static RationalAngle exact_pi_multiple(std::int64_t num, std::int64_t den) {
        if (den == 0)
            throw ZeroParameter("rational angle with zero denominator");
        RationalAngle a;
        a.num_ = den < 0 ? -num : num;
        a.den_ = den < 0 ? -den : den;
        a.reduce();
        return a;
    }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    double radians() const {
        return static_cast<double>(num_) / static_cast<double>(den_) * M_PI;
    }
    double cos() const { return std::cos(radians()); }
    double sin() const { return std::sin(radians()); }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_pi() const { return num_ == 1 && den_ == 1; }
    constexpr bool is_zero_or_pi() const { return is_zero() || is_pi(); }

    friend constexpr bool operator==(const RationalAngle&, const RationalAngle&) = default;
    friend constexpr std::strong_ordering operator<=>(const RationalAngle& a,
                                                      const RationalAngle& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // Fraction of pi, e.g. "1/3", "0", "1".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1)
            s += "/" + std::to_string(den_);
        return s;
    }

private:
    void reduce() {
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Exact reduced sum folded into [0, 2*pi).
inline RationalAngle add_mod_2pi(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle::pi_multiple(a.num() * b.den() + b.num() * a.den(),
                                      a.den() * b.den());
}

inline RationalAngle negate_mod_2pi(const RationalAngle& a) {
    return RationalAngle::pi_multiple(-a.num(), a.den());
}

// Spherical distances live in [0, pi]: a in [0, 2*pi) maps to min(a, 2*pi - a).
inline RationalAngle fold_to_distance(const RationalAngle& a) {
    if (a.num() < 0 || a.num() >= 2 * a.den())
        throw OutOfRange("fold_to_distance expects an angle in [0, 2*pi)");
    if (a.num() <= a.den())
        return a;
    return RationalAngle::exact_pi_multiple(2 * a.den() - a.num(), a.den());
}

// Exact |a - b| and a + b, not folded.
inline RationalAngle exact_sum(const RationalAngle& a, const RationalAngle& b) {
    return RationalAngle::exact_pi_multiple(a.num() * b.den() + b.num() * a.den(),
                                            a.den() * b.den());
}

inline RationalAngle exact_abs_diff(const RationalAngle& a, const RationalAngle& b) {
    std::int64_t n = a.num() * b.den() - b.num() * a.den();
    return RationalAngle::exact_pi_multiple(n < 0 ? -n : n, a.den() * b.den());
}

enum class CentralCase { PlusOne, MinusOne };

/// All alpha = k*pi/|p| with 0 <= k <= |p| and k of the parity required by
/// the case: k == p (mod 2) when the distinguished central element is +1,
/// k == p+1 (mod 2) when it is -1. Endpoints 0 and pi are returned whenever
/// the congruence admits them; classification is downstream.
inline std::vector<RationalAngle> solve_edge_congruence(std::int64_t p, CentralCase c) {
    if (p == 0)
        throw ZeroParameter("pretzel parameter must be nonzero");
    const std::int64_t ap = p < 0 ? -p : p;
    const std::int64_t want = c == CentralCase::PlusOne
                                  ? (((ap % 2) + 2) % 2)
                                  : (((ap + 1) % 2 + 2) % 2);
    std::vector<RationalAngle> out;
    for (std::int64_t k = 0; k <= ap; ++k)
        if (k % 2 == want)
            out.push_back(RationalAngle::pi_multiple(k, ap));
    return out;
}

namespace detail {

// Plain reduced fraction, used internally with the unit 2*pi.
struct Frac {
    std::int64_t n = 0, d = 1;
    Frac() = default;
    Frac(std::int64_t nn, std::int64_t dd) : n(nn), d(dd) { reduce(); }
    void reduce() {
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            d = 1;
            return;
        }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        n /= g;
        d /= g;
    }
    Frac operator+(const Frac& o) const { return Frac(n * o.d + o.n * d, d * o.d); }
    Frac mod1() const {
        std::int64_t r = ((n % d) + d) % d;
        return Frac(r, d);
    }
    bool is_integer() const { return n % d == 0; }
    bool operator==(const Frac&) const = default;
};

} // namespace detail

struct BetaFamily {
    RationalAngle beta;                           // in (0, 2*pi) \ {pi}
    std::vector<std::vector<RationalAngle>> tuples; // chain angles in [0, 2*pi)
};

/// Exact enumeration of the non-central case: every beta = 2*pi*m/|D'| with
/// D' the signed determinant sum, paired with all chain tuples
/// (alpha_{1,2},...,alpha_{n,1}) in [0,2*pi)^n making the chain a
/// representation with common non-central edge power value and
/// sum(alpha) == 0 (mod 2*pi).
///
/// The edge power of strand i evaluates to (-1)^{p_i} e^{i p_i alpha}. beta
/// is normalized as the common value of p_i*alpha_{i,i+1} (mod 2*pi) over
/// the even strands when any exist (all-odd tuples take it over all
/// strands); strands of the opposite parity are shifted by pi so that the
/// quaternion values actually agree.
inline std::vector<BetaFamily> solve_beta_congruences(const std::vector<std::int64_t>& p) {
    using detail::Frac;
    std::int64_t det = 0;
    bool any_even = false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0)
            throw ZeroParameter("pretzel parameter must be nonzero");
        any_even = any_even || p[i] % 2 == 0;
        std::int64_t prod = 1;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (j != i)
                prod *= p[j];
        det += prod;
    }
    if (det == 0)
        throw ZeroDeterminant("determinant sum vanishes; beta congruences unbounded");
    const std::int64_t adet = det < 0 ? -det : det;

    std::vector<BetaFamily> out;
    for (std::int64_t m = 1; m < adet; ++m) {
        Frac b(m, adet); // beta / (2*pi)
        if (b == Frac(1, 2))
            continue; // beta = pi belongs to the central cases
        // Per-strand solution sets of p*a == b + shift (mod 1), a in [0,1).
        std::vector<std::vector<Frac>> strand(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) {
            const std::int64_t ap = p[i] < 0 ? -p[i] : p[i];
            const Frac target = (any_even && p[i] % 2 != 0) ? (b + Frac(1, 2)).mod1() : b;
            for (std::int64_t k = 0; k < ap; ++k)
                strand[i].push_back(Frac(target.n + k * target.d, target.d * p[i]).mod1());
        }
        BetaFamily fam;
        fam.beta = RationalAngle::pi_multiple(2 * m, adet);
        std::vector<Frac> choice(p.size());
        // depth-first over residue choices, closure test at the leaves
        auto rec = [&](auto&& self, std::size_t i, Frac sum) -> void {
            if (i == p.size()) {
                if (sum.is_integer()) {
                    std::vector<RationalAngle> tuple;
                    tuple.reserve(p.size());
                    for (const Frac& f : choice)
                        tuple.push_back(RationalAngle::pi_multiple(2 * f.n, f.d));
                    fam.tuples.push_back(std::move(tuple));
                }
                return;
            }
            for (const Frac& f : strand[i]) {
                choice[i] = f;
                self(self, i + 1, sum + f);
            }
        };
        rec(rec, 0, Frac(0, 1));
        if (!fam.tuples.empty())
            out.push_back(std::move(fam));
    }
    return out;
}

} // namespace knotrep
