#pragma once

// The non-continuous spacetime M = {(n/m)(p^2+q^2), (n/m)(p^2-q^2)} with
// n, m, p, q nonzero integers, its light-cone form, and the rational boost
// subgroup that maps M onto itself. Everything here is exact.

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "quadboard/errors.hpp"
#include "quadboard/rational.hpp"

namespace quadboard {

struct SpacetimePoint {
    Rational t;
    Rational x;

    friend bool operator==(const SpacetimePoint&, const SpacetimePoint&) = default;
};

struct LightConePoint {
    Rational r;
    Rational l;

    friend bool operator==(const LightConePoint&, const LightConePoint&) = default;
};

/// Canonical parameters of a point of M: gcd(p,q) = gcd(|n|,m) = 1, m > 0, p,q > 0.
struct MWitness {
    Integer n;
    Integer m;
    Integer p;
    Integer q;

    friend bool operator==(const MWitness&, const MWitness&) = default;
};

inline LightConePoint to_lightcone(const SpacetimePoint& pt) {
    return {(pt.t + pt.x) / 2, (pt.t - pt.x) / 2};
}

inline SpacetimePoint from_lightcone(const LightConePoint& lc) {
    return {lc.r + lc.l, lc.r - lc.l};
}

inline SpacetimePoint make_point(const Integer& n, const Integer& m, const Integer& p, const Integer& q) {
    if (n == 0 || m == 0 || p == 0 || q == 0)
        throw invalid_parameter("make_point: n, m, p, q must all be nonzero");
    Rational scale = ratio(n, m);
    return {scale * (p * p + q * q), scale * (p * p - q * q)};
}

inline SpacetimePoint make_point(const MWitness& w) { return make_point(w.n, w.m, w.p, w.q); }

/// Canonical witness of membership in M, or nullopt when the point is not in M.
///
/// In light-cone form M is {(n/m) p^2, (n/m) q^2}, so a point belongs to M
/// exactly when r and l are nonzero, share a sign, and r/l is a rational
/// square (p/q)^2.
inline std::optional<MWitness> is_member(const SpacetimePoint& pt) {
    auto lc = to_lightcone(pt);
    if (lc.r == 0 || lc.l == 0) return std::nullopt;
    auto root = rational_square_root(lc.r / lc.l);
    if (!root) return std::nullopt;
    Integer p = numerator(*root);
    Integer q = denominator(*root);
    Rational scale = lc.r / Rational(p * p);
    return MWitness{numerator(scale), denominator(scale), p, q};
}

/// Element of the boost subgroup generated by nonzero integers (p, q):
///
///     1/(2pq) * [[p^2+q^2, -(p^2-q^2)], [-(p^2-q^2), p^2+q^2]]
///
/// The generator is kept in canonical form: gcd(p,q) = 1 and q > 0, so equal
/// matrices carry equal generators.
class BoostMatrix {
public:
    BoostMatrix(const Integer& p, const Integer& q) {
        if (p == 0 || q == 0) throw invalid_parameter("boost: p and q must be nonzero");
        Integer g = gcd(p, q);
        p_ = p / g;
        q_ = q / g;
        if (q_ < 0) {
            p_ = -p_;
            q_ = -q_;
        }
        Rational two_pq(2 * p_ * q_);
        diag_ = Rational(p_ * p_ + q_ * q_) / two_pq;
        off_ = -Rational(p_ * p_ - q_ * q_) / two_pq;
    }

    const Rational& a11() const { return diag_; }
    const Rational& a12() const { return off_; }
    const Rational& a21() const { return off_; }
    const Rational& a22() const { return diag_; }
    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }

    /// (p^2 - q^2) / (p^2 + q^2)
    Rational velocity() const { return Rational(p_ * p_ - q_ * q_, p_ * p_ + q_ * q_); }

    Rational determinant() const { return diag_ * diag_ - off_ * off_; }

    friend bool operator==(const BoostMatrix& a, const BoostMatrix& b) {
        return a.diag_ == b.diag_ && a.off_ == b.off_ && a.p_ == b.p_ && a.q_ == b.q_;
    }

private:
    friend BoostMatrix compose(const BoostMatrix&, const BoostMatrix&);
    BoostMatrix() = default;

    Integer p_, q_;
    Rational diag_, off_;
};

inline BoostMatrix make_boost(const Integer& p, const Integer& q) { return BoostMatrix(p, q); }

inline SpacetimePoint apply_boost(const BoostMatrix& b, const SpacetimePoint& pt) {
    return {b.a11() * pt.t + b.a12() * pt.x, b.a21() * pt.t + b.a22() * pt.x};
}

/// Exact matrix product b1 * b2. The entries come from the product itself;
/// only the generator record uses (p1 p2, q1 q2).
inline BoostMatrix compose(const BoostMatrix& b1, const BoostMatrix& b2) {
    BoostMatrix out;
    out.diag_ = b1.a11() * b2.a11() + b1.a12() * b2.a21();
    out.off_ = b1.a11() * b2.a12() + b1.a12() * b2.a22();
    Integer p = b1.p() * b2.p();
    Integer q = b1.q() * b2.q();
    Integer g = gcd(p, q);
    out.p_ = p / g;
    out.q_ = q / g;
    if (out.q_ < 0) {
        out.p_ = -out.p_;
        out.q_ = -out.q_;
    }
    return out;
}

inline Rational velocity(const SpacetimePoint& pt) {
    if (pt.t == 0) throw domain_error("velocity undefined at t = 0");
    return pt.x / pt.t;
}

/// Canonical (p, q) > 0, coprime, with v = (p^2-q^2)/(p^2+q^2), if v lies in the
/// velocity spectrum.
inline std::optional<std::pair<Integer, Integer>> spectrum_generator(const Rational& v) {
    if (v <= -1 || v >= 1) return std::nullopt;
    auto root = rational_square_root((1 + v) / (1 - v));
    if (!root) return std::nullopt;
    return std::pair{numerator(*root), denominator(*root)};
}

/// All distinct (p^2-q^2)/(p^2+q^2) for 1 <= p,q <= max_pq, ascending.
inline std::vector<Rational> velocity_spectrum(unsigned max_pq) {
    if (max_pq < 1) throw invalid_parameter("velocity_spectrum: max_pq must be >= 1");
    std::set<Rational> values;
    for (unsigned p = 1; p <= max_pq; ++p)
        for (unsigned q = 1; q <= max_pq; ++q) {
            Integer pp = Integer(p) * p, qq = Integer(q) * q;
            values.insert(Rational(pp - qq, pp + qq));
        }
    return {values.begin(), values.end()};
}

} // namespace quadboard
