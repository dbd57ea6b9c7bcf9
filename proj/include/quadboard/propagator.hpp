#pragma once

// Propagator components of the 1+1 Dirac equation on the quadratic lattice.
//
// Summing path amplitudes over a sector reduces to elementary symmetric
// polynomials of odd numbers: the counted bends on the Right side pick a
// strictly increasing set of coordinates from {1..P-1}, each weighted by
// (2j - 1), and likewise on the Left side. With O_n = {1, 3, ..., 2n-1}:
//
//     psi_-+ = psi_+- = sum_k e_k(O_{P-1}) e_k(O_{Q-1}) (i eps0)^(2k)
//     psi_++          = sum_{j>=1} e_j(O_{P-1}) e_{j-1}(O_{Q-1}) (i eps0)^(2j-1)
//     psi_--          = psi_++ with P and Q exchanged
//
// with eps0 = t / (P^2 + Q^2). As P, Q grow at fixed P/Q these tend to
// J0(t/gamma), i (P/Q) J1(t/gamma) and i (Q/P) J1(t/gamma).

#include <cmath>
#include <future>
#include <string>
#include <vector>

#include "quadboard/amplitude.hpp"
#include "quadboard/bessel.hpp"
#include "quadboard/errors.hpp"
#include "quadboard/paths.hpp"
#include "quadboard/real.hpp"
#include "quadboard/spacetime.hpp"

namespace quadboard {

/// e_k({1, 3, ..., 2n-1}) for k = 0..n.
class SymmetricTable {
public:
    explicit SymmetricTable(std::vector<Integer> values) : values_(std::move(values)) {}

    unsigned n() const { return static_cast<unsigned>(values_.size()) - 1; }

    /// Zero for k > n.
    const Integer& operator[](unsigned k) const {
        static const Integer zero = 0;
        return k < values_.size() ? values_[k] : zero;
    }

    const std::vector<Integer>& values() const { return values_; }

private:
    std::vector<Integer> values_;
};

/// e_k(O_n) = e_k(O_{n-1}) + (2n-1) e_{k-1}(O_{n-1}), updated in place from high k down.
inline SymmetricTable elem_sym_table(unsigned n) {
    std::vector<Integer> e(n + 1, Integer(0));
    e[0] = 1;
    for (unsigned j = 1; j <= n; ++j) {
        const unsigned odd = 2 * j - 1;
        for (unsigned k = j; k >= 1; --k) e[k] += odd * e[k - 1];
    }
    return SymmetricTable(std::move(e));
}

enum class Component { pp, pm, mp, mm };

inline constexpr Component kComponents[] = {Component::pp, Component::pm, Component::mp, Component::mm};

inline const char* component_name(Component c) {
    switch (c) {
    case Component::pp: return "psi_pp";
    case Component::pm: return "psi_pm";
    case Component::mp: return "psi_mp";
    case Component::mm: return "psi_mm";
    }
    return "?";
}

/// psi_{delta gamma}: gamma is the start direction, delta the end direction.
inline Component component_of(Direction start, Direction end) {
    if (start == Direction::Right) return end == Direction::Right ? Component::pp : Component::mp;
    return end == Direction::Right ? Component::pm : Component::mm;
}

inline std::pair<Direction, Direction> sector_of(Component c) {
    switch (c) {
    case Component::pp: return {Direction::Right, Direction::Right};
    case Component::pm: return {Direction::Left, Direction::Right};
    case Component::mp: return {Direction::Right, Direction::Left};
    case Component::mm: return {Direction::Left, Direction::Left};
    }
    return {Direction::Right, Direction::Right};
}

namespace detail {

inline AmplitudePolynomial crossing_sector(const SymmetricTable& a, const SymmetricTable& b) {
    AmplitudePolynomial poly;
    for (unsigned k = 0; k <= std::min(a.n(), b.n()); ++k) poly.add(2 * k, a[k] * b[k]);
    return poly;
}

/// Same start and end side: `major` is the table of the starting side.
inline AmplitudePolynomial returning_sector(const SymmetricTable& major, const SymmetricTable& minor) {
    AmplitudePolynomial poly;
    for (unsigned j = 1; j <= major.n() && j - 1 <= minor.n(); ++j) poly.add(2 * j - 1, major[j] * minor[j - 1]);
    return poly;
}

inline AmplitudePolynomial sector_polynomial(const SymmetricTable& right, const SymmetricTable& left, Direction start,
                                             Direction end) {
    if (start != end) return crossing_sector(right, left);
    return start == Direction::Right ? returning_sector(right, left) : returning_sector(left, right);
}

inline void check_pq(unsigned P, unsigned Q) {
    if (P < 1 || Q < 1) throw invalid_parameter("P and Q must both be >= 1");
}

} // namespace detail

inline AmplitudePolynomial exact_component(unsigned P, unsigned Q, Direction start, Direction end) {
    detail::check_pq(P, Q);
    return detail::sector_polynomial(elem_sym_table(P - 1), elem_sym_table(Q - 1), start, end);
}

/// The four sector polynomials, indexed like kComponents.
struct ComponentPolynomials {
    AmplitudePolynomial pp, pm, mp, mm;

    const AmplitudePolynomial& operator[](Component c) const {
        switch (c) {
        case Component::pp: return pp;
        case Component::pm: return pm;
        case Component::mp: return mp;
        case Component::mm: return mm;
        }
        return pp;
    }
};

inline ComponentPolynomials exact_components(unsigned P, unsigned Q) {
    detail::check_pq(P, Q);
    const auto right = elem_sym_table(P - 1);
    const auto left = elem_sym_table(Q - 1);
    const auto cross = detail::crossing_sector(right, left);
    return {detail::returning_sector(right, left), cross, cross, detail::returning_sector(left, right)};
}

struct LatticeSpec {
    unsigned P = 1;
    unsigned Q = 1;
    Real t = 1;

    Real eps0() const { return t / (Real(P) * P + Real(Q) * Q); }
    Rational velocity() const {
        Integer pp = Integer(P) * P, qq = Integer(Q) * Q;
        return Rational(pp - qq, pp + qq);
    }
    Real x() const { return t * to_real(velocity()); }
};

struct PropagatorMatrix {
    Complex psi_pp;
    Complex psi_pm;
    Complex psi_mp;
    Complex psi_mm;

    const Complex& operator[](Component c) const {
        switch (c) {
        case Component::pp: return psi_pp;
        case Component::pm: return psi_pm;
        case Component::mp: return psi_mp;
        case Component::mm: return psi_mm;
        }
        return psi_pp;
    }
};

inline PropagatorMatrix evaluate(const ComponentPolynomials& polys, Real eps) {
    return {polys.pp.evaluate(eps), polys.pm.evaluate(eps), polys.mp.evaluate(eps), polys.mm.evaluate(eps)};
}

inline PropagatorMatrix exact_matrix(const LatticeSpec& spec) {
    if (!(spec.t > 0)) throw domain_error("exact_matrix needs t > 0");
    return evaluate(exact_components(spec.P, spec.Q), spec.eps0());
}

/// Closed forms with s = sqrt(t^2 - x^2) = t / gamma:
/// psi_-+ = psi_+- = J0(s), psi_++ = i (t+x)/s J1(s), psi_-- = i (t-x)/s J1(s).
inline PropagatorMatrix closed_matrix(Real t, Real x, const SeriesOptions& opt = {}) {
    if (!(t > std::abs(x))) throw domain_error("closed_matrix needs t > |x| (inside the forward light cone)");
    const Real s = std::sqrt((t - x) * (t + x));
    const Real j0 = bessel_j0(s, opt).value;
    const Real j1 = bessel_j1(s, opt).value;
    return {Complex(0, (t + x) / s * j1), Complex(j0, 0), Complex(j0, 0), Complex(0, (t - x) / s * j1)};
}

inline Real gamma_of(Real v) {
    if (!(std::abs(v) < 1)) throw domain_error("gamma needs |v| < 1");
    return 1 / std::sqrt((1 - v) * (1 + v));
}

inline Real gamma_of(const Rational& v) {
    if (v <= -1 || v >= 1) throw domain_error("gamma needs |v| < 1");
    return 1 / std::sqrt(to_real((1 - v) * (1 + v)));
}

/// Rational Lorentz factor of the lattice direction (P, Q): (P^2 + Q^2) / (2PQ).
inline Rational exact_gamma(unsigned P, unsigned Q) {
    detail::check_pq(P, Q);
    Integer pp = Integer(P) * P, qq = Integer(Q) * Q;
    return Rational(pp + qq, 2 * Integer(P) * Q);
}

/// Checks PQ = (P^2+Q^2) / (2 gamma) exactly, via 4 P^2 Q^2 = (P^2+Q^2)^2 (1 - v^2).
inline bool pq_identity_check(unsigned P, unsigned Q) {
    detail::check_pq(P, Q);
    Integer pp = Integer(P) * P, qq = Integer(Q) * Q;
    Rational v(pp - qq, pp + qq);
    Rational gamma = exact_gamma(P, Q);
    Rational one_minus_v2 = 1 - v * v;
    return 4 * pp * qq == (pp + qq) * (pp + qq) * one_minus_v2 && gamma * gamma * one_minus_v2 == 1 &&
           Rational(Integer(P) * Q) == Rational(pp + qq) / (2 * gamma);
}

/// Partial sum of sum_k (-1)^k (t / 2 gamma)^(2k) / (k!)^2 with `terms` terms.
inline Complex series_psi_mp(Real t, Real v, int terms) {
    if (terms < 1) throw invalid_parameter("terms must be >= 1");
    const Real half = t / (2 * gamma_of(v));
    const Real half_sq = half * half;
    Real term = 1, sum = 0;
    for (int k = 0; k < terms; ++k) {
        sum += term;
        term *= -half_sq / (Real(k + 1) * Real(k + 1));
    }
    return {sum, 0};
}

/// Large-P contribution of all psi_-+ paths with R bends (R odd):
/// (i eps0)^(R-1) (PQ)^(R-1) / [((R-1)/2)!]^2.
inline Complex psi_mp_bend_term(unsigned R, Real P, Real Q, Real eps0) {
    if (R % 2 == 0) throw invalid_parameter("psi_-+ paths have an odd number of bends");
    const unsigned k = (R - 1) / 2;
    Real mag = 1;
    for (unsigned i = 1; i <= k; ++i) {
        const Real x = P * Q * eps0;
        mag *= x * x / (Real(i) * Real(i));
    }
    return {k % 2 == 0 ? mag : -mag, 0};
}

/// One row of a convergence table: one component at one lattice size.
struct ConvergenceRow {
    unsigned P = 0;
    unsigned Q = 0;
    Real t = 0;
    Rational v;
    Component component = Component::mp;
    Complex exact;
    Complex closed;
    Real abs_err = 0;
    Real rel_err = 0;
    /// Set when the lattice size cannot represent v; the numeric fields are then NaN.
    bool skipped = false;
};

namespace detail {

inline void append_rows(std::vector<ConvergenceRow>& rows, unsigned P, unsigned Q, Real t, const Rational& v,
                        const PropagatorMatrix& exact, const PropagatorMatrix& closed) {
    for (auto c : kComponents) {
        ConvergenceRow row;
        row.P = P;
        row.Q = Q;
        row.t = t;
        row.v = v;
        row.component = c;
        row.exact = exact[c];
        row.closed = closed[c];
        row.abs_err = std::abs(exact[c] - closed[c]);
        const Real scale = std::abs(closed[c]);
        row.rel_err = scale > 0 ? row.abs_err / scale : std::numeric_limits<Real>::infinity();
        rows.push_back(row);
    }
}

/// Runs job(i) for every index, `threads` at a time, and concatenates results in index order.
template <class Job>
std::vector<ConvergenceRow> run_ordered(std::size_t count, unsigned threads, Job job) {
    std::vector<std::vector<ConvergenceRow>> parts(count);
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) parts[i] = job(i);
    } else {
        for (std::size_t base = 0; base < count; base += threads) {
            std::vector<std::future<std::vector<ConvergenceRow>>> batch;
            for (std::size_t i = base; i < std::min(count, base + threads); ++i)
                batch.push_back(std::async(std::launch::async, job, i));
            for (std::size_t i = 0; i < batch.size(); ++i) parts[base + i] = batch[i].get();
        }
    }
    std::vector<ConvergenceRow> rows;
    for (auto& p : parts) rows.insert(rows.end(), p.begin(), p.end());
    return rows;
}

} // namespace detail

/// Deviation of exact_matrix from closed_matrix at fixed velocity v as the
/// lattice is refined. v must lie in the velocity spectrum; with (P0, Q0) its
/// coprime generator, every P must be a multiple of P0 and Q = P Q0 / P0.
inline std::vector<ConvergenceRow> convergence_sweep(Real t, const Rational& v, const std::vector<unsigned>& P_list,
                                                     unsigned threads = 1) {
    if (!(t > 0)) throw domain_error("convergence_sweep needs t > 0");
    auto gen = spectrum_generator(v);
    if (!gen) throw domain_error("velocity " + to_string(v) + " is not of the form (p^2-q^2)/(p^2+q^2)");
    const unsigned P0 = gen->first.convert_to<unsigned>();
    const unsigned Q0 = gen->second.convert_to<unsigned>();
    for (unsigned P : P_list)
        if (P == 0 || P % P0 != 0)
            throw domain_error("P = " + std::to_string(P) + " is not a positive multiple of " + std::to_string(P0) +
                               " required by v = " + to_string(v));
    const Real x = t * to_real(v);
    const PropagatorMatrix closed = closed_matrix(t, x);
    return detail::run_ordered(P_list.size(), threads, [&](std::size_t i) {
        const unsigned P = P_list[i];
        const unsigned Q = P / P0 * Q0;
        std::vector<ConvergenceRow> rows;
        detail::append_rows(rows, P, Q, t, v, exact_matrix({P, Q, t}), closed);
        return rows;
    });
}

} // namespace quadboard
