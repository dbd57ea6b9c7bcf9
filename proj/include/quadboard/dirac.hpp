#pragma once

// Checks that the closed-form components solve
//
//     i dPsi/dt = -i sigma_z dPsi/dx - sigma_x Psi
//
// by central differences. Row by row the residual i Psi_t + i sigma_z Psi_x + sigma_x Psi is
//
//     i (u_t + u_x) + w
//     i (w_t - w_x) + u        for Psi = (u, w).

#include <cmath>
#include <utility>

#include "quadboard/errors.hpp"
#include "quadboard/propagator.hpp"
#include "quadboard/real.hpp"

namespace quadboard {

struct Spinor {
    Complex upper;
    Complex lower;
};

/// psi1 = (psi_++, psi_+-), psi2 = (psi_+-, psi_--).
inline std::pair<Spinor, Spinor> assemble(Real t, Real x) {
    const auto m = closed_matrix(t, x);
    return {{m.psi_pp, m.psi_pm}, {m.psi_pm, m.psi_mm}};
}

/// det [psi1 psi2] as columns.
inline Complex spinor_determinant(Real t, Real x) {
    const auto [a, b] = assemble(t, x);
    return a.upper * b.lower - b.upper * a.lower;
}

/// Sample region t0 <= t <= t1, |x| <= xfrac * t.
struct Region {
    Real t0 = 0.5;
    Real t1 = 3;
    Real xfrac = 0.4;
};

struct RowResiduals {
    Real row1 = 0;
    Real row2 = 0;
    Real max() const { return std::max(row1, row2); }
};

struct SpinorResidual {
    RowResiduals at_h;
    RowResiduals at_half_h;
    /// max residual at h over max residual at h/2; about 4 for a second-order stencil.
    Real ratio = 0;
    Real observed_order = 0;
};

struct ResidualReport {
    Region region;
    Real h = 0;
    std::size_t points = 0;
    SpinorResidual psi1;
    SpinorResidual psi2;
};

inline Complex dirac_row1(const Spinor& d_t, const Spinor& d_x, const Spinor& psi) {
    const Complex i(0, 1);
    return i * (d_t.upper + d_x.upper) + psi.lower;
}

inline Complex dirac_row2(const Spinor& d_t, const Spinor& d_x, const Spinor& psi) {
    const Complex i(0, 1);
    return i * (d_t.lower - d_x.lower) + psi.upper;
}

namespace detail {

template <class Field>
RowResiduals residual_at(Field&& field, Real t, Real x, Real h) {
    const Spinor c = field(t, x);
    const Spinor tp = field(t + h, x), tm = field(t - h, x);
    const Spinor xp = field(t, x + h), xm = field(t, x - h);
    const Spinor d_t{(tp.upper - tm.upper) / (2 * h), (tp.lower - tm.lower) / (2 * h)};
    const Spinor d_x{(xp.upper - xm.upper) / (2 * h), (xp.lower - xm.lower) / (2 * h)};
    return {std::abs(dirac_row1(d_t, d_x, c)), std::abs(dirac_row2(d_t, d_x, c))};
}

inline void take_max(RowResiduals& acc, const RowResiduals& r) {
    acc.row1 = std::max(acc.row1, r.row1);
    acc.row2 = std::max(acc.row2, r.row2);
}

inline void finish(SpinorResidual& r) {
    const Real fine = r.at_half_h.max();
    r.ratio = fine > 0 ? r.at_h.max() / fine : std::numeric_limits<Real>::quiet_NaN();
    r.observed_order = std::log2(r.ratio);
}

} // namespace detail

/// Max-norm residual of two spinor fields over the sample grid of spacing h,
/// with stencils of width h and h/2 at the same sample points. Only points
/// with t - |x| > 2h are sampled.
template <class Field1, class Field2>
ResidualReport dirac_residual(const Region& region, Real h, Field1&& psi1, Field2&& psi2) {
    if (!(h > 0)) throw domain_error("dirac_residual needs h > 0");
    if (!(region.t0 > 0) || !(region.t1 >= region.t0)) throw domain_error("dirac_residual needs 0 < t0 <= t1");
    if (!(region.xfrac >= 0) || !(region.xfrac < 1)) throw domain_error("dirac_residual needs 0 <= xfrac < 1");
    if (!((1 - region.xfrac) * region.t0 > 2 * h))
        throw domain_error("region leaves no 2h margin to the light cone; need (1 - xfrac) t0 > 2h");

    ResidualReport report;
    report.region = region;
    report.h = h;
    const long nt = std::lround(std::floor((region.t1 - region.t0) / h + 1e-9L));
    for (long it = 0; it <= nt; ++it) {
        const Real t = region.t0 + Real(it) * h;
        const long nx = std::lround(std::floor(region.xfrac * t / h + 1e-9L));
        for (long ix = -nx; ix <= nx; ++ix) {
            const Real x = Real(ix) * h;
            if (!(t - std::abs(x) > 2 * h)) continue;
            ++report.points;
            detail::take_max(report.psi1.at_h, detail::residual_at(psi1, t, x, h));
            detail::take_max(report.psi1.at_half_h, detail::residual_at(psi1, t, x, h / 2));
            detail::take_max(report.psi2.at_h, detail::residual_at(psi2, t, x, h));
            detail::take_max(report.psi2.at_half_h, detail::residual_at(psi2, t, x, h / 2));
        }
    }
    detail::finish(report.psi1);
    detail::finish(report.psi2);
    return report;
}

/// Residual of the closed-form spinors psi1 and psi2.
inline ResidualReport dirac_residual(const Region& region, Real h) {
    return dirac_residual(
        region, h, [](Real t, Real x) { return assemble(t, x).first; },
        [](Real t, Real x) { return assemble(t, x).second; });
}

} // namespace quadboard
