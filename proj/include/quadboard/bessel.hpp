#pragma once

// J0 and J1 from their power series
//
//     J_n(s) = sum_k (-1)^k (s/2)^(2k+n) / (k! (k+n)!)
//
// The k-th term is built from the previous one, so no factorial is ever
// formed. Terms grow to roughly e^s / (2 pi s) before they decay; above
// kWideThreshold the sum is accumulated in Wide to keep that cancellation out
// of the result.

#include <cmath>

#include "quadboard/errors.hpp"
#include "quadboard/real.hpp"

namespace quadboard {

struct SeriesResult {
    Real value = 0;
    int terms_used = 0;
    /// |first omitted term| plus the accumulated rounding estimate.
    Real truncation_bound = 0;
};

struct SeriesOptions {
    Real rel_tol = 1e-16L;
    int max_terms = 200;
};

inline constexpr Real kBesselMaxArgument = 50;
inline constexpr Real kWideThreshold = 5;

namespace detail {

template <class T>
SeriesResult bessel_series(unsigned order, T s, const SeriesOptions& opt, int fixed_terms) {
    using std::abs;
    using ::boost::multiprecision::abs;
    const T half = s / 2;
    const T half_sq = half * half;
    T term = order == 0 ? T(1) : half;
    T sum = 0;
    T largest = 0;
    int k = 0;
    const int limit = fixed_terms > 0 ? fixed_terms : opt.max_terms;
    for (; k < limit; ++k) {
        sum += term;
        if (abs(term) > largest) largest = abs(term);
        T next = -term * half_sq / (T(k + 1) * T(k + 1 + order));
        term = next;
        if (fixed_terms > 0) continue;
        // Stop once terms are past their peak (k > s/2) and below tolerance.
        if (T(k + 1) > half && abs(term) < T(opt.rel_tol) * (abs(sum) + 1)) {
            ++k;
            break;
        }
    }
    SeriesResult out;
    out.value = static_cast<Real>(sum);
    out.terms_used = k;
    const T unit = std::numeric_limits<T>::epsilon();
    out.truncation_bound = static_cast<Real>(abs(term) + T(4) * T(k + 1) * unit * largest);
    return out;
}

inline SeriesResult bessel_dispatch(unsigned order, Real s, const SeriesOptions& opt, int fixed_terms) {
    if (!(s >= 0)) throw domain_error("Bessel series needs s >= 0");
    if (s > kBesselMaxArgument) throw domain_error("Bessel series limited to s <= 50 (asymptotic regime not implemented)");
    if (s > kWideThreshold) return bessel_series<Wide>(order, Wide(s), opt, fixed_terms);
    return bessel_series<Real>(order, s, opt, fixed_terms);
}

} // namespace detail

inline SeriesResult bessel_j0(Real s, const SeriesOptions& opt = {}) { return detail::bessel_dispatch(0, s, opt, 0); }

inline SeriesResult bessel_j1(Real s, const SeriesOptions& opt = {}) { return detail::bessel_dispatch(1, s, opt, 0); }

/// Partial sum with exactly `terms` terms of J_order, order 0 or 1.
inline SeriesResult bessel_partial(unsigned order, Real s, int terms) {
    if (order > 1) throw invalid_parameter("only J0 and J1 are implemented");
    if (terms < 1) throw invalid_parameter("terms must be >= 1");
    return detail::bessel_dispatch(order, s, {}, terms);
}

} // namespace quadboard
