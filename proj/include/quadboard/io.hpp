#pragma once

// CSV and JSON encodings shared by the CLI. Rationals are always "num/den";
// reals are written with 17 significant digits of their double value, which
// parses back bit-exactly.

#include <json.hpp>

#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "quadboard/amplitude.hpp"
#include "quadboard/dirac.hpp"
#include "quadboard/propagator.hpp"
#include "quadboard/spacetime.hpp"

namespace quadboard::io {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Negative zero prints as 0.
inline std::string format_real(Real v) {
    if (v == 0) v = 0;
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", static_cast<double>(v));
    return buf;
}

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
inline json integer_json(const Integer& v) {
    if (auto small = to_int64(v)) return *small;
    return v.str();
}

inline json real_json(Real v) { return v == 0 ? 0.0 : static_cast<double>(v); }

inline json complex_json(const Complex& z) { return json{{"re", real_json(z.real())}, {"im", real_json(z.imag())}}; }

/// {order: coefficient} with string keys and decimal-string coefficients.
inline json polynomial_json(const AmplitudePolynomial& poly) {
    json out = json::object();
    for (const auto& [order, c] : poly.terms()) out[std::to_string(order)] = c.str();
    return out;
}

inline json witness_json(const MWitness& w) {
    return json{{"n", integer_json(w.n)}, {"m", integer_json(w.m)}, {"p", integer_json(w.p)}, {"q", integer_json(w.q)}};
}

inline json point_json(const SpacetimePoint& pt) { return json{{"t", to_string(pt.t)}, {"x", to_string(pt.x)}}; }

inline json matrix_json(const PropagatorMatrix& m) {
    json out = json::object();
    for (auto c : kComponents) out[component_name(c)] = complex_json(m[c]);
    return out;
}

inline json spinor_residual_json(const SpinorResidual& r) {
    return json{{"row1_at_h", real_json(r.at_h.row1)},
                {"row2_at_h", real_json(r.at_h.row2)},
                {"row1_at_half_h", real_json(r.at_half_h.row1)},
                {"row2_at_half_h", real_json(r.at_half_h.row2)},
                {"max_abs_residual", real_json(r.at_h.max())},
                {"max_abs_residual_half_h", real_json(r.at_half_h.max())},
                {"ratio", real_json(r.ratio)},
                {"observed_order", real_json(r.observed_order)}};
}

inline json report_json(const ResidualReport& r) {
    return json{{"schema_version", kSchemaVersion},
                {"t0", real_json(r.region.t0)},
                {"t1", real_json(r.region.t1)},
                {"xfrac", real_json(r.region.xfrac)},
                {"h", real_json(r.h)},
                {"points", r.points},
                {"psi1", spinor_residual_json(r.psi1)},
                {"psi2", spinor_residual_json(r.psi2)}};
}

inline constexpr const char* kConvergenceHeader =
    "schema_version,P,Q,t,v,component,exact_re,exact_im,closed_re,closed_im,abs_err,rel_err";

inline void write_convergence_csv(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
    out << kConvergenceHeader << '\n';
    for (const auto& r : rows) {
        out << kSchemaVersion << ',' << r.P << ',' << r.Q << ',' << format_real(r.t) << ','
            << to_string(r.v) << ',' << (r.skipped ? "skipped" : component_name(r.component)) << ','
            << format_real(r.exact.real()) << ',' << format_real(r.exact.imag()) << ','
            << format_real(r.closed.real()) << ',' << format_real(r.closed.imag()) << ',' << format_real(r.abs_err)
            << ',' << format_real(r.rel_err) << '\n';
    }
}

} // namespace quadboard::io
