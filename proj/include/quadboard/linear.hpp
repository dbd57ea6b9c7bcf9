#pragma once

// Uniform-lattice checkerboard for comparison with the quadratic model. Every
// segment has length eps = t/N, so each counted bend contributes i*eps and the
// order R-1 coefficient is simply the number of paths with R bends.

#include <optional>
#include <string>
#include <vector>

#include "quadboard/paths.hpp"
#include "quadboard/propagator.hpp"

namespace quadboard {

struct LinearSpec {
    unsigned P = 1;
    unsigned Q = 1;
    Real t = 1;

    unsigned N() const { return P + Q; }
    Real epsilon() const { return t / Real(N()); }
    Real x() const { return (Real(P) - Real(Q)) * epsilon(); }
};

inline AmplitudePolynomial linear_component(unsigned P, unsigned Q, Direction start, Direction end) {
    if (P < 1 || Q < 1) throw invalid_parameter("P and Q must both be >= 1");
    AmplitudePolynomial poly;
    for (unsigned R = 0; R <= P + Q; ++R) poly.add(R == 0 ? 0 : R - 1, count_paths(P, Q, start, end, R));
    return poly;
}

inline ComponentPolynomials linear_components(unsigned P, unsigned Q) {
    return {linear_component(P, Q, Direction::Right, Direction::Right),
            linear_component(P, Q, Direction::Left, Direction::Right),
            linear_component(P, Q, Direction::Right, Direction::Left),
            linear_component(P, Q, Direction::Left, Direction::Left)};
}

inline PropagatorMatrix linear_matrix(const LinearSpec& spec) {
    if (!(spec.t > 0)) throw domain_error("linear_matrix needs t > 0");
    return evaluate(linear_components(spec.P, spec.Q), spec.epsilon());
}

/// (P, Q) with P + Q = N and (P - Q)/N = v, when both are positive integers.
inline std::optional<std::pair<unsigned, unsigned>> linear_split(unsigned N, const Rational& v) {
    Rational p = Rational(N) * (1 + v) / 2;
    if (denominator(p) != 1) return std::nullopt;
    Integer P = numerator(p);
    if (P < 1 || P >= N) return std::nullopt;
    unsigned Pu = P.convert_to<unsigned>();
    return std::pair{Pu, N - Pu};
}

/// Same table as convergence_sweep for the uniform lattice. Sizes that cannot
/// represent v produce a single skipped row with P = 0, Q = N.
inline std::vector<ConvergenceRow> linear_converge(Real t, const Rational& v, const std::vector<unsigned>& N_list,
                                                   unsigned threads = 1) {
    if (!(t > 0)) throw domain_error("linear_converge needs t > 0");
    if (v <= -1 || v >= 1) throw domain_error("linear_converge needs |v| < 1");
    const Real x = t * to_real(v);
    const PropagatorMatrix closed = closed_matrix(t, x);
    return detail::run_ordered(N_list.size(), threads, [&](std::size_t i) {
        const unsigned N = N_list[i];
        std::vector<ConvergenceRow> rows;
        auto split = linear_split(N, v);
        if (!split) {
            ConvergenceRow row;
            row.Q = N;
            row.t = t;
            row.v = v;
            const Real nan = std::numeric_limits<Real>::quiet_NaN();
            row.exact = row.closed = Complex(nan, nan);
            row.abs_err = row.rel_err = nan;
            row.skipped = true;
            rows.push_back(row);
            return rows;
        }
        auto [P, Q] = *split;
        detail::append_rows(rows, P, Q, t, v, linear_matrix({P, Q, t}), closed);
        return rows;
    });
}

} // namespace quadboard
