#pragma once

#include <map>
#include <string>

#include "quadboard/real.hpp"

namespace quadboard {

/// Exact Gaussian rational re + i*im.
struct GaussianRational {
    Rational re;
    Rational im;

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// Finitely supported polynomial sum_k c_k (i*eps)^k with exact integer
/// coefficients. Zero coefficients are never stored.
class AmplitudePolynomial {
public:
    AmplitudePolynomial() = default;

    static AmplitudePolynomial monomial(unsigned order, Integer coefficient) {
        AmplitudePolynomial poly;
        poly.add(order, std::move(coefficient));
        return poly;
    }

    void add(unsigned order, const Integer& coefficient) {
        if (coefficient == 0) return;
        auto [it, inserted] = terms_.try_emplace(order, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) terms_.erase(it);
        }
    }

    AmplitudePolynomial& operator+=(const AmplitudePolynomial& other) {
        for (const auto& [order, c] : other.terms_) add(order, c);
        return *this;
    }

    Integer coefficient(unsigned order) const {
        auto it = terms_.find(order);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    const std::map<unsigned, Integer>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    unsigned degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    /// Exact value at rational eps.
    GaussianRational evaluate(const Rational& eps) const {
        GaussianRational out;
        Rational power = 1;
        unsigned k = 0;
        for (const auto& [order, c] : terms_) {
            for (; k < order; ++k) power *= eps;
            Rational term = power * c;
            // i^k cycles 1, i, -1, -i
            switch (order % 4) {
            case 0: out.re += term; break;
            case 1: out.im += term; break;
            case 2: out.re -= term; break;
            case 3: out.im -= term; break;
            }
        }
        return out;
    }

    /// Floating value at eps, Horner form from the highest order down.
    /// Coefficients can exceed the range of Real, so the recursion runs in Wide.
    Complex evaluate(Real eps) const {
        if (terms_.empty()) return {};
        const Wide e(eps);
        Wide re = 0, im = 0;
        auto it = terms_.rbegin();
        for (long k = static_cast<long>(it->first); k >= 0; --k) {
            // (re + i im) * (i e)
            Wide next_re = -im * e;
            im = re * e;
            re = next_re;
            if (it != terms_.rend() && it->first == static_cast<unsigned>(k)) {
                re += Wide(it->second);
                ++it;
            }
        }
        return {re.convert_to<Real>(), im.convert_to<Real>()};
    }

    friend bool operator==(const AmplitudePolynomial&, const AmplitudePolynomial&) = default;

private:
    std::map<unsigned, Integer> terms_;
};

/// "3*(i*e0)^2 + 1" style rendering, highest order first.
inline std::string to_string(const AmplitudePolynomial& poly, const std::string& var = "i*e0") {
    if (poly.empty()) return "0";
    std::string out;
    for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += it->second.str();
        if (it->first > 0) out += "*(" + var + ")^" + std::to_string(it->first);
    }
    return out;
}

} // namespace quadboard
