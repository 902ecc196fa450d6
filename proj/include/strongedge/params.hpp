#pragma once

#include <cstdint>
#include <string>

namespace strongedge {

/// Exact rational, always kept normalized with a positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Parses "p/q" or an exact decimal like "0.25" into a Rational.
Rational parse_rational(const std::string& text);

/// Comparison guard for threshold tests on the irrational tau.
inline constexpr double kTauGuard = 1e-9;

/// Palette parameters (D, eps) with the derived threshold tau = D^(1/2-eps)
/// and integer palette size K = floor(5D - tau + 2).
struct Params {
    int D = 0;
    Rational eps;
    double tau = 0.0;
    int K = 0;

    /// tau rounded up, guarded against representation error: the minimum
    /// pendant quota ("at least tau pendants").
    int tau_ceil() const;
    /// Largest integer degree not exceeding D + tau.
    int degree_cap_loose() const;
};

/// Validates 0 < eps <= 1/2 and D >= 4^(1/(2 eps)), then derives tau and K.
Params make_params(int D, const Rational& eps);
Params make_params(int D, const std::string& eps);

} // namespace strongedge
