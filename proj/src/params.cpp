#include "strongedge/params.hpp"

#include <cmath>
#include <numeric>

#include "strongedge/errors.hpp"

namespace strongedge {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw InputError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational");
    auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            std::int64_t p = std::stoll(text.substr(0, slash));
            std::int64_t q = std::stoll(text.substr(slash + 1));
            return Rational(p, q);
        }
        auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(text), 1);
        std::string whole = text.substr(0, dot);
        std::string frac = text.substr(dot + 1);
        if (frac.size() > 18) throw InputError("decimal too long: " + text);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        bool neg = !whole.empty() && whole[0] == '-';
        std::int64_t w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
        std::int64_t f = frac.empty() ? 0 : std::stoll(frac);
        std::int64_t num = (neg ? -1 : 1) * ((neg ? -w : w) * den + f);
        return Rational(num, den);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("cannot parse rational: " + text);
    }
}

namespace {

// Exact check of D^(2p) >= 4^q with saturation, avoiding float thresholds.
bool pow_ge(std::int64_t base_a, std::int64_t exp_a, std::int64_t base_b,
            std::int64_t exp_b) {
    constexpr unsigned __int128 kCap = static_cast<unsigned __int128>(1) << 120;
    unsigned __int128 a = 1, b = 1;
    bool a_sat = false, b_sat = false;
    for (std::int64_t i = 0; i < exp_a && !a_sat; ++i) {
        a *= static_cast<unsigned __int128>(base_a);
        if (a >= kCap) a_sat = true;
    }
    for (std::int64_t i = 0; i < exp_b && !b_sat; ++i) {
        b *= static_cast<unsigned __int128>(base_b);
        if (b >= kCap) b_sat = true;
    }
    if (a_sat) return true;
    if (b_sat) return false;
    return a >= b;
}

} // namespace

int Params::tau_ceil() const {
    return static_cast<int>(std::ceil(tau - kTauGuard));
}

int Params::degree_cap_loose() const {
    return static_cast<int>(std::floor(D + tau + kTauGuard));
}

Params make_params(int D, const Rational& eps) {
    if (D <= 0) throw InputError("D must be positive");
    if (eps.num <= 0 || 2 * eps.num > eps.den)
        throw InputError("eps must lie in (0, 1/2], got " + eps.str());
    // D >= 4^(1/(2 eps))  <=>  D^(2p) >= 4^q  for eps = p/q.
    if (!pow_ge(D, 2 * eps.num, 4, eps.den))
        throw PreconditionError("D = " + std::to_string(D) +
                                " is below the threshold 4^(1/(2*" + eps.str() +
                                "))");
    Params p;
    p.D = D;
    p.eps = eps;
    // tau = D^(1/2 - eps), exponent (q - 2p) / (2q).
    double exponent =
        static_cast<double>(eps.den - 2 * eps.num) / static_cast<double>(2 * eps.den);
    p.tau = std::pow(static_cast<double>(D), exponent);
    p.K = static_cast<int>(std::floor(5.0 * D - p.tau + 2.0 + kTauGuard));
    return p;
}

Params make_params(int D, const std::string& eps) {
    return make_params(D, parse_rational(eps));
}

} // namespace strongedge
