#include "kernel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace halflap {

namespace {

constexpr double pi = std::numbers::pi;

void require_interior(double s, const char* who)
{
    if (!(s > 0.0) || !(s < pi))
        throw std::invalid_argument(std::string(who) + ": s must lie in (0, pi)");
}

void require_odd(std::int64_t k, const char* who)
{
    if ((k % 2) == 0)
        throw std::invalid_argument(std::string(who) + ": k must be odd, got " + std::to_string(k));
}

void require_scale(double map_scale, const char* who)
{
    if (!(map_scale > 0.0) || !std::isfinite(map_scale))
        throw std::invalid_argument(std::string(who) + ": map_scale must be positive");
}

// sum_{n=0}^{(|k|-1)/2} e^{-i sgn(k)(2n+1)s} / ((2n-1)(2n+1)(2n+3)).
// Terms decay like n^-3, so plain accumulation in increasing n is fine at
// double precision.
cplx odd_cubic_sum(std::int64_t k, double s)
{
    const double sgn = k > 0 ? 1.0 : -1.0;
    const std::int64_t count = (std::llabs(k) - 1) / 2;
    cplx sum(0.0, 0.0);
    for (std::int64_t n = 0; n <= count; ++n) {
        const double m = static_cast<double>(2 * n + 1);
        const double d = (m - 2.0) * m * (m + 2.0);
        sum += std::polar(1.0 / d, -sgn * m * s);
    }
    return sum;
}

} // namespace

double log_cot_half(double s)
{
    require_interior(s, "log_cot_half");
    return std::asinh(std::cos(s) / std::sin(s));
}

double cos_plus_sin2_logcot(double s)
{
    const double sn = std::sin(s);
    return std::cos(s) + sn * sn * log_cot_half(s);
}

cplx pochhammer(cplx z, std::int64_t n)
{
    if (n < 0)
        throw std::invalid_argument("pochhammer: n must be nonnegative");
    cplx p(1.0, 0.0);
    for (std::int64_t i = 0; i < n; ++i)
        p *= z + static_cast<double>(i);
    return p;
}

cplx gauss_2f1_series(const HypergeomParams& p, double tol, std::int64_t max_terms)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("gauss_2f1_series: tol must be positive");
    if (max_terms < 1)
        throw std::invalid_argument("gauss_2f1_series: max_terms must be positive");
    const double r = std::abs(p.z);
    if (r > 1.0 + 1e-12)
        throw std::invalid_argument("gauss_2f1_series: |z| must not exceed 1");
    if (r > 1.0 - 1e-12 && std::abs(p.z - cplx(1.0, 0.0)) > 1e-12
        && !(p.c.real() > p.a.real() + p.b.real()))
        throw std::invalid_argument("gauss_2f1_series: on |z| = 1 need Re(c) > Re(a+b)");
    if (std::abs(p.c.imag()) < 1e-300) {
        const double cr = p.c.real();
        if (cr <= 0.0 && cr == std::floor(cr))
            throw std::invalid_argument("gauss_2f1_series: c is a non-positive integer");
    }

    cplx sum(0.0, 0.0);
    cplx term(1.0, 0.0); // n = 0 term
    for (std::int64_t n = 0; n < max_terms; ++n) {
        sum += term;
        if (std::abs(term) < tol * (1.0 + std::abs(sum)))
            return sum;
        const double dn = static_cast<double>(n);
        term *= (p.a + dn) * (p.b + dn) / ((p.c + dn) * (dn + 1.0)) * p.z;
    }
    throw NoConvergenceError("gauss_2f1_series: no convergence after "
                             + std::to_string(max_terms) + " terms", sum);
}

cplx gauss_2f1_odd_finite(std::int64_t k, double s)
{
    require_odd(k, "gauss_2f1_odd_finite");
    require_interior(s, "gauss_2f1_odd_finite");
    const double kd = static_cast<double>(k);
    const double chi = k <= -1 ? 1.0 : 0.0;
    const double sn = std::sin(s);
    const cplx bracket = odd_cubic_sum(k, s)
        + 0.25 * std::cos(s)
        + cplx(0.0, pi / 8.0) * sn * sn
        + 0.25 * sn * sn * log_cot_half(s);
    return chi - kd * (4.0 - kd * kd) * std::polar(1.0, kd * s) * bracket;
}

cplx atanh_unit_circle(double s, int sign)
{
    require_interior(s, "atanh_unit_circle");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("atanh_unit_circle: sign must be +1 or -1");
    return cplx(0.5 * log_cot_half(s), sign * pi / 4.0);
}

cplx mode_even(std::int64_t k, double s, double map_scale)
{
    if ((k % 2) != 0)
        throw std::invalid_argument("mode_even: k must be even, got " + std::to_string(k));
    require_interior(s, "mode_even");
    require_scale(map_scale, "mode_even");
    const double sn = std::sin(s);
    return (static_cast<double>(std::llabs(k)) * sn * sn / map_scale) * std::polar(1.0, static_cast<double>(k) * s);
}

cplx mode_odd(std::int64_t k, double s, double map_scale)
{
    require_odd(k, "mode_odd");
    require_interior(s, "mode_odd");
    require_scale(map_scale, "mode_odd");
    const double sgn = k > 0 ? 1.0 : -1.0;
    const double kd = static_cast<double>(k);
    const cplx i(0.0, 1.0);
    const cplx constant = -2.0 * i * sgn / (map_scale * pi * (std::abs(kd) + 2.0));
    const cplx bracket = cos_plus_sin2_logcot(s) + 4.0 * odd_cubic_sum(k, s);
    return constant - (2.0 * i * kd / (map_scale * pi)) * std::polar(1.0, kd * s) * bracket;
}

cplx mode_odd_2f1(std::int64_t k, double s, double map_scale)
{
    require_odd(k, "mode_odd_2f1");
    require_interior(s, "mode_odd_2f1");
    require_scale(map_scale, "mode_odd_2f1");
    const double kd = static_cast<double>(k);
    const double sn = std::sin(s);
    const cplx i(0.0, 1.0);
    const cplx f = gauss_2f1_odd_finite(k, s);
    return -2.0 * i / (map_scale * pi * (kd + 2.0))
        - (kd / map_scale) * sn * sn * std::polar(1.0, kd * s)
        + 8.0 * i * f / (map_scale * pi * (4.0 - kd * kd));
}

double mode_cos(std::int64_t k, double s)
{
    require_odd(k, "mode_cos");
    if (k < 1)
        throw std::invalid_argument("mode_cos: k must be a positive odd integer");
    require_interior(s, "mode_cos");
    const double kd = static_cast<double>(k);
    double sum = 0.0;
    for (std::int64_t n = 0; n <= (k - 1) / 2; ++n) {
        const double m = static_cast<double>(2 * n + 1);
        const double d = (m - 2.0) * m * (m + 2.0);
        sum += std::sin(static_cast<double>(k - 1 - 2 * n) * s) / d;
    }
    return (2.0 * kd / pi) * std::sin(kd * s) * cos_plus_sin2_logcot(s) + (8.0 * kd / pi) * sum;
}

double mode_sin(std::int64_t k, double s)
{
    require_odd(k, "mode_sin");
    if (k < 1)
        throw std::invalid_argument("mode_sin: k must be a positive odd integer");
    require_interior(s, "mode_sin");
    const double kd = static_cast<double>(k);
    double sum = 0.0;
    for (std::int64_t n = 0; n <= (k - 1) / 2; ++n) {
        const double m = static_cast<double>(2 * n + 1);
        const double d = (m - 2.0) * m * (m + 2.0);
        sum += std::cos(static_cast<double>(k - 1 - 2 * n) * s) / d;
    }
    return -2.0 / (pi * (kd + 2.0)) - (2.0 * kd / pi) * std::cos(kd * s) * cos_plus_sin2_logcot(s)
        - (8.0 * kd / pi) * sum;
}

} // namespace halflap
