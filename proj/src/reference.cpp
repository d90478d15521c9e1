#include "reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace halflap {

namespace {

constexpr double pi = std::numbers::pi;

} // namespace

double ref_quartic(double x)
{
    const double x2 = x * x;
    const double q = 1.0 + x2 * x2;
    return (1.0 - x2) * (x2 * x2 + 4.0 * x2 + 1.0) / (std::sqrt(2.0) * q * q);
}

double ref_inv_sqrt(double x)
{
    const double r = x * x + 1.0;
    return (2.0 * std::sqrt(r) - 2.0 * x * std::asinh(x)) / (pi * r * std::sqrt(r));
}

double ref_arctan(double x)
{
    // H(arctan') = H(1/(1+x^2)) = x/(1+x^2).
    return x / (1.0 + x * x);
}

double ref_odd_sqrt(double x)
{
    const double r = x * x + 1.0;
    return (2.0 * x * std::sqrt(r) + 2.0 * std::asinh(x)) / (pi * r * std::sqrt(r));
}

double ref_erf(double x)
{
    return (4.0 / pi) * dawson(x);
}

double dawson(double x)
{
    const double ax = std::abs(x);
    if (ax < 1.0) {
        // Maclaurin series: t_{m+1} = t_m * (-2x^2)/(2m+3).
        double term = x;
        double sum = x;
        const double f = -2.0 * x * x;
        for (int m = 0; m < 60; ++m) {
            term *= f / static_cast<double>(2 * m + 3);
            sum += term;
            if (std::abs(term) < 1e-18 * std::abs(sum))
                break;
        }
        return sum;
    }
    // Sampling-series form: D(x) ~ (1/sqrt(pi)) sum_{n odd} e^{-(x-nh)^2}/n,
    // accurate to ~e^{-(pi/(2h))^2}; h = 0.2 puts that far below double
    // precision.  Only the ~70 odd n nearest x/h contribute.
    const double h = 0.2;
    const double xa = ax;
    const std::int64_t n0 = static_cast<std::int64_t>(std::llround(xa / h));
    const std::int64_t width = 40;
    double sum = 0.0;
    for (std::int64_t n = n0 - width; n <= n0 + width; ++n) {
        if ((n % 2) == 0)
            continue;
        const double d = xa - static_cast<double>(n) * h;
        sum += std::exp(-d * d) / static_cast<double>(n);
    }
    const double v = sum / std::sqrt(pi);
    return x < 0.0 ? -v : v;
}

const std::vector<ReferencePair>& reference_pairs()
{
    static const std::vector<ReferencePair> pairs = {
        {"quartic",
         [](double x) { return 1.0 / (1.0 + x * x * x * x); },
         ref_quartic, ExtensionKind::even},
        {"inv_sqrt",
         [](double x) { return 1.0 / std::sqrt(1.0 + x * x); },
         ref_inv_sqrt, ExtensionKind::odd},
        {"arctan",
         [](double x) { return std::atan(x); },
         ref_arctan, ExtensionKind::smooth_closed_form},
        {"odd_sqrt",
         [](double x) { return x / std::sqrt(1.0 + x * x); },
         ref_odd_sqrt, ExtensionKind::even},
        {"erf",
         [](double x) { return std::erf(x); },
         ref_erf, ExtensionKind::even},
    };
    return pairs;
}

const ReferencePair* find_reference(std::string_view name)
{
    for (const ReferencePair& p : reference_pairs())
        if (p.name == name)
            return &p;
    return nullptr;
}

cplx oracle_mode_series(std::int64_t k, double s, double map_scale, std::int64_t n_max)
{
    if ((k % 2) == 0)
        throw std::invalid_argument("oracle_mode_series: k must be odd");
    if (!(s > 0.0) || !(s < pi))
        throw std::invalid_argument("oracle_mode_series: s must lie in (0, pi)");
    if (n_max < 1)
        throw std::invalid_argument("oracle_mode_series: n_max must be positive");
    const double kd = static_cast<double>(k);
    cplx sum(0.0, 0.0);
    // sum_{|n| <= n_max} 4 sgn(n) e^{i2ns} / ((2n-k)(4-(2n-k)^2)); the n and
    // -n terms are accumulated together, largest |n| first.
    for (std::int64_t n = n_max; n >= 1; --n) {
        const double tp = 2.0 * static_cast<double>(n) - kd;
        const double tm = -2.0 * static_cast<double>(n) - kd;
        sum += std::polar(4.0 / (tp * (4.0 - tp * tp)), 2.0 * static_cast<double>(n) * s);
        sum -= std::polar(4.0 / (tm * (4.0 - tm * tm)), -2.0 * static_cast<double>(n) * s);
    }
    const cplx i(0.0, 1.0);
    return (i * kd / (map_scale * pi)) * (2.0 / (4.0 - kd * kd) - sum);
}

cplx oracle_quadrature(const std::function<cplx(double)>& u_s, double s, double map_scale,
                       std::int64_t m)
{
    if (!(s > 0.0) || !(s < pi))
        throw std::invalid_argument("oracle_quadrature: s must lie in (0, pi)");
    if (m < 8)
        throw std::invalid_argument("oracle_quadrature: need at least 8 panels");
    const double h = pi / static_cast<double>(m);
    // Midpoint nodes eta = s +- (i+1/2)h never coincide with s, and the
    // paired placement cancels the simple pole of 1/sin(s - eta).
    cplx acc(0.0, 0.0);
    auto integrand = [&](double eta) {
        return std::sin(eta) * u_s(eta) / std::sin(s - eta);
    };
    for (std::int64_t i = 0;; ++i) {
        const double d = (static_cast<double>(i) + 0.5) * h;
        const double up = s + d;
        const double dn = s - d;
        bool any = false;
        if (up < pi) {
            acc += integrand(up);
            any = true;
        }
        if (dn > 0.0) {
            acc += integrand(dn);
            any = true;
        }
        if (!any)
            break;
    }
    return (std::sin(s) / (map_scale * pi)) * h * acc;
}

} // namespace halflap
