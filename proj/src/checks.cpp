#include "checks.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fastconv.hpp"
#include "kernel.hpp"
#include "reference.hpp"

namespace halflap {

namespace {

constexpr double pi = std::numbers::pi;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::vector<cplx> random_seq(std::mt19937_64& rng, std::int64_t len)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cplx> v(static_cast<std::size_t>(len));
    for (cplx& z : v)
        z = cplx(dist(rng), dist(rng));
    return v;
}

CheckResult check_convolution(std::mt19937_64& rng)
{
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (std::int64_t P : {3, 8, 17, 64, 257}) {
        const ConvSeq b = random_seq(rng, P);
        const ConvSeq c = random_seq(rng, P);
        const ConvSeq fast = circular_convolve(b, c);
        const ConvSeq slow = direct_convolve(b, c);
        double scale = 0.0;
        for (const cplx& z : slow)
            scale = std::max(scale, std::abs(z));
        for (std::size_t i = 0; i < fast.size(); ++i)
            worst = std::max(worst, std::abs(fast[i] - slow[i]) / std::max(scale, 1.0));
    }
    return {"convolution theorem vs direct sum", worst, 1e-13, ms_since(t0), worst <= 1e-13};
}

CheckResult check_odd_combination(std::mt19937_64& rng)
{
    const auto t0 = Clock::now();
    double worst = 0.0;
    const GridSpec grid = make_grid(24, 1.3, false);
    for (std::int64_t M : {0, 1, 5, 31}) {
        for (int sign : {1, -1}) {
            OddCombinationSpec spec{random_seq(rng, M + 1), sign, 1.3, 2 * M + 1};
            const SampleVector fast = odd_mode_combination(spec, grid);
            std::vector<cplx> direct(static_cast<std::size_t>(grid.n), cplx(0.0, 0.0));
            double scale = 1.0;
            for (std::int64_t j = 0; j < grid.n; ++j) {
                for (std::int64_t l = 0; l <= M; ++l)
                    direct[static_cast<std::size_t>(j)] += spec.a[static_cast<std::size_t>(l)]
                        * mode_odd(sign * (2 * l + 1), grid.s_node(j), spec.map_scale);
                scale = std::max(scale, std::abs(direct[static_cast<std::size_t>(j)]));
            }
            // random coefficients drive the sum to O(M^2) magnitudes, so the
            // comparison is relative to the term-sum scale
            for (std::int64_t j = 0; j < grid.n; ++j)
                worst = std::max(worst, std::abs(fast.values[static_cast<std::size_t>(j)]
                                                 - direct[static_cast<std::size_t>(j)]) / scale);
        }
    }
    return {"fast odd-mode combination vs kernel sum", worst, 1e-12, ms_since(t0), worst <= 1e-12};
}

CheckResult check_kernel_identities()
{
    const auto t0 = Clock::now();
    double worst = 0.0;
    for (std::int64_t ka = 1; ka <= 31; ka += 2) {
        for (std::int64_t k : {ka, -ka}) {
            for (int si = 1; si <= 20; ++si) {
                const double s = pi * static_cast<double>(si) / 21.0;
                for (double L : {0.5, 1.0, 2.0}) {
                    const cplx a = mode_odd(k, s, L);
                    const cplx b = mode_odd_2f1(k, s, L);
                    worst = std::max(worst, std::abs(a - b));
                    if (L == 1.0 && k > 0) {
                        const cplx c(mode_cos(k, s), mode_sin(k, s));
                        worst = std::max(worst, std::abs(a - c));
                    }
                    // realness of the operator: conjugate mode pairs
                    worst = std::max(worst, std::abs(std::conj(mode_odd(-k, s, L)) - a));
                }
            }
        }
    }
    return {"odd kernel: finite sum vs 2F1 vs cos/sin forms", worst, 1e-12, ms_since(t0),
            worst <= 1e-12};
}

CheckResult check_hypergeometric()
{
    const auto t0 = Clock::now();
    double worst = 0.0;
    // closed value at k=1, s=pi/2: 2F1(1,-3/2;3/2;-1) = 1 + 3 pi/8
    worst = std::max(worst, std::abs(gauss_2f1_odd_finite(1, pi / 2.0) - cplx(1.0 + 3.0 * pi / 8.0, 0.0)));
    for (std::int64_t k : {1, 3, -1, -3, 7}) {
        for (double s : {pi / 3.0, 1.1, 2.0}) {
            const cplx z = std::polar(1.0, 2.0 * s);
            const HypergeomParams p{cplx(1.0, 0.0), cplx(-0.5 * static_cast<double>(k) - 1.0, 0.0),
                                    cplx(-0.5 * static_cast<double>(k) + 2.0, 0.0), z};
            const cplx series = gauss_2f1_series(p, 1e-15, 4000000);
            const cplx finite = gauss_2f1_odd_finite(k, s);
            // |2F1| grows with |k| (about 200 at k=7): compare relative
            worst = std::max(worst, std::abs(series - finite) / (1.0 + std::abs(finite)));
        }
    }
    return {"2F1 series vs finite-sum identity", worst, 1e-12, ms_since(t0), worst <= 1e-12};
}

CheckResult check_mode_series(int level)
{
    const auto t0 = Clock::now();
    const std::int64_t n_max = level > 0 ? 1000000 : 10000;
    const double tol = level > 0 ? 1e-9 : 1e-6;
    double worst = 0.0;
    for (std::int64_t k : {1, -1, 3, -3, 5, -5}) {
        for (double s : {0.7, pi / 2.0, 2.0}) {
            for (double L : {1.0, 1.3}) {
                worst = std::max(worst, std::abs(oracle_mode_series(k, s, L, n_max)
                                                 - mode_odd(k, s, L)));
            }
        }
    }
    return {"bilateral mode series vs closed form", worst, tol, ms_since(t0), worst <= tol};
}

CheckResult check_quadrature()
{
    const auto t0 = Clock::now();
    const std::int64_t m = 100000;
    double worst = 0.0;
    // u(s) = e^{i2s}: even-mode closed form
    {
        auto u_s = [](double eta) { return cplx(0.0, 2.0) * std::polar(1.0, 2.0 * eta); };
        const cplx got = oracle_quadrature(u_s, 1.0, 1.0, m);
        worst = std::max(worst, std::abs(got - mode_even(2, 1.0, 1.0)));
    }
    // constant u: derivative zero
    {
        auto u_s = [](double) { return cplx(0.0, 0.0); };
        worst = std::max(worst, std::abs(oracle_quadrature(u_s, 0.8, 2.0, m)));
    }
    // u(s) = sin(s) at s = pi/2 equals the x = 0 value of the inv_sqrt pair
    {
        auto u_s = [](double eta) { return cplx(std::cos(eta), 0.0); };
        const cplx got = oracle_quadrature(u_s, pi / 2.0, 1.0, m);
        worst = std::max(worst, std::abs(got - cplx(2.0 / pi, 0.0)));
    }
    return {"principal-value quadrature spot checks", worst, 1e-3, ms_since(t0), worst <= 1e-3};
}

} // namespace

std::int64_t check_count()
{
    return 6;
}

CheckResult run_single_check(std::int64_t index, int level, std::uint64_t seed)
{
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(index));
    switch (index) {
    case 0: return check_convolution(rng);
    case 1: return check_odd_combination(rng);
    case 2: return check_kernel_identities();
    case 3: return check_hypergeometric();
    case 4: return check_mode_series(level);
    case 5: return check_quadrature();
    default:
        throw std::invalid_argument("run_single_check: index out of range");
    }
}

std::vector<CheckResult> run_checks(int level, std::uint64_t seed)
{
    std::vector<CheckResult> results;
    for (std::int64_t i = 0; i < check_count(); ++i)
        results.push_back(run_single_check(i, level, seed));
    return results;
}

} // namespace halflap
