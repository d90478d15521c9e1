#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "driver.hpp"
#include "kernel.hpp"
#include "reference.hpp"

using namespace halflap;

namespace {

constexpr double pi = std::numbers::pi;

SampleVector sample(const GridSpec& g, const std::function<cplx(double)>& u_of_s)
{
    SampleVector v{std::vector<cplx>(static_cast<std::size_t>(g.node_count())), g};
    for (std::int64_t j = 0; j < g.node_count(); ++j)
        v.values[static_cast<std::size_t>(j)] = u_of_s(g.s_node(j));
    return v;
}

double max_err_vs(const HalfLapResult& got, const std::function<double(double)>& exact,
                  const GridSpec& half)
{
    double m = 0.0;
    for (std::int64_t j = 0; j < half.n; ++j)
        m = std::max(m, std::abs(got.values.values[static_cast<std::size_t>(j)]
                                 - cplx(exact(half.x_node(j)), 0.0)));
    return m;
}

} // namespace

TEST_CASE("periodic driver")
{
    SUBCASE("constants are annihilated")
    {
        const GridSpec g = make_grid(16, 2.0, false);
        const HalfLapResult r = half_laplacian_periodic(sample(g, [](double) { return cplx(5.5, 0.0); }));
        CHECK(r.is_real);
        for (const cplx& z : r.values.values)
            CHECK(std::abs(z) < 1e-13);
    }

    SUBCASE("e^{i2s} maps to 2 sin^2(s) e^{i2s} at L = 1")
    {
        const GridSpec g = make_grid(12, 1.0, false);
        const HalfLapResult r =
            half_laplacian_periodic(sample(g, [](double s) { return std::polar(1.0, 2.0 * s); }));
        CHECK_FALSE(r.is_real);
        for (std::int64_t j = 0; j < g.n; ++j) {
            const double s = g.s_node(j);
            const cplx want = 2.0 * std::sin(s) * std::sin(s) * std::polar(1.0, 2.0 * s);
            CHECK(std::abs(r.values.values[static_cast<std::size_t>(j)] - want) < 1e-13);
        }
    }

    SUBCASE("quartic reaches the closed form at N = 4096, L = 1.1")
    {
        const GridSpec g = make_grid(4096, 1.1, false);
        const HalfLapResult r = half_laplacian_periodic(
            sample(g, [&](double s) {
                const double x = g.map_scale * std::cos(s) / std::sin(s);
                return cplx(1.0 / (1.0 + x * x * x * x), 0.0);
            }));
        CHECK(r.is_real);
        CHECK(max_err_vs(r, ref_quartic, g) < 1e-12);
    }

    SUBCASE("full-period input is rejected")
    {
        const GridSpec g = make_grid(8, 1.0, true);
        CHECK_THROWS_AS(half_laplacian_periodic(SampleVector{std::vector<cplx>(16), g}),
                        std::invalid_argument);
    }
}

TEST_CASE("full driver: single modes match the kernel closed forms")
{
    // every representable mode (u_hat(-n) is zeroed by policy, so skip -n)
    for (std::int64_t n : {7, 8}) {
        const GridSpec g = make_grid(n, 1.0, true);
        const GridSpec half = make_grid(n, 1.0, false);
        for (std::int64_t k = -n + 1; k <= n - 1; ++k) {
            const HalfLapResult r = half_laplacian_full(
                sample(g, [&](double s) { return std::polar(1.0, static_cast<double>(k) * s); }));
            double worst = 0.0;
            for (std::int64_t j = 0; j < n; ++j) {
                const double s = half.s_node(j);
                const cplx want = (k % 2 == 0) ? mode_even(k, s, 1.0) : mode_odd(k, s, 1.0);
                worst = std::max(worst, std::abs(r.values.values[static_cast<std::size_t>(j)] - want));
            }
            CAPTURE(n);
            CAPTURE(k);
            CHECK(worst < 1e-12);
        }
    }
}

TEST_CASE("full driver properties")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);

    SUBCASE("linearity")
    {
        const GridSpec g = make_grid(16, 1.3, true);
        SampleVector a{std::vector<cplx>(32), g}, b{std::vector<cplx>(32), g}, c{std::vector<cplx>(32), g};
        const cplx lambda(0.8, -0.3);
        for (std::size_t j = 0; j < 32; ++j) {
            a.values[j] = cplx(dist(rng), dist(rng));
            b.values[j] = cplx(dist(rng), dist(rng));
            c.values[j] = a.values[j] + lambda * b.values[j];
        }
        const auto ra = half_laplacian_full(a);
        const auto rb = half_laplacian_full(b);
        const auto rc = half_laplacian_full(c);
        for (std::size_t j = 0; j < 16; ++j)
            CHECK(std::abs(rc.values.values[j]
                           - (ra.values.values[j] + lambda * rb.values.values[j])) < 1e-13);
    }

    SUBCASE("pi-periodic inputs: output invariant under rotation by pi")
    {
        const GridSpec g = make_grid(16, 1.1, true);
        // build a pi-periodic input (even modes only)
        SampleVector u{std::vector<cplx>(32), g};
        for (std::int64_t j = 0; j < 32; ++j) {
            const double s = g.s_node(j);
            u.values[static_cast<std::size_t>(j)] =
                std::polar(0.7, 2.0 * s) + std::polar(0.2, -4.0 * s) + 0.1;
        }
        SampleVector rotated{std::vector<cplx>(32), g};
        for (std::int64_t j = 0; j < 32; ++j)
            rotated.values[static_cast<std::size_t>(j)] = u.values[static_cast<std::size_t>((j + 16) % 32)];
        const auto r1 = half_laplacian_full(u);
        const auto r2 = half_laplacian_full(rotated);
        CHECK(r1.values.values.size() == 16);
        for (std::size_t j = 0; j < 16; ++j)
            CHECK(std::abs(r1.values.values[j] - r2.values.values[j]) < 1e-13);
    }

    SUBCASE("agrees with the periodic driver on pi-periodic input")
    {
        const GridSpec half = make_grid(64, 1.1, false);
        const SampleVector u = sample(half, [&](double s) {
            const double x = 1.1 * std::cos(s) / std::sin(s);
            return cplx(1.0 / (1.0 + x * x * x * x), 0.0);
        });
        const auto periodic = half_laplacian_periodic(u);
        const auto full = half_laplacian_full(extend_even(u));
        for (std::size_t j = 0; j < 64; ++j)
            CHECK(std::abs(periodic.values.values[j] - full.values.values[j]) < 1e-13);
    }

    SUBCASE("odd grid sizes run the floor/ceil split")
    {
        const GridSpec g = make_grid(101, 1.1, false);
        const SampleVector u = sample(g, [&](double s) {
            const double x = 1.1 * std::cos(s) / std::sin(s);
            return cplx(1.0 / (1.0 + x * x * x * x), 0.0);
        });
        const auto r = half_laplacian_full(extend_even(u));
        CHECK(max_err_vs(r, ref_quartic, g) < 1e-12);
    }

    SUBCASE("mode -n is zeroed by policy")
    {
        const GridSpec g = make_grid(8, 1.0, true);
        const auto r = half_laplacian_full(sample(g, [](double s) { return std::polar(1.0, -8.0 * s); }));
        for (const cplx& z : r.values.values)
            CHECK(std::abs(z) < 1e-13);
    }

    SUBCASE("half-period input is rejected")
    {
        const GridSpec g = make_grid(8, 1.0, false);
        CHECK_THROWS_AS(half_laplacian_full(SampleVector{std::vector<cplx>(8), g}),
                        std::invalid_argument);
    }
}

TEST_CASE("apply_to_function")
{
    SUBCASE("(1+x^2)^{-1/2} with odd extension is exact for small N")
    {
        auto [x, r] = apply_to_function([](double x) { return 1.0 / std::sqrt(1.0 + x * x); },
                                        16, 1.0, ExtensionKind::odd);
        CHECK(r.is_real);
        for (std::size_t j = 0; j < x.size(); ++j)
            CHECK(std::abs(r.values.values[j] - cplx(ref_inv_sqrt(x[j]), 0.0)) < 1e-13);
    }

    SUBCASE("x(1+x^2)^{-1/2} with even extension is exact for small N")
    {
        auto [x, r] = apply_to_function([](double x) { return x / std::sqrt(1.0 + x * x); },
                                        16, 1.0, ExtensionKind::even);
        for (std::size_t j = 0; j < x.size(); ++j)
            CHECK(std::abs(r.values.values[j] - cplx(ref_odd_sqrt(x[j]), 0.0)) < 1e-13);
    }

    SUBCASE("erf with even extension at L = 4, N = 64")
    {
        auto [x, r] = apply_to_function([](double x) { return std::erf(x); },
                                        64, 4.0, ExtensionKind::even);
        for (std::size_t j = 0; j < x.size(); ++j)
            CHECK(std::abs(r.values.values[j] - cplx(ref_erf(x[j]), 0.0)) < 1e-13);
    }

    SUBCASE("arctan with the closed-form smooth extension")
    {
        auto [x, r] = apply_to_function([](double x) { return std::atan(x); },
                                        128, 1.0, ExtensionKind::smooth_closed_form);
        double worst = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            worst = std::max(worst, std::abs(r.values.values[j] - cplx(ref_arctan(x[j]), 0.0)));
        // C^4 interpolation floor at this resolution; decays like N^-6
        CHECK(worst < 1e-10);
        auto [x2, r2] = apply_to_function([](double x) { return std::atan(x); },
                                          256, 1.0, ExtensionKind::smooth_closed_form);
        double worst2 = 0.0;
        for (std::size_t j = 0; j < x2.size(); ++j)
            worst2 = std::max(worst2, std::abs(r2.values.values[j] - cplx(ref_arctan(x2[j]), 0.0)));
        CHECK(worst2 < 1e-12);
        CHECK(worst2 < worst / 16.0);
    }

    SUBCASE("arctan through the generic boundary-fitted extension")
    {
        auto [x, r] = apply_to_function([](double x) { return std::atan(x); },
                                        256, 1.0, ExtensionKind::smooth_generic);
        double worst = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            worst = std::max(worst, std::abs(r.values.values[j] - cplx(ref_arctan(x[j]), 0.0)));
        // finite-difference boundary estimates limit the achievable accuracy
        CHECK(worst < 1e-5);
    }

    SUBCASE("none runs the periodic driver")
    {
        auto [x, r] = apply_to_function([](double x) { return 1.0 / (1.0 + x * x * x * x); },
                                        128, 1.1, ExtensionKind::none);
        double worst = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            worst = std::max(worst, std::abs(r.values.values[j] - cplx(ref_quartic(x[j]), 0.0)));
        CHECK(worst < 1e-12);
    }

    SUBCASE("the closed-form smooth extension rejects non-arctan inputs")
    {
        CHECK_THROWS_AS(apply_to_function([](double x) { return std::erf(x); },
                                          32, 1.0, ExtensionKind::smooth_closed_form),
                        std::invalid_argument);
    }

    SUBCASE("non-finite evaluations name the offending node")
    {
        // sqrt goes NaN at the first negative x node, which is j = 3 for n = 5
        try {
            apply_to_function([](double x) { return std::sqrt(x); }, 5, 1.0, ExtensionKind::even);
            FAIL("expected an evaluation error");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("j=3") != std::string::npos);
        }
    }
}
