#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spectral.hpp"

using namespace halflap;

namespace {

constexpr double pi = std::numbers::pi;

// O(N^2) evaluation of the expansion sum_k u_hat(k) e^{i m_k s_j}, the
// independent oracle for the transform pair.
std::vector<cplx> direct_expansion(const SpectralCoeffs& c, const GridSpec& grid)
{
    std::vector<cplx> out(static_cast<std::size_t>(grid.node_count()), cplx(0.0, 0.0));
    const double unit = grid.full_period ? 1.0 : 2.0; // e^{iks} vs e^{i2ks}
    for (std::int64_t j = 0; j < grid.node_count(); ++j) {
        const double s = grid.s_node(j);
        for (std::int64_t k = c.k_min(); k <= c.k_max(); ++k)
            out[static_cast<std::size_t>(j)] += c.at(k) * std::polar(1.0, unit * static_cast<double>(k) * s);
    }
    return out;
}

std::vector<cplx> random_values(std::mt19937_64& rng, std::int64_t len)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<cplx> v(static_cast<std::size_t>(len));
    for (cplx& z : v)
        z = cplx(dist(rng), dist(rng));
    return v;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    REQUIRE(a.size() == b.size());
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

} // namespace

TEST_CASE("grid nodes and cotangent map")
{
    const GridSpec g2 = make_grid(2, 1.0, false);
    CHECK(g2.node_count() == 2);
    CHECK(g2.s_node(0) == doctest::Approx(pi / 4.0).epsilon(1e-15));
    CHECK(g2.s_node(1) == doctest::Approx(3.0 * pi / 4.0).epsilon(1e-15));
    CHECK(g2.x_node(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g2.x_node(1) == doctest::Approx(-1.0).epsilon(1e-15));

    const GridSpec g3 = make_grid(3, 1.0, false);
    CHECK(g3.s_node(0) == doctest::Approx(pi / 6.0).epsilon(1e-15));
    CHECK(g3.s_node(1) - g3.s_node(0) == doctest::Approx(pi / 3.0).epsilon(1e-15));

    const GridSpec g4 = make_grid(4, 1.1, true);
    CHECK(g4.node_count() == 8);
    CHECK(g4.s_node(7) == doctest::Approx(15.0 * pi / 8.0).epsilon(1e-15));
    CHECK(g4.x_node(0) == doctest::Approx(1.1 / std::tan(pi / 8.0)).epsilon(1e-15));

    // nodes interior, x strictly decreasing on the half grid
    const GridSpec g = make_grid(17, 0.7, false);
    for (std::int64_t j = 0; j < g.n; ++j) {
        CHECK(g.s_node(j) > 0.0);
        CHECK(g.s_node(j) < pi);
        if (j > 0)
            CHECK(g.x_node(j) < g.x_node(j - 1));
    }

    CHECK_THROWS_AS(make_grid(1, 1.0, false), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0, 1.0, false), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(8, 0.0, false), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(8, -2.0, true), std::invalid_argument);
}

TEST_CASE("forward coefficients of elementary inputs")
{
    SUBCASE("constant samples give a pure DC mode")
    {
        const GridSpec g = make_grid(8, 1.0, false);
        SampleVector u{std::vector<cplx>(8, cplx(3.25, 0.0)), g};
        const SpectralCoeffs c = forward_coeffs(u);
        CHECK(c.k_min() == -4);
        CHECK(c.k_max() == 3);
        for (std::int64_t k = c.k_min(); k <= c.k_max(); ++k) {
            if (k == 0)
                CHECK(std::abs(c.at(k) - cplx(3.25, 0.0)) < 1e-14);
            else
                CHECK(std::abs(c.at(k)) < 1e-14);
        }
    }

    SUBCASE("e^{i2s} on the half grid lands on index 1")
    {
        const GridSpec g = make_grid(6, 1.0, false);
        SampleVector u{std::vector<cplx>(6), g};
        for (std::int64_t j = 0; j < 6; ++j)
            u.values[static_cast<std::size_t>(j)] = std::polar(1.0, 2.0 * g.s_node(j));
        const SpectralCoeffs c = forward_coeffs(u);
        for (std::int64_t k = c.k_min(); k <= c.k_max(); ++k)
            CHECK(std::abs(c.at(k) - (k == 1 ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) < 1e-13);
    }

    SUBCASE("e^{is} on the full grid lands on index 1")
    {
        const GridSpec g = make_grid(5, 2.0, true);
        SampleVector u{std::vector<cplx>(10), g};
        for (std::int64_t j = 0; j < 10; ++j)
            u.values[static_cast<std::size_t>(j)] = std::polar(1.0, g.s_node(j));
        const SpectralCoeffs c = forward_coeffs(u);
        CHECK(c.k_min() == -5);
        CHECK(c.k_max() == 4);
        for (std::int64_t k = c.k_min(); k <= c.k_max(); ++k)
            CHECK(std::abs(c.at(k) - (k == 1 ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) < 1e-13);
    }

    SUBCASE("length mismatch is rejected")
    {
        const GridSpec g = make_grid(8, 1.0, false);
        SampleVector u{std::vector<cplx>(7), g};
        CHECK_THROWS_AS(forward_coeffs(u), std::invalid_argument);
    }
}

TEST_CASE("inverse samples of elementary coefficient sets")
{
    SUBCASE("DC coefficient gives constant samples")
    {
        const GridSpec g = make_grid(8, 1.0, false);
        std::vector<cplx> c(8, cplx(0.0, 0.0));
        c[4] = cplx(1.0, 0.0); // k = 0 at offset -k_min = 4
        const SampleVector u = inverse_samples(SpectralCoeffs(-4, c), g);
        for (const cplx& z : u.values)
            CHECK(std::abs(z - cplx(1.0, 0.0)) < 1e-14);
    }

    SUBCASE("unit coefficient at k=1 on the full grid gives e^{is_j}")
    {
        const GridSpec g = make_grid(4, 1.0, true);
        std::vector<cplx> c(8, cplx(0.0, 0.0));
        c[5] = cplx(1.0, 0.0); // k = 1 at offset 1 - (-4)
        const SampleVector u = inverse_samples(SpectralCoeffs(-4, c), g);
        for (std::int64_t j = 0; j < 8; ++j)
            CHECK(std::abs(u.values[static_cast<std::size_t>(j)] - std::polar(1.0, g.s_node(j))) < 1e-14);
    }

    SUBCASE("window mismatch is rejected")
    {
        const GridSpec g = make_grid(8, 1.0, false);
        std::vector<cplx> c(8, cplx(0.0, 0.0));
        CHECK_THROWS_AS(inverse_samples(SpectralCoeffs(-3, c), g), std::invalid_argument);
        CHECK_THROWS_AS(inverse_samples(SpectralCoeffs(-4, std::vector<cplx>(7)), g),
                        std::invalid_argument);
    }

    SUBCASE("matches the direct summation oracle")
    {
        std::mt19937_64 rng(7);
        for (bool full : {false, true}) {
            const GridSpec g = make_grid(8, 1.0, full);
            std::vector<cplx> c = random_values(rng, g.node_count());
            const SpectralCoeffs coeffs(full ? -8 : -4, c);
            const SampleVector via_fft = inverse_samples(coeffs, g);
            CHECK(max_abs_diff(via_fft.values, direct_expansion(coeffs, g)) < 1e-13);
        }
    }
}

TEST_CASE("round trip, phase correctness, conjugate symmetry")
{
    std::mt19937_64 rng(99);
    for (std::int64_t n : {4, 8, 16, 37}) {
        for (bool full : {false, true}) {
            const GridSpec g = make_grid(n, 1.3, full);

            // round trip on random data (full-period case: representable data
            // only, since u_hat(-n) is zeroed by policy)
            SpectralCoeffs c(full ? -n : -(n / 2), random_values(rng, g.node_count()));
            if (full)
                c.set(-n, cplx(0.0, 0.0));
            const SampleVector u = inverse_samples(c, g);
            const SpectralCoeffs back = forward_coeffs(u);
            double scale = 0.0, diff = 0.0;
            for (std::int64_t k = c.k_min(); k <= c.k_max(); ++k) {
                scale = std::max(scale, std::abs(c.at(k)));
                diff = std::max(diff, std::abs(c.at(k) - back.at(k)));
            }
            CHECK(diff / scale < 1e-13);

            // phase correctness for every representable single mode
            const double unit = full ? 1.0 : 2.0;
            for (std::int64_t k = c.k_min() + (full ? 1 : 0); k <= c.k_max(); ++k) {
                SampleVector mode{std::vector<cplx>(static_cast<std::size_t>(g.node_count())), g};
                for (std::int64_t j = 0; j < g.node_count(); ++j)
                    mode.values[static_cast<std::size_t>(j)] =
                        std::polar(1.0, unit * static_cast<double>(k) * g.s_node(j));
                const SpectralCoeffs mc = forward_coeffs(mode);
                for (std::int64_t q = mc.k_min(); q <= mc.k_max(); ++q)
                    CHECK(std::abs(mc.at(q) - (q == k ? cplx(1.0, 0.0) : cplx(0.0, 0.0))) < 1e-13);
            }
        }
    }

    SUBCASE("conjugate symmetry for real samples")
    {
        std::mt19937_64 rng2(3);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        const GridSpec g = make_grid(16, 1.0, false);
        SampleVector u{std::vector<cplx>(16), g};
        for (cplx& z : u.values)
            z = cplx(dist(rng2), 0.0);
        const SpectralCoeffs c = forward_coeffs(u);
        for (std::int64_t k = 1; k <= 7; ++k)
            CHECK(std::abs(c.at(-k) - std::conj(c.at(k))) < 1e-13);
    }

    SUBCASE("u_hat(-n) is zeroed on the full grid")
    {
        const GridSpec g = make_grid(6, 1.0, true);
        SampleVector u{std::vector<cplx>(12), g};
        for (std::int64_t j = 0; j < 12; ++j)
            u.values[static_cast<std::size_t>(j)] = std::polar(1.0, -6.0 * g.s_node(j));
        const SpectralCoeffs c = forward_coeffs(u);
        CHECK(std::abs(c.at(-6)) == 0.0);
    }
}

TEST_CASE("Krasny filter")
{
    const SpectralCoeffs c(0, {cplx(1.0, 0.0), cplx(1e-20, 0.0), cplx(0.5, 0.0)});

    SUBCASE("small coefficients are zeroed exactly")
    {
        const SpectralCoeffs f = krasny_filter(c, KrasnyThreshold{});
        CHECK(f.at(0) == cplx(1.0, 0.0));
        CHECK(f.at(1) == cplx(0.0, 0.0));
        CHECK(f.at(2) == cplx(0.5, 0.0));
    }

    SUBCASE("nothing above the threshold changes")
    {
        const SpectralCoeffs big(0, {cplx(1.0, 2.0), cplx(-0.25, 0.0)});
        const SpectralCoeffs f = krasny_filter(big, KrasnyThreshold{});
        CHECK(f.at(0) == big.at(0));
        CHECK(f.at(1) == big.at(1));
    }

    SUBCASE("epsilon = 0 is the identity")
    {
        const SpectralCoeffs f = krasny_filter(c, KrasnyThreshold{0.0});
        CHECK(f.at(1) == cplx(1e-20, 0.0));
    }

    SUBCASE("negative epsilon is rejected")
    {
        CHECK_THROWS_AS(krasny_filter(c, KrasnyThreshold{-1.0}), std::invalid_argument);
    }
}
