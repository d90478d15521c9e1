#include <doctest.h>

#include <cmath>
#include <functional>
#include <numbers>

#include "reference.hpp"

using namespace halflap;

namespace {

constexpr double pi = std::numbers::pi;

// Adaptive Simpson quadrature with a relative refinement test, used as the
// independent oracle for Dawson's integral in this file.
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double rel_tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    if (depth <= 0 || std::abs(refined - whole) < 15.0 * rel_tol * (std::abs(refined) + 1e-300))
        return refined + (refined - whole) / 15.0;
    return simpson(f, a, m, fa, flm, fm, left, rel_tol, depth - 1)
        + simpson(f, m, b, fm, frm, fb, right, rel_tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol)
{
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson(f, a, b, fa, fm, fb, whole, rel_tol, 30);
}

double dawson_by_quadrature(double x)
{
    const double integral = integrate([](double t) { return std::exp(t * t); }, 0.0, x, 1e-13);
    return std::exp(-x * x) * integral;
}

} // namespace

TEST_CASE("quartic reference")
{
    CHECK(ref_quartic(0.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::abs(ref_quartic(1.0)) < 1e-15);
    CHECK(ref_quartic(2.0) == doctest::Approx(-99.0 / (289.0 * std::sqrt(2.0))).epsilon(1e-15));
}

TEST_CASE("inverse square root reference")
{
    CHECK(ref_inv_sqrt(0.0) == doctest::Approx(2.0 / pi).epsilon(1e-15));
    for (double x : {0.25, 1.0, 3.5})
        CHECK(ref_inv_sqrt(-x) == doctest::Approx(ref_inv_sqrt(x)).epsilon(1e-14));

    // principal-value quadrature oracle at x = 3: u(s) = sin(s) at L = 1,
    // so u_s = cos and s = acot(3)
    const double s = std::atan2(1.0, 3.0);
    const cplx got = oracle_quadrature([](double eta) { return cplx(std::cos(eta), 0.0); },
                                       s, 1.0, 100000);
    CHECK(std::abs(got - cplx(ref_inv_sqrt(3.0), 0.0)) < 1e-3);
}

TEST_CASE("arctan reference")
{
    // the operator of an odd function vanishes at the origin
    CHECK(ref_arctan(0.0) == 0.0);
    CHECK(ref_arctan(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    // x^{-1} decay at infinity
    CHECK(std::abs(ref_arctan(1e8)) == doctest::Approx(1e-8).epsilon(1e-6));

    // lock the closed form against the defining principal-value integral:
    // at L = 1, u(s) = arctan(cot s) = pi/2 - s, so u_s = -1 identically
    for (double s : {0.6, pi / 2.0, 2.2}) {
        const double x = std::cos(s) / std::sin(s);
        const cplx got = oracle_quadrature([](double) { return cplx(-1.0, 0.0); }, s, 1.0, 200000);
        CHECK(std::abs(got - cplx(ref_arctan(x), 0.0)) < 1e-3);
    }
}

TEST_CASE("odd square root reference")
{
    CHECK(ref_odd_sqrt(0.0) == 0.0);
    for (double x : {0.5, 2.0})
        CHECK(ref_odd_sqrt(-x) == doctest::Approx(-ref_odd_sqrt(x)).epsilon(1e-14));
    const double want = (2.0 * std::sqrt(2.0) + 2.0 * std::log(1.0 + std::sqrt(2.0)))
        / (pi * 2.0 * std::sqrt(2.0));
    CHECK(ref_odd_sqrt(1.0) == doctest::Approx(want).epsilon(1e-14));
}

TEST_CASE("Dawson's integral")
{
    CHECK(dawson(0.0) == 0.0);
    CHECK(dawson(-1.25) == doctest::Approx(-dawson(1.25)).epsilon(1e-15));

    SUBCASE("large-argument asymptotics ~ 1/(2x)")
    {
        const double dev = std::abs(dawson(50.0) * 100.0 - 1.0);
        CHECK(dev < 5e-4);
        CHECK(dev > 1e-5); // the 1/(4x^3) correction is visible
    }

    SUBCASE("agrees with adaptive quadrature across the matching point")
    {
        for (double x : {0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 3.7, 5.0})
            CHECK(dawson(x) == doctest::Approx(dawson_by_quadrature(x)).epsilon(1e-12));
    }

    SUBCASE("differential identity D' = 1 - 2xD")
    {
        // fourth-order central difference, h chosen so truncation and
        // roundoff both sit well below the 1e-10 requirement
        const double h = 1e-3;
        for (double x = -5.0; x <= 5.0; x += 0.37) {
            const double d1 = (-dawson(x + 2.0 * h) + 8.0 * dawson(x + h) - 8.0 * dawson(x - h)
                               + dawson(x - 2.0 * h)) / (12.0 * h);
            CHECK(std::abs(d1 - (1.0 - 2.0 * x * dawson(x))) < 1e-10);
        }
    }

    SUBCASE("erf pair")
    {
        CHECK(ref_erf(0.0) == 0.0);
        CHECK(ref_erf(-0.75) == doctest::Approx(-ref_erf(0.75)).epsilon(1e-14));
        CHECK(ref_erf(1.0) == doctest::Approx(4.0 / pi * dawson_by_quadrature(1.0)).epsilon(1e-12));
    }
}

TEST_CASE("bilateral series oracle")
{
    SUBCASE("k = 1 at s = pi/2 approaches 2i/pi")
    {
        const cplx got = oracle_mode_series(1, pi / 2.0, 1.0, 1000000);
        CHECK(std::abs(got - cplx(0.0, 2.0 / pi)) < 1e-9);
    }

    SUBCASE("conjugation between k and -k")
    {
        const cplx a = oracle_mode_series(1, pi / 2.0, 1.0, 2000);
        const cplx b = oracle_mode_series(-1, pi / 2.0, 1.0, 2000);
        CHECK(std::abs(b - std::conj(a)) < 1e-13);
    }

    SUBCASE("doubling n_max roughly quarters the truncation error")
    {
        const cplx exact(0.0, 2.0 / pi);
        const double e1 = std::abs(oracle_mode_series(1, pi / 2.0, 1.0, 5000) - exact);
        const double e2 = std::abs(oracle_mode_series(1, pi / 2.0, 1.0, 10000) - exact);
        CHECK(e2 < e1 / 2.0);
    }

    SUBCASE("even k is rejected")
    {
        CHECK_THROWS_AS(oracle_mode_series(4, 1.0, 1.0, 100), std::invalid_argument);
    }
}

TEST_CASE("principal-value quadrature oracle")
{
    SUBCASE("even mode e^{i2s}")
    {
        auto u_s = [](double eta) { return cplx(0.0, 2.0) * std::polar(1.0, 2.0 * eta); };
        const cplx want = 2.0 * std::sin(1.0) * std::sin(1.0) * std::polar(1.0, 2.0);
        CHECK(std::abs(oracle_quadrature(u_s, 1.0, 1.0, 100000) - want) < 1e-3);
    }

    SUBCASE("constants map to zero")
    {
        auto u_s = [](double) { return cplx(0.0, 0.0); };
        CHECK(std::abs(oracle_quadrature(u_s, 0.77, 1.5, 100000)) < 1e-12);
    }

    SUBCASE("sin(s) at s = pi/2 gives 2/pi")
    {
        auto u_s = [](double eta) { return cplx(std::cos(eta), 0.0); };
        CHECK(std::abs(oracle_quadrature(u_s, pi / 2.0, 1.0, 100000) - cplx(2.0 / pi, 0.0)) < 1e-3);
    }

    SUBCASE("bad arguments are rejected")
    {
        auto u_s = [](double) { return cplx(0.0, 0.0); };
        CHECK_THROWS_AS(oracle_quadrature(u_s, 0.0, 1.0, 1000), std::invalid_argument);
        CHECK_THROWS_AS(oracle_quadrature(u_s, 1.0, 1.0, 2), std::invalid_argument);
    }
}

TEST_CASE("reference registry")
{
    CHECK(reference_pairs().size() == 5);
    const ReferencePair* q = find_reference("quartic");
    REQUIRE(q != nullptr);
    CHECK(q->f(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(q->recommended_extension == ExtensionKind::even);
    CHECK(find_reference("nope") == nullptr);
    const ReferencePair* a = find_reference("arctan");
    REQUIRE(a != nullptr);
    CHECK(a->recommended_extension == ExtensionKind::smooth_closed_form);
}
