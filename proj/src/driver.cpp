#include "driver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fastconv.hpp"
#include "kernel.hpp"
#include "spectral.hpp"

namespace halflap {

namespace {

constexpr double pi = std::numbers::pi;

bool input_is_real(const std::vector<cplx>& v)
{
    double max_re = 1.0, max_im = 0.0;
    for (const cplx& z : v) {
        max_re = std::max(max_re, std::abs(z.real()));
        max_im = std::max(max_im, std::abs(z.imag()));
    }
    return max_im <= 1e-14 * max_re;
}

HalfLapResult project_real(SampleVector values, bool drop_imag)
{
    if (drop_imag) {
        for (cplx& z : values.values)
            z = cplx(z.real(), 0.0);
    }
    return HalfLapResult{std::move(values), drop_imag};
}

} // namespace

HalfLapResult half_laplacian_periodic(const SampleVector& samples, KrasnyThreshold threshold)
{
    const GridSpec& grid = samples.grid;
    if (grid.full_period)
        throw std::invalid_argument("half_laplacian_periodic: samples must live on the half-period grid");
    if (static_cast<std::int64_t>(samples.values.size()) != grid.n)
        throw std::invalid_argument("half_laplacian_periodic: sample count does not match the grid");

    const bool real_input = input_is_real(samples.values);
    SpectralCoeffs coeffs = forward_coeffs(samples, threshold);
    for (std::int64_t k = coeffs.k_min(); k <= coeffs.k_max(); ++k)
        coeffs.set(k, static_cast<double>(std::llabs(k)) * coeffs.at(k));

    SampleVector out = inverse_samples(coeffs, grid);
    const double L = grid.map_scale;
    for (std::int64_t j = 0; j < grid.n; ++j) {
        const double sn = std::sin(grid.s_node(j));
        out.values[static_cast<std::size_t>(j)] *= 2.0 * sn * sn / L;
    }
    return project_real(std::move(out), real_input);
}

HalfLapResult half_laplacian_full(const SampleVector& samples, KrasnyThreshold threshold)
{
    const GridSpec& grid = samples.grid;
    if (!grid.full_period)
        throw std::invalid_argument("half_laplacian_full: samples must live on the full-period grid");
    const std::int64_t N = grid.n;
    if (static_cast<std::int64_t>(samples.values.size()) != 2 * N)
        throw std::invalid_argument("half_laplacian_full: sample count does not match the grid");

    const bool real_input = input_is_real(samples.values);
    const double L = grid.map_scale;
    const SpectralCoeffs uh = forward_coeffs(samples, threshold); // k in [-N, N-1], uh(-N) = 0

    // The mode set {-N..N-1} splits into even modes 2k with
    // k in [-floor(N/2), ceil(N/2)-1], positive odd modes 2k+1 with
    // k in [0, floor(N/2)-1] and negative odd modes -(2k+1) with
    // k in [0, ceil(N/2)-1].
    const std::int64_t half_floor = N / 2;
    const std::int64_t half_ceil = (N + 1) / 2;

    // [III]: even-mode diagonal piece, a half-grid inverse of |k| uh(2k).
    std::vector<cplx> even_window;
    even_window.reserve(static_cast<std::size_t>(N));
    for (std::int64_t k = -half_floor; k <= half_ceil - 1; ++k)
        even_window.push_back(static_cast<double>(std::llabs(k)) * uh.at(2 * k));
    const std::vector<cplx> t3 = eval_phased_modes(even_window, -half_floor, N);

    // [VI]: constant odd-mode contribution.
    cplx vi_sum(0.0, 0.0);
    for (std::int64_t k = -half_ceil; k <= half_floor - 1; ++k) {
        const std::int64_t m = 2 * k + 1;
        const double sgn = m > 0 ? 1.0 : -1.0;
        vi_sum += sgn * uh.at(m) / static_cast<double>(std::llabs(m) + 2);
    }
    const cplx t6 = cplx(0.0, -2.0 / (L * pi)) * vi_sum;

    // [VII]: pointwise log-cotangent factor times the odd-mode derivative
    // sum, one half-grid inverse plus the e^{i s_j} post-phase.
    std::vector<cplx> deriv_window;
    deriv_window.reserve(static_cast<std::size_t>(N));
    for (std::int64_t k = -half_ceil; k <= half_floor - 1; ++k)
        deriv_window.push_back(static_cast<double>(2 * k + 1) * uh.at(2 * k + 1));
    const std::vector<cplx> vii_eval = eval_phased_modes(deriv_window, -half_ceil, N);

    // [VIII]: the two circular convolutions combined into one inverse with
    // the empty slot at index floor(N/2).
    const std::int64_t m_pos = half_floor - 1;  // modes +(2k+1), k = 0..m_pos
    const std::int64_t m_neg = half_ceil - 1;   // modes -(2k+1), k = 0..m_neg
    std::vector<cplx> a_pos, a_neg;
    a_pos.reserve(static_cast<std::size_t>(m_pos + 1));
    a_neg.reserve(static_cast<std::size_t>(m_neg + 1));
    for (std::int64_t k = 0; k <= m_pos; ++k)
        a_pos.push_back(uh.at(2 * k + 1));
    for (std::int64_t k = 0; k <= m_neg; ++k)
        a_neg.push_back(uh.at(-2 * k - 1));
    const ConvSeq conv_pos = circular_convolve(build_b_sequence(a_pos, m_pos, N),
                                               build_c_sequence(m_pos, N));
    const ConvSeq conv_neg = circular_convolve(build_b_sequence(a_neg, m_neg, N),
                                               build_c_sequence(m_neg, N));
    // Coefficient window over modes m in [-m_neg, m_pos]; length N-1, so the
    // fold leaves exactly the floor(N/2) residue empty.
    std::vector<cplx> conv_window;
    conv_window.reserve(static_cast<std::size_t>(m_neg + m_pos + 1));
    for (std::int64_t m = -m_neg; m <= m_pos; ++m) {
        cplx v = m >= 0 ? conv_pos[static_cast<std::size_t>(m)] : cplx(0.0, 0.0);
        if (m <= 0)
            v -= conv_neg[static_cast<std::size_t>(-m)];
        conv_window.push_back(v);
    }
    const std::vector<cplx> viii_eval = eval_phased_modes(conv_window, -m_neg, N);

    const GridSpec half_grid{N, L, false};
    SampleVector out{{}, half_grid};
    out.values.reserve(static_cast<std::size_t>(N));
    const cplx factor(0.0, 2.0 / (L * pi)); // 2i/(L*pi)
    for (std::int64_t j = 0; j < N; ++j) {
        const double s = half_grid.s_node(j);
        const double sn = std::sin(s);
        const std::size_t ju = static_cast<std::size_t>(j);
        const cplx t7 = -factor * cos_plus_sin2_logcot(s) * std::polar(1.0, s) * vii_eval[ju];
        out.values.push_back((2.0 / L) * sn * sn * t3[ju] + t6 + t7 + factor * viii_eval[ju]);
    }
    return project_real(std::move(out), real_input);
}

std::pair<std::vector<double>, HalfLapResult>
apply_to_function(const std::function<double(double)>& f, std::int64_t n, double map_scale,
                  ExtensionKind ext, KrasnyThreshold threshold)
{
    const GridSpec half = make_grid(n, map_scale, false);
    SampleVector samples{{}, half};
    samples.values.reserve(static_cast<std::size_t>(n));
    std::vector<double> x = half.x_nodes();
    for (std::int64_t j = 0; j < n; ++j) {
        const double v = f(x[static_cast<std::size_t>(j)]);
        if (!std::isfinite(v)) {
            std::ostringstream msg;
            msg << "apply_to_function: f is not finite at node j=" << j
                << " (x=" << x[static_cast<std::size_t>(j)] << ")";
            throw std::runtime_error(msg.str());
        }
        samples.values.push_back(v);
    }

    switch (ext) {
    case ExtensionKind::none:
        return {std::move(x), half_laplacian_periodic(samples, threshold)};
    case ExtensionKind::even:
        return {std::move(x), half_laplacian_full(extend_even(samples), threshold)};
    case ExtensionKind::odd:
        return {std::move(x), half_laplacian_full(extend_odd(samples), threshold)};
    case ExtensionKind::smooth_closed_form: {
        const GridSpec full = make_grid(n, map_scale, true);
        SampleVector extended = extend_smooth_arctan(map_scale, full);
        // The closed-form interpolant is specific to arctan; reject samples
        // of anything else instead of silently computing the wrong operator.
        double diff = 0.0;
        for (std::int64_t j = 0; j < n; ++j)
            diff = std::max(diff, std::abs(extended.values[static_cast<std::size_t>(j)]
                                           - samples.values[static_cast<std::size_t>(j)]));
        if (diff > 1e-12 * pi)
            throw std::invalid_argument("apply_to_function: the closed-form smooth extension "
                                        "applies to arctan(x) only");
        return {std::move(x), half_laplacian_full(extended, threshold)};
    }
    case ExtensionKind::smooth_generic: {
        const BoundaryData bd = estimate_boundary_from_samples(samples);
        return {std::move(x), half_laplacian_full(extend_smooth_generic(samples, bd), threshold)};
    }
    }
    throw std::invalid_argument("apply_to_function: unknown extension kind");
}

} // namespace halflap
