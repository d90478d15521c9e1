#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dft.hpp"

namespace halflap {

namespace {

constexpr double pi = std::numbers::pi;

std::int64_t mode_window_min(const GridSpec& grid)
{
    return grid.full_period ? -grid.n : -(grid.n / 2);
}

std::int64_t wrap(std::int64_t k, std::int64_t P)
{
    std::int64_t r = k % P;
    return r < 0 ? r + P : r;
}

} // namespace

void krasny_filter_in_place(std::vector<cplx>& coeffs, KrasnyThreshold threshold)
{
    if (threshold.epsilon < 0.0)
        throw std::invalid_argument("krasny_filter: negative threshold");
    if (threshold.epsilon == 0.0)
        return;
    for (cplx& z : coeffs)
        if (std::abs(z) < threshold.epsilon)
            z = cplx(0.0, 0.0);
}

SpectralCoeffs krasny_filter(const SpectralCoeffs& coeffs, KrasnyThreshold threshold)
{
    std::vector<cplx> filtered = coeffs.values();
    krasny_filter_in_place(filtered, threshold);
    return SpectralCoeffs(coeffs.k_min(), std::move(filtered));
}

SpectralCoeffs forward_coeffs(const SampleVector& samples, KrasnyThreshold threshold)
{
    const GridSpec& grid = samples.grid;
    const std::int64_t P = grid.node_count();
    if (static_cast<std::int64_t>(samples.values.size()) != P)
        throw std::invalid_argument("forward_coeffs: " + std::to_string(samples.values.size())
                                    + " samples on a grid with " + std::to_string(P) + " nodes");

    std::vector<cplx> F = dft_forward(samples.values);
    // DFT bin p holds mode k = p for p <= k_max, k = p - P above; apply the
    // node-offset phase and 1/P in place, then rotate so index 0 is k_min.
    const std::int64_t k_min = mode_window_min(grid);
    const std::int64_t k_max = k_min + P - 1;
    const double inv_p = 1.0 / static_cast<double>(P);
    for (std::int64_t p = 0; p < P; ++p) {
        const std::int64_t k = p <= k_max ? p : p - P;
        F[static_cast<std::size_t>(p)] *=
            std::polar(inv_p, -pi * static_cast<double>(k) / static_cast<double>(P));
    }
    std::rotate(F.begin(), F.begin() + static_cast<std::ptrdiff_t>(wrap(k_min, P)), F.end());
    if (grid.full_period)
        F[0] = cplx(0.0, 0.0); // harmless to impose u_hat(-n) = 0
    krasny_filter_in_place(F, threshold);
    return SpectralCoeffs(k_min, std::move(F));
}

std::vector<cplx> eval_phased_modes(std::span<const cplx> c, std::int64_t k_lo, std::int64_t P)
{
    if (P < 1)
        throw std::invalid_argument("eval_phased_modes: P must be positive");
    std::vector<cplx> packed;
    if (static_cast<std::int64_t>(c.size()) == P) {
        // full window: every bin is written exactly once
        packed.reserve(static_cast<std::size_t>(P));
        const std::int64_t r = wrap(k_lo, P);
        for (std::int64_t p = 0; p < P; ++p) {
            const std::int64_t i = (p - r + P) % P;
            const std::int64_t m = k_lo + i;
            packed.push_back(std::polar(1.0, pi * static_cast<double>(m) / static_cast<double>(P))
                             * c[static_cast<std::size_t>(i)]);
        }
    } else {
        packed.assign(static_cast<std::size_t>(P), cplx(0.0, 0.0));
        for (std::size_t i = 0; i < c.size(); ++i) {
            const std::int64_t m = k_lo + static_cast<std::int64_t>(i);
            packed[static_cast<std::size_t>(wrap(m, P))] +=
                std::polar(1.0, pi * static_cast<double>(m) / static_cast<double>(P)) * c[i];
        }
    }
    dft_inverse_unnormalized_inplace(packed);
    return packed;
}

SampleVector inverse_samples(const SpectralCoeffs& coeffs, const GridSpec& grid)
{
    const std::int64_t P = grid.node_count();
    const std::int64_t k_min = mode_window_min(grid);
    if (coeffs.k_min() != k_min || coeffs.size() != P)
        throw std::invalid_argument("inverse_samples: coefficient window [" + std::to_string(coeffs.k_min())
                                    + ", " + std::to_string(coeffs.k_max()) + "] does not match the grid convention ["
                                    + std::to_string(k_min) + ", " + std::to_string(k_min + P - 1) + "]");
    return SampleVector{eval_phased_modes(coeffs.values(), k_min, P), grid};
}

} // namespace halflap
