#include "grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace halflap {

double GridSpec::s_node(std::int64_t j) const
{
    return std::numbers::pi * static_cast<double>(2 * j + 1) / (2.0 * static_cast<double>(n));
}

double GridSpec::x_node(std::int64_t j) const
{
    const double s = s_node(j);
    return map_scale * std::cos(s) / std::sin(s);
}

std::vector<double> GridSpec::s_nodes() const
{
    std::vector<double> s;
    s.reserve(static_cast<std::size_t>(node_count()));
    for (std::int64_t j = 0; j < node_count(); ++j)
        s.push_back(s_node(j));
    return s;
}

std::vector<double> GridSpec::x_nodes() const
{
    std::vector<double> x;
    x.reserve(static_cast<std::size_t>(node_count()));
    for (std::int64_t j = 0; j < node_count(); ++j)
        x.push_back(x_node(j));
    return x;
}

GridSpec make_grid(std::int64_t n, double map_scale, bool full_period)
{
    if (n < 2)
        throw std::invalid_argument("make_grid: n must be >= 2, got " + std::to_string(n));
    if (!(map_scale > 0.0) || !std::isfinite(map_scale))
        throw std::invalid_argument("make_grid: map_scale must be positive and finite");
    return GridSpec{n, map_scale, full_period};
}

SpectralCoeffs::SpectralCoeffs(std::int64_t k_min, std::vector<cplx> coeffs)
    : k_min_(k_min), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("SpectralCoeffs: empty coefficient vector");
}

cplx SpectralCoeffs::at(std::int64_t k) const
{
    if (k < k_min() || k > k_max())
        throw std::invalid_argument("SpectralCoeffs: index " + std::to_string(k) + " outside ["
                                    + std::to_string(k_min()) + ", " + std::to_string(k_max()) + "]");
    return coeffs_[static_cast<std::size_t>(k - k_min_)];
}

void SpectralCoeffs::set(std::int64_t k, cplx value)
{
    if (k < k_min() || k > k_max())
        throw std::invalid_argument("SpectralCoeffs: index " + std::to_string(k) + " outside ["
                                    + std::to_string(k_min()) + ", " + std::to_string(k_max()) + "]");
    coeffs_[static_cast<std::size_t>(k - k_min_)] = value;
}

} // namespace halflap
