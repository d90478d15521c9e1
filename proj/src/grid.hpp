#ifndef HALFLAP_GRID_HPP
#define HALFLAP_GRID_HPP

#include <complex>
#include <cstdint>
#include <vector>

namespace halflap {

using cplx = std::complex<double>;

// Grid of equally-spaced nonterminal nodes s_j = pi*(2j+1)/(2n) together with
// the cotangent map x = map_scale * cot(s).  The half-period grid has n nodes
// on (0,pi); the full-period grid has 2n nodes on (0,2*pi).  No node ever
// falls on 0, pi or 2*pi, where the map is singular.
struct GridSpec {
    std::int64_t n = 0;
    double map_scale = 1.0;
    bool full_period = false;

    std::int64_t node_count() const { return full_period ? 2 * n : n; }
    double s_node(std::int64_t j) const;
    double x_node(std::int64_t j) const;
    std::vector<double> s_nodes() const;
    std::vector<double> x_nodes() const;

    bool operator==(const GridSpec&) const = default;
};

GridSpec make_grid(std::int64_t n, double map_scale, bool full_period);

// Complex samples attached to the grid they were taken on.
struct SampleVector {
    std::vector<cplx> values;
    GridSpec grid;
};

// Fourier coefficients u_hat(k) over a contiguous signed index window
// [k_min, k_max].  Half-period data multiplies e^{i*2*k*s} with
// k in [-floor(n/2), ceil(n/2)-1]; full-period data multiplies e^{i*k*s}
// with k in [-n, n-1].
class SpectralCoeffs {
public:
    SpectralCoeffs() = default;
    SpectralCoeffs(std::int64_t k_min, std::vector<cplx> coeffs);

    std::int64_t k_min() const { return k_min_; }
    std::int64_t k_max() const { return k_min_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }
    std::int64_t size() const { return static_cast<std::int64_t>(coeffs_.size()); }

    cplx at(std::int64_t k) const;
    void set(std::int64_t k, cplx value);

    const std::vector<cplx>& values() const { return coeffs_; }
    std::vector<cplx>& values() { return coeffs_; }

private:
    std::int64_t k_min_ = 0;
    std::vector<cplx> coeffs_;
};

struct KrasnyThreshold {
    double epsilon = 0x1p-52;
};

} // namespace halflap

#endif
