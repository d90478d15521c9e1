#include "extensions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace halflap {

namespace {

constexpr double pi = std::numbers::pi;

GridSpec full_of(const GridSpec& half, const char* who)
{
    if (half.full_period)
        throw std::invalid_argument(std::string(who) + ": input must live on a half-period grid");
    return GridSpec{half.n, half.map_scale, true};
}

void require_half_samples(const SampleVector& half, const char* who)
{
    if (half.grid.full_period)
        throw std::invalid_argument(std::string(who) + ": input must live on a half-period grid");
    if (static_cast<std::int64_t>(half.values.size()) != half.grid.n)
        throw std::invalid_argument(std::string(who) + ": sample count does not match the grid");
}

// Jacobi eigenvalue iteration for a small symmetric matrix; returns
// eigenvalues in d and eigenvectors in the columns of V.
template <std::size_t N>
void jacobi_eigen(std::array<std::array<double, N>, N>& A,
                  std::array<double, N>& d,
                  std::array<std::array<double, N>, N>& V)
{
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j)
            V[i][j] = i == j ? 1.0 : 0.0;
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < N; ++p)
            for (std::size_t q = p + 1; q < N; ++q)
                off += A[p][q] * A[p][q];
        if (off < 1e-300)
            break;
        for (std::size_t p = 0; p + 1 < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                if (std::abs(A[p][q]) < 1e-300)
                    continue;
                const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
                const double t = (theta >= 0.0 ? 1.0 : -1.0)
                    / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t i = 0; i < N; ++i) {
                    const double aip = A[i][p], aiq = A[i][q];
                    A[i][p] = c * aip - s * aiq;
                    A[i][q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < N; ++i) {
                    const double api = A[p][i], aqi = A[q][i];
                    A[p][i] = c * api - s * aqi;
                    A[q][i] = s * api + c * aqi;
                }
                for (std::size_t i = 0; i < N; ++i) {
                    const double vip = V[i][p], viq = V[i][q];
                    V[i][p] = c * vip - s * viq;
                    V[i][q] = s * vip + c * viq;
                }
            }
        }
    }
    for (std::size_t i = 0; i < N; ++i)
        d[i] = A[i][i];
}

// Rows of the interpolation matrix: d-th s-derivative of cos(ks) and sin(ks)
// evaluated at s, for k = 1..5.
void fill_condition_row(double s, int d, std::array<double, 10>& row)
{
    for (int k = 1; k <= 5; ++k) {
        const double kd = std::pow(static_cast<double>(k), d);
        row[static_cast<std::size_t>(k - 1)] = kd * std::cos(k * s + d * pi / 2.0);
        row[static_cast<std::size_t>(5 + k - 1)] = kd * std::sin(k * s + d * pi / 2.0);
    }
}

} // namespace

SampleVector extend_even(const SampleVector& half)
{
    require_half_samples(half, "extend_even");
    const std::int64_t N = half.grid.n;
    SampleVector out{{}, full_of(half.grid, "extend_even")};
    out.values.reserve(static_cast<std::size_t>(2 * N));
    out.values.assign(half.values.begin(), half.values.end());
    out.values.insert(out.values.end(), half.values.rbegin(), half.values.rend());
    return out;
}

SampleVector extend_odd(const SampleVector& half)
{
    require_half_samples(half, "extend_odd");
    const std::int64_t N = half.grid.n;
    SampleVector out{{}, full_of(half.grid, "extend_odd")};
    out.values.reserve(static_cast<std::size_t>(2 * N));
    out.values.assign(half.values.begin(), half.values.end());
    for (std::int64_t j = 0; j < N; ++j)
        out.values.push_back(-half.values[static_cast<std::size_t>(N - 1 - j)]);
    return out;
}

std::array<double, 10> solve_extension_coeffs(const BoundaryData& boundary)
{
    std::array<std::array<double, 10>, 10> A{};
    std::array<double, 10> rhs{};
    for (int d = 0; d < 5; ++d) {
        fill_condition_row(pi, d, A[static_cast<std::size_t>(d)]);
        fill_condition_row(2.0 * pi, d, A[static_cast<std::size_t>(5 + d)]);
        rhs[static_cast<std::size_t>(d)] = boundary.at_pi[static_cast<std::size_t>(d)];
        rhs[static_cast<std::size_t>(5 + d)] = boundary.at_two_pi[static_cast<std::size_t>(d)];
    }

    // Minimum-norm least squares through the eigen-decomposition of A^T A.
    std::array<std::array<double, 10>, 10> ata{};
    std::array<double, 10> atb{};
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = 0; j < 10; ++j) {
            double acc = 0.0;
            for (std::size_t r = 0; r < 10; ++r)
                acc += A[r][i] * A[r][j];
            ata[i][j] = acc;
        }
        double acc = 0.0;
        for (std::size_t r = 0; r < 10; ++r)
            acc += A[r][i] * rhs[r];
        atb[i] = acc;
    }

    std::array<double, 10> eig{};
    std::array<std::array<double, 10>, 10> V{};
    jacobi_eigen(ata, eig, V);

    double lambda_max = 0.0;
    for (double l : eig)
        lambda_max = std::max(lambda_max, l);
    if (lambda_max <= 0.0)
        throw SingularSystemError("solve_extension_coeffs: zero interpolation matrix",
                                  std::numeric_limits<double>::infinity());
    // Eigenvalues of A^T A: the sin^5 null direction computes as O(eps) times
    // lambda_max, while the smallest genuine eigenvalue of this fixed matrix
    // is ~1.7e-6 of lambda_max, so the threshold has orders of margin on
    // both sides.
    const double cutoff = 1e-12 * lambda_max;
    double lambda_min_kept = lambda_max;

    std::array<double, 10> y{};
    for (std::size_t m = 0; m < 10; ++m) {
        if (eig[m] <= cutoff)
            continue;
        lambda_min_kept = std::min(lambda_min_kept, eig[m]);
        double proj = 0.0;
        for (std::size_t i = 0; i < 10; ++i)
            proj += V[i][m] * atb[i];
        proj /= eig[m];
        for (std::size_t i = 0; i < 10; ++i)
            y[i] += proj * V[i][m];
    }
    const double condition = std::sqrt(lambda_max / lambda_min_kept);

    // The data must actually be interpolable; a large residual means the
    // conditions are inconsistent with the rank of the ansatz.
    double resid = 0.0, scale = 1.0;
    for (std::size_t r = 0; r < 10; ++r) {
        double acc = 0.0;
        for (std::size_t i = 0; i < 10; ++i)
            acc += A[r][i] * y[i];
        resid = std::max(resid, std::abs(acc - rhs[r]));
        scale = std::max(scale, std::abs(rhs[r]));
    }
    if (resid > 1e-8 * scale)
        throw SingularSystemError("solve_extension_coeffs: boundary data not interpolable "
                                  "(residual " + std::to_string(resid) + ", condition estimate "
                                  + std::to_string(condition) + ")", condition);
    return y;
}

SampleVector extend_smooth_generic(const SampleVector& half, const BoundaryData& boundary)
{
    require_half_samples(half, "extend_smooth_generic");
    for (double v : boundary.at_pi)
        if (!std::isfinite(v))
            throw std::invalid_argument("extend_smooth_generic: non-finite boundary data at pi");
    for (double v : boundary.at_two_pi)
        if (!std::isfinite(v))
            throw std::invalid_argument("extend_smooth_generic: non-finite boundary data at 2pi");

    const std::array<double, 10> c = solve_extension_coeffs(boundary);
    const std::int64_t N = half.grid.n;
    SampleVector out{std::vector<cplx>(static_cast<std::size_t>(2 * N)), full_of(half.grid, "extend_smooth_generic")};
    for (std::int64_t j = 0; j < N; ++j)
        out.values[static_cast<std::size_t>(j)] = half.values[static_cast<std::size_t>(j)];
    for (std::int64_t j = N; j < 2 * N; ++j) {
        const double s = out.grid.s_node(j);
        double v = 0.0;
        for (int k = 1; k <= 5; ++k)
            v += c[static_cast<std::size_t>(k - 1)] * std::cos(k * s)
                + c[static_cast<std::size_t>(5 + k - 1)] * std::sin(k * s);
        out.values[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

BoundaryData estimate_boundary_from_samples(const SampleVector& half)
{
    require_half_samples(half, "estimate_boundary_from_samples");
    const std::int64_t N = half.grid.n;
    if (N < 5)
        throw std::invalid_argument("estimate_boundary_from_samples: need at least 5 samples");

    // Degree-4 polynomial through five samples nearest the boundary; its
    // derivatives at the boundary point are the estimates.  Solve the small
    // Vandermonde system by Gaussian elimination.
    auto fit = [](const std::array<double, 5>& t, const std::array<double, 5>& u) {
        std::array<std::array<double, 6>, 5> m{};
        for (std::size_t r = 0; r < 5; ++r) {
            double p = 1.0;
            for (std::size_t cidx = 0; cidx < 5; ++cidx) {
                m[r][cidx] = p;
                p *= t[r];
            }
            m[r][5] = u[r];
        }
        for (std::size_t col = 0; col < 5; ++col) {
            std::size_t piv = col;
            for (std::size_t r = col + 1; r < 5; ++r)
                if (std::abs(m[r][col]) > std::abs(m[piv][col]))
                    piv = r;
            std::swap(m[col], m[piv]);
            for (std::size_t r = 0; r < 5; ++r) {
                if (r == col)
                    continue;
                const double f = m[r][col] / m[col][col];
                for (std::size_t cidx = col; cidx < 6; ++cidx)
                    m[r][cidx] -= f * m[col][cidx];
            }
        }
        std::array<double, 5> coeff{};
        for (std::size_t r = 0; r < 5; ++r)
            coeff[r] = m[r][5] / m[r][r];
        // value and derivatives at t = 0: d!/1 * coeff[d]
        return std::array<double, 5>{coeff[0], coeff[1], 2.0 * coeff[2], 6.0 * coeff[3], 24.0 * coeff[4]};
    };

    std::array<double, 5> t_pi{}, u_pi{}, t_zero{}, u_zero{};
    for (std::size_t i = 0; i < 5; ++i) {
        const std::int64_t j_hi = N - 5 + static_cast<std::int64_t>(i);
        t_pi[i] = half.grid.s_node(j_hi) - pi;
        u_pi[i] = half.values[static_cast<std::size_t>(j_hi)].real();
        t_zero[i] = half.grid.s_node(static_cast<std::int64_t>(i));
        u_zero[i] = half.values[i].real();
    }
    BoundaryData bd;
    bd.at_pi = fit(t_pi, u_pi);
    bd.at_two_pi = fit(t_zero, u_zero); // continuation: values at 2pi equal those at 0+
    return bd;
}

SampleVector extend_smooth_arctan(double map_scale, const GridSpec& full_grid)
{
    if (!full_grid.full_period)
        throw std::invalid_argument("extend_smooth_arctan: full-period grid required");
    if (!(map_scale > 0.0) || !std::isfinite(map_scale))
        throw std::invalid_argument("extend_smooth_arctan: map_scale must be positive");
    const double L = map_scale;
    const double b2 = -3.0 / (4.0 * L) + 1.0 / (12.0 * L * L * L);
    const double b4 = 1.0 / (8.0 * L) - 1.0 / (24.0 * L * L * L);
    SampleVector out{std::vector<cplx>(static_cast<std::size_t>(full_grid.node_count())), full_grid};
    for (std::int64_t j = 0; j < full_grid.node_count(); ++j) {
        const double s = full_grid.s_node(j);
        double v;
        if (s <= pi) {
            v = std::atan(L * std::cos(s) / std::sin(s));
        } else {
            v = (75.0 * pi / 128.0) * std::cos(s) + b2 * std::sin(2.0 * s)
                - (25.0 * pi / 256.0) * std::cos(3.0 * s) + b4 * std::sin(4.0 * s)
                + (3.0 * pi / 256.0) * std::cos(5.0 * s);
        }
        out.values[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

} // namespace halflap
