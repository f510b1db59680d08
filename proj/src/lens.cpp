#include "pqovs/lens.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pqovs/errors.hpp"
#include "pqovs/specfun.hpp"

namespace pqovs {

namespace {

constexpr double kCoverageTolerance = 1e-10;

// Second-form barycentric interpolation through Gauss-Legendre nodes, with
// the closed-form weights (-1)^i sqrt((1 - t_i^2) omega_i).
std::vector<cplx> barycentric_legendre(const GridSpec& grid, const std::vector<cplx>& f,
                                       std::span<const double> radii) {
    const double half = 0.5 * grid.r_max;
    std::vector<double> lambda(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double t = grid.nodes[i] / half - 1.0;
        const double omega = grid.weights[i] / (half * grid.nodes[i]);
        lambda[i] = ((i % 2 == 0) ? 1.0 : -1.0) * std::sqrt((1.0 - t * t) * omega);
    }
    std::vector<cplx> out(radii.size(), cplx(0.0));
    for (std::size_t m = 0; m < radii.size(); ++m) {
        const double x = radii[m];
        if (x < 0.0 || x > grid.r_max) continue;
        cplx num = 0.0;
        double den = 0.0;
        bool exact = false;
        for (int i = 0; i < grid.n; ++i) {
            const double d = x - grid.nodes[i];
            if (d == 0.0) {
                out[m] = f[i];
                exact = true;
                break;
            }
            const double c = lambda[i] / d;
            num += c * f[i];
            den += c;
        }
        if (!exact) out[m] = num / den;
    }
    return out;
}

// Band-limited reconstruction from samples at Bessel zeros:
//   f(r) = sum_k f_k 2 j_k J_p(V r) / ((j_k^2 - V^2 r^2) J_{p+1}(j_k)),  V = j_{n+1} / R.
std::vector<cplx> fourier_bessel_cardinal(const GridSpec& grid, const std::vector<cplx>& f,
                                          std::span<const double> radii) {
    const int p = grid.order_hint;
    const auto zeros = specfun::bessel_j_zeros(p, grid.n + 1);
    const double band = zeros[grid.n] / grid.r_max;
    std::vector<double> jp1(grid.n);
    for (int k = 0; k < grid.n; ++k) jp1[k] = specfun::bessel_j(p + 1, zeros[k]);

    std::vector<cplx> out(radii.size(), cplx(0.0));
    for (std::size_t m = 0; m < radii.size(); ++m) {
        const double x = radii[m];
        if (x < 0.0 || x > grid.r_max) continue;
        const double vr = band * x;
        const double jv = specfun::bessel_j(p, vr);
        cplx sum = 0.0;
        for (int k = 0; k < grid.n; ++k) {
            if (x == grid.nodes[k]) {
                sum = f[k];
                break;
            }
            sum += f[k] * (2.0 * zeros[k] * jv / ((zeros[k] * zeros[k] - vr * vr) * jp1[k]));
        }
        out[m] = sum;
    }
    return out;
}

}  // namespace

void SqueezeParams::validate() const {
    if (!std::isfinite(s) || s <= 0.0) throw InvalidArgument("squeeze factor must be positive and finite");
}

std::vector<cplx> interpolate_radial(const RadialVortexState& state, std::span<const double> radii) {
    const auto& grid = state.grid();
    if (grid.scheme == GridScheme::gauss_legendre) return barycentric_legendre(grid, state.samples(), radii);
    return fourier_bessel_cardinal(grid, state.samples(), radii);
}

RadialVortexState squeeze(const RadialVortexState& state, const SqueezeParams& params, GridPtr target) {
    params.validate();
    if (!target) target = state.grid_ptr();
    if (params.s == 1.0 && target->same_layout(state.grid())) {
        return RadialVortexState(state.charge(), state.alpha(), state.family(), target, state.samples());
    }

    // Source mass beyond r_target / s is lost from the target grid.
    const auto& src = state.grid();
    const double cut = target->r_max / params.s;
    double lost = 0.0, total = 0.0;
    for (int j = 0; j < src.n; ++j) {
        const double m = src.weights[j] * std::norm(state.samples()[j]);
        total += m;
        if (src.nodes[j] > cut) lost += m;
    }
    if (total > 0.0 && lost / total > kCoverageTolerance) {
        std::ostringstream msg;
        msg << "squeeze: " << lost / total << " of the norm falls outside the target grid";
        throw CoverageError(msg.str());
    }

    std::vector<double> radii(target->n);
    for (int i = 0; i < target->n; ++i) radii[i] = target->nodes[i] / params.s;
    auto samples = interpolate_radial(state, radii);
    for (auto& v : samples) v /= params.s;
    return RadialVortexState(state.charge(), state.alpha(), Family::custom, std::move(target), std::move(samples));
}

RadialVortexState effective_lens(const RadialVortexState& state, const SqueezeParams& params, double k,
                                 GridPtr target) {
    PropagationParams prop;
    prop.k = k;
    prop.z = std::numbers::pi / (2.0 * k);
    prop.validate();
    return propagate(squeeze(state, params, std::move(target)), prop);
}

}  // namespace pqovs
