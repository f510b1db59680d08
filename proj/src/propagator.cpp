#include "pqovs/propagator.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "pqovs/errors.hpp"
#include "pqovs/specfun.hpp"

namespace pqovs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kHalfPi = 0.5 * std::numbers::pi;
// Below this |sin theta| one transform is split into two well-conditioned ones.
constexpr double kSplitBelow = 0.5;

cplx i_power(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

cplx unitary_prefactor(double sin_theta) { return cplx(0.0, 1.0) / (kTwoPi * sin_theta); }

cplx printed_prefactor(double sin_theta) { return std::sqrt(unitary_prefactor(sin_theta)); }

// One chirped Hankel transform at angle theta (|sin theta| well away from 0):
//   R_out(rho) = i^{|q|+1} sgn(sin)^{|q|} / sin * e^{-i rho^2 cot/2}
//                * sum_j w_j R_j e^{-i rho_j^2 cot/2} J_|q|(rho rho_j / |sin|)
std::vector<cplx> hankel_step(const std::vector<cplx>& in, int charge, const GridSpec& grid, double theta) {
    const int order = std::abs(charge);
    const double s = std::sin(theta);
    const double cot = std::cos(theta) / s;
    const double inv_abs_s = 1.0 / std::abs(s);
    const int n = grid.n;
    const auto& rho = grid.nodes;

    std::vector<cplx> chirp(n);
    std::vector<cplx> source(n);
    for (int j = 0; j < n; ++j) {
        chirp[j] = std::polar(1.0, -0.5 * rho[j] * rho[j] * cot);
        source[j] = grid.weights[j] * in[j] * chirp[j];
    }

    // J(rho_i rho_j / |s|) is symmetric in (i, j).
    std::vector<cplx> acc(n, cplx(0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const double bj = specfun::bessel_j(order, rho[i] * rho[j] * inv_abs_s);
            acc[i] += source[j] * bj;
            if (j != i) acc[j] += source[i] * bj;
        }
    }

    cplx prefactor = i_power(order + 1) / s;
    if (s < 0.0 && order % 2 == 1) prefactor = -prefactor;
    for (int i = 0; i < n; ++i) acc[i] *= prefactor * chirp[i];
    return acc;
}

}  // namespace

std::string to_string(KernelConvention convention) {
    return convention == KernelConvention::unitary ? "unitary" : "as_printed";
}

KernelConvention convention_from_string(const std::string& name) {
    if (name == "unitary") return KernelConvention::unitary;
    if (name == "as_printed") return KernelConvention::as_printed;
    throw InvalidArgument("unknown kernel convention '" + name + "'");
}

void PropagationParams::validate() const {
    if (!std::isfinite(k) || k <= 0.0) throw InvalidArgument("propagation constant k must be positive");
    if (!std::isfinite(z) || z < 0.0) throw InvalidArgument("propagation distance z must be nonnegative");
    if (!(eps_singular > 0.0)) throw InvalidArgument("eps_singular must be positive");
}

cplx kernel(double rho0, double phi0, double rho, double phi, const PropagationParams& params,
            KernelConvention convention) {
    params.validate();
    const double theta = params.theta();
    const double s = std::sin(theta);
    if (std::abs(s) < params.eps_singular) {
        std::ostringstream msg;
        msg << "kernel: singular plane, |sin(kz)| = " << std::abs(s);
        throw SingularPlaneError(msg.str());
    }
    const double bracket = (rho0 * rho0 + rho * rho) * std::cos(theta) - 2.0 * rho0 * rho * std::cos(phi0 - phi);
    const cplx phase = std::polar(1.0, -bracket / (2.0 * s));
    const cplx prefactor = convention == KernelConvention::unitary ? unitary_prefactor(s) : printed_prefactor(s);
    return prefactor * phase;
}

RadialVortexState propagate(const RadialVortexState& state, const PropagationParams& params,
                            KernelConvention convention) {
    params.validate();
    const double theta = params.theta();
    const double s = std::sin(theta);
    const int order = std::abs(state.charge());

    if (std::abs(s) < params.eps_singular) {
        if (!params.analytic_limits || convention == KernelConvention::as_printed) {
            std::ostringstream msg;
            msg << "propagate: singular plane theta = " << theta << " (|sin| = " << std::abs(s) << ")";
            throw SingularPlaneError(msg.str());
        }
        if (std::cos(theta) > 0.0) return state.with_samples(state.samples());
        // theta = pi: e^{i pi (N + 1)} with N = |q| mod 2 on angular monomials.
        std::vector<cplx> out = state.samples();
        if (order % 2 == 0) {
            for (auto& v : out) v = -v;
        }
        return state.with_samples(std::move(out));
    }

    std::vector<cplx> out;
    if (std::abs(s) < kSplitBelow) {
        const auto mid = hankel_step(state.samples(), state.charge(), state.grid(), kHalfPi);
        out = hankel_step(mid, state.charge(), state.grid(), theta - kHalfPi);
    } else {
        out = hankel_step(state.samples(), state.charge(), state.grid(), theta);
    }

    if (convention == KernelConvention::as_printed) {
        const cplx ratio = printed_prefactor(s) / unitary_prefactor(s);
        for (auto& v : out) v *= ratio;
    }
    return state.with_samples(std::move(out));
}

cplx propagate_bruteforce_field(const RadialVortexState& state, const PropagationParams& params, int n_phi,
                                double rho, double phi) {
    params.validate();
    if (n_phi < 128) throw InvalidArgument("propagate_bruteforce: n_phi must be at least 128");
    if (std::abs(std::sin(params.theta())) < kBruteforceSingularEps) {
        throw SingularPlaneError("propagate_bruteforce: too close to a singular plane");
    }
    const auto& grid = state.grid();
    const double dphi = kTwoPi / n_phi;
    cplx total = 0.0;
    for (int j = 0; j < grid.n; ++j) {
        cplx ring = 0.0;
        for (int m = 0; m < n_phi; ++m) {
            const double phi0 = m * dphi;
            ring += kernel(grid.nodes[j], phi0, rho, phi, params) * std::polar(1.0, state.charge() * phi0);
        }
        total += grid.weights[j] * state.samples()[j] * ring * dphi;
    }
    return total;
}

RadialVortexState propagate_bruteforce(const RadialVortexState& state, const PropagationParams& params,
                                       int n_phi) {
    std::vector<cplx> out(state.grid().n);
    for (int i = 0; i < state.grid().n; ++i) {
        out[i] = propagate_bruteforce_field(state, params, n_phi, state.grid().nodes[i], 0.0);
    }
    return state.with_samples(std::move(out));
}

FourierPlaneList fourier_planes(double k, int m_max) {
    if (!std::isfinite(k) || k <= 0.0) throw InvalidArgument("fourier_planes: k must be positive");
    if (m_max < 0) throw InvalidArgument("fourier_planes: m_max must be nonnegative");
    FourierPlaneList list{k, {}};
    list.planes.reserve(m_max + 1);
    for (int m = 0; m <= m_max; ++m) list.planes.push_back({m, (2 * m + 1) * std::numbers::pi / (2.0 * k)});
    return list;
}

FidelityScan scan_fidelity(const RadialVortexState& state, const RadialVortexState& target, double k,
                           double z_from, double z_to, int steps, KernelConvention convention) {
    if (steps < 2) throw InvalidArgument("scan_fidelity: need at least two steps");
    if (!(z_from >= 0.0) || !(z_to > z_from) || !std::isfinite(z_to)) {
        throw InvalidArgument("scan_fidelity: need 0 <= z_from < z_to");
    }
    PropagationParams params;
    params.k = k;
    params.validate();

    FidelityScan scan;
    scan.rows.reserve(steps);
    for (int i = 0; i < steps; ++i) {
        double z = z_from + (z_to - z_from) * i / (steps - 1);
        if (std::abs(std::sin(k * z)) < params.eps_singular) z += 2.0 * params.eps_singular / k;
        params.z = z;
        const auto out = propagate(state, params, convention);
        scan.rows.push_back({z, fidelity(target, out), norm(out)});
    }
    return scan;
}

}  // namespace pqovs
