#pragma once

#include <vector>

#include "pqovs/states.hpp"

namespace pqovs {

/// Prefactor normalization of the propagator kernel.
///
/// `unitary` uses i / (2 pi sin theta), which conserves the two-mode norm.
/// `as_printed` uses the square root of that, as the kernel is usually
/// written; it does not conserve the norm.
enum class KernelConvention { unitary, as_printed };

std::string to_string(KernelConvention convention);
KernelConvention convention_from_string(const std::string& name);

inline constexpr double kDefaultSingularEps = 1e-6;
inline constexpr double kBruteforceSingularEps = 0.05;

/// Propagation constant k and distance z; the transform angle is theta = k z.
struct PropagationParams {
    double k = 1.0;
    double z = 0.0;
    double eps_singular = kDefaultSingularEps;
    /// When false, planes with |sin theta| < eps_singular raise instead of
    /// mapping to the identity/parity limits.
    bool analytic_limits = true;

    double theta() const { return k * z; }
    void validate() const;
};

/// Kernel K(rho0, phi0, rho, phi; 0, z) of the homogeneous two-mode medium.
cplx kernel(double rho0, double phi0, double rho, double phi, const PropagationParams& params,
            KernelConvention convention = KernelConvention::unitary);

/// Propagated state at plane z, via the angular-reduced chirped Hankel
/// transform on the state's own grid. Charge is preserved.
RadialVortexState propagate(const RadialVortexState& state, const PropagationParams& params,
                            KernelConvention convention = KernelConvention::unitary);

/// psi(rho, phi) at plane z from the unreduced double integral
/// (trapezoid over phi0, grid quadrature over rho0). Oracle use only.
cplx propagate_bruteforce_field(const RadialVortexState& state, const PropagationParams& params, int n_phi,
                                double rho, double phi);

/// Radial amplitude on the state's grid from the unreduced double integral.
RadialVortexState propagate_bruteforce(const RadialVortexState& state, const PropagationParams& params,
                                       int n_phi);

struct FourierPlane {
    int m;
    double z;
};

struct FourierPlaneList {
    double k;
    std::vector<FourierPlane> planes;
};

/// z_m = (2m + 1) pi / (2k), m = 0..m_max.
FourierPlaneList fourier_planes(double k, int m_max);

struct FidelityRow {
    double z;
    double fidelity;
    double norm;
};

struct FidelityScan {
    std::vector<FidelityRow> rows;
};

/// |<target|propagate(state, z)>|^2 on `steps` evenly spaced planes in
/// [z_from, z_to]. Planes within eps_singular of a caustic are nudged off it.
FidelityScan scan_fidelity(const RadialVortexState& state, const RadialVortexState& target, double k,
                           double z_from, double z_to, int steps,
                           KernelConvention convention = KernelConvention::unitary);

}  // namespace pqovs
