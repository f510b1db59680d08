#pragma once

#include <span>
#include <vector>

#include "pqovs/propagator.hpp"
#include "pqovs/states.hpp"

namespace pqovs {

/// Equal squeezing of both modes: an isotropic dilation by s of the
/// field-strength plane (s < 1 compresses).
struct SqueezeParams {
    double s = 1.0;

    void validate() const;
};

/// R(rho) evaluated off-grid. Spectral interpolation matched to the grid
/// scheme (barycentric Legendre or Fourier-Bessel cardinal series); zero
/// beyond r_max.
std::vector<cplx> interpolate_radial(const RadialVortexState& state, std::span<const double> radii);

/// R'(rho) = R(rho / s) / s, resampled onto `target` (defaults to the input
/// grid). Throws CoverageError when more than 1e-10 of the norm would land
/// outside the target grid.
RadialVortexState squeeze(const RadialVortexState& state, const SqueezeParams& params, GridPtr target = nullptr);

/// Squeeze followed by free propagation to the first Fourier plane
/// z = pi / (2k): a Fourier transform whose scale is set by the gain.
RadialVortexState effective_lens(const RadialVortexState& state, const SqueezeParams& params, double k,
                                 GridPtr target = nullptr);

}  // namespace pqovs
