#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pqovs {

using cplx = std::complex<double>;

enum class GridScheme { gauss_legendre, bessel_zero };

/// Radial quadrature grid over the dimensionless field-strength radius.
///
/// `weights` integrate f(rho) * rho * d rho over [0, r_max], i.e. the radial
/// measure is already folded in. `order_hint` is the Bessel order used for
/// bessel_zero node placement and is ignored for gauss_legendre.
struct GridSpec {
    GridScheme scheme = GridScheme::gauss_legendre;
    double r_max = 0.0;
    int n = 0;
    int order_hint = 0;
    std::vector<double> nodes;
    std::vector<double> weights;

    /// Weights for the plain integral of f(rho) d rho.
    std::vector<double> plain_weights() const;

    bool same_layout(const GridSpec& other) const;
};

using GridPtr = std::shared_ptr<const GridSpec>;

inline constexpr int kMinGridNodes = 16;
inline constexpr int kDefaultGridNodes = 1024;

GridPtr make_grid(GridScheme scheme, double r_max, int n, int order_hint = 0);

/// Default truncation radius alpha * sqrt(2) + 10.
double default_r_max(double alpha);

/// Gauss-Legendre grid with the default radius for `alpha`.
GridPtr default_grid(double alpha, int n = kDefaultGridNodes);

std::string to_string(GridScheme scheme);
GridScheme grid_scheme_from_string(const std::string& name);

enum class Family { bg, mbg, custom };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

/// psi(rho, phi) = R(rho) e^{i q phi}, with R sampled on a radial grid.
class RadialVortexState {
public:
    RadialVortexState(int charge, std::optional<double> alpha, Family family, GridPtr grid,
                      std::vector<cplx> samples);

    int charge() const { return charge_; }
    const std::optional<double>& alpha() const { return alpha_; }
    Family family() const { return family_; }
    const GridSpec& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    const std::vector<cplx>& samples() const { return samples_; }

    /// Same charge and grid, new amplitudes; the result is tagged custom.
    RadialVortexState with_samples(std::vector<cplx> samples) const;

private:
    int charge_;
    std::optional<double> alpha_;
    Family family_;
    GridPtr grid_;
    std::vector<cplx> samples_;
};

/// Largest alpha^2 the constructors accept.
inline constexpr double kMaxAlphaSquared = 700.0;

/// Bessel-Gauss vortex state
///   i^q / sqrt(pi I_|q|(alpha^2)) J_|q|(sqrt2 alpha rho) e^{-(rho^2 - alpha^2)/2} e^{i q phi}.
RadialVortexState make_bg(int q, double alpha, GridPtr grid);

/// Modified Bessel-Gauss (perfect vortex) state
///   i^{2q+1} / sqrt(pi I_|q|(alpha^2)) I_|q|(sqrt2 alpha rho) e^{-(rho^2 + alpha^2)/2} e^{i q phi}.
RadialVortexState make_mbg(int q, double alpha, GridPtr grid);

double norm(const RadialVortexState& state);

/// <a|b>; exactly zero when the charges differ.
cplx overlap(const RadialVortexState& a, const RadialVortexState& b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const RadialVortexState& a, const RadialVortexState& b);

/// Radial probability density P(rho) = 2 pi rho |R(rho)|^2.
struct DensityProfile {
    std::vector<double> radii;
    std::vector<double> values;
    std::vector<double> plain_weights;

    double total() const;
};

DensityProfile density_radial(const RadialVortexState& state);

/// Location of the density maximum, refined below grid resolution.
double peak_radius(const DensityProfile& profile);

/// <rho^m> = 2 pi sum_i w_i rho_i^m |R_i|^2.
double radial_moment(const RadialVortexState& state, int m);

/// <rho^2> - <rho>^2.
double radial_noise(const RadialVortexState& state);

}  // namespace pqovs
