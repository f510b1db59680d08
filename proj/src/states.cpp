#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pqovs/errors.hpp"
#include "pqovs/specfun.hpp"
#include "pqovs/states.hpp"

namespace pqovs {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kNormTolerance = 1e-8;
// ln(1e14): the Gaussian tail must be below 1e-14 at r_max.
const double kTailExponent = std::log(1e14);

cplx i_power(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

void check_family_args(int q, double alpha, const GridPtr& grid, const char* who) {
    if (!grid) throw InvalidArgument(std::string(who) + ": missing grid");
    if (std::abs(q) > specfun::kMaxOrder) throw InvalidArgument(std::string(who) + ": charge out of range");
    if (!std::isfinite(alpha) || alpha < 0.0) {
        throw InvalidArgument(std::string(who) + ": alpha must be finite and positive");
    }
    // The prefactor is 0/0 at alpha = 0 unless q = 0.
    if (alpha == 0.0 && q != 0) {
        throw InvalidArgument(std::string(who) + ": alpha = 0 is degenerate for nonzero charge");
    }
    if (alpha * alpha > kMaxAlphaSquared) {
        std::ostringstream msg;
        msg << who << ": alpha^2 = " << alpha * alpha << " exceeds the safe range " << kMaxAlphaSquared;
        throw OverflowGuardError(msg.str());
    }
}

RadialVortexState finish(int q, double alpha, Family family, GridPtr grid, std::vector<cplx> samples,
                         const char* who) {
    RadialVortexState state(q, alpha, family, std::move(grid), std::move(samples));
    const double nrm = norm(state);
    if (std::abs(nrm - 1.0) > kNormTolerance) {
        std::ostringstream msg;
        msg << who << ": grid too coarse, norm = " << nrm;
        throw NumericFailure(msg.str());
    }
    return state;
}

}  // namespace

RadialVortexState::RadialVortexState(int charge, std::optional<double> alpha, Family family, GridPtr grid,
                                     std::vector<cplx> samples)
    : charge_(charge), alpha_(alpha), family_(family), grid_(std::move(grid)), samples_(std::move(samples)) {
    if (!grid_) throw InvalidArgument("RadialVortexState: missing grid");
    if (static_cast<int>(samples_.size()) != grid_->n) {
        throw InvalidArgument("RadialVortexState: sample count does not match grid");
    }
    for (const auto& s : samples_) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw NumericFailure("RadialVortexState: non-finite sample");
        }
    }
}

RadialVortexState RadialVortexState::with_samples(std::vector<cplx> samples) const {
    return RadialVortexState(charge_, alpha_, Family::custom, grid_, std::move(samples));
}

RadialVortexState make_bg(int q, double alpha, GridPtr grid) {
    check_family_args(q, alpha, grid, "make_bg");
    if (grid->r_max * grid->r_max - alpha * alpha < kTailExponent) {
        throw TruncationError("make_bg: r_max too small for the Gaussian envelope");
    }
    const int order = std::abs(q);
    const double a2 = alpha * alpha;
    // e^{+alpha^2/2} cancels against I(alpha^2) = e^{alpha^2} Is(alpha^2).
    const cplx prefactor = i_power(q) / std::sqrt(std::numbers::pi * specfun::bessel_i_scaled(order, a2));
    const double scale = std::numbers::sqrt2 * alpha;
    std::vector<cplx> samples(grid->n);
    for (int i = 0; i < grid->n; ++i) {
        const double rho = grid->nodes[i];
        samples[i] = prefactor * (specfun::bessel_j(order, scale * rho) * std::exp(-0.5 * rho * rho));
    }
    return finish(q, alpha, Family::bg, std::move(grid), std::move(samples), "make_bg");
}

RadialVortexState make_mbg(int q, double alpha, GridPtr grid) {
    check_family_args(q, alpha, grid, "make_mbg");
    const double centre = std::numbers::sqrt2 * alpha;
    if (grid->r_max <= centre || (grid->r_max - centre) * (grid->r_max - centre) < kTailExponent) {
        throw TruncationError("make_mbg: r_max too small for the ring envelope");
    }
    const int order = std::abs(q);
    const double a2 = alpha * alpha;
    const cplx prefactor = i_power(2 * q + 1) / std::sqrt(std::numbers::pi * specfun::bessel_i_scaled(order, a2));
    std::vector<cplx> samples(grid->n);
    for (int i = 0; i < grid->n; ++i) {
        const double rho = grid->nodes[i];
        const double x = centre * rho;
        // I(x) e^{-(rho^2 + alpha^2)/2} / sqrt(I(alpha^2)) = Is(x) e^{-(rho - sqrt2 alpha)^2 / 2} / sqrt(Is(alpha^2))
        const double envelope = std::exp(-0.5 * (rho - centre) * (rho - centre));
        samples[i] = prefactor * (specfun::bessel_i_scaled(order, x) * envelope);
    }
    return finish(q, alpha, Family::mbg, std::move(grid), std::move(samples), "make_mbg");
}

double norm(const RadialVortexState& state) {
    const auto& w = state.grid().weights;
    const auto& r = state.samples();
    double sum = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) sum += w[i] * std::norm(r[i]);
    return std::sqrt(kTwoPi * sum);
}

cplx overlap(const RadialVortexState& a, const RadialVortexState& b) {
    if (!a.grid().same_layout(b.grid())) throw GridMismatchError("overlap: states live on different grids");
    if (a.charge() != b.charge()) return {0.0, 0.0};
    const auto& w = a.grid().weights;
    cplx sum = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * std::conj(a.samples()[i]) * b.samples()[i];
    return kTwoPi * sum;
}

double fidelity(const RadialVortexState& a, const RadialVortexState& b) { return std::norm(overlap(a, b)); }

double DensityProfile::total() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) sum += plain_weights[i] * values[i];
    return sum;
}

DensityProfile density_radial(const RadialVortexState& state) {
    const auto& grid = state.grid();
    DensityProfile profile;
    profile.radii = grid.nodes;
    profile.plain_weights = grid.plain_weights();
    profile.values.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        profile.values[i] = kTwoPi * grid.nodes[i] * std::norm(state.samples()[i]);
    }
    return profile;
}

double peak_radius(const DensityProfile& profile) {
    const auto& x = profile.radii;
    const auto& y = profile.values;
    const auto top = std::max_element(y.begin(), y.end());
    const auto i = static_cast<std::size_t>(top - y.begin());
    if (y.size() < 3 || i == 0 || i + 1 == y.size() || *top <= 0.0) {
        throw FlatProfileError("peak_radius: maximum is not interior");
    }
    // Vertex of the parabola through the three samples around the maximum.
    const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
    const double d01 = (y[i] - y[i - 1]) / (x1 - x0);
    const double d12 = (y[i + 1] - y[i]) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);
    if (curvature >= 0.0) return x1;
    return 0.5 * (x0 + x1) - d01 / (2.0 * curvature);
}

double radial_moment(const RadialVortexState& state, int m) {
    const auto& grid = state.grid();
    double sum = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        sum += grid.weights[i] * std::pow(grid.nodes[i], m) * std::norm(state.samples()[i]);
    }
    return kTwoPi * sum;
}

double radial_noise(const RadialVortexState& state) {
    const double m1 = radial_moment(state, 1);
    return radial_moment(state, 2) - m1 * m1;
}

std::string to_string(Family family) {
    switch (family) {
        case Family::bg: return "bg";
        case Family::mbg: return "mbg";
        default: return "custom";
    }
}

Family family_from_string(const std::string& name) {
    if (name == "bg") return Family::bg;
    if (name == "mbg") return Family::mbg;
    if (name == "custom") return Family::custom;
    throw InvalidArgument("unknown state family '" + name + "'");
}

}  // namespace pqovs
