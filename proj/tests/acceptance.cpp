// Acceptance suite: one PASS/FAIL line per criterion, detail lines indented.
// Usage: acceptance [--criterion N]...  (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/math/special_functions/bessel.hpp>

#include "CLI11.hpp"
#include "oracles.hpp"
#include "pqovs/lens.hpp"
#include "pqovs/propagator.hpp"
#include "pqovs/specfun.hpp"
#include "pqovs/states.hpp"

using namespace pqovs;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string summary;
};

std::ostream& log() { return std::cout << "    "; }

PropagationParams at(double z) {
    PropagationParams p;
    p.z = z;
    return p;
}

Outcome fourier_plane_identity() {
    double worst = 1.0, slowest = 0.0;
    for (double alpha : {0.5, 1.0, 2.0, 4.0}) {
        auto g = default_grid(alpha, 2048);
        for (int q = 0; q <= 5; ++q) {
            const auto t0 = std::chrono::steady_clock::now();
            const auto bg = make_bg(q, alpha, g);
            const auto mbg = make_mbg(q, alpha, g);
            const double f0 = fidelity(propagate(bg, at(kPi / 2)), mbg);
            const double f1 = fidelity(propagate(bg, at(3 * kPi / 2)), mbg);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            log() << "q=" << q << " alpha=" << alpha << "  1-F(pi/2)=" << 1 - f0 << "  1-F(3pi/2)=" << 1 - f1
                  << "  " << std::setprecision(3) << secs << " s" << std::setprecision(6) << '\n';
            worst = std::min({worst, f0, f1});
            slowest = std::max(slowest, secs);
        }
    }
    std::ostringstream s;
    s << "min fidelity " << std::setprecision(17) << worst << ", slowest case " << std::setprecision(3) << slowest
      << " s";
    return {worst >= 1.0 - 1e-8 && slowest < 5.0, s.str()};
}

Outcome unitarity() {
    auto g1 = default_grid(1.0);
    auto g2 = default_grid(2.0);
    const std::vector<std::pair<std::string, RadialVortexState>> states{
        {"BG(0,1)", make_bg(0, 1.0, g1)}, {"BG(2,2)", make_bg(2, 2.0, g2)}, {"MBG(1,1)", make_mbg(1, 1.0, g1)}};
    std::vector<double> zs;
    for (int i = 1; zs.size() < 50; ++i) {
        const double z = kPi * i / 61.0;
        if (std::abs(std::sin(z)) >= 0.05) zs.push_back(z);
    }
    double drift = 0.0;
    for (const auto& [name, s] : states) {
        double local = 0.0;
        for (double z : zs) local = std::max(local, std::abs(norm(propagate(s, at(z))) - 1.0));
        log() << name << ": max |norm-1| = " << local << '\n';
        drift = std::max(drift, local);
    }
    const double printed = norm(propagate(states[0].second, at(kPi / 2), KernelConvention::as_printed));
    log() << "as_printed norm at theta=pi/2: " << std::setprecision(12) << printed << " (sqrt(2 pi) = "
          << std::sqrt(2 * kPi) << ")" << std::setprecision(6) << '\n';
    std::ostringstream s;
    s << "max drift " << drift << " over " << zs.size() << " planes; as_printed norm factor " << printed;
    return {drift <= 1e-8 && std::abs(printed - 1.0) > 1e-3, s.str()};
}

Outcome oracle_equivalence() {
    const auto t0 = std::chrono::steady_clock::now();
    auto g = default_grid(1.0, 400);
    const auto s = make_bg(1, 1.0, g);
    const auto fast = propagate(s, at(kPi / 2));
    const auto slow = propagate_bruteforce(s, at(kPi / 2), 256);
    double worst = 0.0;
    for (int i = 0; i < g->n; ++i) worst = std::max(worst, std::abs(fast.samples()[i] - slow.samples()[i]));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    log() << "brute-force norm " << std::setprecision(12) << norm(slow) << std::setprecision(6) << '\n';
    std::ostringstream out;
    out << "max pointwise difference " << worst << " in " << std::setprecision(3) << secs << " s";
    return {worst <= 1e-4 && secs < 60.0, out.str()};
}

Outcome composition() {
    auto g = default_grid(2.0);
    const auto s = make_bg(1, 2.0, g);
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(0.0, 2 * kPi);
    double worst = 1.0;
    for (int pairs = 0; pairs < 20;) {
        const double z1 = dist(rng), z2 = dist(rng);
        if (std::abs(std::sin(z1)) < 0.05 || std::abs(std::sin(z2)) < 0.05 || std::abs(std::sin(z1 + z2)) < 0.05) {
            continue;
        }
        ++pairs;
        const double f = fidelity(propagate(propagate(s, at(z1)), at(z2)), propagate(s, at(z1 + z2)));
        log() << "z1=" << z1 << " z2=" << z2 << "  1-F=" << 1 - f << '\n';
        worst = std::min(worst, f);
    }
    const double period = fidelity(propagate(s, at(2 * kPi)), s);
    std::ostringstream out;
    out << "min composition fidelity " << std::setprecision(17) << worst << ", full period " << period;
    return {worst >= 1.0 - 1e-8 && period >= 1.0 - 1e-8, out.str()};
}

Outcome squeeze_laws() {
    auto g = default_grid(2.0);
    const auto in = make_bg(1, 2.0, g);
    const double noise0 = radial_noise(in);
    double norm_err = 0.0, law_err = 0.0;
    bool strict = true;
    for (double s : {0.25, 0.5, 2.0, 4.0}) {
        auto target = s > 1 ? make_grid(GridScheme::gauss_legendre, s * g->r_max, 2048) : g;
        const auto out = squeeze(in, {s}, target);
        const double dn = std::abs(norm(out) - norm(in));
        const double dl = std::abs(radial_noise(out) - s * s * noise0);
        log() << "s=" << s << " |dnorm|=" << dn << " |noise - s^2 noise0|=" << dl << " noise=" << radial_noise(out)
              << '\n';
        norm_err = std::max(norm_err, dn);
        law_err = std::max(law_err, dl);
        if (s < 1.0) strict = strict && radial_noise(out) < noise0;
    }
    std::ostringstream out;
    out << "norm error " << norm_err << ", variance-law error " << law_err << ", strict inequality "
        << (strict ? "holds" : "violated");
    return {norm_err <= 1e-8 && law_err <= 1e-8 && strict, out.str()};
}

Outcome lens_scaling() {
    const auto in = make_bg(1, 4.0, default_grid(4.0));
    auto target = make_grid(GridScheme::gauss_legendre, 2.0 * default_r_max(4.0), 2048);
    const std::vector<double> gains{0.5, 0.75, 1.0, 1.5};
    std::vector<double> peaks;
    for (double s : gains) {
        peaks.push_back(peak_radius(density_radial(effective_lens(in, {s}, 1.0, target))));
        log() << "s=" << s << " peak radius " << std::setprecision(10) << peaks.back() << std::setprecision(6)
              << "  peak*s=" << peaks.back() * s << "  peak/s=" << peaks.back() / s << '\n';
    }
    // Least-squares slope through the origin, then the largest relative deviation.
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        sxy += gains[i] * peaks[i];
        sxx += gains[i] * gains[i];
    }
    const double slope = sxy / sxx;
    double deviation = 0.0;
    for (std::size_t i = 0; i < gains.size(); ++i) {
        deviation = std::max(deviation, std::abs(peaks[i] - slope * gains[i]) / (slope * gains[i]));
    }
    auto g = default_grid(4.0);
    const double unit = fidelity(effective_lens(make_bg(1, 4.0, g), {1.0}, 1.0), make_mbg(1, 4.0, g));
    log() << "fit peak = " << slope << " * s, max relative deviation " << deviation << '\n';
    log() << "s=1 fidelity with MBG(1,4): 1-F = " << 1 - unit << '\n';
    std::ostringstream out;
    out << "proportional-fit deviation " << std::setprecision(4) << 100 * deviation << "% (needs < 1%), s=1 fidelity "
        << std::setprecision(17) << unit;
    return {deviation < 0.01 && unit >= 1.0 - 1e-8, out.str()};
}

double relative_spread(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    return (*hi - *lo) / mean;
}

Outcome perfect_vortex() {
    auto g = default_grid(4.0, 2048);
    std::vector<double> bg, mbg;
    for (int q = 1; q <= 6; ++q) {
        bg.push_back(peak_radius(density_radial(make_bg(q, 4.0, g))));
        mbg.push_back(peak_radius(density_radial(make_mbg(q, 4.0, g))));
        log() << "q=" << q << " BG ring " << bg.back() << "  MBG ring " << mbg.back() << '\n';
    }
    const double sb = relative_spread(bg), sm = relative_spread(mbg);
    log() << "MBG ring radius ~ " << mbg.front() << " for alpha=4 (alpha*sqrt2 = " << 4 * std::numbers::sqrt2 << ")\n";
    std::ostringstream out;
    out << "relative ring-radius spread MBG " << sm << " vs BG " << sb;
    return {sm < sb, out.str()};
}

Outcome special_functions() {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> order(0, 20);
    std::uniform_real_distribution<double> arg(0.0, 100.0);
    double worst_j = 0.0, worst_i = 0.0;
    for (int n = 0; n < 1000; ++n) {
        const int q = order(rng);
        double x = arg(rng);
        if (x == 0.0) x = 1e-3;
        const double oj = oracle::bessel_j_series(q, x);
        const double oi = oracle::bessel_i_scaled_series(q, x);
        worst_j = std::max(worst_j, std::abs(specfun::bessel_j(q, x) - oj) / std::abs(oj));
        worst_i = std::max(worst_i, std::abs(specfun::bessel_i_scaled(q, x) - oi) / std::abs(oi));
    }
    log() << "worst relative error: J " << worst_j << ", scaled I " << worst_i << '\n';

    int checked = 0, missing = 0;
    for (int q : {0, 1, 2, 3, 5, 8, 13, 20, 50, 200}) {
        const auto zeros = specfun::bessel_j_zeros(q, 200);
        for (double z : zeros) {
            const double d = 1e-9 * z;
            const double lo = boost::math::cyl_bessel_j(q, z - d), hi = boost::math::cyl_bessel_j(q, z + d);
            ++checked;
            if (!(lo * hi < 0.0)) ++missing;
        }
    }
    log() << checked << " zeros checked, " << missing << " without a sign change\n";
    std::ostringstream out;
    out << "J rel err " << worst_j << ", Is rel err " << worst_i << ", zeros bracketing " << checked - missing << "/"
        << checked;
    return {worst_j <= 1e-12 && worst_i <= 1e-12 && missing == 0, out.str()};
}

Outcome normalization() {
    double worst = 0.0;
    for (double alpha : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        auto g = default_grid(alpha);
        for (int q = -3; q <= 3; ++q) {
            worst = std::max(worst, std::abs(norm(make_bg(q, alpha, g)) - 1.0));
            worst = std::max(worst, std::abs(norm(make_mbg(q, alpha, g)) - 1.0));
        }
    }
    std::ostringstream out;
    out << "max |norm-1| " << worst << " over 70 states";
    return {worst <= 1e-8, out.str()};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria 1-9"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "Run only these criteria")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"Fourier-plane identity", fourier_plane_identity},
        {"Unitarity", unitarity},
        {"Oracle equivalence", oracle_equivalence},
        {"Composition and periodicity", composition},
        {"Squeeze laws", squeeze_laws},
        {"Effective-lens scaling", lens_scaling},
        {"Perfect-vortex ring radii", perfect_vortex},
        {"Special-function accuracy", special_functions},
        {"Constructor normalization", normalization},
    };
    if (selected.empty()) {
        for (int i = 1; i <= 9; ++i) selected.push_back(i);
    }

    int failures = 0;
    for (int id : selected) {
        const auto& [name, body] = criteria[id - 1];
        std::cout << std::setprecision(6);
        Outcome result;
        try {
            result = body();
        } catch (const std::exception& e) {
            result = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (result.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << result.summary
                  << std::endl;
        if (!result.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
