#include <cmath>
#include <numbers>
#include <sstream>

#include "pqovs/errors.hpp"
#include "pqovs/specfun.hpp"
#include "pqovs/states.hpp"

namespace pqovs {

namespace {

// Gauss-Legendre nodes/weights on [-1, 1], ascending, by Newton on P_n.
void gauss_legendre(int n, std::vector<double>& t, std::vector<double>& w) {
    t.assign(n, 0.0);
    w.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        long double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        long double dp = 0;
        for (int it = 0; it < 100; ++it) {
            long double p0 = 1, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1;
            dp = n * (x * p1 - p0) / (x * x - 1);
            const long double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-19L) break;
        }
        const double weight = static_cast<double>(2 / ((1 - x * x) * dp * dp));
        t[n - 1 - i] = static_cast<double>(x);
        t[i] = -static_cast<double>(x);
        w[i] = w[n - 1 - i] = weight;
    }
}

}  // namespace

std::vector<double> GridSpec::plain_weights() const {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = weights[i] / nodes[i];
    return out;
}

bool GridSpec::same_layout(const GridSpec& other) const {
    return scheme == other.scheme && n == other.n && r_max == other.r_max &&
           (scheme == GridScheme::gauss_legendre || order_hint == other.order_hint);
}

GridPtr make_grid(GridScheme scheme, double r_max, int n, int order_hint) {
    if (!std::isfinite(r_max) || r_max <= 0.0) {
        std::ostringstream msg;
        msg << "make_grid: r_max must be positive, got " << r_max;
        throw InvalidArgument(msg.str());
    }
    if (n < kMinGridNodes) {
        std::ostringstream msg;
        msg << "make_grid: need at least " << kMinGridNodes << " nodes, got " << n;
        throw InvalidArgument(msg.str());
    }
    if (order_hint < 0) throw InvalidArgument("make_grid: order_hint must be nonnegative");

    auto grid = std::make_shared<GridSpec>();
    grid->scheme = scheme;
    grid->r_max = r_max;
    grid->n = n;
    grid->nodes.resize(n);
    grid->weights.resize(n);

    if (scheme == GridScheme::gauss_legendre) {
        std::vector<double> t, w;
        gauss_legendre(n, t, w);
        const double half = 0.5 * r_max;
        for (int i = 0; i < n; ++i) {
            const double r = half * (t[i] + 1.0);
            grid->nodes[i] = r;
            grid->weights[i] = half * w[i] * r;
        }
    } else {
        // Quasi-discrete Hankel layout: rho_i = j_i R / j_{n+1},
        // w_i = 2 R^2 / (j_{n+1}^2 J_{p+1}(j_i)^2).
        if (order_hint > specfun::kMaxOrder) throw InvalidArgument("make_grid: order_hint too large");
        grid->order_hint = order_hint;
        const auto zeros = specfun::bessel_j_zeros(order_hint, n + 1);
        const double last = zeros[n];
        for (int i = 0; i < n; ++i) {
            const double jp1 = specfun::bessel_j(order_hint + 1, zeros[i]);
            grid->nodes[i] = zeros[i] * r_max / last;
            grid->weights[i] = 2.0 * r_max * r_max / (last * last * jp1 * jp1);
        }
    }
    return grid;
}

double default_r_max(double alpha) { return alpha * std::numbers::sqrt2 + 10.0; }

GridPtr default_grid(double alpha, int n) {
    return make_grid(GridScheme::gauss_legendre, default_r_max(alpha), n);
}

std::string to_string(GridScheme scheme) {
    return scheme == GridScheme::gauss_legendre ? "gauss_legendre" : "bessel_zero";
}

GridScheme grid_scheme_from_string(const std::string& name) {
    if (name == "gauss_legendre") return GridScheme::gauss_legendre;
    if (name == "bessel_zero") return GridScheme::bessel_zero;
    throw InvalidArgument("unknown grid scheme '" + name + "'");
}

}  // namespace pqovs
