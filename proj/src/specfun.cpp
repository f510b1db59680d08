#include "pqovs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include <boost/math/tools/roots.hpp>

#include "pqovs/errors.hpp"

namespace pqovs::specfun {

namespace {

using real_ext = long double;

constexpr real_ext kPiExt = 3.141592653589793238462643383279502884L;
constexpr double kAsymptoticFloor = 25.0;
constexpr real_ext kRescaleAbove = 1e1000L;
constexpr real_ext kRescaleBy = 1e-1000L;

void check_args(int q, double x, const EvalPolicy& policy, const char* who) {
    policy.validate();
    if (q < 0 || q > kMaxOrder) {
        std::ostringstream msg;
        msg << who << ": order " << q << " outside supported range [0, " << kMaxOrder << "]";
        throw InvalidArgument(msg.str());
    }
    if (!std::isfinite(x) || x < 0.0) {
        std::ostringstream msg;
        msg << who << ": argument " << x << " must be finite and nonnegative";
        throw InvalidArgument(msg.str());
    }
}

bool use_series(int q, double x, const EvalPolicy& policy) {
    return x < policy.series_cutoff || x * x < q + 1.0;
}

// Rough natural log of e^{-x} I_n(x) from the uniform expansion.
double log_is_estimate(int n, double x) {
    if (n == 0) return -0.5 * std::log1p(2.0 * std::numbers::pi * x);
    const double z = x / n;
    const double s = std::sqrt(1.0 + z * z);
    const double eta = s + std::log(z / (1.0 + s));
    return n * eta - x - 0.5 * std::log(2.0 * std::numbers::pi * n) - 0.5 * std::log(s);
}

// Backward recurrence is started where the minimal solution has decayed
// by ~e^-50 relative to the order of interest.
int miller_start(int q, double x, double (*log_est)(int, double)) {
    const double ref = log_est(q, x);
    int n = std::max(q, static_cast<int>(std::ceil(x))) + 2;
    while (log_est(n, x) - ref > -50.0) n += 1 + n / 16;
    return n + 8;
}

// Past the turning point J_n decays like Ai((n - x)(2/x)^{1/3}); starting
// 17.8 (x/2)^{1/3} orders beyond max(q, x) puts the start ~e^-50 below.
int miller_start_j(int q, double x) {
    const double turn = std::max(static_cast<double>(q), x);
    return static_cast<int>(turn + 17.8 * std::cbrt(std::max(turn, 2.0) / 2.0)) + 10;
}

real_ext series_j(int q, real_ext x, const EvalPolicy& policy) {
    const real_ext half = x / 2;
    real_ext term = std::exp(q * std::log(half) - std::lgamma(static_cast<real_ext>(q) + 1));
    real_ext sum = term;
    const real_ext h2 = half * half;
    for (int k = 1; k <= policy.max_terms; ++k) {
        term *= -h2 / (static_cast<real_ext>(k) * (k + q));
        sum += term;
        if (std::fabs(term) <= 1e-21L * std::fabs(sum)) break;
    }
    return sum;
}

real_ext series_i_scaled(int q, real_ext x, const EvalPolicy& policy) {
    const real_ext half = x / 2;
    real_ext term = std::exp(q * std::log(half) - std::lgamma(static_cast<real_ext>(q) + 1) - x);
    real_ext sum = term;
    const real_ext h2 = half * half;
    const int cap = policy.max_terms + static_cast<int>(2 * x);
    for (int k = 1; k <= cap; ++k) {
        term *= h2 / (static_cast<real_ext>(k) * (k + q));
        sum += term;
        if (term <= 1e-21L * sum) break;
    }
    return sum;
}

// Normalized backward recurrence. For J the normalization is
// J_0 + 2 sum J_2k = 1, for I it is I_0 + 2 sum I_k = e^x.
template <bool Modified>
real_ext miller(int q, real_ext x, int start) {
    real_ext f_next = 0;
    real_ext f = 1e-30L;
    real_ext fq = (start == q) ? f : 0;
    real_ext sum = 0;
    if (Modified || start % 2 == 0) sum += 2 * f;
    const real_ext two_over_x = 2 / x;
    for (int n = start; n >= 1; --n) {
        const real_ext ratio = two_over_x * n;
        const real_ext f_prev = Modified ? ratio * f + f_next : ratio * f - f_next;
        f_next = f;
        f = f_prev;
        const int m = n - 1;
        if (m == q) fq = f;
        if (m == 0) {
            sum += f;
        } else if (Modified || m % 2 == 0) {
            sum += 2 * f;
        }
        if (std::fabs(f) > kRescaleAbove) {
            f *= kRescaleBy;
            f_next *= kRescaleBy;
            fq *= kRescaleBy;
            sum *= kRescaleBy;
        }
    }
    return fq / sum;
}

struct HankelSums {
    real_ext p;  // even-index part
    real_ext q;  // odd-index part
    real_ext alternating;
};

// Sums of the large-argument expansion terms a_k(nu)/x^k. Empty when the
// expansion does not settle below tol before diverging or losing digits.
std::optional<HankelSums> hankel_sums(int order, real_ext x, const EvalPolicy& policy) {
    const real_ext mu = 4 * static_cast<real_ext>(order) * order;
    const real_ext tol = static_cast<real_ext>(policy.target_rel_err) * 1e-6L;
    HankelSums s{1, 0, 1};
    real_ext term = 1;
    real_ext largest = 1;
    const real_ext inv_8x = 1 / (8 * x);
    for (int k = 1; k <= policy.max_terms; ++k) {
        const real_ext odd = 2 * static_cast<real_ext>(k) - 1;
        const real_ext next = term * (mu - odd * odd) * inv_8x / k;
        if (std::fabs(next) > std::fabs(term) && odd * odd > mu) return std::nullopt;
        term = next;
        largest = std::max(largest, std::fabs(term));
        if (largest > 10.0L) return std::nullopt;
        const int j = k / 2;
        const real_ext sign = (j % 2 == 0) ? 1 : -1;
        if (k % 2 == 0) {
            s.p += sign * term;
        } else {
            s.q += sign * term;
        }
        s.alternating += (k % 2 == 0) ? term : -term;
        if (std::fabs(term) < tol) return s;
    }
    return std::nullopt;
}

}  // namespace

void EvalPolicy::validate() const {
    if (!(series_cutoff > 0.0)) throw InvalidArgument("EvalPolicy: series_cutoff must be positive");
    if (!(target_rel_err > 0.0 && target_rel_err < 1e-6)) {
        throw InvalidArgument("EvalPolicy: target_rel_err must lie in (0, 1e-6)");
    }
    if (max_terms < 50) throw InvalidArgument("EvalPolicy: max_terms must be at least 50");
}

double bessel_j(int q, double x, const EvalPolicy& policy) {
    check_args(q, x, policy, "bessel_j");
    if (x == 0.0) return q == 0 ? 1.0 : 0.0;
    const real_ext xe = x;
    if (use_series(q, x, policy)) return static_cast<double>(series_j(q, xe, policy));
    if (x >= kAsymptoticFloor) {
        if (auto s = hankel_sums(q, xe, policy)) {
            const real_ext chi = xe - (static_cast<real_ext>(q) / 2 + 0.25L) * kPiExt;
            const real_ext amp = std::sqrt(2 / (kPiExt * xe));
            return static_cast<double>(amp * (s->p * std::cos(chi) - s->q * std::sin(chi)));
        }
    }
    return static_cast<double>(miller<false>(q, xe, miller_start_j(q, x)));
}

double bessel_i_scaled(int q, double x, const EvalPolicy& policy) {
    check_args(q, x, policy, "bessel_i_scaled");
    if (x == 0.0) return q == 0 ? 1.0 : 0.0;
    const real_ext xe = x;
    if (use_series(q, x, policy)) return static_cast<double>(series_i_scaled(q, xe, policy));
    if (x >= kAsymptoticFloor) {
        if (auto s = hankel_sums(q, xe, policy)) {
            return static_cast<double>(s->alternating / std::sqrt(2 * kPiExt * xe));
        }
    }
    return static_cast<double>(miller<true>(q, xe, miller_start(q, x, log_is_estimate)));
}

std::vector<double> bessel_j_zeros(int q, int n) {
    if (q < 0 || q > kMaxOrder) throw InvalidArgument("bessel_j_zeros: unsupported order");
    if (n < 1 || n > kMaxZeros) throw InvalidArgument("bessel_j_zeros: zero count out of range");

    auto f = [q](double x) { return bessel_j(q, x); };
    auto refine = [&](double lo, double hi) {
        boost::math::tools::eps_tolerance<double> tol(std::numeric_limits<double>::digits - 2);
        std::uintmax_t iters = 200;
        auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, f(lo), f(hi), tol, iters);
        return 0.5 * (a + b);
    };

    std::vector<double> zeros;
    zeros.reserve(n);

    // No zeros of J_q lie below sqrt(q(q+2)); scan from there for the first two.
    double x = std::max(std::sqrt(static_cast<double>(q) * (q + 2)), 0.5);
    double fx = f(x);
    constexpr double kScanStep = 0.05;
    while (static_cast<int>(zeros.size()) < std::min(n, 2)) {
        const double x_next = x + kScanStep;
        const double f_next = f(x_next);
        if (f_next == 0.0) {
            zeros.push_back(x_next);
            x = x_next + 1e-9;
            fx = f(x);
            continue;
        }
        if ((fx < 0) != (f_next < 0)) zeros.push_back(refine(x, x_next));
        x = x_next;
        fx = f_next;
    }

    // Zero spacing is monotone with limit pi (decreasing for q >= 1,
    // increasing for q = 0), which brackets each next zero.
    while (static_cast<int>(zeros.size()) < n) {
        const std::size_t m = zeros.size();
        const double last = zeros[m - 1];
        const double gap = last - zeros[m - 2];
        double lo = last + std::min(gap, std::numbers::pi) * (1.0 - 1e-9);
        double hi = last + std::max(gap, std::numbers::pi) * (1.0 + 1e-9);
        double flo = f(lo);
        double fhi = f(hi);
        while ((flo < 0) == (fhi < 0)) {
            // Bracket failed (should not happen); widen conservatively.
            lo = last + 0.5 * std::min(gap, std::numbers::pi);
            hi += 0.5;
            flo = f(lo);
            fhi = f(hi);
        }
        zeros.push_back(refine(lo, hi));
    }
    return zeros;
}

}  // namespace pqovs::specfun
