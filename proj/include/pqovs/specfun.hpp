#pragma once

#include <vector>

namespace pqovs::specfun {

/// Highest integer order accepted by the Bessel routines.
inline constexpr int kMaxOrder = 200;

/// Largest zero count bessel_j_zeros will produce in one call.
inline constexpr int kMaxZeros = 10000;

/// Tuning knobs for the Bessel evaluators.
///
/// series_cutoff is the argument below which the ascending power series is
/// always used; the series is also used whenever x^2 < q + 1, where it has no
/// cancellation. Between that and the asymptotic region the minimal solution
/// is obtained by normalized backward recurrence. The asymptotic (Hankel)
/// expansion is used only when its terms fall below target_rel_err * 1e-6
/// within max_terms terms without first growing large.
struct EvalPolicy {
    double series_cutoff = 1.0;
    double target_rel_err = 1e-12;
    int max_terms = 200;

    // Throws InvalidArgument when an invariant is broken.
    void validate() const;
};

/// J_q(x) for integer order 0 <= q <= kMaxOrder and finite x >= 0.
double bessel_j(int q, double x, const EvalPolicy& policy = {});

/// e^{-x} I_q(x); finite for every finite x >= 0.
double bessel_i_scaled(int q, double x, const EvalPolicy& policy = {});

/// First n positive zeros of J_q, strictly increasing.
std::vector<double> bessel_j_zeros(int q, int n);

}  // namespace pqovs::specfun
