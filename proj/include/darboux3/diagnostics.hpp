#pragma once

#include "darboux3/integrate.hpp"
#include "darboux3/polynomial.hpp"

namespace dbx {

// Along a solution with X(f) = k0*f the value f(x(t)) must equal f(x0)*e^(k0*t).
// Returns the max over the trajectory of |f(x(t)) - f(x0)e^(k0 t)| relative to
// max(|f(x0)e^(k0 t)|, atol).
double cofactor_law_check(const Polynomial& f, const Rational& k0, const Trajectory& traj);

// Max relative drift of numerator/denominator along the trajectory. Throws
// DenominatorVanished when |denominator| drops below 1e-14 at a sample.
double first_integral_drift(const Polynomial& numerator, const Polynomial& denominator,
                            const Trajectory& traj);

// Benettin two-trajectory estimate of the largest Lyapunov exponent: fixed
// perturbation 1e-8, renormalization every renorm_dt, first 10% of t_total
// discarded as transient. Deterministic. Requires t_total >= 100*renorm_dt.
double lyapunov_max(const NumericField& F, const std::array<double, 3>& x0, double t_total,
                    double renorm_dt = 0.5);

// Integrates the variational flow from fixed sample states over a short interval
// and compares (1/dt) log det of the fundamental matrix against the constant
// divergence. Returns the max deviation.
double volume_contraction_check(const NumericField& F, const Rational& divergence_value);

}  // namespace dbx
