#pragma once

#include <functional>
#include <vector>

#include "darboux3/numeric_field.hpp"

namespace dbx {

struct Trajectory {
    std::vector<double> times;  // strictly increasing
    std::vector<std::array<double, 3>> states;
    long accepted = 0;
    long rejected = 0;
    double rtol = 0;
    double atol = 0;
};

struct OdeOptions {
    double rtol = 1e-9;
    double atol = 1e-12;
    double divergence_norm = 1e12;
    double min_step = 1e-14;
};

struct OdeStats {
    long accepted = 0;
    long rejected = 0;
};

using Rhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dydt)>;

// Interpolates one solution component anywhere inside the step just accepted.
using DenseEval = std::function<double(int comp, double t)>;
using StepCallback = std::function<void(double t_old, double t_new, const DenseEval& dense)>;

// Dormand-Prince 5(4) with PI step control and dense output. Integrates y from
// t0 to t1 in either direction; y holds the final state on return. on_step may
// be empty. Throws Divergence and StepUnderflow.
OdeStats dopri5(const Rhs& rhs, std::vector<double>& y, double t0, double t1,
                const OdeOptions& opt = {}, const StepCallback& on_step = {});

// Forward trajectory of a field from x0 over [0, t_end]. samples > 0 records the
// uniform grid i*t_end/samples (dense output); samples == 0 records the accepted
// steps. t_end and both tolerances must be positive.
Trajectory integrate(const NumericField& F, const std::array<double, 3>& x0, double t_end,
                     double rtol = 1e-9, double atol = 1e-12, int samples = 0);

}  // namespace dbx
