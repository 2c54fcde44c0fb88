#include "darboux3/diagnostics.hpp"

#include <cmath>

#include "darboux3/errors.hpp"
#include "darboux3/vectorfield.hpp"

namespace dbx {

double cofactor_law_check(const Polynomial& f, const Rational& k0, const Trajectory& traj) {
    if (traj.states.empty()) return 0;
    const double f0 = f.evaluate(traj.states.front());
    const double k = k0.to_double();
    const double floor_tol = traj.atol > 0 ? traj.atol : 1e-12;
    double worst = 0;
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const double predicted = f0 * std::exp(k * traj.times[i]);
        const double dev = std::abs(f.evaluate(traj.states[i]) - predicted) /
                           std::max(std::abs(predicted), floor_tol);
        worst = std::max(worst, dev);
    }
    return worst;
}

double first_integral_drift(const Polynomial& numerator, const Polynomial& denominator,
                            const Trajectory& traj) {
    if (traj.states.empty()) return 0;
    std::vector<double> values;
    values.reserve(traj.states.size());
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const double den = denominator.evaluate(traj.states[i]);
        if (std::abs(den) < 1e-14) throw DenominatorVanished(traj.times[i]);
        values.push_back(numerator.evaluate(traj.states[i]) / den);
    }
    const double v0 = values.front();
    const double scale = v0 != 0 ? std::abs(v0) : 1.0;
    double worst = 0;
    for (double v : values) worst = std::max(worst, std::abs(v - v0) / scale);
    return worst;
}

double lyapunov_max(const NumericField& F, const std::array<double, 3>& x0, double t_total,
                    double renorm_dt) {
    if (!(renorm_dt > 0) || t_total < 100 * renorm_dt)
        throw Error("horizon must cover at least 100 renormalization intervals");

    const Rhs rhs = [&F](double, const std::vector<double>& y, std::vector<double>& dy) {
        const auto a = F({y[0], y[1], y[2]});
        const auto b = F({y[3], y[4], y[5]});
        dy[0] = a[0];
        dy[1] = a[1];
        dy[2] = a[2];
        dy[3] = b[0];
        dy[4] = b[1];
        dy[5] = b[2];
    };

    const double d0 = 1e-8;
    const double u = d0 / std::sqrt(3.0);
    std::vector<double> y{x0[0], x0[1], x0[2], x0[0] + u, x0[1] + u, x0[2] + u};

    const long intervals = static_cast<long>(std::floor(t_total / renorm_dt + 1e-9));
    const double discard_before = 0.1 * t_total;
    double sum = 0, tsum = 0;
    for (long i = 0; i < intervals; ++i) {
        const double ta = i * renorm_dt;
        dopri5(rhs, y, ta, ta + renorm_dt);
        const double dx = y[3] - y[0], dy_ = y[4] - y[1], dz = y[5] - y[2];
        const double d = std::sqrt(dx * dx + dy_ * dy_ + dz * dz);
        if (d > 0 && std::isfinite(d)) {
            if (ta >= discard_before - 1e-9) {
                sum += std::log(d / d0);
                tsum += renorm_dt;
            }
            const double r = d0 / d;
            y[3] = y[0] + r * dx;
            y[4] = y[1] + r * dy_;
            y[5] = y[2] + r * dz;
        } else {
            y[3] = y[0] + u;
            y[4] = y[1] + u;
            y[5] = y[2] + u;
        }
    }
    return sum / tsum;
}

double volume_contraction_check(const NumericField& F, const Rational& divergence_value) {
    if (!divergence(F.exact()).is_constant()) throw Error("field divergence is not constant");
    const double target = divergence_value.to_double();

    // State layout: x (3), then the fundamental matrix J row-major (9), J(0) = I.
    const Rhs rhs = [&F](double, const std::vector<double>& y, std::vector<double>& dy) {
        const auto v = F({y[0], y[1], y[2]});
        const auto jac = F.jacobian({y[0], y[1], y[2]});
        dy[0] = v[0];
        dy[1] = v[1];
        dy[2] = v[2];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int l = 0; l < 3; ++l) s += jac[i][l] * y[3 + 3 * l + j];
                dy[3 + 3 * i + j] = s;
            }
    };

    const std::array<std::array<double, 3>, 5> starts = {{{1, 1, 1},
                                                          {-0.5, 1.5, 0.25},
                                                          {2, -1, 0.5},
                                                          {0.25, 0.25, -0.75},
                                                          {-2, 1, -1}}};
    OdeOptions opt;
    opt.rtol = 1e-11;
    opt.atol = 1e-13;
    const double delta = 0.01;

    double worst = 0;
    for (const auto& s : starts) {
        std::vector<double> y{s[0], s[1], s[2], 1, 0, 0, 0, 1, 0, 0, 0, 1};
        dopri5(rhs, y, 0, delta, opt);
        const double* j = y.data() + 3;
        const double det = j[0] * (j[4] * j[8] - j[5] * j[7]) - j[1] * (j[3] * j[8] - j[5] * j[6]) +
                           j[2] * (j[3] * j[7] - j[4] * j[6]);
        worst = std::max(worst, std::abs(std::log(det) / delta - target));
    }
    return worst;
}

}  // namespace dbx
