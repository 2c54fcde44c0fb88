#include "darboux3/integrate.hpp"

#include <algorithm>
#include <cmath>

#include "darboux3/errors.hpp"

namespace dbx {

namespace {

constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432, d3 = 87487479700.0 / 32700410799,
                 d4 = -10690763975.0 / 1880347072, d5 = 701980252875.0 / 199316789632,
                 d6 = -1453857185.0 / 822651844, d7 = 69997945.0 / 29380423;

double max_abs(const std::vector<double>& y) {
    double m = 0;
    for (double v : y) m = std::max(m, std::abs(v));
    return m;
}

double initial_step(const Rhs& rhs, double t0, const std::vector<double>& y,
                    const std::vector<double>& f0, double dir, double span,
                    const OdeOptions& opt) {
    const std::size_t n = y.size();
    double dn0 = 0, dn1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sc = opt.atol + opt.rtol * std::abs(y[i]);
        dn0 += (y[i] / sc) * (y[i] / sc);
        dn1 += (f0[i] / sc) * (f0[i] / sc);
    }
    dn0 = std::sqrt(dn0 / n);
    dn1 = std::sqrt(dn1 / n);
    double h0 = (dn0 < 1e-5 || dn1 < 1e-5) ? 1e-6 : 0.01 * dn0 / dn1;
    h0 = std::min(h0, span);

    std::vector<double> y1(n), f1(n);
    for (std::size_t i = 0; i < n; ++i) y1[i] = y[i] + dir * h0 * f0[i];
    rhs(t0 + dir * h0, y1, f1);
    double dn2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double sc = opt.atol + opt.rtol * std::abs(y[i]);
        dn2 += ((f1[i] - f0[i]) / sc) * ((f1[i] - f0[i]) / sc);
    }
    dn2 = std::sqrt(dn2 / n) / h0;

    const double dm = std::max(dn1, dn2);
    const double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 0.2);
    return std::min({100 * h0, h1, span});
}

}  // namespace

OdeStats dopri5(const Rhs& rhs, std::vector<double>& y, double t0, double t1,
                const OdeOptions& opt, const StepCallback& on_step) {
    OdeStats stats;
    if (t1 == t0) return stats;
    const std::size_t n = y.size();
    const double dir = t1 > t0 ? 1.0 : -1.0;

    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), ynew(n);
    std::vector<double> p0(n), p1(n), p2(n), p3(n), p4(n);

    double t = t0;
    rhs(t, y, k1);
    double h = dir * initial_step(rhs, t0, y, k1, dir, std::abs(t1 - t0), opt);

    constexpr double beta = 0.04, expo1 = 0.2 - beta * 0.75, safe = 0.9;
    constexpr double facc1 = 1.0 / 0.2, facc2 = 1.0 / 10.0;
    double facold = 1e-4;
    bool reject = false;

    for (;;) {
        if (std::abs(h) < opt.min_step) throw StepUnderflow(t);
        bool last = false;
        if ((t + h - t1) * dir >= 0) {
            h = t1 - t;
            last = true;
        }

        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, yt, k2);
        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, yt, k3);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, yt, k4);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, yt, k5);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, yt, k6);
        for (std::size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] + a76 * k6[i]);
        rhs(t + h, ynew, k7);

        double err = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const double ei =
                h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / n);

        if (!std::isfinite(err)) {
            ++stats.rejected;
            reject = true;
            h *= 0.5;
            continue;
        }

        const double fac11 = std::pow(err, expo1);
        if (err <= 1.0) {
            facold = std::max(err, 1e-4);
            double fac = fac11 / std::pow(facold, beta);
            fac = std::max(facc2, std::min(facc1, fac / safe));
            double hnew = h / fac;
            if (reject) hnew = dir * std::min(std::abs(hnew), std::abs(h));
            reject = false;

            if (max_abs(ynew) > opt.divergence_norm) throw Divergence(t + h, max_abs(ynew));

            const double t_new = last ? t1 : t + h;
            if (on_step) {
                const double hh = h;
                for (std::size_t i = 0; i < n; ++i) {
                    p0[i] = y[i];
                    p1[i] = ynew[i] - y[i];
                    p2[i] = hh * k1[i] - p1[i];
                    p3[i] = p1[i] - hh * k7[i] - p2[i];
                    p4[i] = hh * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] +
                                  d7 * k7[i]);
                }
                const double tb = t;
                DenseEval dense = [&, tb, hh](int comp, double tt) {
                    const double th = (tt - tb) / hh;
                    return p0[comp] +
                           th * (p1[comp] +
                                 (1 - th) * (p2[comp] + th * (p3[comp] + (1 - th) * p4[comp])));
                };
                on_step(t, t_new, dense);
            }

            ++stats.accepted;
            y.swap(ynew);
            k1.swap(k7);
            t = t_new;
            if (last) return stats;
            h = hnew;
        } else {
            ++stats.rejected;
            reject = true;
            h = h / std::min(facc1, fac11 / safe);
        }
    }
}

Trajectory integrate(const NumericField& F, const std::array<double, 3>& x0, double t_end,
                     double rtol, double atol, int samples) {
    if (!(t_end > 0) || !(rtol > 0) || !(atol > 0))
        throw Error("t_end and tolerances must be positive");

    Trajectory traj;
    traj.rtol = rtol;
    traj.atol = atol;
    traj.times.push_back(0);
    traj.states.push_back(x0);

    const Rhs rhs = [&F](double, const std::vector<double>& y, std::vector<double>& dy) {
        const auto v = F({y[0], y[1], y[2]});
        dy[0] = v[0];
        dy[1] = v[1];
        dy[2] = v[2];
    };

    OdeOptions opt;
    opt.rtol = rtol;
    opt.atol = atol;

    int next = 1;
    const StepCallback record = [&](double, double t_new, const DenseEval& dense) {
        if (samples > 0) {
            while (next <= samples) {
                const double ts = next == samples ? t_end : t_end * next / samples;
                if (ts > t_new) break;
                traj.times.push_back(ts);
                traj.states.push_back({dense(0, ts), dense(1, ts), dense(2, ts)});
                ++next;
            }
        } else {
            traj.times.push_back(t_new);
            traj.states.push_back({dense(0, t_new), dense(1, t_new), dense(2, t_new)});
        }
    };

    std::vector<double> y{x0[0], x0[1], x0[2]};
    const OdeStats stats = dopri5(rhs, y, 0, t_end, opt, record);
    traj.accepted = stats.accepted;
    traj.rejected = stats.rejected;
    return traj;
}

}  // namespace dbx
