#include "inclino/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "inclino/errors.hpp"

namespace inclino {

LinearFit fit_linear(const std::vector<std::pair<double, double>>& samples)
{
    if (samples.size() < 2) throw ValidationError("linear fit requires at least 2 samples");
    const auto n = static_cast<double>(samples.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : samples) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (!(denom > 0.0)) throw ValidationError("linear fit requires at least 2 distinct abscissae");

    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;

    const double mean_y = sy / n;
    double ss_res = 0.0, ss_tot = 0.0;
    for (const auto& [x, y] : samples) {
        const double r = y - (fit.intercept + fit.slope * x);
        ss_res += r * r;
        ss_tot += (y - mean_y) * (y - mean_y);
    }
    fit.r_squared = ss_tot > 0.0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    return fit;
}

namespace {

// Sum of squared residuals of a*(1 - exp(-t/tau)) with the amplitude solved
// analytically for the given tau. Also reports that amplitude.
double first_order_sse(const std::vector<std::pair<double, double>>& series, double tau, double& amplitude)
{
    double sff = 0.0, sfy = 0.0;
    for (const auto& [t, y] : series) {
        const double f = 1.0 - std::exp(-t / tau);
        sff += f * f;
        sfy += f * y;
    }
    amplitude = sff > 0.0 ? sfy / sff : 0.0;
    double sse = 0.0;
    for (const auto& [t, y] : series) {
        const double r = y - amplitude * (1.0 - std::exp(-t / tau));
        sse += r * r;
    }
    return sse;
}

} // namespace

FirstOrderFit fit_first_order(const std::vector<std::pair<double, double>>& series)
{
    if (series.size() < 5) throw ValidationError("first-order fit requires at least 5 samples");
    double t_max = 0.0, y_min = std::numeric_limits<double>::infinity(), y_max = -y_min;
    for (const auto& [t, y] : series) {
        if (!(t >= 0.0) || !std::isfinite(t) || !std::isfinite(y))
            throw ValidationError("first-order fit requires finite samples at non-negative times");
        t_max = std::max(t_max, t);
        y_min = std::min(y_min, y);
        y_max = std::max(y_max, y);
    }
    if (!(t_max > 0.0)) throw ValidationError("first-order fit requires a positive time span");
    const double spread = y_max - y_min;
    if (!(spread > 0.0) || spread <= 1e-14 * std::max(std::abs(y_max), std::abs(y_min)))
        throw ValidationError("first-order fit: series is flat, no step response to fit");

    // Golden-section search for tau on a log scale. The SSE is smooth and
    // unimodal for step-like data; the bracket spans far past any physical
    // time constant visible in the record.
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = std::log(t_max * 1e-6);
    double hi = std::log(t_max * 1e3);
    double amplitude = 0.0;
    double x1 = hi - golden * (hi - lo);
    double x2 = lo + golden * (hi - lo);
    double f1 = first_order_sse(series, std::exp(x1), amplitude);
    double f2 = first_order_sse(series, std::exp(x2), amplitude);
    for (int it = 0; it < 240; ++it) {
        if (f1 <= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - golden * (hi - lo);
            f1 = first_order_sse(series, std::exp(x1), amplitude);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + golden * (hi - lo);
            f2 = first_order_sse(series, std::exp(x2), amplitude);
        }
        if (hi - lo < 1e-15) break;
    }
    const double tau = std::exp(0.5 * (lo + hi));
    const double sse = first_order_sse(series, tau, amplitude);

    double mean = 0.0;
    for (const auto& [t, y] : series) {
        (void)t;
        mean += y;
    }
    mean /= static_cast<double>(series.size());
    double ss_tot = 0.0;
    for (const auto& [t, y] : series) {
        (void)t;
        ss_tot += (y - mean) * (y - mean);
    }
    const double r2 = ss_tot > 0.0 ? 1.0 - sse / ss_tot : 0.0;
    if (!(r2 > 0.2))
        throw ValidationError("first-order fit: series does not resemble a step response (R^2 <= 0.2)");

    FirstOrderFit fit;
    fit.time_constant = tau;
    fit.response_time = tau;  // 63.2% criterion
    fit.amplitude = amplitude;
    fit.r_squared = std::max(0.0, r2);
    return fit;
}

} // namespace inclino
