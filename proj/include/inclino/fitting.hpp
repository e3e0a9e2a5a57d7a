#pragma once

#include <utility>
#include <vector>

namespace inclino {

/// Ordinary least-squares line y = intercept + slope * x.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

LinearFit fit_linear(const std::vector<std::pair<double, double>>& samples);

/// First-order step response a * (1 - exp(-t / tau)) fitted by least
/// squares: the amplitude is solved in closed form for each candidate tau,
/// the time constant by a bracketed golden-section search.
struct FirstOrderFit {
    double time_constant = 0.0;   // tau, s
    double response_time = 0.0;   // time to 63.2% of the final amplitude = tau
    double amplitude = 0.0;       // fitted final value
    double r_squared = 0.0;
};

FirstOrderFit fit_first_order(const std::vector<std::pair<double, double>>& series);

} // namespace inclino
