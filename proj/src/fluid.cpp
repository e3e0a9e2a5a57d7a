#include "inclino/fluid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "inclino/errors.hpp"

namespace inclino {

namespace {

void require(bool ok, const std::string& message)
{
    if (!ok) throw ValidationError(message);
}

std::string range_message(const std::string& context, double t, double lo, double hi)
{
    std::ostringstream os;
    os << context << ": temperature " << t << " K outside validity range [" << lo << ", " << hi << "] K";
    return os.str();
}

} // namespace

PropertyModel PropertyModel::constant(double value)
{
    require(std::isfinite(value) && value > 0.0, "constant property model requires a positive finite value");
    PropertyModel m;
    m.kind_ = Kind::constant;
    m.ref_value_ = value;
    return m;
}

PropertyModel PropertyModel::power_law(double ref_value, double ref_temperature, double exponent)
{
    require(std::isfinite(ref_value) && ref_value > 0.0, "power-law model requires a positive reference value");
    require(std::isfinite(ref_temperature) && ref_temperature > 0.0, "power-law model requires a positive reference temperature");
    require(std::isfinite(exponent), "power-law exponent must be finite");
    PropertyModel m;
    m.kind_ = Kind::power_law;
    m.ref_value_ = ref_value;
    m.ref_temperature_ = ref_temperature;
    m.exponent_ = exponent;
    return m;
}

PropertyModel PropertyModel::table(std::vector<std::pair<double, double>> points)
{
    require(points.size() >= 2, "table model requires at least 2 points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        require(std::isfinite(points[i].first) && points[i].first > 0.0, "table temperatures must be positive and finite");
        require(std::isfinite(points[i].second) && points[i].second > 0.0, "table values must be positive and finite");
        if (i > 0) require(points[i].first > points[i - 1].first, "table temperatures must be strictly increasing");
    }
    PropertyModel m;
    m.kind_ = Kind::table;
    m.points_ = std::move(points);
    return m;
}

double PropertyModel::evaluate(double temperature, const std::string& context) const
{
    require(std::isfinite(temperature) && temperature > 0.0, context + ": temperature must be positive and finite");
    switch (kind_) {
    case Kind::constant:
        return ref_value_;
    case Kind::power_law:
        if (temperature == ref_temperature_) return ref_value_;  // exact at the reference
        return ref_value_ * std::pow(temperature / ref_temperature_, exponent_);
    case Kind::table: {
        const double lo = points_.front().first;
        const double hi = points_.back().first;
        if (temperature < lo || temperature > hi)
            throw ValidationError(range_message(context, temperature, lo, hi));
        auto it = std::upper_bound(points_.begin(), points_.end(), temperature,
                                   [](double t, const std::pair<double, double>& p) { return t < p.first; });
        if (it == points_.end()) return points_.back().second;
        if (it == points_.begin()) return points_.front().second;
        const auto& [t1, v1] = *it;
        const auto& [t0, v0] = *(it - 1);
        if (temperature == t0) return v0;
        // log-log linear between knots
        const double w = std::log(temperature / t0) / std::log(t1 / t0);
        return v0 * std::exp(w * std::log(v1 / v0));
    }
    }
    throw ValidationError("corrupt property model");
}

PropertyModel PropertyModel::scaled(double factor) const
{
    require(std::isfinite(factor) && factor > 0.0, "property scale factor must be positive and finite");
    PropertyModel m = *this;
    m.ref_value_ *= factor;
    for (auto& p : m.points_) p.second *= factor;
    return m;
}

std::pair<double, double> PropertyModel::support() const
{
    if (kind_ == Kind::table) return {points_.front().first, points_.back().first};
    return {0.0, std::numeric_limits<double>::infinity()};
}

FluidState FluidSpec::evaluate(double temperature) const
{
    if (temperature < validity_min || temperature > validity_max)
        throw ValidationError(range_message("fluid '" + name + "'", temperature, validity_min, validity_max));
    FluidState s;
    s.temperature = temperature;
    s.density = density.evaluate(temperature, name + ".density");
    s.dynamic_viscosity = dynamic_viscosity.evaluate(temperature, name + ".dynamic_viscosity");
    s.thermal_conductivity = thermal_conductivity.evaluate(temperature, name + ".thermal_conductivity");
    s.specific_heat = specific_heat.evaluate(temperature, name + ".specific_heat");
    s.expansion_coefficient = expansion_coefficient.evaluate(temperature, name + ".expansion_coefficient");
    return s;
}

void FluidSpec::validate() const
{
    require(!name.empty(), "fluid name must not be empty");
    require(std::isfinite(validity_min) && validity_min > 0.0, "fluid '" + name + "': validity_K lower bound must be positive");
    require(validity_max > validity_min, "fluid '" + name + "': validity_K upper bound must exceed the lower bound");
    require(!ideal_gas || phase == FluidPhase::gas, "fluid '" + name + "': ideal_gas flag only applies to gases");

    // 1 K scan of the whole validity range, endpoints included.
    double t = validity_min;
    for (;;) {
        const FluidState s = evaluate(t);
        for (auto [v, label] : {std::pair{s.density, "density"},
                                std::pair{s.dynamic_viscosity, "dynamic_viscosity"},
                                std::pair{s.thermal_conductivity, "thermal_conductivity"},
                                std::pair{s.specific_heat, "specific_heat"},
                                std::pair{s.expansion_coefficient, "expansion_coefficient"}}) {
            require(std::isfinite(v) && v > 0.0,
                    "fluid '" + name + "': " + label + " is not positive and finite at " + std::to_string(t) + " K");
        }
        if (ideal_gas) {
            const double beta = s.expansion_coefficient;
            require(std::abs(beta * t - 1.0) <= 1e-9,
                    "fluid '" + name + "': ideal-gas expansion coefficient must equal 1/T at " + std::to_string(t) + " K");
        }
        if (t >= validity_max) break;
        t = std::min(t + 1.0, validity_max);
    }
}

FluidSpec FluidSpec::with_viscosity_scaled(double factor) const
{
    FluidSpec f = *this;
    f.dynamic_viscosity = dynamic_viscosity.scaled(factor);
    return f;
}

PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& samples)
{
    require(samples.size() >= 2, "power-law fit requires at least 2 samples");
    for (const auto& [t, v] : samples) {
        require(std::isfinite(t) && t > 0.0, "power-law fit requires positive finite temperatures");
        require(std::isfinite(v) && v > 0.0, "power-law fit requires positive finite values");
    }

    const auto n = static_cast<double>(samples.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (const auto& [t, v] : samples) {
        const double x = std::log(t);
        const double y = std::log(v);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    require(denom > 0.0, "power-law fit requires at least 2 distinct temperatures");

    PowerLawFit fit;
    fit.exponent = (n * sxy - sx * sy) / denom;
    const double intercept = (sy - fit.exponent * sx) / n;
    fit.ref_temperature = samples.front().first;
    fit.ref_value = std::exp(intercept + fit.exponent * std::log(fit.ref_temperature));

    double ss = 0.0;
    for (const auto& [t, v] : samples) {
        const double r = std::log(v) - (intercept + fit.exponent * std::log(t));
        ss += r * r;
    }
    fit.rms_log_residual = std::sqrt(ss / n);
    return fit;
}

const FluidSpec& find_fluid(const std::vector<FluidSpec>& fluids, const std::string& name)
{
    for (const auto& f : fluids)
        if (f.name == name) return f;
    std::ostringstream os;
    os << "unknown fluid '" << name << "'; available:";
    for (const auto& f : fluids) os << " " << f.name;
    throw ValidationError(os.str());
}

} // namespace inclino
