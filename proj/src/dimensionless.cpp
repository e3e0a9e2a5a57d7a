#include "inclino/dimensionless.hpp"

#include <cmath>

#include "inclino/errors.hpp"

namespace inclino {

namespace {

void check_point(const OperatingPoint& p)
{
    if (!(p.characteristic_length > 0.0) || !std::isfinite(p.characteristic_length))
        throw ValidationError("operating point: characteristic length must be positive");
    if (!(p.gravity >= 0.0) || !std::isfinite(p.gravity))
        throw ValidationError("operating point: gravity must be non-negative");
    if (!std::isfinite(p.delta_temperature))
        throw ValidationError("operating point: temperature difference must be finite");
}

} // namespace

double reynolds(const OperatingPoint& point)
{
    check_point(point);
    if (!point.mean_speed)
        throw ValidationError("Reynolds number requires a mean flow speed");
    return point.fluid.density * *point.mean_speed * point.characteristic_length /
           point.fluid.dynamic_viscosity;
}

double nusselt(const OperatingPoint& point)
{
    check_point(point);
    if (!point.convection_coefficient)
        throw ValidationError("Nusselt number requires a convection coefficient");
    return *point.convection_coefficient * point.characteristic_length /
           point.fluid.thermal_conductivity;
}

double prandtl(const FluidState& fluid)
{
    return fluid.dynamic_viscosity * fluid.specific_heat / fluid.thermal_conductivity;
}

double grashof(const OperatingPoint& point)
{
    check_point(point);
    const auto& f = point.fluid;
    const double l = point.characteristic_length;
    return f.density * f.density * point.gravity * f.expansion_coefficient *
           point.delta_temperature * (l * l * l) / (f.dynamic_viscosity * f.dynamic_viscosity);
}

double rayleigh(const OperatingPoint& point)
{
    check_point(point);
    const auto& f = point.fluid;
    const double l = point.characteristic_length;
    return point.gravity * (l * l * l) * point.delta_temperature *
           (f.density * f.density * f.expansion_coefficient * f.specific_heat) /
           (f.dynamic_viscosity * f.thermal_conductivity);
}

double a_factor(const FluidState& fluid)
{
    return fluid.density * fluid.density * fluid.expansion_coefficient * fluid.specific_heat /
           (fluid.dynamic_viscosity * fluid.thermal_conductivity);
}

VelocityRegime classify_velocity_regime(double re)
{
    if (!(re >= 0.0) || !std::isfinite(re))
        throw ValidationError("Reynolds number must be non-negative and finite");
    if (re < kReynoldsLaminarMax) return VelocityRegime::laminar;
    if (re <= kReynoldsTurbulentMin) return VelocityRegime::intermediate;
    return VelocityRegime::turbulent;
}

ThermalRegime classify_thermal_regime(double ra)
{
    if (!(ra >= 0.0) || !std::isfinite(ra))
        throw ValidationError("Rayleigh number must be non-negative and finite");
    return ra <= kRayleighTurbulent ? ThermalRegime::laminar_or_conductive
                                    : ThermalRegime::turbulent;
}

const char* to_string(VelocityRegime r)
{
    switch (r) {
    case VelocityRegime::laminar: return "laminar";
    case VelocityRegime::intermediate: return "intermediate";
    case VelocityRegime::turbulent: return "turbulent";
    case VelocityRegime::undefined: return "undefined";
    }
    return "?";
}

const char* to_string(ThermalRegime r)
{
    return r == ThermalRegime::laminar_or_conductive ? "laminar_or_conductive" : "turbulent";
}

DimensionlessReport dimensionless_report(const OperatingPoint& point)
{
    check_point(point);
    if (point.delta_temperature < 0.0)
        throw ValidationError("regime classification requires a non-negative temperature difference");

    DimensionlessReport r;
    r.prandtl = prandtl(point.fluid);
    r.grashof = grashof(point);
    r.rayleigh = rayleigh(point);
    r.a_factor = a_factor(point.fluid);
    if (point.mean_speed) {
        r.reynolds = reynolds(point);
        r.regime_velocity = classify_velocity_regime(*r.reynolds);
    }
    if (point.convection_coefficient) r.nusselt = nusselt(point);
    r.regime_thermal = classify_thermal_regime(r.rayleigh);
    return r;
}

double conductive_flux(double thermal_conductivity, double boundary_layer_thickness,
                       double surface_area, double wall_temperature, double reference_temperature)
{
    if (!(boundary_layer_thickness > 0.0))
        throw ValidationError("conductive flux requires a positive boundary-layer thickness");
    if (!(surface_area > 0.0))
        throw ValidationError("conductive flux requires a positive surface area");
    return thermal_conductivity / boundary_layer_thickness * surface_area *
           (wall_temperature - reference_temperature);
}

double convective_flux(double convection_coefficient, double surface_area,
                       double wall_temperature, double reference_temperature)
{
    if (!(surface_area > 0.0))
        throw ValidationError("convective flux requires a positive surface area");
    return convection_coefficient * surface_area * (wall_temperature - reference_temperature);
}

} // namespace inclino
