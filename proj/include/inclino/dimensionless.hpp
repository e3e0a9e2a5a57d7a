#pragma once

#include <optional>
#include <string>

#include "inclino/fluid.hpp"

namespace inclino {

/// Flow regime from the Reynolds number: laminar below 2000, intermediate
/// on [2000, 3000], turbulent above. `undefined` is reported when no mean
/// speed is available to form Re.
enum class VelocityRegime { laminar, intermediate, turbulent, undefined };

/// Heat-transfer regime from the Rayleigh number: below the 47000 threshold
/// the exchange is laminar convection and/or conduction, above it turbulent
/// convection. The boundary value itself classifies as laminar/conductive.
enum class ThermalRegime { laminar_or_conductive, turbulent };

inline constexpr double kReynoldsLaminarMax = 2000.0;
inline constexpr double kReynoldsTurbulentMin = 3000.0;
inline constexpr double kRayleighTurbulent = 47000.0;

/// One operating point of the sensor: fluid state at the film temperature,
/// characteristic length, temperature difference and gravity, plus the two
/// optional transport inputs needed only for Re and Nu.
struct OperatingPoint {
    FluidState fluid;
    double characteristic_length = 0.0;          // m
    double delta_temperature = 0.0;              // K, heater minus ambient
    double gravity = 9.81;                       // m/s^2
    std::optional<double> mean_speed;            // m/s, required for Re
    std::optional<double> convection_coefficient;  // W/(m^2 K), required for Nu
};

struct DimensionlessReport {
    std::optional<double> reynolds;
    std::optional<double> nusselt;
    double prandtl = 0.0;
    double grashof = 0.0;
    double rayleigh = 0.0;
    double a_factor = 0.0;  // rho^2 * beta * Cp / (mu * lambda), raw SI composite
    VelocityRegime regime_velocity = VelocityRegime::undefined;
    ThermalRegime regime_thermal = ThermalRegime::laminar_or_conductive;
};

/// Re = rho * u_m * l / mu. Throws if no mean speed was provided.
double reynolds(const OperatingPoint& point);

/// Nu = h_c * l / lambda. Throws if no convection coefficient was provided.
double nusselt(const OperatingPoint& point);

/// Pr = mu * Cp / lambda.
double prandtl(const FluidState& fluid);

/// Gr = rho^2 * g * beta * dT * l^3 / mu^2.
double grashof(const OperatingPoint& point);

/// Ra = g * l^3 * dT * rho^2 * beta * Cp / (mu * lambda); equals Gr * Pr.
double rayleigh(const OperatingPoint& point);

/// Fluid figure of merit A = rho^2 * beta * Cp / (mu * lambda). Sensitivity
/// ranks with it across fluids at matched geometry and heater excess.
double a_factor(const FluidState& fluid);

VelocityRegime classify_velocity_regime(double reynolds_number);
ThermalRegime classify_thermal_regime(double rayleigh_number);

const char* to_string(VelocityRegime r);
const char* to_string(ThermalRegime r);

/// Assembles the full report for one operating point.
DimensionlessReport dimensionless_report(const OperatingPoint& point);

/// Conductive flux across a boundary layer of thickness delta_th:
/// phi = (lambda / delta_th) * surface_area * (T_p - T_0), in W.
double conductive_flux(double thermal_conductivity, double boundary_layer_thickness,
                       double surface_area, double wall_temperature, double reference_temperature);

/// Newton-law convective flux: phi = h * surface_area * (T_p - T_0), in W.
/// Coincides with conductive_flux when h = lambda / delta_th.
double convective_flux(double convection_coefficient, double surface_area,
                       double wall_temperature, double reference_temperature);

} // namespace inclino
