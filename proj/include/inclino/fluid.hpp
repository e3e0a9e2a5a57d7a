#pragma once

#include <string>
#include <utility>
#include <vector>

namespace inclino {

/// Temperature-dependent thermophysical property in SI units.
///
/// Three model kinds:
///  - constant:  p(T) = value
///  - power_law: p(T) = ref_value * (T / ref_temperature)^exponent
///  - table:     log-log linear interpolation between strictly increasing
///               (T, value) knots; evaluation outside the knot span is an
///               error, never an extrapolation
class PropertyModel {
public:
    enum class Kind { constant, power_law, table };

    static PropertyModel constant(double value);
    static PropertyModel power_law(double ref_value, double ref_temperature, double exponent);
    static PropertyModel table(std::vector<std::pair<double, double>> points);

    Kind kind() const { return kind_; }
    double value() const { return ref_value_; }
    double ref_value() const { return ref_value_; }
    double ref_temperature() const { return ref_temperature_; }
    double exponent() const { return exponent_; }
    const std::vector<std::pair<double, double>>& points() const { return points_; }

    /// Evaluates the model at temperature T (K). For table models T must lie
    /// within the knot span; `context` names the property in error messages.
    double evaluate(double temperature, const std::string& context = "property") const;

    /// Returns a copy with all values multiplied by `factor` (used by the
    /// scaling probes to perturb one property while keeping the others).
    PropertyModel scaled(double factor) const;

    /// Temperature span the model can be evaluated on. Table models are
    /// limited to their knots; the others are unbounded.
    std::pair<double, double> support() const;

private:
    PropertyModel() = default;

    Kind kind_ = Kind::constant;
    double ref_value_ = 0.0;
    double ref_temperature_ = 0.0;
    double exponent_ = 0.0;
    std::vector<std::pair<double, double>> points_;
};

/// The five property values of a fluid evaluated at one film temperature.
/// All values are strictly positive and finite by construction.
struct FluidState {
    double temperature = 0.0;            // K
    double density = 0.0;                // kg/m^3
    double dynamic_viscosity = 0.0;      // Pa·s
    double thermal_conductivity = 0.0;   // W/(m·K)
    double specific_heat = 0.0;          // J/(kg·K)
    double expansion_coefficient = 0.0;  // 1/K

    double kinematic_viscosity() const { return dynamic_viscosity / density; }
    double thermal_diffusivity() const { return thermal_conductivity / (density * specific_heat); }
};

enum class FluidPhase { gas, liquid };

/// A named fluid: five temperature-dependent property models, a validity
/// range, and a citation for where the numbers come from. Immutable after
/// construction and safe to share across threads.
struct FluidSpec {
    std::string name;
    FluidPhase phase = FluidPhase::gas;
    bool ideal_gas = false;  // gases only: expansion coefficient must equal 1/T
    double validity_min = 0.0;  // K
    double validity_max = 0.0;  // K
    std::string source;

    PropertyModel density = PropertyModel::constant(1.0);
    PropertyModel dynamic_viscosity = PropertyModel::constant(1.0);
    PropertyModel thermal_conductivity = PropertyModel::constant(1.0);
    PropertyModel specific_heat = PropertyModel::constant(1.0);
    PropertyModel expansion_coefficient = PropertyModel::constant(1.0);

    /// Evaluates all five properties at T. Throws ValidationError if T is
    /// outside [validity_min, validity_max].
    FluidState evaluate(double temperature) const;

    /// Checks every invariant: positive finite properties across the whole
    /// validity range (1 K grid), ideal-gas beta = 1/T where flagged.
    /// Throws ValidationError naming the fluid and property on failure.
    void validate() const;

    /// Returns a copy with the viscosity model scaled by `factor`.
    FluidSpec with_viscosity_scaled(double factor) const;
};

/// Result of the log-log least-squares power-law fit.
struct PowerLawFit {
    double ref_value = 0.0;        // fitted value at ref_temperature
    double ref_temperature = 0.0;  // first sample temperature
    double exponent = 0.0;
    double rms_log_residual = 0.0;
};

/// Least-squares fit of log(value) against log(T). Requires at least two
/// samples with strictly positive temperatures and values.
PowerLawFit fit_power_law(const std::vector<std::pair<double, double>>& samples);

/// Parses a fluid database document (JSON, schema in the README). Unknown
/// keys are an error. Every fluid is validated before being returned.
std::vector<FluidSpec> parse_fluid_database(const std::string& text);

/// Reads and parses a database file.
std::vector<FluidSpec> load_fluid_database(const std::string& path);

/// Serializes fluids back to the database document format. Round-trips
/// bit-exactly through parse_fluid_database.
std::string serialize_fluid_database(const std::vector<FluidSpec>& fluids);

/// Case-sensitive lookup; throws ValidationError listing available names.
const FluidSpec& find_fluid(const std::vector<FluidSpec>& fluids, const std::string& name);

} // namespace inclino
