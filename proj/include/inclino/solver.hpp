#pragma once

#include <utility>
#include <vector>

#include "inclino/errors.hpp"
#include "inclino/fluid.hpp"
#include "inclino/geometry.hpp"

namespace inclino {

/// How fluid properties enter the solve: all constant at the film
/// temperature, or with the dynamic viscosity re-evaluated from the local
/// temperature field (the other four stay at film values).
enum class PropertyHandling { constant_at_film, temperature_dependent_viscosity };

struct SolverConfig {
    int nx = 64;  ///< cells across the cavity width (>= 16)
    int ny = 64;  ///< cells across the cavity height (>= 16)
    double ambient_temperature = 293.15;  // K, walls and initial fluid
    double tolerance = 1e-8;      // scaled-residual target, all equations
    int max_iterations = 100000;  // outer iterations before giving up
    double relax_vorticity = 0.7;
    double relax_energy = 1.0;
    int psi_sweeps = 30;  // stream-function SOR sweeps per outer iteration
    PropertyHandling properties = PropertyHandling::constant_at_film;
    bool allow_turbulent = false;  // permit Ra beyond the laminar threshold

    // Transient controls. Non-positive values mean "choose automatically":
    // the end time defaults to ten diffusion time constants over the
    // detector distance, the step to end_time / 800.
    double dt = 0.0;        // s
    double end_time = 0.0;  // s
    double cfl_safety = 0.4;
    int snapshot_stride = 0;  // keep a full field snapshot every k steps; 0 = none

    void validate() const;
};

/// Converged (or time-advanced) field state on the uniform node grid.
/// Nodes are laid out row-major, (nx+1) x (ny+1), node (i,j) at
/// (i*hx, j*hy). Immutable once returned; safe to share between threads.
struct Solution {
    int nx = 0, ny = 0;
    double width = 0.0, height = 0.0, hx = 0.0, hy = 0.0;

    std::vector<double> temperature;      // K
    std::vector<double> u;                // m/s
    std::vector<double> v;                // m/s
    std::vector<double> stream_function;  // m^2/s
    std::vector<double> vorticity;        // 1/s

    std::vector<ResidualSample> residual_history;
    int iterations = 0;
    bool converged = false;
    double wall_seconds = 0.0;

    SensorGeometry geometry;
    double ambient_temperature = 0.0;
    double heater_temperature = 0.0;
    double film_temperature = 0.0;
    FluidState film_state;
    double tolerance = 0.0;
    bool benchmark_mode = false;

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * (nx + 1) + i; }
    double node_x(int i) const { return i * hx; }
    double node_y(int j) const { return j * hy; }

    /// Bilinear interpolation of the temperature field at (x, y).
    double interpolate_temperature(double x, double y) const;
};

/// Node footprint of the heater strip: one node row at mid-height spanning
/// the strip width symmetrically about the cavity centre.
struct HeaterFootprint {
    int row = 0;
    int i_lo = 0;
    int i_hi = 0;
};
HeaterFootprint heater_footprint(const SensorGeometry& geometry, int nx, int ny);

/// Steady natural convection in the closed tilted cavity. Walls are no-slip
/// and isothermal at the ambient temperature; the heater strip is held at
/// its set temperature. Throws ValidationError when the operating point is
/// beyond the laminar Rayleigh threshold (unless allow_turbulent) and
/// ConvergenceError (with residual history) when the iteration stalls.
Solution solve_steady(const SensorGeometry& geometry, const FluidSpec& fluid,
                      const SolverConfig& config);

/// Verification configuration: side-heated square cavity (hot left wall,
/// cold right wall, adiabatic floor and ceiling) at the given Rayleigh and
/// Prandtl numbers on an n x n grid, solved in nondimensional variables.
Solution solve_benchmark_cavity(double rayleigh_number, double prandtl_number, int n,
                                double tolerance = 1e-8, int max_iterations = 200000);

/// Mean Nusselt number of the hot (left) wall, second-order one-sided
/// gradients integrated by the trapezoid rule.
double mean_hot_wall_nusselt(const Solution& solution);

struct TransientResult {
    std::vector<std::pair<double, double>> detector_delta_temperature;  // (t s, K)
    std::vector<Solution> snapshots;
    Solution final_state;
    double dt = 0.0;
    int steps = 0;
};

/// Step response: from an isothermal rest state the heater jumps to its set
/// temperature at t = 0. Implicit (ADI) diffusion, explicit advection; the
/// advective CFL limit is enforced every step.
TransientResult solve_transient(const SensorGeometry& geometry, const FluidSpec& fluid,
                                const SolverConfig& config);

struct EnergyBalance {
    double heater_input = 0.0;   // W per metre of cavity depth
    double wall_outflux = 0.0;   // W per metre of cavity depth
    double imbalance = 0.0;      // |in - out| / |in|
};

/// Integrated heat budget of a solution: control-volume flux off the heater
/// nodes against one-sided conductive flux into the walls.
EnergyBalance energy_balance(const Solution& solution);

} // namespace inclino
