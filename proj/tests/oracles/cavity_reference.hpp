// Test-only reference solver for the differentially heated square cavity.
//
// Deliberately independent of the library implementation: explicit FTCS
// time marching on the nondimensional vorticity/stream-function system,
// red-black SOR for the Poisson solve. Used to cross-check the production
// solver against the published benchmark values for this configuration
// (mean hot-wall Nusselt 1.118 at Ra=1e3, 2.243 at Ra=1e4).
#pragma once

#include <vector>

namespace oracle {

struct CavityResult {
    double nu_hot = 0.0;      // mean Nusselt number on the hot wall
    double theta_max = 0.0;   // max nondimensional temperature (should be 1)
    double theta_min = 0.0;   // min nondimensional temperature (should be 0)
    int steps = 0;
};

// Marches the side-heated cavity (hot left wall theta=1, cold right wall
// theta=0, adiabatic horizontal walls) to steady state on an n x n cell
// grid and returns the hot-wall Nusselt number.
CavityResult solve_heated_cavity_reference(int n, double rayleigh, double prandtl);

} // namespace oracle
