#include "cavity_reference.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

namespace {

inline int idx(int i, int j, int n1) { return j * n1 + i; }

// Red-black SOR sweeps for lap(psi) = -omega with psi = 0 on the boundary.
void sor_poisson(std::vector<double>& psi, const std::vector<double>& omega,
                 int n1, double h2, double relax, int sweeps)
{
    for (int s = 0; s < sweeps; ++s) {
        for (int color = 0; color < 2; ++color) {
            for (int j = 1; j < n1 - 1; ++j) {
                for (int i = 1 + ((j + color) & 1); i < n1 - 1; i += 2) {
                    const double gs = 0.25 * (psi[idx(i + 1, j, n1)] + psi[idx(i - 1, j, n1)] +
                                              psi[idx(i, j + 1, n1)] + psi[idx(i, j - 1, n1)] +
                                              h2 * omega[idx(i, j, n1)]);
                    psi[idx(i, j, n1)] += relax * (gs - psi[idx(i, j, n1)]);
                }
            }
        }
    }
}

} // namespace

CavityResult solve_heated_cavity_reference(int n, double rayleigh, double prandtl)
{
    const int n1 = n + 1;
    const double h = 1.0 / n;
    const double h2 = h * h;
    const double inv2h = 1.0 / (2.0 * h);
    const double invh2 = 1.0 / h2;

    std::vector<double> theta(n1 * n1, 0.0), omega(n1 * n1, 0.0), psi(n1 * n1, 0.0);
    std::vector<double> u(n1 * n1, 0.0), v(n1 * n1, 0.0);
    std::vector<double> theta_n(n1 * n1, 0.0), omega_n(n1 * n1, 0.0);

    // Conduction initial condition, hot wall at x = 0.
    for (int j = 0; j < n1; ++j)
        for (int i = 0; i < n1; ++i)
            theta[idx(i, j, n1)] = 1.0 - static_cast<double>(i) / n;

    // Stability-limited explicit time step (diffusive limit dominates here).
    const double nu = prandtl;
    const double dt = 0.2 * h2 / std::max(1.0, nu);
    const double t_end = 3.0;
    const int steps = static_cast<int>(t_end / dt);
    const double relax = 2.0 / (1.0 + std::sin(M_PI / n));

    for (int step = 0; step < steps; ++step) {
        // Wall vorticity (Thom), stationary no-slip walls.
        for (int j = 0; j < n1; ++j) {
            omega[idx(0, j, n1)] = -2.0 * psi[idx(1, j, n1)] * invh2;
            omega[idx(n, j, n1)] = -2.0 * psi[idx(n - 1, j, n1)] * invh2;
        }
        for (int i = 0; i < n1; ++i) {
            omega[idx(i, 0, n1)] = -2.0 * psi[idx(i, 1, n1)] * invh2;
            omega[idx(i, n, n1)] = -2.0 * psi[idx(i, n, n1) - n1] * invh2;
        }

        theta_n = theta;
        omega_n = omega;
        for (int j = 1; j < n; ++j) {
            for (int i = 1; i < n; ++i) {
                const int k = idx(i, j, n1);
                const double ux = u[k], vy = v[k];
                const double tx = (theta[k + 1] - theta[k - 1]) * inv2h;
                const double ty = (theta[k + n1] - theta[k - n1]) * inv2h;
                const double lap_t = (theta[k + 1] + theta[k - 1] + theta[k + n1] + theta[k - n1] - 4.0 * theta[k]) * invh2;
                theta_n[k] = theta[k] + dt * (-(ux * tx + vy * ty) + lap_t);

                const double wx = (omega[k + 1] - omega[k - 1]) * inv2h;
                const double wy = (omega[k + n1] - omega[k - n1]) * inv2h;
                const double lap_w = (omega[k + 1] + omega[k - 1] + omega[k + n1] + omega[k - n1] - 4.0 * omega[k]) * invh2;
                omega_n[k] = omega[k] + dt * (-(ux * wx + vy * wy) + nu * lap_w + rayleigh * prandtl * tx);
            }
        }
        theta.swap(theta_n);
        omega.swap(omega_n);

        // Dirichlet side walls, adiabatic horizontal walls (second order).
        for (int j = 0; j < n1; ++j) {
            theta[idx(0, j, n1)] = 1.0;
            theta[idx(n, j, n1)] = 0.0;
        }
        for (int i = 1; i < n; ++i) {
            theta[idx(i, 0, n1)] = (4.0 * theta[idx(i, 1, n1)] - theta[idx(i, 2, n1)]) / 3.0;
            theta[idx(i, n, n1)] = (4.0 * theta[idx(i, n - 1, n1)] - theta[idx(i, n - 2, n1)]) / 3.0;
        }

        sor_poisson(psi, omega, n1, h2, relax, 10);

        for (int j = 1; j < n; ++j) {
            for (int i = 1; i < n; ++i) {
                const int k = idx(i, j, n1);
                u[k] = (psi[k + n1] - psi[k - n1]) * inv2h;
                v[k] = -(psi[k + 1] - psi[k - 1]) * inv2h;
            }
        }
    }

    // Final Poisson polish so psi is consistent with omega before output.
    sor_poisson(psi, omega, n1, h2, relax, 200);

    CavityResult out;
    out.steps = steps;
    out.theta_max = *std::max_element(theta.begin(), theta.end());
    out.theta_min = *std::min_element(theta.begin(), theta.end());

    // Mean hot-wall Nusselt: trapezoid of -dtheta/dx at x = 0 (2nd-order one-sided).
    double nu_sum = 0.0;
    for (int j = 0; j < n1; ++j) {
        const double grad = (3.0 * theta[idx(0, j, n1)] - 4.0 * theta[idx(1, j, n1)] + theta[idx(2, j, n1)]) * inv2h;
        const double w = (j == 0 || j == n) ? 0.5 : 1.0;
        nu_sum += w * grad * h;
    }
    out.nu_hot = nu_sum;
    return out;
}

} // namespace oracle
