#pragma once

#include <utility>

namespace inclino {

/// Sensor cavity in its own frame: a W x H rectangle of fluid with a heated
/// strip suspended at mid-height and a symmetric pair of detector strips at
/// +-detector_offset from the heater centre. Tilting the device rotates
/// gravity within this plane; the sensitive axis is x.
struct SensorGeometry {
    double cavity_width = 900e-6;        // m, horizontal extent (sensitive axis)
    double cavity_height = 5e-9 / (900e-6 * 900e-6);  // m, from the 5 mm^3 fill volume with depth = width
    double heater_width = 70e-6;         // m
    double heater_temperature = 351.15;  // K
    double detector_offset = 200e-6;     // m, heater centre to detector centre
    double detector_width = 7e-6;        // m
    double tilt_angle = 0.0;             // rad, rotation of gravity in the cavity plane
    double gravity = 9.81;               // m/s^2

    /// Throws ValidationError on any violated geometric invariant.
    void validate() const;

    SensorGeometry with_tilt(double tilt_rad) const
    {
        SensorGeometry g = *this;
        g.tilt_angle = tilt_rad;
        return g;
    }

    SensorGeometry with_gravity(double g_mps2) const
    {
        SensorGeometry g = *this;
        g.gravity = g_mps2;
        return g;
    }
};

/// Gravity components in the cavity frame for tilt theta:
/// (g sin(theta), -g cos(theta)). At zero tilt gravity points along -y.
std::pair<double, double> gravity_vector(double tilt_angle, double gravity_magnitude);

/// The device described in the project README: 900 um wide cavity holding
/// 5 mm^3 of fluid, 70 um heater, 7 um detectors 200 um off-centre.
SensorGeometry default_device_geometry();

} // namespace inclino
