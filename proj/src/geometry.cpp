#include "inclino/geometry.hpp"

#include <cmath>
#include <sstream>

#include "inclino/errors.hpp"

namespace inclino {

void SensorGeometry::validate() const
{
    std::ostringstream os;
    const auto fail = [&os](const char* what) {
        os << "geometry: " << what;
        throw ValidationError(os.str());
    };
    if (!(cavity_width > 0.0) || !std::isfinite(cavity_width)) fail("cavity_width must be positive");
    if (!(cavity_height > 0.0) || !std::isfinite(cavity_height)) fail("cavity_height must be positive");
    if (!(heater_width > 0.0) || heater_width >= cavity_width) fail("heater_width must lie in (0, cavity_width)");
    if (!(heater_temperature > 0.0)) fail("heater_temperature must be positive");
    if (!(detector_width > 0.0)) fail("detector_width must be positive");
    if (!(detector_offset - detector_width / 2.0 > 0.0)) fail("detectors must not overlap the heater centre");
    if (!(detector_offset + detector_width / 2.0 < cavity_width / 2.0)) fail("detectors must lie inside the cavity");
    if (!(gravity >= 0.0) || !std::isfinite(gravity)) fail("gravity must be non-negative");
    if (!std::isfinite(tilt_angle)) fail("tilt_angle must be finite");
}

std::pair<double, double> gravity_vector(double tilt_angle, double gravity_magnitude)
{
    return {gravity_magnitude * std::sin(tilt_angle), -gravity_magnitude * std::cos(tilt_angle)};
}

SensorGeometry default_device_geometry()
{
    return SensorGeometry{};
}

} // namespace inclino
