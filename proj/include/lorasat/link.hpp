#pragma once

#include "lorasat/scenario.hpp"
#include "lorasat/visibility.hpp"

namespace lorasat {

// Resolved pass geometry for a two-device scenario: both device passes, their
// single visibility windows, the shared window, and the derived timing offset
// t_cvB = t_cvA + dt_AB (unless device B carries an explicit override).
struct LinkGeometry {
    DevicePass pass_a;
    DevicePass pass_b;
    VisibilityWindow window_a;
    VisibilityWindow window_b;
    VisibilityWindow shared;
    double delta_t_ab_s = 0.0;
};

LinkGeometry build_link_geometry(const ScenarioConfig& cfg);

}  // namespace lorasat
