#pragma once

#include <optional>
#include <string>

#include "darboux3/integrate.hpp"

namespace dbx {

enum class Plane { xy, xz, yz };

std::optional<Plane> plane_from_string(const std::string& text);
std::string plane_name(Plane plane);

// CSV with header t,x,y,z; values use shortest round-trip decimal rendering, so
// write followed by read restores the doubles bit for bit.
void write_csv(const Trajectory& traj, const std::string& path);
Trajectory read_csv(const std::string& path);

// Standalone SVG 1.1 with the trajectory's projection onto the chosen plane as a
// single polyline, auto-scaled to the data, with axis labels.
void write_svg(const Trajectory& traj, Plane plane, const std::string& path, int width = 800,
               int height = 600);

}  // namespace dbx
