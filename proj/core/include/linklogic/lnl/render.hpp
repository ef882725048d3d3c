#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "linklogic/gates/simulator.hpp"
#include "linklogic/kinematics/lock_energy.hpp"
#include "linklogic/sequential/pipeline.hpp"

namespace linklogic::lnl {

// 100 px per length unit, y up, canvas bottom-left at the drawing's minimum
// corner. Links come from solved lock configurations; anchored joints are a
// circle over a triangle. Output depends only on its arguments.
std::string render_lock_svg(const kinematics::LockGeometry& g, bool input0, bool input1);

// Every lock and balance of the netlist, one row per cell.
std::string render_frame_svg(const gates::Topology& topo, const gates::SimState& state,
                             const kinematics::LockGeometry& g);

// Writes frame_0000.svg, frame_0001.svg, ... and returns the paths. Throws
// IoFailure when the directory or a file cannot be written.
std::vector<std::filesystem::path> render(const sequential::Trace& trace,
                                          const kinematics::LockGeometry& g,
                                          const std::filesystem::path& out_dir);

}  // namespace linklogic::lnl
