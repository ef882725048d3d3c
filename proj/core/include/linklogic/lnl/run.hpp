#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "linklogic/lnl/build.hpp"
#include "linklogic/sequential/pipeline.hpp"

namespace linklogic::lnl {

struct RunResult {
  bool sequential = false;
  std::vector<std::string> outputs;                           // port order
  std::vector<gates::PortValues> rows;                        // combinational: one per vector position
  std::map<std::string, std::vector<sequential::Sample>> samples;  // sequential: per output port
  sequential::Trace trace;
};

// Traces start with the resting state.
//
// Combinational documents evaluate each vector position in turn (inputs set,
// phases raised in order, then lowered). Sequential documents check the clock
// (ValidationError) and run the pipeline schedule for `cycles` cycles, reading
// vector position c as the input of cycle c.
RunResult run(const BuiltDocument& doc, const Streams& vector, std::size_t cycles);

// Sequential only: runs `cycles` cycles forward, then undoes every event. The
// trace reads the same backwards.
RunResult run_and_reverse(const BuiltDocument& doc, const Streams& vector, std::size_t cycles);

}  // namespace linklogic::lnl
