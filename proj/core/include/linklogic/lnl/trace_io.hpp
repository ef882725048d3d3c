#pragma once

#include <ostream>

#include "linklogic/sequential/pipeline.hpp"

namespace linklogic::lnl {

// One JSON object per line and per element per frame: {"t", "element", "state"}.
// Locks and balances only; routes are wiring.
void write_trace_jsonl(std::ostream& os, const sequential::Trace& trace);

}  // namespace linklogic::lnl
