#pragma once

#include <cstdint>

#include "linklogic/gates/netlist.hpp"
#include "linklogic/sequential/pipeline.hpp"

namespace linklogic::sequential {

// Ripple-carry pipeline: full adder i runs on phase i mod 4, operand bits i
// reach it through i shift cells and sum bit i leaves through bits-1-i cells,
// so all results appear together. Ports a<i>, b<i>, cin -> s<i>, cout.
gates::Netlist build_ripple_adder(int bits = 8);

struct AdderResult {
  std::uint32_t sum = 0;
  bool carry = false;
  double issued = 0.0;     // time the operands were applied
  double completed = 0.0;  // rise of the producing phase plus a quarter cycle
};

// Streams operand pairs through the pipeline, one per cycle.
class AdderPipeline {
 public:
  explicit AdderPipeline(int bits = 8);

  void push(std::uint32_t a, std::uint32_t b, bool cin);
  // Runs until every pushed operation has completed.
  std::vector<AdderResult> drain();

  int bits() const { return bits_; }
  Pipeline& pipeline() { return pipeline_; }
  int latency_cycles() const;

 private:
  int bits_;
  Pipeline pipeline_;
  std::size_t pushed_ = 0;
  std::size_t collected_ = 0;
};

}  // namespace linklogic::sequential
