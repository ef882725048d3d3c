#include <benchmark/benchmark.h>

#include "linklogic/gates/evaluate.hpp"
#include "linklogic/gates/library.hpp"
#include "linklogic/kinematics/linkages.hpp"
#include "linklogic/kinematics/lock_energy.hpp"
#include "linklogic/kinematics/solver.hpp"
#include "linklogic/sequential/adder.hpp"
#include "linklogic/sequential/chain.hpp"

namespace lg = linklogic::gates;
namespace lk = linklogic::kinematics;
namespace ls = linklogic::sequential;

static void BM_DriveLockInput(benchmark::State& state) {
  const auto lock = lk::lock_mechanism({});
  const auto targets = lk::lock_targets(lk::LockGeometry{}.theta_on, 0.0);
  for (auto _ : state) {
    auto c = lk::drive(lock.mechanism, lock.config, {{0, targets.upper}}, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_DriveLockInput)->Arg(10)->Arg(40);

static void BM_Mobility(benchmark::State& state) {
  const auto lock = lk::lock_mechanism({});
  for (auto _ : state) benchmark::DoNotOptimize(lk::mobility(lock.mechanism, lock.config));
}
BENCHMARK(BM_Mobility);

static void BM_SpringGradient(benchmark::State& state) {
  lk::LockGeometry g;
  g.theta0 = 0.3;
  g.theta1 = 0.2;
  for (auto _ : state) benchmark::DoNotOptimize(lk::spring_gradient(g));
}
BENCHMARK(BM_SpringGradient);

static void BM_FullAdderTruthTable(benchmark::State& state) {
  const auto net = lg::build_gate(lg::GateKind::kFullAdder);
  for (auto _ : state) benchmark::DoNotOptimize(lg::truth_table(net));
}
BENCHMARK(BM_FullAdderTruthTable);

static void BM_ShiftChainCycle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<lg::DualRailValue> stream(1024, lg::DualRailValue::one());
  ls::ShiftChain ch(n, {}, stream);
  for (auto _ : state) ch.forward(ls::kEventsPerCycle);
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ShiftChainCycle)->Arg(4)->Arg(64);

static void BM_AdderThroughput(benchmark::State& state) {
  for (auto _ : state) {
    ls::AdderPipeline p(8);
    for (std::uint32_t i = 0; i < 256; ++i) p.push(i, 255 - i, i & 1);
    benchmark::DoNotOptimize(p.drain());
  }
  state.SetItemsProcessed(state.iterations() * 256);
}
BENCHMARK(BM_AdderThroughput);
BENCHMARK_MAIN();
