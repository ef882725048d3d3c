#include "linklogic/sequential/adder.hpp"

#include <fmt/format.h>

#include <optional>
#include <stdexcept>

#include "linklogic/gates/library.hpp"
#include "linklogic/sequential/shift_cell.hpp"

namespace linklogic::sequential {

using gates::DualRailValue;

gates::Netlist build_ripple_adder(int bits) {
  if (bits < 1 || bits > 16) throw std::invalid_argument("build_ripple_adder: bits must be in 1..16");
  gates::Netlist net;
  const auto fa = gates::build_gate(gates::GateKind::kFullAdder);
  int cell = 0;

  std::vector<gates::DualRailPort> a(bits), b(bits), s(bits);
  for (int i = 0; i < bits; ++i) {
    a[i] = net.add_dualrail(fmt::format("a{}", i));
    net.add_input(fmt::format("a{}", i), a[i]);
  }
  for (int i = 0; i < bits; ++i) {
    b[i] = net.add_dualrail(fmt::format("b{}", i));
    net.add_input(fmt::format("b{}", i), b[i]);
  }
  const auto cin = net.add_dualrail("cin");
  net.add_input("cin", cin);
  for (int i = 0; i < bits; ++i) s[i] = net.add_dualrail(fmt::format("s{}", i));
  const auto cout = net.add_dualrail("cout");

  // Delay line of `len` cells on phases first, first+1, ...; returns its end.
  auto delay = [&](const std::string& tag, gates::DualRailPort from, int first, int len,
                   std::optional<gates::DualRailPort> to) {
    for (int k = 0; k < len; ++k) {
      const bool last = k + 1 == len;
      const auto out = last && to ? *to : net.add_dualrail(fmt::format("{}.d{}", tag, k));
      add_shift_cell(net, fmt::format("{}.d{}", tag, k), from, out, (first + k) % 4, cell++);
      from = out;
    }
    return from;
  };

  gates::DualRailPort carry = cin;
  for (int i = 0; i < bits; ++i) {
    const auto ai = delay(fmt::format("a{}", i), a[i], 0, i, std::nullopt);
    const auto bi = delay(fmt::format("b{}", i), b[i], 0, i, std::nullopt);
    const bool last = i + 1 == bits;
    const auto sum = last ? s[i] : net.add_dualrail(fmt::format("fa{}.sum", i));
    const auto co = last ? cout : net.add_dualrail(fmt::format("fa{}.cout", i));
    net.instantiate(fa, fmt::format("fa{}/", i),
                    {{"a", ai}, {"b", bi}, {"cin", carry}, {"sum", sum}, {"cout", co}}, i % 4,
                    cell++);
    if (!last) delay(fmt::format("s{}", i), sum, i + 1, bits - 1 - i, s[i]);
    carry = co;
  }
  for (int i = 0; i < bits; ++i) net.add_output(fmt::format("s{}", i), s[i]);
  net.add_output("cout", cout);
  return net;
}

AdderPipeline::AdderPipeline(int bits)
    : bits_(bits), pipeline_(build_ripple_adder(bits), gates::BlankPolicy::kBubble) {}

int AdderPipeline::latency_cycles() const { return (bits_ - 1) / 4 + 1; }

void AdderPipeline::push(std::uint32_t a, std::uint32_t b, bool cin) {
  gates::PortValues v;
  for (int i = 0; i < bits_; ++i) {
    v[fmt::format("a{}", i)] = DualRailValue::from_bit((a >> i) & 1U);
    v[fmt::format("b{}", i)] = DualRailValue::from_bit((b >> i) & 1U);
  }
  v["cin"] = DualRailValue::from_bit(cin);
  pipeline_.push_inputs(v);
  ++pushed_;
}

std::vector<AdderResult> AdderPipeline::drain() {
  // Operation k is applied at cycle k and read at the rise of the last
  // stage's phase, (bits-1)/4 cycles later.
  const std::size_t lag = static_cast<std::size_t>((bits_ - 1) / 4);
  const std::size_t need_cycles = pushed_ + lag;
  const std::size_t have = pipeline_.events() / kEventsPerCycle;
  if (need_cycles > have) pipeline_.run_cycles(need_cycles - have);

  std::vector<AdderResult> out;
  const auto n = static_cast<std::size_t>(bits_) + 1;
  for (; collected_ < pushed_; ++collected_) {
    AdderResult r;
    const std::size_t idx = collected_ + lag;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& smp = pipeline_.samples(j).at(idx);
      if (smp.value.is_blank())
        throw std::logic_error(fmt::format("adder output {} is Blank at t={}", j, smp.t));
      if (j + 1 == n)
        r.carry = smp.value.bit();
      else if (smp.value.bit())
        r.sum |= 1U << j;
      r.completed = smp.t + 0.25;
    }
    r.issued = static_cast<double>(collected_);
    out.push_back(r);
  }
  return out;
}

}  // namespace linklogic::sequential
