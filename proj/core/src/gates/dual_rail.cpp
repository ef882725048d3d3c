#include "linklogic/gates/dual_rail.hpp"

#include <fmt/format.h>

#include <stdexcept>

#include "linklogic/error.hpp"

namespace linklogic::gates {

DualRailValue DualRailValue::from_rails(int rail0, int rail1) {
  if ((rail0 != 0 && rail0 != 1) || (rail1 != 0 && rail1 != 1))
    throw std::invalid_argument(fmt::format("rails must be binary, got ({},{})", rail0, rail1));
  if (rail0 && rail1) throw ForbiddenState("rail pair (1,1) is forbidden");
  if (rail0) return zero();
  if (rail1) return one();
  return blank();
}

DualRailValue DualRailValue::parse(std::string_view text) {
  if (text == "0") return zero();
  if (text == "1") return one();
  if (text == "b") return blank();
  throw std::invalid_argument(fmt::format("'{}' is not a dual-rail value (0, 1 or b)", text));
}

bool DualRailValue::bit() const {
  if (kind_ == Kind::kBlank) throw std::logic_error("blank dual-rail value has no bit");
  return kind_ == Kind::kOne;
}

std::string_view DualRailValue::symbol() const {
  switch (kind_) {
    case Kind::kBlank: return "b";
    case Kind::kZero: return "0";
    case Kind::kOne: return "1";
  }
  return "?";
}

}  // namespace linklogic::gates
