#pragma once

#include <string_view>

namespace linklogic::gates {

// One bit on two rails: Blank (0,0), Zero (1,0), One (0,1).
class DualRailValue {
 public:
  enum class Kind { kBlank, kZero, kOne };

  constexpr DualRailValue() = default;
  constexpr DualRailValue(Kind k) : kind_(k) {}  // NOLINT(google-explicit-constructor)

  static constexpr DualRailValue blank() { return Kind::kBlank; }
  static constexpr DualRailValue zero() { return Kind::kZero; }
  static constexpr DualRailValue one() { return Kind::kOne; }
  static constexpr DualRailValue from_bit(bool b) { return b ? Kind::kOne : Kind::kZero; }

  // Throws ForbiddenState for (1,1) and std::invalid_argument for non-binary rails.
  static DualRailValue from_rails(int rail0, int rail1);
  // Accepts "0", "1", "b".
  static DualRailValue parse(std::string_view text);

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_blank() const { return kind_ == Kind::kBlank; }
  constexpr int rail0() const { return kind_ == Kind::kZero ? 1 : 0; }
  constexpr int rail1() const { return kind_ == Kind::kOne ? 1 : 0; }
  // Throws std::logic_error on Blank.
  bool bit() const;

  std::string_view symbol() const;  // "b", "0", "1"

  friend constexpr bool operator==(DualRailValue, DualRailValue) = default;

 private:
  Kind kind_ = Kind::kBlank;
};

}  // namespace linklogic::gates
