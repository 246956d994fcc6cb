#pragma once

#include <map>
#include <optional>
#include <vector>

#include "kolmo/enumeration.hpp"

namespace kolmo {

// Named r.e.-set family for the witness constructions. Low indices are the
// corpus sets; j >= 8 denotes the domain of the base program nat_to_word(j-8).
//
//   0 naturals   1 evens   2 odds   3 squares   4 empty   5..7 empty
namespace setfam {

inline constexpr Nat naturals = 0;
inline constexpr Nat evens = 1;
inline constexpr Nat odds = 2;
inline constexpr Nat squares = 3;
inline constexpr Nat empty_set = 4;

Nat of_base(MachineIndex i);          // j for the domain of phi_i
MachineIndex membership_index(Nat j); // base program halting exactly on W_j

}  // namespace setfam

// Incremental replay of a set's standard enumeration. Element x appears at
// stage max(x, steps(x)); the enumeration order is (appearance stage, x).
class StagedEnum {
 public:
  explicit StagedEnum(Nat set_index, const OracleView* oracle = nullptr);

  // Sorted (appearance stage, x) pairs, complete for stages <= `stage`.
  const std::vector<std::pair<Nat, Nat>>& ensure(Nat stage);
  // Elements in enumeration order with appearance stage <= `stage`.
  std::vector<Nat> upto(Nat stage);
  std::optional<Nat> appears_at(Nat x, Nat cap);

 private:
  MachineIndex prog_;
  const OracleView* oracle_;
  Nat scanned_ = 0;                       // values [0, scanned_) probed
  Nat covered_ = 0;                       // sequence complete through this stage
  std::vector<std::pair<Nat, Nat>> seq_;
  std::vector<std::pair<Nat, Nat>> pending_;  // (x, budget tried), not halted yet
};

}  // namespace kolmo
