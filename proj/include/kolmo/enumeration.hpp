#pragma once

#include <optional>
#include <vector>

#include "kolmo/machine.hpp"

namespace kolmo {

using MachineIndex = Nat;

// program(i) = nat_to_word(i): indices are program texts.
Program program_of(MachineIndex i);
Word encode(Nat x);   // nat_to_word

// phi_i(x) at budget t, optionally oracle-equipped.
RunOutcome phi(MachineIndex i, Nat x, Nat t, const OracleView* oracle = nullptr);

// Index u with phi_u(pair(i,x)) ~ phi_i(x) (geometric dovetail, exposed).
MachineIndex universal_index();

// s-m-n: phi_{smn(i,z)}(x) ~ phi_i(pair(z,x)), total and injective in (i,z).
MachineIndex smn(MachineIndex i, Nat z);

struct StagedSet {
  MachineIndex index;
  Nat stage;
  std::vector<Nat> elements;  // sorted
};

// {x <= bound : phi_i(x) halts within t}, sorted.
StagedSet w_members(MachineIndex i, Nat t, Nat bound, const OracleView* oracle = nullptr);

// Increasing-subsequence extraction: returns (j, j') with W_j the strictly
// increasing subsequence of W_i's replay enumeration and W_j' its complement
// (complete when W_i is infinite).
std::pair<MachineIndex, MachineIndex> thin_to_decidable(MachineIndex i);

enum class TriState { In, Out, Unknown };

struct SetClassCode {
  enum class Kind { Sigma1, Pi1, And, Or, BoundedExists };
  Kind kind = Kind::Sigma1;
  MachineIndex i = 0;                  // Sigma1/Pi1/And/Or first index
  MachineIndex k = 0;                  // And/Or second index
  std::vector<SetClassCode> inner;     // BoundedExists: exactly one And code
  MachineIndex mu = 0;                 // BoundedExists bound program
  unsigned arity = 0;                  // BoundedExists tuple width

  static SetClassCode sigma1(MachineIndex i);
  static SetClassCode pi1(MachineIndex i);
  static SetClassCode conj(MachineIndex i, MachineIndex k);
  static SetClassCode disj(MachineIndex i, MachineIndex k);
  static SetClassCode bounded_exists(SetClassCode and_code, MachineIndex mu, unsigned arity);
};

struct ClassVerdict {
  TriState state = TriState::Unknown;
  bool not_yet_refuted = false;  // meaningful for Pi-flavoured codes
};

// Strict budgeted membership: In/Out are final as t grows; Pi parts report
// Unknown with the not_yet_refuted flag until refuted.
ClassVerdict class_member_eval(const SetClassCode& c, Nat x, Nat t,
                               const OracleView* oracle = nullptr);
TriState class_member(const SetClassCode& c, Nat x, Nat t,
                      const OracleView* oracle = nullptr);

// Closed-world reading: unresolved Pi parts count as members at stage t
// (the truncated universe decides them). Used by closed-world rechecks.
TriState class_member_closed(const SetClassCode& c, Nat x, Nat t,
                             const OracleView* oracle = nullptr);

}  // namespace kolmo
