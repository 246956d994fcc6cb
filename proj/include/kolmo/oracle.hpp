#pragma once

#include <memory>
#include <set>
#include <vector>

#include "kolmo/enumeration.hpp"

namespace kolmo {

struct OracleSpec {
  enum class Kind { Empty, FiniteSet, Decider, JumpStage };
  Kind kind = Kind::Empty;
  std::vector<Nat> elements;       // FiniteSet
  MachineIndex index = 0;          // Decider
  Nat budget_per_query = 0;        // Decider
  int level = 1;                   // JumpStage: 1 or 2
  Nat s = 0;                       // JumpStage

  static OracleSpec empty() { return {}; }
  static OracleSpec finite(std::vector<Nat> xs);
  static OracleSpec decider(MachineIndex i, Nat budget);
  static OracleSpec jump(int level, Nat s);

  std::string canonical() const;   // stable serialization for hashing
  bool operator==(const OracleSpec&) const = default;
};

// Materialized oracle with memoized membership and audit flags.
class Oracle {
 public:
  explicit Oracle(OracleSpec spec);
  const OracleSpec& spec() const { return spec_; }
  const OracleView& view() const { return view_; }
  bool budget_breached() const { return *breach_; }

 private:
  OracleSpec spec_;
  OracleView view_;
  std::shared_ptr<bool> breach_;
  std::shared_ptr<std::vector<int>> memo_;  // -1 unknown, 0/1 decided
};

// Stage-s approximation of the jump: e in iff phi(e, e, s) halts; level 2
// runs level-1-equipped machines with the same stage.
OracleView jump_stage(int level, Nat s);

// phi with the second-order argument fixed; same index space as phi.
RunOutcome uniform_phi(MachineIndex i, Nat x, const OracleView& a, Nat t);

// class_member with all inner runs oracle-equipped.
ClassVerdict relativize_class(const SetClassCode& c, Nat x, Nat t, const OracleView& a);

}  // namespace kolmo
