#pragma once

#include "kolmo/enumeration.hpp"

namespace kolmo {

struct StagedFnValue {
  bool defined = false;
  Nat value = 0;
  Nat stage = 0;
  bool provisional = false;  // max: "defined so far"; final undefinedness is
                             // only refutable at a finite stage
};

// min/max over u <= t of phi_i(pair(x,u)), each branch run with budget t.
StagedFnValue min_eval(MachineIndex i, Nat x, Nat t, const OracleView* oracle = nullptr);
StagedFnValue max_eval(MachineIndex i, Nat x, Nat t, const OracleView* oracle = nullptr);

// xi(i): two-argument index approximating the staged minimum of phi_i from
// above (program transformation; total in i).
MachineIndex approx_from_above(MachineIndex i);

// Index computing min over v of theta(phi(x, pi1 v), pi2 v); equals
// (min theta) o (min phi) pointwise when min theta is monotone increasing
// (unchecked semantic precondition).
MachineIndex compose_min(MachineIndex theta_idx, MachineIndex phi_idx);

enum class MinMaxMode { Min, Max };

// And-code over coded pairs pair(x, y) denoting the graph of min/max phi_i.
SetClassCode graph_code(MachineIndex i, MinMaxMode mode);

}  // namespace kolmo
