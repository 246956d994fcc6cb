#include "kolmo/minmax.hpp"

#include "kolmo/programs.hpp"

namespace kolmo {

namespace {

StagedFnValue eval(MachineIndex i, Nat x, Nat t, bool max_mode, const OracleView* oracle) {
  StagedFnValue out;
  out.stage = t;
  Program p = program_of(i);
  RunOptions opt;
  opt.oracle = oracle;
  opt.detect_stationary = true;
  for (Nat u = 0; u <= t; ++u) {
    RunOutcome r = run(p, encode(pair(x, u)), t, opt);
    if (!r.halted) continue;
    if (!out.defined) {
      out.defined = true;
      out.value = r.value;
    } else {
      out.value = max_mode ? std::max(out.value, r.value) : std::min(out.value, r.value);
    }
    if (!max_mode && out.value == 0) break;
  }
  out.provisional = max_mode && out.defined;
  return out;
}

}  // namespace

StagedFnValue min_eval(MachineIndex i, Nat x, Nat t, const OracleView* oracle) {
  return eval(i, x, t, false, oracle);
}

StagedFnValue max_eval(MachineIndex i, Nat x, Nat t, const OracleView* oracle) {
  return eval(i, x, t, true, oracle);
}

MachineIndex approx_from_above(MachineIndex i) {
  return programs::index_of(programs::approx_from_above_program(i));
}

MachineIndex compose_min(MachineIndex theta_idx, MachineIndex phi_idx) {
  return programs::index_of(programs::compose_min_program(theta_idx, phi_idx));
}

SetClassCode graph_code(MachineIndex i, MinMaxMode mode) {
  MachineIndex witness = programs::index_of(programs::graph_witness_program(i));
  MachineIndex refuter =
      programs::index_of(programs::graph_refuter_program(i, mode == MinMaxMode::Max));
  return SetClassCode::conj(witness, refuter);
}

}  // namespace kolmo
