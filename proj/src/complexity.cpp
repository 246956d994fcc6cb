#include "kolmo/complexity.hpp"

#include <stdexcept>

namespace kolmo {

namespace {

Nat monus(Nat a, Nat b) { return a >= b ? a - b : 0; }

// Ranks of all words of exactly length len: [2^len - 1, 2^(len+1) - 1).
std::pair<Nat, Nat> rank_span(unsigned len) {
  return {(Nat(1) << len) - 1, (Nat(1) << (len + 1)) - 1};
}

}  // namespace

ComplexityEstimate k_t_est(Lab& lab, Nat x, Nat t) {
  ComplexityEstimate e;
  e.stage = t;
  e.monotone_from_above = true;
  RunOptions opt;
  opt.oracle = lab.oracle();
  opt.detect_stationary = true;
  const Nat len_cap = std::min<Nat>(t, lab.params().lmax);
  const Nat stage_cap = std::min<Nat>(t, lab.params().tmax);
  for (unsigned len = 0; len <= len_cap; ++len) {
    auto [lo, hi] = rank_span(len);
    for (Nat rank = lo; rank < hi; ++rank) {
      Word q = nat_to_word(rank);
      WrapperWord w = wrapper_decode(q);
      Nat value;
      if (w.zeros) {
        if (q.size() + 1 > stage_cap) continue;
        value = 0;
      } else {
        if (w.slot != 0) continue;
        Nat inner = monus(stage_cap, 1);
        if (inner == 0) continue;
        RunOutcome r = run(w.payload, Word{}, inner, opt);
        if (!r.halted) continue;
        value = r.value;
      }
      if (value == x) {
        e.found = true;
        e.value = len;
        return e;
      }
    }
  }
  return e;
}

namespace {

ComplexityEstimate minmax_est(Lab& lab, Nat x, Nat t, WrapKind kind) {
  ComplexityEstimate e;
  e.stage = t;
  e.provisional = true;
  const Nat len_cap = std::min<Nat>(t, lab.params().lmax);
  const Nat stage_cap = std::min<Nat>(t, lab.params().tmax);
  for (unsigned len = 0; len <= len_cap; ++len) {
    auto [lo, hi] = rank_span(len);
    for (Nat rank = lo; rank < hi; ++rank) {
      auto v = lab.wrapper_value(kind, nat_to_word(rank), stage_cap);
      if (v && *v == x) {
        e.found = true;
        e.value = len;
        return e;
      }
    }
  }
  return e;
}

}  // namespace

ComplexityEstimate kmin_est(Lab& lab, Nat x, Nat t) { return minmax_est(lab, x, t, WrapKind::Min); }
ComplexityEstimate kmax_est(Lab& lab, Nat x, Nat t) { return minmax_est(lab, x, t, WrapKind::Max); }

ComplexityEstimate functional_k(Lab& lab, Nat x, Nat t) { return k_t_est(lab, x, t); }

WorldTables closed_world_oracle(const WorldParams& params, Nat range,
                                const OracleSpec& oracle) {
  if (params.lmax > 20 || range > (Nat(1) << 16))
    throw std::runtime_error("resource limit: closed world too large");
  WorldTables out;
  out.params = params;
  out.oracle = oracle;
  out.range = range;
  out.jump_s = params.tmax;

  Lab lab(params, oracle);
  out.hash = lab.world_hash();
  out.k = lab.k_table(range, params.tmax);
  out.kmin = lab.kmin_table(range, params.tmax);
  out.kmax = lab.kmax_table(range, params.tmax);

  Lab jump_lab(params, OracleSpec::jump(1, params.tmax));
  out.k_jump1 = jump_lab.k_table(range, params.tmax);

  long long c = -1;
  for (Nat x = 0; x < range; ++x) {
    if (out.k[x] < 0 || out.kmin[x] < 0 || out.kmax[x] < 0) continue;
    long long d = out.k[x] - 2ll * out.kmin[x] - out.kmax[x];
    if (d > c) c = d;
  }
  out.c_prop85 = c < 0 ? 0 : c;
  return out;
}

std::vector<std::pair<unsigned, Nat>> incompressible_set(Lab& lab, unsigned n_max) {
  Nat range = Nat(1) << (n_max + 1);
  auto kmin = lab.kmin_table(range, lab.params().tmax);
  auto kmax = lab.kmax_table(range, lab.params().tmax);
  std::vector<std::pair<unsigned, Nat>> out;
  for (unsigned n = 0; n <= n_max; ++n) {
    Nat bound = (Nat(1) << (n + 1)) - 1;
    for (Nat x = 0; x <= bound; ++x) {
      bool kmax_ok = kmax[x] < 0 || kmax[x] >= static_cast<int>(n);
      bool kmin_ok = kmin[x] < 0 || kmin[x] >= static_cast<int>(n);
      if (kmax_ok && kmin_ok) {
        out.push_back({n, x});
        break;
      }
    }
  }
  return out;
}

std::vector<int> variant_k_table(bool swapped, const WorldParams& params, Nat range) {
  std::vector<int> table(range, -1);
  const Nat n = (Nat(1) << (params.lmax + 1)) - 1;
  RunOptions std_opt, perm_opt;
  std_opt.detect_stationary = true;
  perm_opt.detect_stationary = true;
  perm_opt.opcode_permutation = &reversed_permutation();
  for (Nat rank = 0; rank < n; ++rank) {
    Word q = nat_to_word(rank);
    WrapperWord w = wrapper_decode(q);
    Nat value;
    if (w.zeros) {
      if (q.size() + 1 > params.tmax) continue;
      value = 0;
    } else if (w.slot <= 1) {
      bool use_perm = (w.slot == 1) != swapped;
      Nat inner = monus(params.tmax, w.slot + 1);
      if (inner == 0) continue;
      RunOutcome r = run(w.payload, Word{}, inner, use_perm ? perm_opt : std_opt);
      if (!r.halted) continue;
      value = r.value;
    } else {
      continue;
    }
    if (value >= range) continue;
    int len = static_cast<int>(q.size());
    int& cell = table[value];
    if (cell < 0 || len < cell) cell = len;
  }
  return table;
}

}  // namespace kolmo
