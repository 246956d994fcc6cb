#include "kolmo/minfn.hpp"

#include "kolmo/programs.hpp"

namespace kolmo::minfn {

namespace {

constexpr Nat kBase = 8;

Nat tagged(Nat tag, Nat payload) { return kBase + payload * 8 + tag; }

std::optional<Nat> run_total(MachineIndex i, Nat x, Nat budget, const OracleView* oracle) {
  RunOptions opt;
  opt.oracle = oracle;
  opt.detect_stationary = true;
  RunOutcome r = run(program_of(i), encode(x), budget, opt);
  if (!r.halted) return std::nullopt;
  return r.value;
}

std::optional<Nat> psi_prime(MachineIndex psi, Nat z, Nat budget, const OracleView* oracle) {
  Nat best = z;
  for (Nat u = 0; u <= z; ++u) {
    auto v = run_total(psi, u, budget, oracle);
    if (!v) return std::nullopt;
    if (*v > best) best = *v;
  }
  return best;
}

}  // namespace

Nat base2arg_index(MachineIndex base) { return tagged(0, base); }
Nat hat_index(Nat j, Nat c) { return tagged(1, pair(j, c)); }
Nat tilde_index(Nat j, Nat c) { return tagged(2, pair(j, c)); }
Nat theta_index(Nat j, Nat c) { return tagged(3, pair(j, c)); }
Nat growth_minorant_index(Nat j, MachineIndex xi) { return tagged(4, pair(j, xi)); }
Nat lc_psi_prime_index(MachineIndex psi) { return tagged(5, psi); }
Nat lc_alpha_index(MachineIndex psi, Nat j) { return tagged(6, pair(psi, j)); }
Nat lc_zeta_index(MachineIndex psi, Nat j) { return tagged(7, pair(psi, j)); }

namespace {

std::optional<Nat> eval_at(Nat idx, Nat z, Nat t, Nat budget, bool staged,
                           const OracleView* oracle) {
  auto rec = [&](Nat j, Nat zz) { return eval_at(j, zz, t, budget, staged, oracle); };
  switch (idx) {
    case id: return z;
    case log2p2: {
      Nat v = z + 2, c = 0;
      while (v >= 2) { v >>= 1; ++c; }
      return c;
    }
    case half: return z / 2;
    case quarter: return z / 4;
    case dec1: return z == 0 ? 0 : z - 1;
    case 5: case 6: case 7: return std::nullopt;
    default: break;
  }
  Nat m = idx - kBase;
  Nat tag = m & 7, payload = m >> 3;
  switch (tag) {
    case 0: {
      // staged minimum of the base two-argument function
      MachineIndex base = payload;
      std::optional<Nat> best;
      Nat lim = staged ? t : budget;
      for (Nat u = 0; u <= lim; ++u) {
        auto v = run_total(base, pair(z, u), staged ? t : budget, oracle);
        if (v && (!best || *v < *best)) best = *v;
        if (best && *best == 0) break;
      }
      return best;
    }
    case 1: {
      auto [j, c] = unpair(payload);
      auto v = rec(j, z);
      if (!v) return std::nullopt;
      return *v >= c ? *v - c : 0;
    }
    case 2: {
      auto [j, c] = unpair(payload);
      auto v = rec(j, z >= c ? z - c : 0);
      if (!v) return std::nullopt;
      return *v >= c ? *v - c : 0;
    }
    case 3: {
      auto [j, c] = unpair(payload);
      Nat arg = (z >= c ? z - c : 0) / 2;
      auto v = rec(j, arg);
      if (!v) return std::nullopt;
      return std::min(z / 4, *v);
    }
    case 4: {
      auto [j, xi] = unpair(payload);
      // g(0) = f_j(0); g(N+1) = f_j(xi(1 + g(N)))
      auto g = rec(j, 0);
      if (!g) return std::nullopt;
      for (Nat n = 0; n < z; ++n) {
        auto xv = run_total(xi, 1 + *g, budget, oracle);
        if (!xv) return std::nullopt;
        g = rec(j, *xv);
        if (!g) return std::nullopt;
      }
      return g;
    }
    case 5:
      return psi_prime(payload, z, budget, oracle);
    case 6: {
      auto [psi, j] = unpair(payload);
      auto fz = rec(j, z);
      if (!fz) return std::nullopt;
      auto p0 = psi_prime(psi, 0, budget, oracle);
      if (!p0) return std::nullopt;
      if (*p0 > *fz) return 0;  // vacuous at small z; totalized at 0
      Nat u = 0;
      while (u <= *fz) {  // psiPrime >= Id bounds the search
        auto pv = psi_prime(psi, u + 1, budget, oracle);
        if (!pv) return std::nullopt;
        if (*pv > *fz) break;
        ++u;
      }
      return u;
    }
    case 7: {
      auto [psi, j] = unpair(payload);
      auto alpha = rec(lc_alpha_index(psi, j), z);
      if (!alpha) return std::nullopt;
      auto pa = psi_prime(psi, *alpha, budget, oracle);
      if (!pa) return std::nullopt;
      Nat s = *alpha;
      while (s > 0) {
        auto pv = psi_prime(psi, s - 1, budget, oracle);
        if (!pv) return std::nullopt;
        if (*pv != *pa) break;
        --s;
      }
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Nat> eval(Nat idx, Nat z, Nat budget, const OracleView* oracle) {
  return eval_at(idx, z, budget, budget, false, oracle);
}

std::optional<Nat> approx(Nat idx, Nat z, Nat t, Nat budget, const OracleView* oracle) {
  return eval_at(idx, z, t, budget, true, oracle);
}

std::optional<MachineIndex> base_twin(Nat idx) {
  switch (idx) {
    case id: return programs::index_of(programs::identity());
    case log2p2: return programs::index_of(programs::log2p2());
    case half: return programs::index_of(programs::half());
    case quarter: return programs::index_of(programs::quarter());
    case dec1: return programs::index_of(programs::dec1());
    default: return std::nullopt;
  }
}

}  // namespace kolmo::minfn
