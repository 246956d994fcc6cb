#pragma once

#include "kolmo/world.hpp"

namespace kolmo {

struct ComplexityEstimate {
  bool found = false;        // NotFound reads as +infinity
  Nat value = 0;             // bits
  Nat stage = 0;
  bool monotone_from_above = false;  // K^t only
  bool provisional = false;          // kmin/kmax at finite stage

  bool at_most(Nat bound) const { return found && value <= bound; }
};

// K^t(x) through the estimator path: ascending-length search over wrapper
// words, independent of the Lab's event tables (which serve as the
// brute-force oracle in tests).
ComplexityEstimate k_t_est(Lab& lab, Nat x, Nat t);

// Stage-t estimates of Kmin/Kmax: min |q| whose stage-t value equals x.
// Non-monotone in t; provisional until the closed-world stage.
ComplexityEstimate kmin_est(Lab& lab, Nat x, Nat t);
ComplexityEstimate kmax_est(Lab& lab, Nat x, Nat t);

// Second-order complexity through the single fixed functional: K^t under the
// lab's oracle. Identical index arithmetic for every oracle.
ComplexityEstimate functional_k(Lab& lab, Nat x, Nat t);

struct WorldTables {
  WorldParams params;
  OracleSpec oracle;
  std::uint64_t hash = 0;
  Nat range = 0;
  Nat jump_s = 0;
  std::vector<int> k, kmin, kmax, k_jump1;  // -1 = NotFound
  long long c_prop85 = -1;  // measured max(K - 2Kmin - Kmax) over defined cells
};

// Exhaustive ground truth for one world: every wrapper word run to tmax.
// Throws on infeasible requests (resource-limit contract).
WorldTables closed_world_oracle(const WorldParams& params, Nat range,
                                const OracleSpec& oracle = OracleSpec::empty());

// For each n <= n_max, a witness x <= 2^(n+1)-1 with Kmax >= n and Kmin >= n
// in the given world (pigeonhole guarantees existence).
std::vector<std::pair<unsigned, Nat>> incompressible_set(Lab& lab, unsigned n_max);

// Invariance-test pair: two-slot wrapper machines over the standard and the
// opcode-permuted interpreter, in both orders. Cross-embedding index 1.
std::vector<int> variant_k_table(bool swapped, const WorldParams& params, Nat range);
inline constexpr unsigned variant_cross_index = 1;

}  // namespace kolmo
