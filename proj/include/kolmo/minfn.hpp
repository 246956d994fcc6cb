#pragma once

#include <optional>

#include "kolmo/enumeration.hpp"

namespace kolmo {

// Index space for the staged-minimum function family N -> N used by the
// witness constructions and the orderings. Low indices are the fixed corpus;
// the structured fallback keeps the family an acceptable enumeration.
//
//   0 id   1 floor(log2(x+2))   2 floor(x/2)   3 floor(x/4)   4 monus(x,1)
//   5..7 divergent (reserved)
//   i >= 8 with m = i-8, tag = m & 7, payload = m >> 3:
//     0 Base2Arg{payload}: min over t of phi_payload(pair(x,t))
//     1 Hat{j,c}:   max(0, f_j(z) - c)
//     2 Tilde{j,c}: max(0, f_j(max(0,z-c)) - c)
//     3 Theta{j,c}: min(z/4, f_j(max(0, floor((z-c)/2))))
//     4 GrowthMinorant{j,xi}: g(0)=f_j(0), g(N+1)=f_j(xi(1+g(N))), xi a base index
//     5 LcPsiPrime{psi}: max(z, max{psi(u): u<=z}), psi a base index
//     6 LcAlpha{psi,j}:  largest u with psiPrime(u) <= f_j(z)
//     7 LcZeta{psi,j}:   smallest s with psiPrime constant on [s, alpha(z)]
//   two-field payloads are Cantor pairs.
namespace minfn {

inline constexpr Nat id = 0;
inline constexpr Nat log2p2 = 1;
inline constexpr Nat half = 2;
inline constexpr Nat quarter = 3;
inline constexpr Nat dec1 = 4;

Nat base2arg_index(MachineIndex base);
Nat hat_index(Nat j, Nat c);
Nat tilde_index(Nat j, Nat c);
Nat theta_index(Nat j, Nat c);
Nat growth_minorant_index(Nat j, MachineIndex xi);
Nat lc_psi_prime_index(MachineIndex psi);
Nat lc_alpha_index(MachineIndex psi, Nat j);
Nat lc_zeta_index(MachineIndex psi, Nat j);

// Limit value within a work budget; nullopt when unresolved.
std::optional<Nat> eval(Nat idx, Nat z, Nat budget, const OracleView* oracle = nullptr);

// Stage-t approximation from above (nonincreasing in t, exact for total
// corpus entries). nullopt when no stage value exists yet.
std::optional<Nat> approx(Nat idx, Nat z, Nat t, Nat budget, const OracleView* oracle = nullptr);

// Base-machine program computing the same function, when one exists
// (corpus entries; used as mu indices in emitted set codes).
std::optional<MachineIndex> base_twin(Nat idx);

}  // namespace minfn
}  // namespace kolmo
