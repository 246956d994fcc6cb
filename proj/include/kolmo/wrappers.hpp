#pragma once

#include <optional>

#include "kolmo/enumeration.hpp"

namespace kolmo {

// The complexity machines share one prefix decode: q = 0^k 1 p selects slot k
// with payload p; q = 0^k (including the empty word) has value 0. Slot tables
// are fixed per machine (docs/isa.md). Slot 0 is the shared plain branch
// run(p, eps), which makes Kmin <= K and Kmax <= K pointwise.
enum class WrapKind { K, Barz, Min, Max };

enum class Side { Sigma, Pi };

struct WrapperWord {
  bool zeros = false;   // q = 0^k: value 0
  Nat slot = 0;
  Word payload;
};

WrapperWord wrapper_decode(const Word& q);
Word wrapper_encode(Nat slot, const Word& payload);

// Slot semantics descriptors for the non-plain slots.
struct SlotSpec {
  enum class Kind {
    Divergent,
    Plain,        // run(p, eps), constant-in-stage family
    StagedUniv,   // family u -> run(p, word(u)); min or max per machine
    Staged2Arg,   // family u -> run(base, pair(word_to_nat(p), u))
    BarzAlpha,    // first x in W_set with phi(x) > 2|p|
    Marker,       // kmax/kmin movable marker
    BaseWordFn,   // run(base, p) as a word function (Barz fallback)
  };
  Kind kind = Kind::Divergent;
  Nat phi = 0;            // minfn index
  Nat set = 0;            // setfam index
  MachineIndex base = 0;  // Staged2Arg / BaseWordFn
  MachineIndex growth = 0;  // kmin Pi growth majorant (base index)
  Side side = Side::Sigma;
};

SlotSpec slot_spec(WrapKind kind, Nat slot);

// Transfer indices. Corpus pairs map to the low slots; everything else gets
// the structured fallback. Total, injective on the fallback range, and
// oracle-independent by construction.
Nat eta_barzdins(Nat phi_idx, Nat set_idx);
Nat eta_kmax(Side side, Nat phi_idx, Nat set_idx);
Nat eta_kmin(Side side, Nat phi_idx, Nat set_idx, MachineIndex growth);

// Default growth majorant used by the kmin Pi corpus slot: 2n+2.
MachineIndex default_growth_index();

}  // namespace kolmo
