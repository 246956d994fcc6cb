#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "kolmo/oracle.hpp"
#include "kolmo/setfam.hpp"
#include "kolmo/wrappers.hpp"

namespace kolmo {

struct WorldParams {
  unsigned lmax = 14;  // max wrapper word length
  Nat tmax = 256;      // stage cap of the truncated universe
};

struct HaltEvent {
  Nat stage;  // first stage at which the value is visible
  Nat value;
};

// Movable-marker trajectory (Lemma-style a_eps recursions), stage-capped.
struct MarkerRun {
  bool any = false;
  std::vector<std::pair<Nat, Nat>> changes;  // (stage, marker value)
  bool settled = false;
  Nat settle_stage = 0;
  Nat final_value = 0;
  bool pending = false;          // owed a move with no candidate available
  bool guard_undefined = false;
  Nat cap = 0;
};

struct AlphaResult {
  bool found = false;
  Nat witness = 0;
  Nat settle_stage = 0;
  Nat phi_value = 0;
};

// One closed world: all wrapper words of length <= lmax run to stage <= tmax,
// under one fixed oracle. Everything read through a Lab is mutually
// consistent; reports embed world_hash().
class Lab {
 public:
  explicit Lab(WorldParams params, OracleSpec oracle = OracleSpec::empty());

  const WorldParams& params() const { return params_; }
  const OracleSpec& oracle_spec() const { return oracle_.spec(); }
  const OracleView* oracle() const;
  std::uint64_t world_hash() const { return hash_; }
  Nat word_count() const { return (Nat(1) << (params_.lmax + 1)) - 1; }

  // U_K halting events by word rank. OpenMP kernel when no oracle is set;
  // k_events_serial is the independent reference implementation.
  const std::vector<std::optional<HaltEvent>>& k_events();
  std::vector<std::optional<HaltEvent>> k_events_serial();

  // K^t(x) within this world; -1 when no program of fitting length has
  // produced x by stage t.
  int k_t(Nat x, Nat t);
  std::vector<int> k_table(Nat range, Nat t);
  std::vector<int> kmin_table(Nat range, Nat t);
  std::vector<int> kmax_table(Nat range, Nat t);

  // Stage-capped value of one wrapper word under the chosen machine.
  std::optional<Nat> wrapper_value(WrapKind kind, const Word& q, Nat stage);

  StagedEnum& set_enum(Nat j);

  const MarkerRun& marker(bool max_mode, Side side, Nat phi, Nat set,
                          MachineIndex growth, const Word& p, Nat cap);
  const AlphaResult& alpha(Nat phi, Nat set, const Word& p, Nat cap);

 private:
  std::optional<HaltEvent> eval_k_word(Nat rank) const;
  void build_events();
  void index_events();

  WorldParams params_;
  Oracle oracle_;
  std::uint64_t hash_;
  bool events_built_ = false;
  std::vector<std::optional<HaltEvent>> events_;
  bool index_built_ = false;
  std::unordered_map<Nat, std::vector<std::pair<Nat, unsigned>>> by_value_;  // (stage, len)
  std::map<Nat, std::unique_ptr<StagedEnum>> enums_;
  std::map<std::string, MarkerRun> markers_;
  std::map<std::string, AlphaResult> alphas_;
  std::map<std::string, std::vector<int>> table_cache_;
};

std::uint64_t world_hash_of(const WorldParams& params, const OracleSpec& oracle);

}  // namespace kolmo
