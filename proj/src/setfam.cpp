#include "kolmo/setfam.hpp"

#include <algorithm>

#include "kolmo/programs.hpp"

namespace kolmo {

namespace setfam {

Nat of_base(MachineIndex i) { return 8 + i; }

MachineIndex membership_index(Nat j) {
  switch (j) {
    case naturals: return programs::index_of(programs::identity());
    case evens: return programs::index_of(programs::evens());
    case odds: return programs::index_of(programs::odds());
    case squares: return programs::index_of(programs::squares());
    default:
      if (j < 8) return programs::index_of(programs::diverger());
      return j - 8;
  }
}

}  // namespace setfam

StagedEnum::StagedEnum(Nat set_index, const OracleView* oracle)
    : prog_(setfam::membership_index(set_index)), oracle_(oracle) {}

const std::vector<std::pair<Nat, Nat>>& StagedEnum::ensure(Nat stage) {
  if (stage <= covered_ && scanned_ > 0) return seq_;
  Program p = program_of(prog_);
  RunOptions opt;
  opt.oracle = oracle_;
  opt.detect_stationary = true;
  // Probing with a larger budget than the stage is sound: halting steps are
  // budget-independent and appearance stages derive from exact step counts.
  Nat budget = std::max<Nat>(stage, 1 << 12);

  auto admit = [&](Nat x, const RunOutcome& r) {
    if (r.halted) {
      Nat appears = std::max(x, r.steps);
      seq_.insert(std::lower_bound(seq_.begin(), seq_.end(), std::make_pair(appears, x)),
                  {appears, x});
    } else {
      pending_.push_back({x, budget});
    }
  };

  // Retry previous non-halters whose tried budget is now exceeded.
  std::vector<std::pair<Nat, Nat>> still;
  still.reserve(pending_.size());
  for (auto [x, tried] : pending_) {
    if (tried >= budget) { still.push_back({x, tried}); continue; }
    RunOutcome r = run(p, encode(x), budget, opt);
    if (r.halted) {
      Nat appears = std::max(x, r.steps);
      seq_.insert(std::lower_bound(seq_.begin(), seq_.end(), std::make_pair(appears, x)),
                  {appears, x});
    } else {
      still.push_back({x, budget});
    }
  }
  pending_ = std::move(still);

  for (Nat x = scanned_; x <= stage; ++x) admit(x, run(p, encode(x), budget, opt));
  scanned_ = std::max(scanned_, stage + 1);
  covered_ = std::max(covered_, stage);
  return seq_;
}

std::vector<Nat> StagedEnum::upto(Nat stage) {
  const auto& s = ensure(stage);
  std::vector<Nat> out;
  for (const auto& [appears, x] : s) {
    if (appears > stage) break;
    out.push_back(x);
  }
  return out;
}

std::optional<Nat> StagedEnum::appears_at(Nat x, Nat cap) {
  const auto& s = ensure(cap);
  for (const auto& [appears, xx] : s)
    if (xx == x) return appears;
  return std::nullopt;
}

}  // namespace kolmo
