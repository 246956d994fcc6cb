#include "kolmo/world.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kolmo/minfn.hpp"

namespace kolmo {

namespace {
constexpr const char* kIsaTag = "kolmo-isa-1/slots-1";

Nat monus(Nat a, Nat b) { return a >= b ? a - b : 0; }
}  // namespace

std::uint64_t world_hash_of(const WorldParams& params, const OracleSpec& oracle) {
  std::ostringstream os;
  os << kIsaTag << '|' << params.lmax << '|' << params.tmax << '|' << oracle.canonical();
  return fnv1a_str(os.str());
}

Lab::Lab(WorldParams params, OracleSpec oracle)
    : params_(params), oracle_(std::move(oracle)), hash_(world_hash_of(params_, oracle_.spec())) {}

const OracleView* Lab::oracle() const {
  return oracle_.spec().kind == OracleSpec::Kind::Empty ? nullptr : &oracle_.view();
}

std::optional<HaltEvent> Lab::eval_k_word(Nat rank) const {
  Word q = nat_to_word(rank);
  WrapperWord w = wrapper_decode(q);
  if (w.zeros) {
    Nat stage = static_cast<Nat>(q.size()) + 1;
    if (stage > params_.tmax) return std::nullopt;
    return HaltEvent{stage, 0};
  }
  if (w.slot != 0) return std::nullopt;  // U_K: only the plain slot
  RunOptions opt;
  opt.oracle = oracle();
  opt.detect_stationary = true;
  RunOutcome r = run(w.payload, Word{}, params_.tmax, opt);
  if (!r.halted) return std::nullopt;
  Nat stage = r.steps + w.slot + 1;
  if (stage > params_.tmax) return std::nullopt;
  return HaltEvent{stage, r.value};
}

void Lab::build_events() {
  if (events_built_) return;
  const Nat n = word_count();
  events_.assign(n, std::nullopt);
  if (oracle() == nullptr) {
#pragma omp parallel for schedule(dynamic, 1024)
    for (long long rank = 0; rank < static_cast<long long>(n); ++rank)
      events_[static_cast<Nat>(rank)] = eval_k_word(static_cast<Nat>(rank));
  } else {
    // oracle memoization is not synchronized; keep the sweep sequential
    for (Nat rank = 0; rank < n; ++rank) events_[rank] = eval_k_word(rank);
  }
  events_built_ = true;
}

const std::vector<std::optional<HaltEvent>>& Lab::k_events() {
  build_events();
  return events_;
}

std::vector<std::optional<HaltEvent>> Lab::k_events_serial() {
  const Nat n = word_count();
  std::vector<std::optional<HaltEvent>> out(n);
  for (Nat rank = 0; rank < n; ++rank) out[rank] = eval_k_word(rank);
  return out;
}

void Lab::index_events() {
  if (index_built_) return;
  build_events();
  for (Nat rank = 0; rank < events_.size(); ++rank) {
    if (!events_[rank]) continue;
    unsigned len = static_cast<unsigned>(nat_to_word(rank).size());
    by_value_[events_[rank]->value].push_back({events_[rank]->stage, len});
  }
  for (auto& [v, lst] : by_value_) std::sort(lst.begin(), lst.end());
  index_built_ = true;
}

int Lab::k_t(Nat x, Nat t) {
  index_events();
  Nat stage_cap = std::min<Nat>(t, params_.tmax);
  Nat len_cap = std::min<Nat>(t, params_.lmax);
  auto it = by_value_.find(x);
  if (it == by_value_.end()) return -1;
  int best = -1;
  for (const auto& [stage, len] : it->second) {
    if (stage > stage_cap) break;
    if (len <= len_cap && (best < 0 || static_cast<int>(len) < best))
      best = static_cast<int>(len);
  }
  return best;
}

std::vector<int> Lab::k_table(Nat range, Nat t) {
  build_events();
  std::vector<int> table(range, -1);
  Nat stage_cap = std::min<Nat>(t, params_.tmax);
  Nat len_cap = std::min<Nat>(t, params_.lmax);
  for (Nat rank = 0; rank < events_.size(); ++rank) {
    const auto& e = events_[rank];
    if (!e || e->stage > stage_cap || e->value >= range) continue;
    unsigned len = static_cast<unsigned>(nat_to_word(rank).size());
    if (len > len_cap) continue;
    int& cell = table[e->value];
    if (cell < 0 || static_cast<int>(len) < cell) cell = static_cast<int>(len);
  }
  return table;
}

std::optional<Nat> Lab::wrapper_value(WrapKind kind, const Word& q, Nat stage) {
  WrapperWord w = wrapper_decode(q);
  if (w.zeros) return (static_cast<Nat>(q.size()) + 1 <= stage) ? std::optional<Nat>(0) : std::nullopt;
  Nat inner = monus(stage, w.slot + 1);
  if (inner == 0) return std::nullopt;
  SlotSpec spec = slot_spec(kind, w.slot);
  RunOptions opt;
  opt.oracle = oracle();
  opt.detect_stationary = true;
  switch (spec.kind) {
    case SlotSpec::Kind::Divergent:
      return std::nullopt;
    case SlotSpec::Kind::Plain: {
      RunOutcome r = run(w.payload, Word{}, inner, opt);
      if (!r.halted) return std::nullopt;
      return r.value;
    }
    case SlotSpec::Kind::StagedUniv: {
      std::optional<Nat> best;
      bool max_mode = kind == WrapKind::Max;
      for (Nat u = 0; u <= inner; ++u) {
        RunOutcome r = run(w.payload, nat_to_word(u), inner, opt);
        if (!r.halted) continue;
        if (!best) best = r.value;
        else best = max_mode ? std::max(*best, r.value) : std::min(*best, r.value);
        if (!max_mode && *best == 0) break;
      }
      return best;
    }
    case SlotSpec::Kind::Staged2Arg: {
      std::optional<Nat> best;
      bool max_mode = kind == WrapKind::Max;
      Program base = program_of(spec.base);
      Nat pn = word_to_nat(w.payload);
      for (Nat u = 0; u <= inner; ++u) {
        RunOutcome r = run(base, encode(pair(pn, u)), inner, opt);
        if (!r.halted) continue;
        if (!best) best = r.value;
        else best = max_mode ? std::max(*best, r.value) : std::min(*best, r.value);
        if (!max_mode && *best == 0) break;
      }
      return best;
    }
    case SlotSpec::Kind::BaseWordFn: {
      RunOutcome r = run(program_of(spec.base), w.payload, inner, opt);
      if (!r.halted) return std::nullopt;
      return r.value;
    }
    case SlotSpec::Kind::BarzAlpha: {
      const AlphaResult& a = alpha(spec.phi, spec.set, w.payload, inner);
      if (!a.found || a.settle_stage > inner) return std::nullopt;
      return a.witness;
    }
    case SlotSpec::Kind::Marker: {
      const MarkerRun& m =
          marker(kind == WrapKind::Max, spec.side, spec.phi, spec.set, spec.growth, w.payload, inner);
      if (!m.any) return std::nullopt;
      std::optional<Nat> best;
      for (const auto& [st, v] : m.changes) {
        if (st > inner) break;
        if (!best) best = v;
        else best = (kind == WrapKind::Max) ? std::max(*best, v) : std::min(*best, v);
      }
      return best;
    }
  }
  return std::nullopt;
}

namespace {

std::vector<int> minmax_table(Lab& lab, WrapKind kind, Nat range, Nat t) {
  if (t > 4096)
    throw std::runtime_error("resource limit: min/max table sweep at stage > 4096");
  std::vector<int> table(range, -1);
  const Nat n = lab.word_count();
  for (Nat rank = 0; rank < n; ++rank) {
    Word q = nat_to_word(rank);
    auto v = lab.wrapper_value(kind, q, t);
    if (!v || *v >= range) continue;
    int& cell = table[*v];
    int len = static_cast<int>(q.size());
    if (cell < 0 || len < cell) cell = len;
  }
  return table;
}

}  // namespace

std::vector<int> Lab::kmin_table(Nat range, Nat t) {
  std::ostringstream key;
  key << "min:" << range << ':' << t;
  auto it = table_cache_.find(key.str());
  if (it == table_cache_.end())
    it = table_cache_.emplace(key.str(), minmax_table(*this, WrapKind::Min, range, t)).first;
  return it->second;
}

std::vector<int> Lab::kmax_table(Nat range, Nat t) {
  std::ostringstream key;
  key << "max:" << range << ':' << t;
  auto it = table_cache_.find(key.str());
  if (it == table_cache_.end())
    it = table_cache_.emplace(key.str(), minmax_table(*this, WrapKind::Max, range, t)).first;
  return it->second;
}

StagedEnum& Lab::set_enum(Nat j) {
  auto it = enums_.find(j);
  if (it == enums_.end())
    it = enums_.emplace(j, std::make_unique<StagedEnum>(j, oracle())).first;
  return *it->second;
}

namespace {

enum class Guard { Hold, Fail, Undef };

Guard eval_guard(Lab& lab, Nat phi, Nat a, Nat t, Nat thr) {
  int kt = lab.k_t(a, t);
  // K^t not yet defined reads as +infinity: above any threshold of an
  // unbounded monotone phi.
  if (kt < 0) return Guard::Hold;
  auto v = minfn::approx(phi, static_cast<Nat>(kt), t, std::max<Nat>(t, 256), lab.oracle());
  if (!v) return Guard::Undef;
  return *v > thr ? Guard::Hold : Guard::Fail;
}

MarkerRun compute_marker(Lab& lab, bool max_mode, Side side, Nat phi, Nat set,
                         MachineIndex growth, const Word& p, Nat cap) {
  MarkerRun out;
  out.cap = cap;
  const Nat thr = 2 * static_cast<Nat>(p.size());
  StagedEnum& en = lab.set_enum(set);
  const auto& seq = en.ensure(cap);

  Nat a = 0;
  Nat start = 0;
  std::size_t pos = 0;                  // enum cursor (Sigma sides)
  std::vector<Nat> z0;                  // kmin Sigma pool, ascending
  std::unordered_map<Nat, Nat> appears; // value -> appearance stage (Pi sides)

  if (max_mode && side == Side::Sigma) {
    if (seq.empty() || seq[0].first > cap) return out;
    a = seq[0].second;
    start = seq[0].first;
    pos = 0;
  } else if (max_mode && side == Side::Pi) {
    a = 0;
    start = 0;
    for (const auto& [st, x] : seq) appears.emplace(x, st);
  } else if (!max_mode && side == Side::Sigma) {
    if (2 * p.size() + 1 >= 40) return out;
    Nat zsize = Nat(1) << (2 * p.size() + 1);
    if (seq.size() < zsize || seq[zsize - 1].first > cap) return out;
    z0.reserve(zsize);
    for (Nat idx = 0; idx < zsize; ++idx) z0.push_back(seq[idx].second);
    start = seq[zsize - 1].first;
    std::sort(z0.begin(), z0.end());
    a = z0.back();
  } else {
    if (2 * p.size() + 1 >= 40) return out;
    Nat zsize = Nat(1) << (2 * p.size() + 1);
    RunOptions opt;
    opt.oracle = lab.oracle();
    opt.detect_stationary = true;
    RunOutcome r = run(program_of(growth), encode(zsize), std::max<Nat>(cap, 1 << 16), opt);
    if (!r.halted) return out;
    a = r.value;
    start = 0;
    for (const auto& [st, x] : seq) appears.emplace(x, st);
  }

  out.any = true;
  out.changes.push_back({start, a});
  Nat last_change = start;
  bool pending = false;

  for (Nat t = start; t <= cap; ++t) {
    Guard g = eval_guard(lab, phi, a, t, thr);
    if (g == Guard::Undef) {
      out.guard_undefined = true;
      break;
    }
    bool in_w = false;
    if (side == Side::Pi) {
      auto it = appears.find(a);
      in_w = it != appears.end() && it->second <= t;
    }
    bool must_move = (g == Guard::Fail) || (side == Side::Pi && in_w) || pending;
    if (!must_move) continue;

    bool moved = false;
    if (max_mode && side == Side::Sigma) {
      for (std::size_t qi = pos + 1; qi < seq.size() && seq[qi].first <= t; ++qi) {
        if (seq[qi].second > a) {
          pos = qi;
          a = seq[qi].second;
          moved = true;
          break;
        }
      }
    } else if (max_mode && side == Side::Pi) {
      a += 1;
      moved = true;
    } else if (!max_mode && side == Side::Sigma) {
      auto it = std::lower_bound(z0.begin(), z0.end(), a);
      if (it != z0.begin()) {
        a = *std::prev(it);
        moved = true;
      }
    } else {
      if (a > 0) {
        a -= 1;
        moved = true;
      }
    }
    if (moved) {
      out.changes.push_back({t, a});
      last_change = t;
      pending = false;
    } else {
      pending = true;
      if (!max_mode) break;  // bounded pools: no candidate will ever appear
    }
  }

  out.pending = pending;
  out.final_value = a;
  out.settle_stage = last_change;
  out.settled = !pending && !out.guard_undefined && last_change < cap;
  return out;
}

AlphaResult compute_alpha(Lab& lab, Nat phi, Nat set, const Word& p, Nat cap) {
  AlphaResult out;
  const Nat thr = 2 * static_cast<Nat>(p.size());
  auto twin = minfn::base_twin(phi);
  StagedEnum& en = lab.set_enum(set);
  const auto& seq = en.ensure(cap);
  RunOptions opt;
  opt.oracle = lab.oracle();
  opt.detect_stationary = true;
  bool found = false;
  Nat best_t = 0, best_x = 0, best_v = 0;
  for (const auto& [ap, x] : seq) {
    if (ap > cap) break;
    std::optional<Nat> v;
    Nat steps = ap;
    if (twin) {
      RunOutcome r = run(program_of(*twin), encode(x), cap, opt);
      if (!r.halted) continue;
      v = r.value;
      steps = r.steps;
    } else {
      v = minfn::eval(phi, x, cap, lab.oracle());
      if (!v) continue;
    }
    if (*v <= thr) continue;
    Nat tq = std::max(ap, steps);
    if (tq > cap) continue;
    if (!found || tq < best_t) {  // enum order breaks ties (first seen wins)
      found = true;
      best_t = tq;
      best_x = x;
      best_v = *v;
    }
  }
  out.found = found;
  out.witness = best_x;
  out.settle_stage = best_t;
  out.phi_value = best_v;
  return out;
}

}  // namespace

const MarkerRun& Lab::marker(bool max_mode, Side side, Nat phi, Nat set,
                             MachineIndex growth, const Word& p, Nat cap) {
  std::ostringstream key;
  key << (max_mode ? 'M' : 'm') << (side == Side::Sigma ? 'S' : 'P') << ':' << phi << ':'
      << set << ':' << growth << ':' << word_to_string(p) << ':' << cap;
  auto it = markers_.find(key.str());
  if (it == markers_.end())
    it = markers_.emplace(key.str(), compute_marker(*this, max_mode, side, phi, set, growth, p, cap)).first;
  return it->second;
}

const AlphaResult& Lab::alpha(Nat phi, Nat set, const Word& p, Nat cap) {
  std::ostringstream key;
  key << phi << ':' << set << ':' << word_to_string(p) << ':' << cap;
  auto it = alphas_.find(key.str());
  if (it == alphas_.end())
    it = alphas_.emplace(key.str(), compute_alpha(*this, phi, set, p, cap)).first;
  return it->second;
}

}  // namespace kolmo
