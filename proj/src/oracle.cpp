#include "kolmo/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace kolmo {

OracleSpec OracleSpec::finite(std::vector<Nat> xs) {
  OracleSpec o;
  o.kind = Kind::FiniteSet;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  o.elements = std::move(xs);
  return o;
}

OracleSpec OracleSpec::decider(MachineIndex i, Nat budget) {
  OracleSpec o;
  o.kind = Kind::Decider;
  o.index = i;
  o.budget_per_query = budget;
  return o;
}

OracleSpec OracleSpec::jump(int level, Nat s) {
  OracleSpec o;
  o.kind = Kind::JumpStage;
  o.level = level;
  o.s = s;
  return o;
}

std::string OracleSpec::canonical() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Empty: os << "empty"; break;
    case Kind::FiniteSet:
      os << "finite:";
      for (Nat x : elements) os << x << ',';
      break;
    case Kind::Decider: os << "decider:" << index << ':' << budget_per_query; break;
    case Kind::JumpStage: os << "jump:" << level << ':' << s; break;
  }
  return os.str();
}

namespace {

bool jump_member(Nat e, int level, Nat s);

// Memoizing membership function for a spec; shared state so views can be
// copied into long-lived evaluators.
std::function<int(Nat)> make_membership(const OracleSpec& spec,
                                        std::shared_ptr<bool> breach,
                                        std::shared_ptr<std::vector<int>> memo) {
  switch (spec.kind) {
    case OracleSpec::Kind::Empty:
      return {};
    case OracleSpec::Kind::FiniteSet: {
      auto elems = spec.elements;
      return [elems](Nat x) {
        return std::binary_search(elems.begin(), elems.end(), x) ? 1 : 0;
      };
    }
    case OracleSpec::Kind::Decider: {
      MachineIndex i = spec.index;
      Nat b = spec.budget_per_query;
      return [i, b, breach, memo](Nat x) {
        if (x < memo->size() && (*memo)[x] >= 0) return (*memo)[x];
        RunOptions opt;
        opt.detect_stationary = true;
        RunOutcome r = run(program_of(i), encode(x), b, opt);
        int ans = r.halted ? (r.value != 0 ? 1 : 0) : 0;
        if (!r.halted) *breach = true;  // totality contract breached
        if (x < memo->size()) (*memo)[x] = ans;
        return ans;
      };
    }
    case OracleSpec::Kind::JumpStage: {
      int lvl = spec.level;
      Nat s = spec.s;
      return [lvl, s, memo](Nat e) {
        if (e < memo->size() && (*memo)[e] >= 0) return (*memo)[e];
        int ans = jump_member(e, lvl, s) ? 1 : 0;
        if (e < memo->size()) (*memo)[e] = ans;
        return ans;
      };
    }
  }
  return {};
}

bool jump_member(Nat e, int level, Nat s) {
  RunOptions opt;
  opt.detect_stationary = true;
  OracleView lower;
  if (level >= 2) {
    // level-2 membership is relative to the level-1 stage-s oracle
    static thread_local std::shared_ptr<std::vector<int>> memo =
        std::make_shared<std::vector<int>>(1 << 16, -1);
    lower.membership = make_membership(OracleSpec::jump(1, s), nullptr, memo);
    opt.oracle = &lower;
  }
  return run(program_of(e), encode(e), s, opt).halted;
}

}  // namespace

Oracle::Oracle(OracleSpec spec)
    : spec_(std::move(spec)),
      breach_(std::make_shared<bool>(false)),
      memo_(std::make_shared<std::vector<int>>(1 << 16, -1)) {
  view_.membership = make_membership(spec_, breach_, memo_);
}

OracleView jump_stage(int level, Nat s) {
  OracleView v;
  auto memo = std::make_shared<std::vector<int>>(1 << 16, -1);
  v.membership = make_membership(OracleSpec::jump(level, s), nullptr, memo);
  return v;
}

RunOutcome uniform_phi(MachineIndex i, Nat x, const OracleView& a, Nat t) {
  return phi(i, x, t, &a);
}

ClassVerdict relativize_class(const SetClassCode& c, Nat x, Nat t, const OracleView& a) {
  return class_member_eval(c, x, t, &a);
}

}  // namespace kolmo
