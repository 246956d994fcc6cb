#include "kolmo/enumeration.hpp"

#include <stdexcept>

#include "kolmo/programs.hpp"

namespace kolmo {

Program program_of(MachineIndex i) { return nat_to_word(i); }
Word encode(Nat x) { return nat_to_word(x); }

RunOutcome phi(MachineIndex i, Nat x, Nat t, const OracleView* oracle) {
  RunOptions opt;
  opt.oracle = oracle;
  return run(program_of(i), encode(x), t, opt);
}

MachineIndex universal_index() { return programs::universal_index(); }

MachineIndex smn(MachineIndex i, Nat z) {
  return programs::index_of(programs::smn_program(i, z));
}

StagedSet w_members(MachineIndex i, Nat t, Nat bound, const OracleView* oracle) {
  StagedSet s{i, t, {}};
  Program p = program_of(i);
  RunOptions opt;
  opt.oracle = oracle;
  opt.detect_stationary = true;
  for (Nat x = 0; x <= bound; ++x)
    if (run(p, encode(x), t, opt).halted) s.elements.push_back(x);
  return s;
}

std::pair<MachineIndex, MachineIndex> thin_to_decidable(MachineIndex i) {
  return {programs::index_of(programs::thin_member_program(i)),
          programs::index_of(programs::thin_complement_program(i))};
}

SetClassCode SetClassCode::sigma1(MachineIndex i) {
  SetClassCode c;
  c.kind = Kind::Sigma1;
  c.i = i;
  return c;
}
SetClassCode SetClassCode::pi1(MachineIndex i) {
  SetClassCode c;
  c.kind = Kind::Pi1;
  c.i = i;
  return c;
}
SetClassCode SetClassCode::conj(MachineIndex i, MachineIndex k) {
  SetClassCode c;
  c.kind = Kind::And;
  c.i = i;
  c.k = k;
  return c;
}
SetClassCode SetClassCode::disj(MachineIndex i, MachineIndex k) {
  SetClassCode c;
  c.kind = Kind::Or;
  c.i = i;
  c.k = k;
  return c;
}
SetClassCode SetClassCode::bounded_exists(SetClassCode and_code, MachineIndex mu, unsigned arity) {
  SetClassCode c;
  c.kind = Kind::BoundedExists;
  c.inner.push_back(std::move(and_code));
  c.mu = mu;
  c.arity = arity;
  return c;
}

namespace {

bool halts(MachineIndex i, Nat x, Nat t, const OracleView* oracle) {
  RunOptions opt;
  opt.oracle = oracle;
  opt.detect_stationary = true;
  return run(program_of(i), encode(x), t, opt).halted;
}

// Enumerate all word tuples with each |u| <= len_bound; encodes the tuple as
// nested pairs of word_to_nat values, paired under x.
struct TupleIter {
  unsigned arity;
  Nat per;       // words per coordinate: 2^(L+1) - 1
  std::vector<Nat> idx;
  bool done = false;

  TupleIter(unsigned m, unsigned len_bound) : arity(m) {
    per = (Nat(1) << (len_bound + 1)) - 1;
    idx.assign(m, 0);
  }
  Nat encode_under(Nat x) const {
    Nat enc = idx[arity - 1];
    for (int j = static_cast<int>(arity) - 2; j >= 0; --j) enc = pair(idx[j], enc);
    return pair(x, enc);
  }
  void next() {
    for (unsigned j = 0; j < arity; ++j) {
      if (++idx[j] < per) return;
      idx[j] = 0;
    }
    done = true;
  }
  Nat count() const {
    Nat c = 1;
    for (unsigned j = 0; j < arity; ++j) c *= per;
    return c;
  }
};

ClassVerdict eval(const SetClassCode& c, Nat x, Nat t, const OracleView* oracle, bool closed) {
  switch (c.kind) {
    case SetClassCode::Kind::Sigma1: {
      if (halts(c.i, x, t, oracle)) return {TriState::In, false};
      return {TriState::Unknown, false};
    }
    case SetClassCode::Kind::Pi1: {
      if (halts(c.i, x, t, oracle)) return {TriState::Out, false};
      return {closed ? TriState::In : TriState::Unknown, true};
    }
    case SetClassCode::Kind::And: {
      ClassVerdict a = eval(SetClassCode::sigma1(c.i), x, t, oracle, closed);
      ClassVerdict b = eval(SetClassCode::pi1(c.k), x, t, oracle, closed);
      if (b.state == TriState::Out) return {TriState::Out, false};
      if (a.state == TriState::In && b.state == TriState::In) return {TriState::In, b.not_yet_refuted};
      return {TriState::Unknown, b.not_yet_refuted && a.state == TriState::In};
    }
    case SetClassCode::Kind::Or: {
      ClassVerdict a = eval(SetClassCode::sigma1(c.i), x, t, oracle, closed);
      ClassVerdict b = eval(SetClassCode::pi1(c.k), x, t, oracle, closed);
      if (a.state == TriState::In || b.state == TriState::In) return {TriState::In, b.not_yet_refuted};
      // Out would need the sigma part refuted, which never happens at a stage
      return {TriState::Unknown, b.not_yet_refuted};
    }
    case SetClassCode::Kind::BoundedExists: {
      if (c.arity == 0 || c.arity > 4 || c.inner.size() != 1 ||
          c.inner[0].kind != SetClassCode::Kind::And)
        throw std::invalid_argument("bounded_exists: malformed code");
      // ||x|| = x for naturals; the bound applies to word lengths.
      RunOutcome mu = phi(c.mu, x, t, oracle);
      if (!mu.halted) return {TriState::Unknown, false};
      Nat L = mu.value;
      if (L > 12) return {TriState::Unknown, false};  // resource guard
      TupleIter it(c.arity, static_cast<unsigned>(L));
      if (it.count() > (Nat(1) << 22)) return {TriState::Unknown, false};
      bool all_out = true, saw_unknown = false;
      while (!it.done) {
        ClassVerdict v = eval(c.inner[0], it.encode_under(x), t, oracle, closed);
        if (v.state == TriState::In) return {TriState::In, false};
        if (v.state != TriState::Out) { all_out = false; saw_unknown = true; }
        it.next();
      }
      if (all_out) return {TriState::Out, false};
      return {TriState::Unknown, saw_unknown};
    }
  }
  return {TriState::Unknown, false};
}

}  // namespace

ClassVerdict class_member_eval(const SetClassCode& c, Nat x, Nat t, const OracleView* oracle) {
  return eval(c, x, t, oracle, false);
}

TriState class_member(const SetClassCode& c, Nat x, Nat t, const OracleView* oracle) {
  return eval(c, x, t, oracle, false).state;
}

TriState class_member_closed(const SetClassCode& c, Nat x, Nat t, const OracleView* oracle) {
  return eval(c, x, t, oracle, true).state;
}

}  // namespace kolmo
