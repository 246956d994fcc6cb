#include "kolmo/machine.hpp"

#include <sstream>

namespace kolmo {

namespace {

struct Frame {
  Program prog;
  std::size_t pc = 0;
  Nat acc = 0;
  std::vector<Nat> stack;
  Nat limit = 0;       // absolute step index this frame's subtree must stay under
  bool from_b = false; // limit came from the CALL budget argument, not the caller
  // stationary-state detection
  std::size_t prev_pc = static_cast<std::size_t>(-1);
  Nat prev_acc = 0;
  std::size_t prev_depth = 0;
};

inline Nat monus(Nat a, Nat b) { return a >= b ? a - b : 0; }

// Reads `n` nibbles starting at bit offset `at`; false if they run past the end.
inline bool read_nibbles(const Program& p, std::size_t at, unsigned n, Nat& out) {
  if (at + 4ull * n > p.size()) return false;
  Nat v = 0;
  for (unsigned i = 0; i < 4 * n; ++i) v = (v << 1) | p[at + i];
  out = v;
  return true;
}

}  // namespace

const std::array<std::uint8_t, 16>& identity_permutation() {
  static const std::array<std::uint8_t, 16> id = {0, 1, 2,  3,  4,  5,  6,  7,
                                                  8, 9, 10, 11, 12, 13, 14, 15};
  return id;
}

const std::array<std::uint8_t, 16>& reversed_permutation() {
  static const std::array<std::uint8_t, 16> rev = {15, 14, 13, 12, 11, 10, 9, 8,
                                                   7,  6,  5,  4,  3,  2,  1, 0};
  return rev;
}

RunOutcome run(const Program& p, const Word& input, Nat budget, const RunOptions& opt) {
  const auto& perm = opt.opcode_permutation ? *opt.opcode_permutation : identity_permutation();
  static const OracleView empty_oracle{};
  const OracleView& oracle = opt.oracle ? *opt.oracle : empty_oracle;

  std::vector<Frame> frames;
  frames.reserve(4);
  frames.push_back(Frame{});
  frames.back().prog = p;
  frames.back().acc = word_to_nat(input);
  frames.back().limit = budget;

  Nat steps = 0;
  while (true) {
    Frame& f = frames.back();
    if (steps >= f.limit) {
      if (!f.from_b) return RunOutcome::out_of_budget();
      // inner CALL exhausted its own budget argument: report "did not halt"
      frames.pop_back();
      frames.back().acc = pair(0, 0);
      continue;
    }

    const std::size_t rem = f.prog.size() - f.pc;
    if (rem == 0) {
      // terminal halt tick
      ++steps;
      if (opt.trace && frames.size() == 1)
        opt.trace->push_back({f.pc, -1, f.acc, f.stack.size()});
      Nat value = f.acc;
      if (frames.size() == 1) return RunOutcome::done(value, steps);
      frames.pop_back();
      frames.back().acc = pair(1, value);
      continue;
    }
    if (rem < 4) {
      // incomplete opcode group: self-loop
      ++steps;
      if (opt.trace && frames.size() == 1)
        opt.trace->push_back({f.pc, -2, f.acc, f.stack.size()});
      if (opt.detect_stationary) return RunOutcome::out_of_budget();
      continue;
    }

    if (opt.detect_stationary) {
      if (f.pc == f.prev_pc && f.acc == f.prev_acc && f.stack.size() == f.prev_depth)
        return RunOutcome::out_of_budget();  // exact state repeat, never halts
      f.prev_pc = f.pc;
      f.prev_acc = f.acc;
      f.prev_depth = f.stack.size();
    }

    Nat nib = 0;
    read_nibbles(f.prog, f.pc, 1, nib);
    const Op op = static_cast<Op>(perm[static_cast<std::size_t>(nib)]);
    ++steps;
    if (opt.trace && frames.size() == 1)
      opt.trace->push_back({f.pc, static_cast<int>(op), f.acc, f.stack.size()});

    switch (op) {
      case Op::Halt: {
        Nat value = f.acc;
        if (frames.size() == 1) return RunOutcome::done(value, steps);
        frames.pop_back();
        frames.back().acc = pair(1, value);
        break;
      }
      case Op::Lit: {
        Nat v = 0;
        for (std::size_t i = f.pc + 4; i < f.prog.size(); ++i) v = (v << 1) | f.prog[i];
        if (frames.size() == 1) return RunOutcome::done(v, steps);
        frames.pop_back();
        frames.back().acc = pair(1, v);
        break;
      }
      case Op::Dig: {
        Nat d;
        if (!read_nibbles(f.prog, f.pc + 4, 1, d)) {
          if (opt.detect_stationary) return RunOutcome::out_of_budget();
          break;  // stall forever at this pc
        }
        f.acc = f.acc * 16 + d;
        f.pc += 8;
        break;
      }
      case Op::Inc: f.acc += 1; f.pc += 4; break;
      case Op::Dec: f.acc = monus(f.acc, 1); f.pc += 4; break;
      case Op::Div2: f.acc >>= 1; f.pc += 4; break;
      case Op::Push: f.stack.push_back(f.acc); f.pc += 4; break;
      case Op::Pop: {
        Nat d;
        if (!read_nibbles(f.prog, f.pc + 4, 1, d)) {
          if (opt.detect_stationary) return RunOutcome::out_of_budget();
          break;
        }
        if (d == 0) {
          if (f.stack.empty()) f.acc = 0;
          else { f.acc = f.stack.back(); f.stack.pop_back(); }
        } else {
          f.acc = f.stack.size() > d ? f.stack[f.stack.size() - 1 - d] : 0;
        }
        f.pc += 8;
        break;
      }
      case Op::Add: {
        Nat t = 0;
        if (!f.stack.empty()) { t = f.stack.back(); f.stack.pop_back(); }
        f.acc = t + f.acc;
        f.pc += 4;
        break;
      }
      case Op::Sub: {
        Nat t = 0;
        if (!f.stack.empty()) { t = f.stack.back(); f.stack.pop_back(); }
        f.acc = monus(t, f.acc);
        f.pc += 4;
        break;
      }
      case Op::Mul: {
        Nat t = 0;
        if (!f.stack.empty()) { t = f.stack.back(); f.stack.pop_back(); }
        f.acc = t * f.acc;
        f.pc += 4;
        break;
      }
      case Op::Unp: {
        auto [a, b] = unpair(f.acc);
        f.acc = a;
        f.stack.push_back(b);
        f.pc += 4;
        break;
      }
      case Op::Jz: {
        Nat d;
        if (!read_nibbles(f.prog, f.pc + 4, 2, d)) {
          if (opt.detect_stationary) return RunOutcome::out_of_budget();
          break;
        }
        if (f.acc == 0) f.pc += 12 + 4 * static_cast<std::size_t>(d);
        else f.pc += 12;
        break;
      }
      case Op::Jb: {
        Nat d;
        if (!read_nibbles(f.prog, f.pc + 4, 2, d)) {
          if (opt.detect_stationary) return RunOutcome::out_of_budget();
          break;
        }
        std::size_t back = 4 * static_cast<std::size_t>(d);
        f.pc = f.pc >= back ? f.pc - back : 0;
        break;
      }
      case Op::Qry: {
        f.acc = static_cast<Nat>(oracle.query(f.acc));
        f.pc += 4;
        break;
      }
      case Op::Call: {
        auto [b, rest] = unpair(f.acc);
        auto [i, x] = unpair(rest);
        f.pc += 4;
        Frame inner;
        inner.prog = nat_to_word(i);
        inner.acc = x;  // acc starts at word_to_nat of the input word
        inner.from_b = b <= f.limit - steps;  // steps <= f.limit holds here
        inner.limit = inner.from_b ? steps + b : f.limit;
        frames.push_back(std::move(inner));
        break;
      }
    }
  }
}

RunOutcome run_with_oracle(const Program& p, const Word& input,
                           const OracleView& oracle, Nat budget) {
  RunOptions opt;
  opt.oracle = &oracle;
  return run(p, input, budget, opt);
}

Program encode_literal(Nat x) {
  Program p;
  Word b = bin_of(x);
  p.bits = {0, 0, 0, 1};  // Lit
  p.append(b);
  return p;
}

std::string trace_to_text(const std::vector<TraceLine>& t) {
  std::ostringstream os;
  for (const auto& l : t)
    os << l.pc << ' ' << l.opcode << ' ' << l.acc << ' ' << l.stack_depth << '\n';
  return os.str();
}

}  // namespace kolmo
