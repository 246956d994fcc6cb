#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kolmo/codec.hpp"

namespace kolmo {

// One opcode per 4-bit group. Full semantics in docs/isa.md.
enum class Op : std::uint8_t {
  Halt = 0,   // halt, output = accumulator
  Lit  = 1,   // acc = value of remaining bits as a binary numeral; halt
  Dig  = 2,   // read nibble d; acc = acc*16 + d
  Inc  = 3,   // acc += 1
  Dec  = 4,   // acc = acc == 0 ? 0 : acc - 1
  Div2 = 5,   // acc >>= 1
  Push = 6,   // push acc
  Pop  = 7,   // read nibble d; d == 0: acc = pop(); d >= 1: acc = peek at depth d
  Add  = 8,   // acc = pop() + acc
  Sub  = 9,   // acc = monus(pop(), acc)
  Mul  = 10,  // acc = pop() * acc
  Unp  = 11,  // (a,b) = unpair(acc); acc = a; push b
  Jz   = 12,  // read 8-bit d; if acc == 0 skip d groups forward
  Jb   = 13,  // read 8-bit d; jump d groups backward from this opcode
  Qry  = 14,  // acc = oracle(acc) in {0,1}
  Call = 15,  // (b,(i,x)) = unpair twice; run program nat_to_word(i) on
              // nat_to_word(x) with budget min(b, remaining);
              // acc = pair(halted, value)
};

using Program = Word;

struct RunOutcome {
  bool halted = false;
  Nat value = 0;   // meaningful iff halted
  Nat steps = 0;   // meaningful iff halted; steps consumed when it halted

  static RunOutcome out_of_budget() { return {}; }
  static RunOutcome done(Nat v, Nat s) { return {true, v, s}; }
  bool operator==(const RunOutcome&) const = default;
};

// Total membership function plus a query counter. Pure during a single run.
struct OracleView {
  std::function<int(Nat)> membership;   // unset = empty oracle
  mutable std::uint64_t query_count = 0;

  int query(Nat x) const {
    ++query_count;
    return membership ? (membership(x) ? 1 : 0) : 0;
  }
  bool is_empty_fn() const { return !static_cast<bool>(membership); }
};

// One line per executed step of the outermost frame.
struct TraceLine {
  Nat pc;          // bit offset of the group being executed
  int opcode;      // -1 for the terminal halt tick
  Nat acc;
  Nat stack_depth;
};

struct RunOptions {
  const OracleView* oracle = nullptr;
  const std::array<std::uint8_t, 16>* opcode_permutation = nullptr;  // decode map
  std::vector<TraceLine>* trace = nullptr;   // outermost frame only
  // Stop early once the exact machine state repeats in place (sound: such a
  // run never halts). Off by default so observable budgets stay literal.
  bool detect_stationary = false;
};

// Deterministic budgeted run. Every tick (opcode or the terminal halt check)
// costs one step, so any halting run reports steps >= 1 and budget 0 is
// always OutOfBudget.
RunOutcome run(const Program& p, const Word& input, Nat budget,
               const RunOptions& opt = {});

// Oracle-equipped run; run(p, w, t) == run_with_oracle(p, w, empty, t).
RunOutcome run_with_oracle(const Program& p, const Word& input,
                           const OracleView& oracle, Nat budget);

// Literal program [Lit]·bin(x): halts with x on every input in 1 step.
// |encode_literal(x)| = |bin(x)| + 4 <= |bin(x)| + c_lit.
Program encode_literal(Nat x);
inline constexpr unsigned c_lit = 5;

// Identity permutation and the fixed reversal used by the variant machine.
const std::array<std::uint8_t, 16>& identity_permutation();
const std::array<std::uint8_t, 16>& reversed_permutation();

std::string trace_to_text(const std::vector<TraceLine>& t);

}  // namespace kolmo
