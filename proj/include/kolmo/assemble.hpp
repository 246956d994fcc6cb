#pragma once

#include <map>
#include <string>
#include <vector>

#include "kolmo/machine.hpp"

namespace kolmo {

// Two-pass assembler for hand-written and generated programs.
// Jump operands are group distances (see docs/isa.md); it throws if a
// distance does not fit in 8 bits.
class Asm {
 public:
  void op(Op o);
  void dig(unsigned nibble);        // Dig d
  void pop() { operand_op(Op::Pop, 0); }
  void peek(unsigned depth) { operand_op(Op::Pop, depth); }
  void jz(const std::string& label);
  void jb(const std::string& label);
  void label(const std::string& name);
  void lit(Nat x);                  // Lit + bin(x); terminal, nothing may follow

  // Pseudo-ops.
  void zero();                      // Push, Sub: acc = 0, stack unchanged
  void const_(Nat v);               // zero + canonical Dig chain
  void diverge();                   // tight self-loop

  Program assemble() const;
  std::size_t groups() const { return next_group_; }

 private:
  struct Item {
    enum Kind { Plain, Operand, Jump, LitPayload } kind;
    Op o;
    unsigned operand = 0;           // nibble for Operand
    std::string target;             // for Jump
    Nat lit_value = 0;              // for LitPayload
    std::size_t group = 0;          // group offset of the opcode
  };
  void operand_op(Op o, unsigned d);

  std::vector<Item> items_;
  std::map<std::string, std::size_t> labels_;
  std::size_t next_group_ = 0;
  int uniq_ = 0;
  bool sealed_ = false;
};

}  // namespace kolmo
