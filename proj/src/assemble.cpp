#include "kolmo/assemble.hpp"

#include <stdexcept>

namespace kolmo {

namespace {
void append_nibble(Program& p, unsigned v) {
  for (int i = 3; i >= 0; --i) p.append_bit((v >> i) & 1);
}
}  // namespace

void Asm::op(Op o) {
  if (sealed_) throw std::logic_error("asm: code after Lit payload");
  items_.push_back({Item::Plain, o, 0, {}, 0, next_group_});
  next_group_ += 1;
}

void Asm::operand_op(Op o, unsigned d) {
  if (sealed_) throw std::logic_error("asm: code after Lit payload");
  if (d > 15) throw std::out_of_range("asm: nibble operand out of range");
  items_.push_back({Item::Operand, o, d, {}, 0, next_group_});
  next_group_ += 2;
}

void Asm::dig(unsigned nibble) { operand_op(Op::Dig, nibble); }

void Asm::jz(const std::string& label) {
  if (sealed_) throw std::logic_error("asm: code after Lit payload");
  items_.push_back({Item::Jump, Op::Jz, 0, label, 0, next_group_});
  next_group_ += 3;
}

void Asm::jb(const std::string& label) {
  if (sealed_) throw std::logic_error("asm: code after Lit payload");
  items_.push_back({Item::Jump, Op::Jb, 0, label, 0, next_group_});
  next_group_ += 3;
}

void Asm::label(const std::string& name) {
  if (!labels_.emplace(name, next_group_).second)
    throw std::logic_error("asm: duplicate label " + name);
}

void Asm::lit(Nat x) {
  if (sealed_) throw std::logic_error("asm: code after Lit payload");
  items_.push_back({Item::LitPayload, Op::Lit, 0, {}, x, next_group_});
  sealed_ = true;
}

void Asm::zero() {
  op(Op::Push);
  op(Op::Sub);
}

void Asm::const_(Nat v) {
  zero();
  if (v == 0) return;
  int top = 15;
  while (top > 0 && ((v >> (4 * top)) & 0xF) == 0) --top;
  for (int i = top; i >= 0; --i) dig(static_cast<unsigned>((v >> (4 * i)) & 0xF));
}

void Asm::diverge() {
  std::string l = "__spin" + std::to_string(uniq_++);
  label(l);
  jb(l);
}

Program Asm::assemble() const {
  Program p;
  for (const auto& it : items_) {
    switch (it.kind) {
      case Item::Plain:
        append_nibble(p, static_cast<unsigned>(it.o));
        break;
      case Item::Operand:
        append_nibble(p, static_cast<unsigned>(it.o));
        append_nibble(p, it.operand);
        break;
      case Item::Jump: {
        auto found = labels_.find(it.target);
        if (found == labels_.end())
          throw std::logic_error("asm: undefined label " + it.target);
        std::size_t target = found->second;
        long d;
        if (it.o == Op::Jz) d = static_cast<long>(target) - static_cast<long>(it.group) - 3;
        else d = static_cast<long>(it.group) - static_cast<long>(target);
        if (d < 0 || d > 255)
          throw std::out_of_range("asm: jump distance " + std::to_string(d) +
                                  " out of range for " + it.target);
        append_nibble(p, static_cast<unsigned>(it.o));
        append_nibble(p, static_cast<unsigned>((d >> 4) & 0xF));
        append_nibble(p, static_cast<unsigned>(d & 0xF));
        break;
      }
      case Item::LitPayload: {
        append_nibble(p, static_cast<unsigned>(Op::Lit));
        Word b = bin_of(it.lit_value);
        p.append(b);
        break;
      }
    }
  }
  return p;
}

}  // namespace kolmo
