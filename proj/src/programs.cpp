#include "kolmo/programs.hpp"

#include <stdexcept>

namespace kolmo::programs {

namespace {

// Symbolic stack model for the program generators: named slots with
// depth-checked peeks and snapshots to re-sync at branch joins. Generators
// throw at build time if they mis-track the stack or exceed peek range.
struct Gen {
  Asm& a;
  std::vector<std::string> st;  // bottom .. top

  explicit Gen(Asm& as) : a(as) {}

  void push(const std::string& name) {
    a.op(Op::Push);
    st.push_back(name);
  }
  void pop_into_acc() {
    if (st.empty()) throw std::logic_error("gen: pop on empty model");
    a.pop();
    st.pop_back();
  }
  // acc = named slot, stack unchanged
  void peek(const std::string& name) {
    for (std::size_t d = 0; d < st.size(); ++d) {
      if (st[st.size() - 1 - d] == name) {
        if (d == 0) {       // pop then re-push: same stack, value in acc
          a.pop();
          a.op(Op::Push);
        } else {
          if (d > 15) throw std::logic_error("gen: slot too deep: " + name);
          a.peek(static_cast<unsigned>(d));
        }
        return;
      }
    }
    throw std::logic_error("gen: unknown slot " + name);
  }
  void unp(const std::string& second_name) {  // acc = pi1, push pi2
    a.op(Op::Unp);
    st.push_back(second_name);
  }
  // acc = pair(top, acc); leaves one copy of acc's value behind
  void pair_top_acc(const std::string& acc_name) {
    if (st.empty()) throw std::logic_error("gen: pair on empty model");
    emit_pair_acc(a);
    st.push_back(acc_name + "'");
  }
  void sub() { a.op(Op::Sub); st.pop_back(); }
  void add() { a.op(Op::Add); st.pop_back(); }

  // Pops everything above `base` slots; clobbers acc.
  void pop_garbage_to(std::size_t base) {
    while (st.size() > base) pop_into_acc();
  }

  std::vector<std::string> snap() const { return st; }
  void restore(std::vector<std::string> s) { st = std::move(s); }
  // Loop contract: the top slots are the frame, garbage below is anonymous.
  void reset_frame(std::initializer_list<std::string> frame) {
    st.assign(frame.begin(), frame.end());
  }
};

// acc = pair(c, acc)
void emit_pair_const_acc(Gen& g, Nat c, const std::string& acc_name) {
  g.push(acc_name);
  g.a.const_(c);
  g.push("c#" + acc_name);
  g.peek(acc_name);
  g.pair_top_acc(acc_name);
}

Program build_evens() {
  Asm a;
  a.op(Op::Push);   // st[x]
  a.op(Op::Div2);   // acc = x/2
  a.op(Op::Push);   // st[x, h]
  a.op(Op::Add);    // acc = 2h, st[x]
  a.op(Op::Sub);    // acc = monus(x, 2h) = parity
  a.jz("even");
  a.diverge();
  a.label("even");
  a.op(Op::Halt);
  return a.assemble();
}

Program build_odds() {
  Asm a;
  a.op(Op::Push);
  a.op(Op::Div2);
  a.op(Op::Push);
  a.op(Op::Add);
  a.op(Op::Sub);
  a.jz("spin");
  a.op(Op::Halt);
  a.label("spin");
  a.jb("spin");
  return a.assemble();
}

Program build_squares() {
  // r = x, k = 1; loop: r==0 -> halt; k>r -> diverge; r -= k; k += 2.
  // Loop state is the top two stack entries [k, r]; older copies pile up.
  Asm a;
  a.op(Op::Push);
  a.zero();
  a.op(Op::Inc);
  a.op(Op::Push);
  a.peek(1);
  a.op(Op::Push);   // st[x, 1, x], top two = [k, r]
  a.label("loop");
  a.pop();          // acc = r, st[..., k]
  a.jz("done");
  a.op(Op::Push);   // st[k, r]
  a.peek(1);        // acc = k
  a.op(Op::Push);   // st[k, r, k]
  a.peek(1);        // acc = r
  a.op(Op::Sub);    // monus(k, r)
  a.jz("sub");
  a.diverge();
  a.label("sub");
  a.peek(1);        // acc = k
  a.op(Op::Sub);    // acc = monus(r, k) = r', st[k]
  a.op(Op::Push);
  a.peek(1);        // acc = k
  a.op(Op::Inc);
  a.op(Op::Inc);
  a.op(Op::Push);   // st[k, r', k']
  a.peek(1);        // acc = r'
  a.op(Op::Push);   // st[k, r', k', r']
  a.jb("loop");
  a.label("done");
  a.op(Op::Halt);
  return a.assemble();
}

Program build_log2p2() {
  Asm a;
  a.op(Op::Inc);
  a.op(Op::Inc);    // y = x+2
  a.op(Op::Push);
  a.zero();         // c = 0
  a.label("loop");  // st[..., y], acc = c
  a.op(Op::Push);
  a.peek(1);        // acc = y
  a.op(Op::Div2);
  a.jz("done");
  a.op(Op::Push);   // st[y, c, y']
  a.peek(1);        // acc = c
  a.op(Op::Inc);
  a.jb("loop");     // top = y', acc = c+1
  a.label("done");
  a.pop();          // acc = c
  a.op(Op::Halt);
  return a.assemble();
}

Program build_two_branch_53() {
  Asm a;
  a.op(Op::Unp);    // acc = x, st[u]
  a.pop();          // acc = u
  a.jz("five");
  a.op(Op::Dec);
  a.jz("three");
  a.diverge();
  a.label("five");
  a.const_(5);
  a.op(Op::Halt);
  a.label("three");
  a.const_(3);
  a.op(Op::Halt);
  return a.assemble();
}

Program build_qry_search() {
  Asm a;
  a.zero();
  a.label("loop");
  a.op(Op::Push);
  a.op(Op::Qry);
  a.jz("next");
  a.pop();
  a.op(Op::Halt);
  a.label("next");
  a.pop();
  a.op(Op::Inc);
  a.jb("loop");
  return a.assemble();
}

Program build_universal() {
  Asm a;
  a.op(Op::Push);   // st[n], n = pair(i, x)
  a.zero();
  a.op(Op::Inc);    // b = 1
  emit_dovetail_halt_loop(a, "u");
  return a.assemble();
}

}  // namespace

void emit_pair_acc(Asm& a) {
  // pre: st[..., A], acc = B; post: acc = pair(A,B) = T(A+B)+B, st[..., A, B]
  a.op(Op::Push);
  a.peek(1);
  a.op(Op::Push);
  a.peek(1);
  a.op(Op::Add);
  a.op(Op::Push);
  a.op(Op::Inc);
  a.op(Op::Mul);
  a.op(Op::Div2);
  a.op(Op::Push);
  a.peek(1);
  a.op(Op::Add);
}

void emit_dovetail_halt_loop(Asm& a, const std::string& tag) {
  // pre: st[..., n], acc = b. Probes unpair(n) with budgets b, 2b, 4b, ...
  const std::string loop = tag + "_loop", miss = tag + "_miss";
  a.label(loop);
  a.op(Op::Push);   // st[n, b]
  a.peek(1);        // acc = n
  a.op(Op::Push);   // st[n, b, n]
  a.peek(1);        // acc = b
  a.op(Op::Add);    // s = b+n, st[n, b]
  a.op(Op::Push);
  a.op(Op::Inc);
  a.op(Op::Mul);
  a.op(Op::Div2);   // T(s)
  a.op(Op::Push);   // st[n, b, T]
  a.peek(2);        // acc = n
  a.op(Op::Add);    // acc = pair(b, n), st[n, b]
  a.op(Op::Call);
  a.op(Op::Unp);    // acc = flag, st[n, b, v]
  a.jz(miss);
  a.pop();
  a.op(Op::Halt);
  a.label(miss);
  a.pop();          // discard v
  a.pop();          // acc = b, st[n]
  a.op(Op::Push);
  a.op(Op::Add);    // 2b
  a.jb(loop);
}

void emit_dovetail_cont_loop(Asm& a, const std::string& tag) {
  // As the halt loop but ends with the value in acc; net stack effect +1.
  const std::string loop = tag + "_loop", miss = tag + "_miss", cont = tag + "_cont";
  a.label(loop);
  a.op(Op::Push);
  a.peek(1);
  a.op(Op::Push);
  a.peek(1);
  a.op(Op::Add);
  a.op(Op::Push);
  a.op(Op::Inc);
  a.op(Op::Mul);
  a.op(Op::Div2);
  a.op(Op::Push);
  a.peek(2);
  a.op(Op::Add);
  a.op(Op::Call);
  a.op(Op::Unp);
  a.jz(miss);
  a.pop();          // acc = v, st[n, b]
  a.op(Op::Push);   // st[n, b, v]
  a.zero();
  a.jz(cont);
  a.label(miss);
  a.pop();
  a.pop();          // acc = b, st[n]
  a.op(Op::Push);
  a.op(Op::Add);
  a.jb(loop);
  a.label(cont);
  a.pop();          // acc = v, st[n, b]
}

const Program& identity() { static const Program p{}; return p; }
const Program& halt_now() { static const Program p = [] { Asm a; a.op(Op::Halt); return a.assemble(); }(); return p; }
const Program& diverger() { static const Program p = [] { Asm a; a.diverge(); return a.assemble(); }(); return p; }
const Program& evens() { static const Program p = build_evens(); return p; }
const Program& odds() { static const Program p = build_odds(); return p; }
const Program& squares() { static const Program p = build_squares(); return p; }
const Program& log2p2() { static const Program p = build_log2p2(); return p; }
const Program& half() { static const Program p = [] { Asm a; a.op(Op::Div2); return a.assemble(); }(); return p; }
const Program& quarter() { static const Program p = [] { Asm a; a.op(Op::Div2); a.op(Op::Div2); return a.assemble(); }(); return p; }
const Program& dec1() { static const Program p = [] { Asm a; a.op(Op::Dec); return a.assemble(); }(); return p; }
const Program& double_plus2() { static const Program p = [] {
  Asm a; a.op(Op::Push); a.op(Op::Add); a.op(Op::Inc); a.op(Op::Inc); return a.assemble(); }(); return p; }
const Program& qry_echo() { static const Program p = [] { Asm a; a.op(Op::Qry); a.op(Op::Halt); return a.assemble(); }(); return p; }
const Program& qry_search() { static const Program p = build_qry_search(); return p; }
const Program& two_branch_53() { static const Program p = build_two_branch_53(); return p; }
const Program& universal() { static const Program p = build_universal(); return p; }

Nat index_of(const Program& p) { return word_to_nat(p); }
Nat universal_index() { return index_of(universal()); }

Program smn_program(Nat i, Nat z) {
  Asm a;
  Gen g(a);
  // entry: acc = x
  g.push("x");
  emit_pair_const_acc(g, z, "x");        // acc = m = pair(z, x)
  g.push("m");
  a.const_(i);
  g.push("i");
  g.peek("m");
  g.pair_top_acc("m");                   // acc = n = pair(i, m)
  g.push("n");
  a.zero();
  a.op(Op::Inc);
  emit_dovetail_halt_loop(a, "s");
  return a.assemble();
}

namespace {

// Unpacks the two-slot loop frame [J, k] of the thin replay into the base
// [J, k, y, a, n, M, x, i], with k = pair(a, y), J = pair(M, pair(i, x)).
void thin_unpack(Gen& g) {
  g.reset_frame({"J", "k"});
  g.peek("k");
  g.unp("y");       // acc = a
  g.push("a");      // [J, k, y, a]
  g.peek("J");
  g.unp("n");       // acc = M
  g.push("M");      // [J, k, y, a, n, M]
  g.peek("n");
  g.unp("x");       // acc = i
  g.push("i");      // [J, k, y, a, n, M, x, i]
}

// Emits the probe pair: f0 = halts within a, f1 = halts within a+1, for
// phi_i(y). Leaves f0/f1 reachable as named slots, acc = f1.
void thin_probe(Gen& g) {
  Asm& a = g.a;
  g.peek("y");
  g.pair_top_acc("y");                   // acc = m = pair(i, y)  (i on top)
  g.push("m");
  g.peek("a");
  g.push("a2");
  g.peek("m");
  g.pair_top_acc("m");                   // acc = arg0 = pair(a, m)
  g.push("arg0");
  // arg1 = pair(a+1, m) = arg0 + a + m + 1
  g.peek("a");
  g.push("aa");
  g.peek("m");
  g.add();                               // a + m
  a.op(Op::Inc);
  g.push("s1");
  g.peek("arg0");
  g.add();                               // arg0 + a + m + 1
  g.push("arg1");
  g.peek("arg0");
  a.op(Op::Call);
  g.unp("v0");                           // acc = f0
  g.push("f0");
  g.peek("arg1");
  a.op(Op::Call);
  g.unp("v1");                           // acc = f1
}

// Repack [J*, k+1] on top of the base and jump back.
void thin_repack_keep(Gen& g, const std::string& loop) {
  g.peek("J");
  g.push("Jc");
  g.peek("k");
  g.a.op(Op::Inc);
  g.push("kc");
  g.a.jb(loop);
}

Program build_thin(Nat i, bool complement) {
  Asm a;
  Gen g(a);
  // entry: acc = x; frame [J, k] with J = pair(0, pair(i, x)), k = 0
  g.push("x");
  a.const_(i);
  g.push("i");
  g.peek("x");
  g.pair_top_acc("x");                   // acc = n = pair(i, x)
  emit_pair_const_acc(g, 0, "n");        // acc = J
  g.push("J");
  a.zero();
  g.push("k");                           // frame [J, 0]

  a.label("T_loop");
  thin_unpack(g);
  thin_probe(g);
  auto probed = g.snap();
  a.jz("L_notnew");                      // f1 == 0: y not enumerated yet
  g.peek("f0");
  a.jz("L_new");                         // f1 == 1, f0 == 0: newly enumerated
  a.label("L_notnew");
  g.restore(probed);
  g.pop_garbage_to(8);
  thin_repack_keep(g, "T_loop");
  a.label("L_new");
  g.restore(probed);
  g.pop_garbage_to(8);                   // base: [J, k, y, a, n, M, x, i]
  g.peek("M");
  g.push("M2");
  g.peek("y");
  g.sub();                               // monus(M, y): 0 <=> y >= M
  a.jz("L_join");
  thin_repack_keep(g, "T_loop");         // passed over: keep M
  a.label("L_join");
  g.peek("y");
  g.push("y2");
  g.peek("x");
  g.sub();                               // monus(y, x)
  g.push("d1");
  g.peek("x");
  g.push("x2");
  g.peek("y");
  g.sub();                               // monus(x, y)
  g.add();
  if (!complement) {
    a.jz("L_found");
  } else {
    a.jz("L_xjoined");
    g.peek("y");
    a.op(Op::Inc);
    g.push("M3");
    g.peek("x");
    g.sub();                             // monus(y+1, x): > 0 <=> x passed over
    a.jz("L_setM");
    a.op(Op::Halt);
  }
  a.label("L_setM");                     // frame' = [pair(y+1, n), k+1]
  g.peek("y");
  a.op(Op::Inc);
  g.push("M4");
  g.peek("n");
  g.pair_top_acc("n");                   // J' = pair(y+1, n)
  g.push("J1");
  g.peek("k");
  a.op(Op::Inc);
  g.push("k1");
  a.jb("T_loop");
  if (!complement) {
    a.label("L_found");
    a.op(Op::Halt);
  } else {
    a.label("L_xjoined");
    a.diverge();
  }
  return a.assemble();
}

}  // namespace

Program thin_member_program(Nat i) { return build_thin(i, false); }
Program thin_complement_program(Nat i) { return build_thin(i, true); }

Program approx_from_above_program(Nat i) {
  Asm a;
  Gen g(a);
  // entry: acc = w = pair(x, T); phase-1 frame [w, k2]
  g.push("w");
  a.zero();
  g.push("k2");

  a.label("P1_loop");
  g.reset_frame({"w", "k2"});
  g.peek("k2");
  g.unp("u");                            // acc = b
  g.push("b");                           // [w, k2, u, b]
  g.peek("w");
  g.unp("T");                            // acc = x
  g.push("x");                           // [w, k2, u, b, T, x]
  g.peek("u");
  g.push("u2");
  g.peek("x");
  // pair(x, u): A must be x; x is below u2, so stage x on top instead
  g.push("x2");
  g.peek("u");
  g.pair_top_acc("u");                   // acc = a1 = pair(x, u)
  g.push("a1");
  a.const_(i);
  g.push("i");
  g.peek("a1");
  g.pair_top_acc("a1");                  // acc = a2 = pair(i, a1)
  g.push("a2");
  g.peek("b");
  g.push("b2");
  g.peek("a2");
  g.pair_top_acc("a2");                  // acc = arg = pair(b, a2)
  a.op(Op::Call);
  g.unp("v");                            // acc = f
  auto p1 = g.snap();
  a.jz("P1_miss");
  g.pop_into_acc();                      // acc = d0
  g.push("d0");
  auto hit = g.snap();
  g.peek("T");
  a.jz("P2_d0");
  // phase-2 frame [Jm, v] with Jm = pair(w, m), m starting at d0
  g.peek("w");
  g.push("w2");
  g.peek("d0");
  g.pair_top_acc("d0");                  // acc = Jm
  g.push("Jm");
  a.zero();
  g.push("vc");                          // frame [Jm, 0]
  a.zero();
  a.jz("P2_loop");
  a.label("P1_miss");
  g.restore(p1);
  g.peek("w");
  g.push("wc");
  g.peek("k2");
  a.op(Op::Inc);
  g.push("k2c");                         // frame [w, k2+1]
  a.jb("P1_loop");

  a.label("P2_loop");
  g.reset_frame({"Jm", "v"});
  g.peek("Jm");
  g.unp("m");                            // acc = w
  g.push("w");                           // [Jm, v, m, w]
  g.peek("w");
  g.unp("T");                            // acc = x
  g.push("x");                           // [Jm, v, m, w, T, x]
  g.peek("T");
  g.push("T2");
  g.peek("v");
  g.sub();                               // monus(T, v): 0 <=> v >= T
  auto p2base = g.snap();
  a.jz("P2_done");
  g.peek("x");
  g.push("x3");
  g.peek("v");
  g.pair_top_acc("v");                   // pair(x, v)
  g.push("a1");
  a.const_(i);
  g.push("i");
  g.peek("a1");
  g.pair_top_acc("a1");                  // pair(i, a1)
  g.push("a2");
  g.peek("T");
  a.op(Op::Dec);
  g.push("Tm1");
  g.peek("a2");
  g.pair_top_acc("a2");                  // pair(T-1, a2)
  a.op(Op::Call);
  g.unp("vv");                           // acc = f
  auto probed = g.snap();
  a.jz("P2_keep");
  g.peek("m");
  g.push("m2");
  g.peek("vv");
  g.sub();                               // monus(m, vv): 0 <=> m <= vv
  a.jz("P2_keep");
  // m_next = vv
  g.peek("w");
  g.push("w3");
  g.peek("vv");
  g.pair_top_acc("vv");                  // Jm' = pair(w, vv)
  g.push("Jm1");
  g.peek("v");
  a.op(Op::Inc);
  g.push("v1");                          // frame [Jm', v+1]
  a.jb("P2_loop");
  a.label("P2_keep");
  g.restore(probed);
  g.peek("w");
  g.push("w4");
  g.peek("m");
  g.pair_top_acc("m");                   // Jm' = pair(w, m)
  g.push("Jm2");
  g.peek("v");
  a.op(Op::Inc);
  g.push("v2");                          // frame [Jm', v+1]
  a.jb("P2_loop");
  a.label("P2_done");
  g.restore(p2base);
  g.peek("m");
  a.op(Op::Halt);
  a.label("P2_d0");
  g.restore(hit);
  g.peek("d0");
  a.op(Op::Halt);
  return a.assemble();
}

namespace {

Program build_graph(Nat i, int mode) {
  // Over coded pairs n = pair(x, y), staged phi_i probed at pair(x, t).
  // mode 0: halt when some stage value equals y;
  // mode 1: halt when some stage value is < y (min refuter);
  // mode 2: halt when some stage value is > y (max refuter).
  Asm a;
  Gen g(a);
  g.push("n");      // entry: acc = n
  a.zero();
  g.push("k");      // frame [n, k]

  a.label("G_loop");
  g.reset_frame({"n", "k"});
  g.peek("k");
  g.unp("t");                            // acc = b
  g.push("b");                           // [n, k, t, b]
  g.peek("n");
  g.unp("y");                            // acc = x
  g.push("x");                           // [n, k, t, b, y, x]
  g.peek("t");
  g.push("t2");
  g.peek("x");
  g.push("x2");
  g.peek("t");
  g.pair_top_acc("t");                   // acc = pair(x, t)
  g.push("a1");
  a.const_(i);
  g.push("i");
  g.peek("a1");
  g.pair_top_acc("a1");                  // pair(i, a1)
  g.push("a2");
  g.peek("b");
  g.push("b2");
  g.peek("a2");
  g.pair_top_acc("a2");                  // pair(b, a2)
  a.op(Op::Call);
  g.unp("vv");                           // acc = f
  auto probed = g.snap();
  a.jz("G_miss");
  if (mode == 0) {
    g.peek("vv");
    g.push("vv2");
    g.peek("y");
    g.sub();                             // monus(vv, y)
    g.push("d1");
    g.peek("y");
    g.push("y2");
    g.peek("vv");
    g.sub();                             // monus(y, vv)
    g.add();
    a.jz("G_hit");
  } else if (mode == 1) {
    g.peek("y");
    g.push("y2");
    g.peek("vv");
    g.sub();                             // monus(y, vv) > 0 <=> vv < y
    a.jz("G_next");
    a.op(Op::Halt);
    a.label("G_next");
  } else {
    g.peek("vv");
    g.push("vv2");
    g.peek("y");
    g.sub();                             // monus(vv, y) > 0 <=> vv > y
    a.jz("G_next");
    a.op(Op::Halt);
    a.label("G_next");
  }
  a.label("G_miss");
  g.restore(probed);
  g.pop_garbage_to(6);                   // base [n, k, t, b, y, x]
  g.peek("n");
  g.push("nc");
  g.peek("k");
  a.op(Op::Inc);
  g.push("kc");                          // frame [n, k+1]
  a.jb("G_loop");
  if (mode == 0) {
    a.label("G_hit");
    a.op(Op::Halt);
  }
  return a.assemble();
}

void emit_eq_check(Gen& g, Nat v, const std::string& eq_label, const std::string& next_label) {
  Asm& a = g.a;
  g.peek("x");
  g.push("xa");
  a.const_(v);
  g.sub();                               // monus(x, v)
  g.push("d1");
  a.const_(v);
  g.push("vb");
  g.peek("x");
  g.sub();                               // monus(v, x)
  g.add();
  a.jz(eq_label);
  a.zero();
  a.jz(next_label);
  a.label(eq_label);
}

}  // namespace

Program graph_witness_program(Nat i) { return build_graph(i, 0); }
Program graph_refuter_program(Nat i, bool max_mode) { return build_graph(i, max_mode ? 2 : 1); }

Program finite_set_program(const std::vector<Nat>& values) {
  Asm a;
  Gen g(a);
  g.push("x");  // entry: acc = x
  int n = 0;
  for (Nat v : values) {
    std::string eq = "eq" + std::to_string(n), next = "neq" + std::to_string(n);
    emit_eq_check(g, v, eq, next);
    a.op(Op::Halt);
    a.label(next);
    ++n;
  }
  a.diverge();
  return a.assemble();
}

Program domain_minus_program(Nat i, const std::vector<Nat>& excluded) {
  Asm a;
  Gen g(a);
  g.push("x");
  int n = 0;
  for (Nat v : excluded) {
    std::string eq = "ex" + std::to_string(n), next = "nx" + std::to_string(n);
    emit_eq_check(g, v, eq, next);
    a.diverge();  // excluded value: never halt
    a.label(next);
    ++n;
  }
  a.const_(i);
  g.push("i");
  g.peek("x");
  g.pair_top_acc("x");                   // pair(i, x)
  g.push("p");
  a.zero();
  a.op(Op::Inc);
  emit_dovetail_halt_loop(a, "dm");
  return a.assemble();
}

Program compose_min_program(Nat theta_idx, Nat phi_idx) {
  Asm a;
  Gen g(a);
  // entry: acc = pair(x, v); computes theta(phi(x, pi1 v), pi2 v)
  g.unp("v");                            // acc = x
  g.push("x");
  g.peek("v");
  g.unp("t2");                           // acc = t1
  g.push("t1");
  g.peek("x");
  g.push("x2");
  g.peek("t1");
  g.pair_top_acc("t1");                  // pair(x, t1)
  g.push("a1");
  a.const_(phi_idx);
  g.push("ip");
  g.peek("a1");
  g.pair_top_acc("a1");                  // pair(phi, a1)
  g.push("n1");
  a.zero();
  a.op(Op::Inc);
  emit_dovetail_cont_loop(a, "c1");      // acc = r1; net stack +1
  g.st.push_back("b1");
  g.push("r1");
  g.peek("t2");
  g.pair_top_acc("t2");                  // pair(r1, t2)
  g.push("a2");
  a.const_(theta_idx);
  g.push("it");
  g.peek("a2");
  g.pair_top_acc("a2");                  // pair(theta, a2)
  g.push("n2");
  a.zero();
  a.op(Op::Inc);
  emit_dovetail_halt_loop(a, "c2");
  return a.assemble();
}

}  // namespace kolmo::programs
