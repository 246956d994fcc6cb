#pragma once

#include <vector>

#include "kolmo/assemble.hpp"
#include "kolmo/machine.hpp"

namespace kolmo::programs {

// Fixed corpus programs. Indices are word_to_nat of the program text.
const Program& identity();       // empty word: halts with the decoded input
const Program& halt_now();       // [Halt]
const Program& diverger();       // tight self-loop
const Program& evens();          // halts iff input even
const Program& odds();           // halts iff input odd
const Program& squares();        // halts iff input is a perfect square
const Program& log2p2();         // floor(log2(x+2)), total
const Program& half();           // floor(x/2)
const Program& quarter();        // floor(x/4)
const Program& dec1();           // monus(x,1)
const Program& double_plus2();   // 2x+2
const Program& qry_echo();       // oracle membership bit of the input
const Program& qry_search();     // least oracle member (diverges on empty oracle)
const Program& two_branch_53();  // f(x,0)=5, f(x,1)=3, else undefined
const Program& universal();      // u with phi_u(pair(i,x)) ~ phi_i(x)

Nat index_of(const Program& p);
Nat universal_index();

// s-m-n instance: returned program computes phi_i(pair(z, x)) on input x,
// through a geometric dovetail (affine budget overhead).
Program smn_program(Nat i, Nat z);

// Membership (resp. complement) of the strictly increasing subsequence of
// W_i's replay enumeration. Complement is complete only for infinite W_i.
Program thin_member_program(Nat i);
Program thin_complement_program(Nat i);

// phi_xi(i): decreasing-in-t approximation from above of the staged minimum
// of the two-argument phi_i; input pair(x, t).
Program approx_from_above_program(Nat i);

// Graph pieces for min/max of a staged phi_i, over coded pairs pair(x,y):
// sigma: some stage value equals y; refuter: some stage value is < y (min)
// or > y (max).
Program graph_witness_program(Nat i);
Program graph_refuter_program(Nat i, bool max_mode);

// Halts exactly on the listed values (at most 12, generator limit).
Program finite_set_program(const std::vector<Nat>& values);

// Halts iff input is in W_i and differs from every excluded value.
Program domain_minus_program(Nat i, const std::vector<Nat>& excluded);

// C(x,v) = theta(phi(x, pi1 v), pi2 v) on input pair(x, v); both indices are
// two-argument staged functions evaluated through dovetailed calls.
Program compose_min_program(Nat theta_idx, Nat phi_idx);

// Shared emitters (used by the generators above and by tests).
void emit_pair_acc(Asm& a);  // pre: st[...,A], acc=B; post: acc=pair(A,B), st[...,A,B]
void emit_dovetail_halt_loop(Asm& a, const std::string& tag);  // pre: st[...,n], acc=1
void emit_dovetail_cont_loop(Asm& a, const std::string& tag);  // same, but falls through with the value

}  // namespace kolmo::programs
