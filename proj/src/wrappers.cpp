#include "kolmo/wrappers.hpp"

#include "kolmo/minfn.hpp"
#include "kolmo/programs.hpp"
#include "kolmo/setfam.hpp"

namespace kolmo {

WrapperWord wrapper_decode(const Word& q) {
  WrapperWord w;
  std::size_t k = 0;
  while (k < q.size() && q[k] == 0) ++k;
  if (k == q.size()) {
    w.zeros = true;
    w.slot = k;
    return w;
  }
  w.slot = k;
  w.payload.bits.assign(q.bits.begin() + static_cast<long>(k) + 1, q.bits.end());
  return w;
}

Word wrapper_encode(Nat slot, const Word& payload) {
  Word q;
  q.bits.assign(static_cast<std::size_t>(slot), 0);
  q.append_bit(1);
  q.append(payload);
  return q;
}

MachineIndex default_growth_index() {
  return programs::index_of(programs::double_plus2());
}

SlotSpec slot_spec(WrapKind kind, Nat slot) {
  SlotSpec s;
  if (slot == 0) {
    s.kind = SlotSpec::Kind::Plain;
    return s;
  }
  switch (kind) {
    case WrapKind::K:
      return s;  // only the plain slot is defined
    case WrapKind::Barz: {
      switch (slot) {
        case 2: s = {SlotSpec::Kind::BarzAlpha, minfn::log2p2, setfam::evens}; return s;
        case 3: s = {SlotSpec::Kind::BarzAlpha, minfn::log2p2, setfam::squares}; return s;
        case 4: s = {SlotSpec::Kind::BarzAlpha, minfn::log2p2, setfam::odds}; return s;
        case 5: s = {SlotSpec::Kind::BarzAlpha, minfn::id, setfam::evens}; return s;
        case 6: s = {SlotSpec::Kind::BarzAlpha, minfn::id, setfam::squares}; return s;
        case 7: s = {SlotSpec::Kind::BarzAlpha, minfn::half, setfam::evens}; return s;
        default: break;
      }
      if (slot >= 8) {
        Nat m = slot - 8;
        if (m % 2 == 0) {
          s.kind = SlotSpec::Kind::BaseWordFn;
          s.base = m / 2;
        } else {
          auto [phi, set] = unpair(m / 2);
          s.kind = SlotSpec::Kind::BarzAlpha;
          s.phi = phi;
          s.set = set;
        }
      }
      return s;
    }
    case WrapKind::Min: {
      switch (slot) {
        case 1: s.kind = SlotSpec::Kind::StagedUniv; return s;
        case 2: s = {SlotSpec::Kind::Marker, minfn::id, setfam::naturals, 0, 0, Side::Sigma}; return s;
        case 3: s = {SlotSpec::Kind::Marker, minfn::id, setfam::evens, 0, 0, Side::Sigma}; return s;
        case 4:
          s = {SlotSpec::Kind::Marker, minfn::id, setfam::odds, 0, default_growth_index(), Side::Pi};
          return s;
        case 5: s = {SlotSpec::Kind::Marker, minfn::log2p2, setfam::evens, 0, 0, Side::Sigma}; return s;
        default: break;
      }
      if (slot >= 8) {
        Nat m = slot - 8;
        Nat tag = m % 4, payload = m / 4;
        if (tag == 0) {
          s.kind = SlotSpec::Kind::Staged2Arg;
          s.base = payload;
        } else if (tag == 1) {
          auto [phi, set] = unpair(payload);
          s = {SlotSpec::Kind::Marker, phi, set, 0, 0, Side::Sigma};
        } else if (tag == 2) {
          auto [phi, rest] = unpair(payload);
          auto [set, growth] = unpair(rest);
          s = {SlotSpec::Kind::Marker, phi, set, 0, growth, Side::Pi};
        }
      }
      return s;
    }
    case WrapKind::Max: {
      switch (slot) {
        case 1: s.kind = SlotSpec::Kind::StagedUniv; return s;
        case 2: s = {SlotSpec::Kind::Marker, minfn::id, setfam::evens, 0, 0, Side::Sigma}; return s;
        case 3: s = {SlotSpec::Kind::Marker, minfn::id, setfam::odds, 0, 0, Side::Pi}; return s;
        case 4: s = {SlotSpec::Kind::Marker, minfn::log2p2, setfam::evens, 0, 0, Side::Sigma}; return s;
        case 5: s = {SlotSpec::Kind::Marker, minfn::id, setfam::squares, 0, 0, Side::Sigma}; return s;
        default: break;
      }
      if (slot >= 8) {
        Nat m = slot - 8;
        Nat tag = m % 4, payload = m / 4;
        if (tag == 0) {
          s.kind = SlotSpec::Kind::Staged2Arg;
          s.base = payload;
        } else if (tag == 1) {
          auto [phi, set] = unpair(payload);
          s = {SlotSpec::Kind::Marker, phi, set, 0, 0, Side::Sigma};
        } else if (tag == 2) {
          auto [phi, set] = unpair(payload);
          s = {SlotSpec::Kind::Marker, phi, set, 0, 0, Side::Pi};
        }
      }
      return s;
    }
  }
  return s;
}

Nat eta_barzdins(Nat phi_idx, Nat set_idx) {
  if (phi_idx == minfn::log2p2 && set_idx == setfam::evens) return 2;
  if (phi_idx == minfn::log2p2 && set_idx == setfam::squares) return 3;
  if (phi_idx == minfn::log2p2 && set_idx == setfam::odds) return 4;
  if (phi_idx == minfn::id && set_idx == setfam::evens) return 5;
  if (phi_idx == minfn::id && set_idx == setfam::squares) return 6;
  if (phi_idx == minfn::half && set_idx == setfam::evens) return 7;
  return 8 + 2 * pair(phi_idx, set_idx) + 1;
}

Nat eta_kmax(Side side, Nat phi_idx, Nat set_idx) {
  if (side == Side::Sigma) {
    if (phi_idx == minfn::id && set_idx == setfam::evens) return 2;
    if (phi_idx == minfn::log2p2 && set_idx == setfam::evens) return 4;
    if (phi_idx == minfn::id && set_idx == setfam::squares) return 5;
    return 8 + 4 * pair(phi_idx, set_idx) + 1;
  }
  if (phi_idx == minfn::id && set_idx == setfam::odds) return 3;
  return 8 + 4 * pair(phi_idx, set_idx) + 2;
}

Nat eta_kmin(Side side, Nat phi_idx, Nat set_idx, MachineIndex growth) {
  if (side == Side::Sigma) {
    if (phi_idx == minfn::id && set_idx == setfam::naturals) return 2;
    if (phi_idx == minfn::id && set_idx == setfam::evens) return 3;
    if (phi_idx == minfn::log2p2 && set_idx == setfam::evens) return 5;
    return 8 + 4 * pair(phi_idx, set_idx) + 1;
  }
  if (phi_idx == minfn::id && set_idx == setfam::odds && growth == default_growth_index())
    return 4;
  return 8 + 4 * pair(phi_idx, pair(set_idx, growth)) + 2;
}

}  // namespace kolmo
