#include "kolmo/codec.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace kolmo {

Word word_from_string(const std::string& s) {
  Word w;
  w.bits.reserve(s.size());
  for (char c : s) {
    if (c == '0') w.bits.push_back(0);
    else if (c == '1') w.bits.push_back(1);
    else throw std::invalid_argument("word_from_string: expected only 0/1");
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (auto b : w.bits) s.push_back(b ? '1' : '0');
  return s;
}

Nat pair(Nat x, Nat y) {
  Nat s = x + y;
  // s(s+1)/2 without intermediate overflow beyond the wrap convention
  Nat t = (s % 2 == 0) ? (s / 2) * (s + 1) : s * ((s + 1) / 2);
  return t + y;
}

std::pair<Nat, Nat> unpair(Nat n) {
  // w = floor((sqrt(8n+1)-1)/2), corrected exactly with integer arithmetic.
  long double d = std::sqrt(8.0L * static_cast<long double>(n) + 1.0L);
  Nat w = static_cast<Nat>((d - 1.0L) / 2.0L);
  auto tri = [](Nat s) -> Nat {
    return (s % 2 == 0) ? (s / 2) * (s + 1) : s * ((s + 1) / 2);
  };
  while (tri(w) > n) --w;
  while (tri(w + 1) <= n) ++w;
  Nat y = n - tri(w);
  Nat x = w - y;
  return {x, y};
}

Nat word_to_nat(const Word& w) {
  // 2^len - 1 + value, mod 2^64
  Nat base = (w.size() >= 64) ? Nat(0) - 1 : ((Nat(1) << w.size()) - 1);
  Nat v = 0;
  for (auto b : w.bits) v = (v << 1) | b;
  return base + v;
}

Word nat_to_word(Nat n) {
  // Smallest L with 2^(L+1)-1 > n.
  unsigned L = std::bit_width(n + 1) - 1;
  Nat v = n - ((Nat(1) << L) - 1);
  Word w;
  w.bits.resize(L);
  for (unsigned i = 0; i < L; ++i)
    w.bits[L - 1 - i] = static_cast<std::uint8_t>((v >> i) & 1);
  return w;
}

Word bin_of(Nat x) {
  Word w;
  if (x == 0) return w;
  unsigned L = std::bit_width(x);
  w.bits.resize(L);
  for (unsigned i = 0; i < L; ++i)
    w.bits[L - 1 - i] = static_cast<std::uint8_t>((x >> i) & 1);
  return w;
}

Nat bits_value(const Word& w) {
  Nat v = 0;
  for (auto b : w.bits) v = (v << 1) | b;
  return v;
}

unsigned bin_length(Nat x) { return x == 0 ? 0u : static_cast<unsigned>(std::bit_width(x)); }

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a_str(const std::string& s, std::uint64_t seed) {
  return fnv1a(s.data(), s.size(), seed);
}

}  // namespace kolmo
