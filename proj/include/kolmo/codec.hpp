#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kolmo {

using Nat = std::uint64_t;

// A finite binary word, most significant bit first. Possibly empty.
struct Word {
  std::vector<std::uint8_t> bits;

  Word() = default;
  explicit Word(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

  std::size_t size() const { return bits.size(); }
  bool empty() const { return bits.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits[i]; }
  bool operator==(const Word&) const = default;

  void append_bit(int b) { bits.push_back(static_cast<std::uint8_t>(b & 1)); }
  void append(const Word& w) { bits.insert(bits.end(), w.bits.begin(), w.bits.end()); }
};

Word word_from_string(const std::string& s);   // "0101" -> Word
std::string word_to_string(const Word& w);

// Cantor pairing, pair(x,y) = (x+y)(x+y+1)/2 + y, arithmetic mod 2^64.
Nat pair(Nat x, Nat y);
std::pair<Nat, Nat> unpair(Nat n);

// Canonical length-lexicographic bijection between words and naturals:
// eps -> 0, "0" -> 1, "1" -> 2, "00" -> 3, ...
// Words longer than 63 bits wrap mod 2^64 (desk-scale inputs stay well below).
Nat word_to_nat(const Word& w);
Word nat_to_word(Nat n);

// Plain binary numeral of x, empty for 0. Inverse of "value of bits".
Word bin_of(Nat x);
Nat bits_value(const Word& w);   // value of w read as a binary numeral

// Length of bin_of(x): 0 for x = 0, floor(log2 x) + 1 otherwise.
unsigned bin_length(Nat x);

// FNV-1a over bytes, used for config/world hashes.
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 1469598103934665603ull);
std::uint64_t fnv1a_str(const std::string& s, std::uint64_t seed = 1469598103934665603ull);

}  // namespace kolmo
