#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "castella/error.hpp"

namespace castella {

using Index = std::uint64_t;
using Exponent = std::uint64_t;

// A word lists letter indices left to right: {2,3,2,5} is P2 P3 P2 P5.
using Word = std::vector<Index>;

struct Run {
  Index index = 0;
  Exponent exponent = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

/// Element of Thompson's monoid, held as its normal form
/// p_{i_1}^{e_1} ... p_{i_r}^{e_r} with i_1 < ... < i_r and every e > 0.
class Element {
 public:
  Element() = default;

  /// Throws DomainError unless indices strictly increase and exponents are positive.
  static Element from_runs(std::vector<Run> runs);

  const std::vector<Run>& runs() const noexcept { return runs_; }
  bool is_identity() const noexcept { return runs_.empty(); }
  std::uint64_t ind() const noexcept;
  Exponent exponent_of(Index j) const noexcept;
  Word word() const;

  /// In-place right multiplication by p_b^e.
  void append(Index b, Exponent e = 1);

  friend bool operator==(const Element&, const Element&) = default;
  /// Canonical order: by ind, then lexicographically on the normal-form word.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  std::vector<Run> runs_;
};

Element identity();
Element prime(Index j, Exponent e = 1);

Element normalize(const Word& w);
std::uint64_t ind(const Word& w);
std::uint64_t ind(const Element& e);
/// Sum of letter indices.
std::uint64_t sigma(const Word& w);

Element multiply(const Element& a, const Element& b);
Element power(const Element& u, std::uint64_t n);

/// All words of u, sorted lexicographically.  Throws ResourceLimitError past the cap.
std::vector<Word> enumerate_words(const Element& u, const Limits& limits = {});

Word min_word(const Element& u);
Word max_word(const Element& u);

/// True iff b is reachable from a by single sigma-increasing castlings.
/// Throws DomainError if a and b are words of different elements.
bool word_precedes(const Word& a, const Word& b, const Limits& limits = {});

Element iota(const Element& u);
/// Throws DomainError when u has a p_1 factor.
Element iota_inverse(const Element& u);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace castella

template <>
struct std::hash<castella::Element> {
  std::size_t operator()(const castella::Element& e) const noexcept;
};
