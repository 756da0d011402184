#pragma once

#include <span>
#include <vector>

#include "castella/word.hpp"

namespace castella {

struct SignedLetter {
  Index index = 0;
  int sign = 1;  // +1 for p_j, -1 for p_j^{-1}
  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

/// numerator * denominator^{-1}, always in lowest terms.
struct GroupElement {
  Element numerator;
  Element denominator;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

GroupElement reduce(std::span<const SignedLetter> word);

/// x followed by y^{-1}, i.e. the letters of y reversed with negative sign.
std::vector<SignedLetter> signed_word(const GroupElement& g);
std::vector<SignedLetter> positive_letters(const Element& u);
std::vector<SignedLetter> inverse_letters(const Element& u);

GroupElement to_group(const Element& u);
GroupElement multiply_group(const GroupElement& a, const GroupElement& b);
GroupElement invert(const GroupElement& a);

bool is_positive(const GroupElement& a);
/// Throws DomainError when the denominator is not trivial.
Element to_element(const GroupElement& a);

/// Lowest-terms cancellation on a fraction whose two halves are already normal.
GroupElement lowest_terms(Element x, Element y);

}  // namespace castella
