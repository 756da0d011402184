#pragma once

#include <optional>
#include <vector>

#include "castella/word.hpp"

namespace castella {

/// p_i p_j = p_left p_right.
struct LetterCastle {
  Index left = 0;
  Index right = 0;
  friend bool operator==(const LetterCastle&, const LetterCastle&) = default;
};

std::optional<LetterCastle> castle_letters(Index i, Index j);

struct CastleStep {
  Index i = 0;
  Index j = 0;
  Index left = 0;
  Index right = 0;
};

/// UV = left * right with ind(left) = ind(V), ind(right) = ind(U).
struct WordCastle {
  Word left;
  Word right;
  friend bool operator==(const WordCastle&, const WordCastle&) = default;
};

std::optional<WordCastle> castle_words(const Word& u, const Word& v,
                                       std::vector<CastleStep>* trace = nullptr);

/// uv = left * right, with left playing the role of v and right of u.
struct CastlePair {
  Element left;
  Element right;
  friend bool operator==(const CastlePair&, const CastlePair&) = default;
};

std::optional<CastlePair> weak_castle(const Element& u, const Element& v,
                                      std::vector<CastleStep>* trace = nullptr);
std::optional<CastlePair> strong_castle(const Element& u, const Element& v,
                                        std::vector<CastleStep>* trace = nullptr);
std::optional<CastlePair> free_castle(const Element& u, const Element& v,
                                      std::vector<CastleStep>* trace = nullptr);

bool is_weakly_castlable(const Element& u, const Element& v);
bool is_strongly_castlable(const Element& u, const Element& v);
bool is_castled_free(const Element& u, const Element& v);

}  // namespace castella
