#include "castella/castle.hpp"

#include <limits>
#include <stdexcept>

#include "castella/arith.hpp"

namespace castella {

std::optional<LetterCastle> castle_letters(Index i, Index j) {
  if (j == i + 1 && i != std::numeric_limits<Index>::max()) return std::nullopt;
  if (i == j) return LetterCastle{j, i};
  if (i > j) {
    if (i == std::numeric_limits<Index>::max()) throw DomainError("letter index overflow");
    return LetterCastle{j, i + 1};
  }
  return LetterCastle{j - 1, i};
}

std::optional<WordCastle> castle_words(const Word& u, const Word& v,
                                       std::vector<CastleStep>* trace) {
  WordCastle out{v, Word(u.size())};
  for (std::size_t k = u.size(); k-- > 0;) {
    Index x = u[k];
    for (auto& y : out.left) {
      auto c = castle_letters(x, y);
      if (!c) return std::nullopt;
      if (trace) trace->push_back({x, y, c->left, c->right});
      y = c->left;
      x = c->right;
    }
    out.right[k] = x;
  }
  return out;
}

namespace {

std::optional<CastlePair> to_pair(const std::optional<WordCastle>& w) {
  if (!w) return std::nullopt;
  return CastlePair{normalize(w->left), normalize(w->right)};
}

}  // namespace

std::optional<CastlePair> weak_castle(const Element& u, const Element& v,
                                      std::vector<CastleStep>* trace) {
  return to_pair(castle_words(max_word(u), max_word(v), trace));
}

std::optional<CastlePair> strong_castle(const Element& u, const Element& v,
                                        std::vector<CastleStep>* trace) {
  auto strong = to_pair(castle_words(max_word(u), min_word(v), trace));
  if (strong) {
    auto weak = weak_castle(u, v);
    if (!weak || *weak != *strong)
      throw std::logic_error("strong castling disagrees with weak castling");
  }
  return strong;
}

std::optional<CastlePair> free_castle(const Element& u, const Element& v,
                                      std::vector<CastleStep>* trace) {
  auto c = weak_castle(u, v, trace);
  if (!c) return std::nullopt;
  auto pu = prime_divisors(u);
  for (Index p : prime_divisors(c->left))
    if (pu.count(p)) return std::nullopt;
  return c;
}

bool is_weakly_castlable(const Element& u, const Element& v) { return weak_castle(u, v).has_value(); }
bool is_strongly_castlable(const Element& u, const Element& v) {
  return strong_castle(u, v).has_value();
}
bool is_castled_free(const Element& u, const Element& v) { return free_castle(u, v).has_value(); }

}  // namespace castella
