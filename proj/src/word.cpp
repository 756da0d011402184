#include "castella/word.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <unordered_set>

namespace castella {

namespace {

Index checked_add(Index a, std::uint64_t b) {
  if (a > std::numeric_limits<Index>::max() - b) throw DomainError("letter index overflow");
  return a + b;
}

void hash_mix(std::size_t& seed, std::uint64_t v) {
  seed ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

Element Element::from_runs(std::vector<Run> runs) {
  for (std::size_t k = 0; k < runs.size(); ++k) {
    if (runs[k].exponent == 0) throw DomainError("zero exponent in normal form");
    if (k > 0 && runs[k - 1].index >= runs[k].index)
      throw DomainError("normal-form indices must strictly increase");
  }
  Element e;
  e.runs_ = std::move(runs);
  return e;
}

std::uint64_t Element::ind() const noexcept {
  std::uint64_t n = 0;
  for (const auto& r : runs_) n += r.exponent;
  return n;
}

Exponent Element::exponent_of(Index j) const noexcept {
  auto it = std::lower_bound(runs_.begin(), runs_.end(), j,
                             [](const Run& r, Index x) { return r.index < x; });
  return it != runs_.end() && it->index == j ? it->exponent : 0;
}

Word Element::word() const {
  Word w;
  w.reserve(ind());
  for (const auto& r : runs_) w.insert(w.end(), r.exponent, r.index);
  return w;
}

// Moving p_b left past a letter p_a with a > b turns it into p_{a+1}, so every
// run above b climbs by e and b lands just below them.
void Element::append(Index b, Exponent e) {
  if (e == 0) return;
  auto it = std::upper_bound(runs_.begin(), runs_.end(), b,
                             [](Index x, const Run& r) { return x < r.index; });
  for (auto jt = it; jt != runs_.end(); ++jt) jt->index = checked_add(jt->index, e);
  if (it != runs_.begin() && std::prev(it)->index == b)
    std::prev(it)->exponent += e;
  else
    runs_.insert(it, Run{b, e});
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.ind() <=> b.ind(); c != 0) return c;
  std::size_t ra = 0, rb = 0;
  Exponent ua = 0, ub = 0;
  while (ra < a.runs_.size() && rb < b.runs_.size()) {
    Index ia = a.runs_[ra].index, ib = b.runs_[rb].index;
    if (ia != ib) return ia <=> ib;
    Exponent la = a.runs_[ra].exponent - ua, lb = b.runs_[rb].exponent - ub;
    Exponent step = std::min(la, lb);
    ua += step;
    ub += step;
    if (ua == a.runs_[ra].exponent) ++ra, ua = 0;
    if (ub == b.runs_[rb].exponent) ++rb, ub = 0;
  }
  return std::strong_ordering::equal;
}

Element identity() { return Element{}; }

Element prime(Index j, Exponent e) {
  Element u;
  u.append(j, e);
  return u;
}

Element normalize(const Word& w) {
  Element u;
  for (Index b : w) u.append(b);
  return u;
}

std::uint64_t ind(const Word& w) { return w.size(); }
std::uint64_t ind(const Element& e) { return e.ind(); }

std::uint64_t sigma(const Word& w) {
  std::uint64_t s = 0;
  for (Index i : w) s += i;
  return s;
}

Element multiply(const Element& a, const Element& b) {
  Element c = a;
  for (const auto& r : b.runs()) c.append(r.index, r.exponent);
  return c;
}

Element power(const Element& u, std::uint64_t n) {
  Element c;
  for (std::uint64_t k = 0; k < n; ++k) c = multiply(c, u);
  return c;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t seed = w.size();
  for (Index i : w) hash_mix(seed, i);
  return seed;
}

std::vector<Word> enumerate_words(const Element& u, const Limits& limits) {
  std::unordered_set<Word, WordHash> seen;
  std::deque<Word> queue;
  Word start = u.word();
  seen.insert(start);
  queue.push_back(std::move(start));
  auto visit = [&](Word w) {
    if (seen.insert(w).second) {
      if (seen.size() > limits.node_cap)
        throw ResourceLimitError("word enumeration exceeded node cap " +
                                 std::to_string(limits.node_cap));
      queue.push_back(std::move(w));
    }
  };
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      Index a = w[k], b = w[k + 1];
      if (a > b) {
        Word x = w;
        x[k] = b;
        x[k + 1] = checked_add(a, 1);
        visit(std::move(x));
      } else if (b - a >= 2) {
        Word x = w;
        x[k] = b - 1;
        x[k + 1] = a;
        visit(std::move(x));
      }
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Word max_word(const Element& u) { return u.word(); }

Word min_word(const Element& u) {
  Word w = u.word();
  std::size_t k = 0;
  while (k + 1 < w.size()) {
    if (w[k + 1] >= w[k] + 2) {
      Index a = w[k];
      w[k] = w[k + 1] - 1;
      w[k + 1] = a;
      if (k > 0) --k;
    } else {
      ++k;
    }
  }
  return w;
}

bool word_precedes(const Word& a, const Word& b, const Limits& limits) {
  if (normalize(a) != normalize(b)) throw DomainError("words belong to different elements");
  if (a == b) return true;
  const std::uint64_t target = sigma(b);
  if (sigma(a) >= target) return false;
  std::unordered_set<Word, WordHash> seen{a};
  std::deque<Word> queue{a};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
      if (w[k] <= w[k + 1]) continue;
      Word x = w;
      x[k] = w[k + 1];
      x[k + 1] = checked_add(w[k], 1);
      if (x == b) return true;
      if (sigma(x) >= target || !seen.insert(x).second) continue;
      if (seen.size() > limits.node_cap)
        throw ResourceLimitError("word order search exceeded node cap " +
                                 std::to_string(limits.node_cap));
      queue.push_back(std::move(x));
    }
  }
  return false;
}

Element iota(const Element& u) {
  std::vector<Run> runs = u.runs();
  for (auto& r : runs)
    if (r.index > 0) r.index = checked_add(r.index, 1);
  return Element::from_runs(std::move(runs));
}

Element iota_inverse(const Element& u) {
  if (u.exponent_of(1) != 0) throw DomainError("element is not in the image of iota");
  std::vector<Run> runs = u.runs();
  for (auto& r : runs)
    if (r.index > 1) --r.index;
  return Element::from_runs(std::move(runs));
}

}  // namespace castella

std::size_t std::hash<castella::Element>::operator()(const castella::Element& e) const noexcept {
  std::size_t seed = e.runs().size();
  for (const auto& r : e.runs()) {
    seed ^= std::hash<std::uint64_t>{}(r.index) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    seed ^= std::hash<std::uint64_t>{}(r.exponent) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}
