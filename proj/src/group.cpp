#include "castella/group.hpp"

#include <limits>
#include <map>

namespace castella {

namespace {

using Exponents = std::map<Index, Exponent>;

Exponents to_map(const Element& u) {
  Exponents m;
  for (const auto& r : u.runs()) m.emplace(r.index, r.exponent);
  return m;
}

Element from_map(const Exponents& m) {
  std::vector<Run> runs;
  runs.reserve(m.size());
  for (const auto& [j, e] : m) runs.push_back({j, e});
  return Element::from_runs(std::move(runs));
}

// Drop one p_{j0} from the top of both halves: letters above j0+1 slide down one place.
void cancel_at(Exponents& m, Index j0) {
  if (--m[j0] == 0) m.erase(j0);
  Exponents shifted;
  for (auto it = m.begin(); it != m.end();) {
    if (it->first >= j0 + 2) {
      shifted.emplace(it->first - 1, it->second);
      it = m.erase(it);
    } else {
      ++it;
    }
  }
  m.merge(shifted);
}

}  // namespace

GroupElement lowest_terms(Element x, Element y) {
  Exponents a = to_map(x), b = to_map(y);
  for (;;) {
    bool changed = false;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
      Index j0 = it->first;
      if (!b.count(j0) || a.count(j0 + 1) || b.count(j0 + 1)) continue;
      cancel_at(a, j0);
      cancel_at(b, j0);
      changed = true;
      break;
    }
    if (!changed) break;
  }
  return {from_map(a), from_map(b)};
}

// Each positive letter is walked left through the pending block of inverses:
// p_i^{-1} p_j = p_{j+1} p_i^{-1} (i<j), p_i^{-1} p_j = p_j p_{i+1}^{-1} (i>j),
// and p_i^{-1} p_i cancels.
GroupElement reduce(std::span<const SignedLetter> word) {
  Word pos;
  Word neg;
  for (const auto& s : word) {
    if (s.sign < 0) {
      neg.push_back(s.index);
      continue;
    }
    Index j = s.index;
    bool consumed = false;
    for (std::size_t t = neg.size(); t-- > 0;) {
      Index i = neg[t];
      if (i == j) {
        neg.erase(neg.begin() + static_cast<std::ptrdiff_t>(t));
        consumed = true;
        break;
      }
      if (i < j) {
        if (j == std::numeric_limits<Index>::max()) throw DomainError("letter index overflow");
        ++j;
      } else {
        if (i == std::numeric_limits<Index>::max()) throw DomainError("letter index overflow");
        ++neg[t];
      }
    }
    if (!consumed) pos.push_back(j);
  }
  Word den(neg.rbegin(), neg.rend());
  return lowest_terms(normalize(pos), normalize(den));
}

std::vector<SignedLetter> positive_letters(const Element& u) {
  std::vector<SignedLetter> out;
  for (Index j : u.word()) out.push_back({j, 1});
  return out;
}

std::vector<SignedLetter> inverse_letters(const Element& u) {
  Word w = u.word();
  std::vector<SignedLetter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({*it, -1});
  return out;
}

std::vector<SignedLetter> signed_word(const GroupElement& g) {
  auto out = positive_letters(g.numerator);
  auto tail = inverse_letters(g.denominator);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

GroupElement to_group(const Element& u) { return {u, Element{}}; }

GroupElement multiply_group(const GroupElement& a, const GroupElement& b) {
  auto w = signed_word(a);
  auto tail = signed_word(b);
  w.insert(w.end(), tail.begin(), tail.end());
  return reduce(w);
}

GroupElement invert(const GroupElement& a) {
  auto w = positive_letters(a.denominator);
  auto tail = inverse_letters(a.numerator);
  w.insert(w.end(), tail.begin(), tail.end());
  return reduce(w);
}

bool is_positive(const GroupElement& a) { return a.denominator.is_identity(); }

Element to_element(const GroupElement& a) {
  if (!is_positive(a)) throw DomainError("group element is not positive");
  return a.numerator;
}

}  // namespace castella
