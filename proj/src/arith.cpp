#include "castella/arith.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "castella/castle.hpp"
#include "castella/group.hpp"

namespace castella {

namespace {

GroupElement left_fraction(const Element& d, const Element& u) {
  auto w = inverse_letters(d);
  auto tail = positive_letters(u);
  w.insert(w.end(), tail.begin(), tail.end());
  return reduce(w);
}

GroupElement right_fraction(const Element& w, const Element& v) {
  auto s = positive_letters(w);
  auto tail = inverse_letters(v);
  s.insert(s.end(), tail.begin(), tail.end());
  return reduce(s);
}

using DivisorList = std::shared_ptr<const std::vector<Element>>;

class DivisorCache {
 public:
  DivisorList find(const Element& u) const {
    std::shared_lock lock(mutex_);
    auto it = map_.find(u);
    return it == map_.end() ? nullptr : it->second;
  }
  DivisorList insert(const Element& u, DivisorList list) {
    std::unique_lock lock(mutex_);
    return map_.try_emplace(u, std::move(list)).first->second;
  }
  void clear() {
    std::unique_lock lock(mutex_);
    map_.clear();
  }
  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return map_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<Element, DivisorList> map_;
};

DivisorCache& cache() {
  static DivisorCache c;
  return c;
}

void check_cap(std::size_t n, const Limits& limits) {
  if (n > limits.node_cap)
    throw ResourceLimitError("divisor set exceeded node cap " + std::to_string(limits.node_cap));
}

// Every divisor other than 1 starts with a prime divisor of u.
DivisorList divisor_list(const Element& u, const Limits& limits) {
  if (auto hit = cache().find(u)) {
    check_cap(hit->size(), limits);
    return hit;
  }
  std::unordered_set<Element> acc{Element{}};
  for (Index p : prime_divisors(u)) {
    Element pe = prime(p);
    auto rest = divisor_list(quotient_left(u, pe), limits);
    for (const auto& d : *rest) {
      acc.insert(multiply(pe, d));
      check_cap(acc.size(), limits);
    }
  }
  std::vector<Element> sorted(acc.begin(), acc.end());
  std::sort(sorted.begin(), sorted.end());
  return cache().insert(u, std::make_shared<const std::vector<Element>>(std::move(sorted)));
}

}  // namespace

bool divides(const Element& d, const Element& u) { return is_positive(left_fraction(d, u)); }

bool co_divides(const Element& v, const Element& w) { return is_positive(right_fraction(w, v)); }

Element quotient_left(const Element& u, const Element& d) {
  auto g = left_fraction(d, u);
  if (!is_positive(g)) throw DomainError("element does not divide");
  return g.numerator;
}

Element quotient_right(const Element& w, const Element& v) {
  auto g = right_fraction(w, v);
  if (!is_positive(g)) throw DomainError("element does not co-divide");
  return g.numerator;
}

std::vector<Element> divisors(const Element& u, const Limits& limits) {
  return *divisor_list(u, limits);
}

std::vector<Element> co_divisors(const Element& u, const Limits& limits) {
  std::vector<Element> out;
  for (const auto& d : *divisor_list(u, limits)) out.push_back(quotient_left(u, d));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t tau(const Element& u, const Limits& limits) { return divisor_list(u, limits)->size(); }

void clear_divisor_cache() { cache().clear(); }
std::size_t divisor_cache_size() { return cache().size(); }

Element lcm(const Element& u, const Element& v) {
  return multiply(u, left_fraction(v, u).denominator);
}

Element lcm(std::span<const Element> us) {
  if (us.empty()) throw DomainError("lcm of an empty list");
  Element acc = us.front();
  for (std::size_t k = 1; k < us.size(); ++k) acc = lcm(acc, us[k]);
  return acc;
}

Element gcd(const Element& u, const Element& v, const Limits& limits) {
  const Element us[] = {u, v};
  return gcd(us, limits);
}

Element gcd(std::span<const Element> us, const Limits& limits) {
  if (us.empty()) throw DomainError("gcd of an empty list");
  std::vector<Element> common;
  for (const auto& d : *divisor_list(us.front(), limits)) {
    bool all = std::all_of(us.begin() + 1, us.end(), [&](const Element& u) { return divides(d, u); });
    if (all) common.push_back(d);
  }
  auto best = std::max_element(common.begin(), common.end(), [](const Element& a, const Element& b) {
    return a.ind() < b.ind();
  });
  for (const auto& d : common)
    if (!divides(d, *best)) throw std::logic_error("common divisors have no greatest element");
  return *best;
}

Element lcm_co(const Element& w, std::span<const Element> us, const Limits& limits) {
  std::vector<Element> qs;
  for (const auto& u : us) {
    if (!co_divides(u, w)) throw DomainError("element is not a co-divisor of the bound");
    qs.push_back(quotient_right(w, u));
  }
  return quotient_left(w, gcd(qs, limits));
}

Element gcd_co(const Element& w, std::span<const Element> us, const Limits&) {
  std::vector<Element> qs;
  for (const auto& u : us) {
    if (!co_divides(u, w)) throw DomainError("element is not a co-divisor of the bound");
    qs.push_back(quotient_right(w, u));
  }
  return quotient_left(w, lcm(qs));
}

PrimeMultiset pdm(const Element& u) {
  const Word q = u.word();
  PrimeMultiset out;
  for (std::size_t j = 0; j < q.size(); ++j) {
    Word prefix(q.begin(), q.begin() + static_cast<std::ptrdiff_t>(j));
    if (auto c = castle_words(prefix, Word{q[j]})) ++out[c->left.front()];
  }
  return out;
}

PrimeMultiset pdm_co(const Element& u) {
  const Word q = u.word();
  PrimeMultiset out;
  for (std::size_t r = 0; r < q.size(); ++r) {
    Word suffix(q.begin() + static_cast<std::ptrdiff_t>(r) + 1, q.end());
    if (auto c = castle_words(Word{q[r]}, min_word(normalize(suffix)))) ++out[c->right.front()];
  }
  return out;
}

std::set<Index> prime_divisors(const Element& u) {
  std::set<Index> out;
  for (const auto& [p, m] : pdm(u)) out.insert(p);
  return out;
}

std::set<Index> prime_co_divisors(const Element& u) {
  std::set<Index> out;
  for (const auto& [p, m] : pdm_co(u)) out.insert(p);
  return out;
}

namespace {

std::size_t total(const PrimeMultiset& m) {
  std::size_t n = 0;
  for (const auto& [p, k] : m) n += k;
  return n;
}

}  // namespace

std::size_t omega(const Element& u) { return pdm(u).size(); }
std::size_t big_omega(const Element& u) { return total(pdm(u)); }
std::size_t omega_co(const Element& u) { return pdm_co(u).size(); }
std::size_t big_omega_co(const Element& u) { return total(pdm_co(u)); }

Index beta(Index p, Index r) {
  if (p == r) return p;
  Element q = quotient_left(lcm(prime(p), prime(r)), prime(p));
  if (q.ind() != 1) throw std::logic_error("lcm of two primes is not of index 2");
  return q.runs().front().index;
}

namespace {

Element lcm_of_prime_powers(const PrimeMultiset& m) {
  std::vector<Element> powers;
  for (const auto& [p, k] : m) powers.push_back(prime(p, k));
  return powers.empty() ? Element{} : lcm(powers);
}

}  // namespace

bool is_fully_castlable(const Element& u) { return lcm_of_prime_powers(pdm(u)) == u; }

std::vector<Element> gfc_decompose(const Element& u) {
  std::vector<Element> out;
  Element rest = u;
  while (!rest.is_identity()) {
    Element head = lcm_of_prime_powers(pdm(rest));
    if (!divides(head, rest)) throw std::logic_error("prime-power lcm does not divide");
    out.push_back(head);
    rest = quotient_left(rest, head);
  }
  return out;
}

}  // namespace castella
