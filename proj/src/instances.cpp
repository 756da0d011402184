#include "castella/instances.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <unordered_set>

#include "castella/arith.hpp"
#include "castella/text.hpp"

namespace castella {

Element ThompsonMonoid::multiply(const Element& a, const Element& b) const {
  return castella::multiply(a, b);
}

FactorPairs<Element> ThompsonMonoid::divisor_pairs(const Element& u) const {
  FactorPairs<Element> out;
  for (const auto& d : divisors(u, limits_)) out.emplace_back(d, quotient_left(u, d));
  return out;
}

std::string ThompsonMonoid::render(const Element& u) const { return castella::render(u); }

void FreeAbelianMonoid::check(const AbelianElement& u) const {
  for (const auto& [j, e] : u.exponents) {
    if (e == 0) throw DomainError("zero exponent in abelian element");
    if (generators_ != 0 && j >= generators_)
      throw DomainError("generator p" + std::to_string(j) + " outside a monoid with " +
                        std::to_string(generators_) + " generators");
  }
}

AbelianElement FreeAbelianMonoid::generator(Index j, Exponent e) const {
  AbelianElement u;
  if (e > 0) u.exponents[j] = e;
  check(u);
  return u;
}

AbelianElement FreeAbelianMonoid::multiply(const AbelianElement& a, const AbelianElement& b) const {
  AbelianElement c = a;
  for (const auto& [j, e] : b.exponents) {
    auto& slot = c.exponents[j];
    if (slot > std::numeric_limits<Exponent>::max() - e) throw DomainError("exponent overflow");
    slot += e;
  }
  return c;
}

std::vector<AbelianElement> FreeAbelianMonoid::divisors(const AbelianElement& u) const {
  std::vector<AbelianElement> out{AbelianElement{}};
  for (const auto& [j, e] : u.exponents) {
    std::vector<AbelianElement> next;
    for (const auto& d : out) {
      for (Exponent k = 0; k <= e; ++k) {
        AbelianElement x = d;
        if (k > 0) x.exponents[j] = k;
        next.push_back(std::move(x));
        if (next.size() > limits_.node_cap)
          throw ResourceLimitError("divisor set exceeded node cap " + std::to_string(limits_.node_cap));
      }
    }
    out = std::move(next);
  }
  return out;
}

FactorPairs<AbelianElement> FreeAbelianMonoid::divisor_pairs(const AbelianElement& u) const {
  FactorPairs<AbelianElement> out;
  for (auto& d : divisors(u)) {
    AbelianElement rest;
    for (const auto& [j, e] : u.exponents) {
      auto it = d.exponents.find(j);
      Exponent k = it == d.exponents.end() ? 0 : it->second;
      if (e > k) rest.exponents[j] = e - k;
    }
    out.emplace_back(std::move(d), std::move(rest));
  }
  return out;
}

bool FreeAbelianMonoid::divides(const AbelianElement& d, const AbelianElement& u) const {
  for (const auto& [j, e] : d.exponents) {
    auto it = u.exponents.find(j);
    if (it == u.exponents.end() || it->second < e) return false;
  }
  return true;
}

std::uint64_t FreeAbelianMonoid::tau(const AbelianElement& u) const {
  std::uint64_t t = 1;
  for (const auto& [j, e] : u.exponents) t *= e + 1;
  return t;
}

int FreeAbelianMonoid::mu(const AbelianElement& u) const {
  for (const auto& [j, e] : u.exponents)
    if (e > 1) return 0;
  return u.exponents.size() % 2 ? -1 : 1;
}

int FreeAbelianMonoid::lambda(const AbelianElement& u) const { return big_omega(u) % 2 ? -1 : 1; }

std::uint64_t FreeAbelianMonoid::omega(const AbelianElement& u) const { return u.exponents.size(); }

std::uint64_t FreeAbelianMonoid::big_omega(const AbelianElement& u) const {
  std::uint64_t n = 0;
  for (const auto& [j, e] : u.exponents) n += e;
  return n;
}

AbelianElement FreeAbelianMonoid::lcm(const AbelianElement& a, const AbelianElement& b) const {
  AbelianElement c = a;
  for (const auto& [j, e] : b.exponents) c.exponents[j] = std::max(c.exponents[j], e);
  return c;
}

AbelianElement FreeAbelianMonoid::gcd(const AbelianElement& a, const AbelianElement& b) const {
  AbelianElement c;
  for (const auto& [j, e] : a.exponents) {
    auto it = b.exponents.find(j);
    if (it != b.exponents.end()) c.exponents[j] = std::min(e, it->second);
  }
  return c;
}

std::string FreeAbelianMonoid::render(const AbelianElement& u) const {
  if (u.exponents.empty()) return "1";
  std::string out;
  for (const auto& [j, e] : u.exponents) {
    if (!out.empty()) out += ' ';
    out += 'p' + std::to_string(j);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

// Lucy_Hedgehog prime counting.
std::uint64_t prime_pi(std::uint64_t n) {
  if (n < 2) return 0;
  const std::uint64_t r = isqrt(n);
  std::vector<std::uint64_t> lo(r + 2), hi(r + 2);
  for (std::uint64_t v = 1; v <= r; ++v) {
    lo[v] = v - 1;
    hi[v] = n / v - 1;
  }
  for (std::uint64_t p = 2; p <= r; ++p) {
    if (lo[p] == lo[p - 1]) continue;
    const std::uint64_t sp = lo[p - 1];
    const std::uint64_t p2 = p * p;
    const std::uint64_t top = std::min(r, n / p2);
    for (std::uint64_t i = 1; i <= top; ++i) {
      std::uint64_t d = i * p;
      hi[i] -= (d <= r ? hi[d] : lo[n / d]) - sp;
    }
    for (std::uint64_t v = r; v >= p2; --v) lo[v] -= lo[v / p] - sp;
  }
  return hi[1];
}

std::uint64_t nth_prime(Index j) {
  double x = static_cast<double>(j) + 1.0;
  auto limit = static_cast<std::uint64_t>(x < 6 ? 15 : x * (std::log(x) + std::log(std::log(x))) + 10);
  std::vector<bool> composite(limit + 1);
  std::uint64_t seen = 0;
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    if (seen++ == j) return p;
    for (std::uint64_t q = p * p; q <= limit; q += p) composite[q] = true;
  }
  throw std::logic_error("prime sieve bound too small");
}

AbelianElement parse_natural(std::uint64_t n) {
  if (n == 0 || n > kNaturalLimit) throw DomainError("natural number must lie in [1, 10^12]");
  AbelianElement u;
  auto add = [&](std::uint64_t p, Exponent e) { u.exponents[prime_pi(p) - 1] += e; };
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    Exponent e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) add(p, e);
  }
  if (n > 1) add(n, 1);
  return u;
}

std::uint64_t to_natural(const AbelianElement& u) {
  std::uint64_t v = 1;
  for (const auto& [j, e] : u.exponents) {
    std::uint64_t p = nth_prime(j);
    for (Exponent k = 0; k < e; ++k) {
      if (v > std::numeric_limits<std::uint64_t>::max() / p) throw DomainError("natural value overflows 64 bits");
      v *= p;
    }
  }
  return v;
}

namespace {

std::uint64_t checked_shift(std::uint64_t n, std::uint64_t m) {
  if (n == 0) return 0;
  if (m >= 64 || n > (std::numeric_limits<std::uint64_t>::max() >> m))
    throw DomainError("UV exponent overflow");
  return n << m;
}

}  // namespace

UVElement uv_multiply(const UVElement& a, const UVElement& b) {
  if (a.m > std::numeric_limits<std::uint64_t>::max() - b.m) throw DomainError("UV exponent overflow");
  std::uint64_t shifted = checked_shift(a.n, b.m);
  if (shifted > std::numeric_limits<std::uint64_t>::max() - b.n) throw DomainError("UV exponent overflow");
  return {a.m + b.m, shifted + b.n};
}

FactorPairs<UVElement> uv_divisor_pairs(const UVElement& c) {
  FactorPairs<UVElement> out;
  for (std::uint64_t m2 = 0; m2 <= c.m; ++m2) {
    const std::uint64_t m1 = c.m - m2;
    for (std::uint64_t n1 = 0;; ++n1) {
      if (n1 > 0 && (m2 >= 64 || n1 > (c.n >> m2))) break;
      std::uint64_t used = n1 == 0 ? 0 : n1 << m2;
      out.push_back({{m1, n1}, {m2, c.n - used}});
    }
  }
  return out;
}

std::string UVMonoid::render(const UVElement& u) const { return render_uv(u); }

Rational folner_ratio(std::size_t k, std::size_t i, std::uint64_t n, const Limits& limits) {
  if (k == 0 || i >= k || n == 0) throw DomainError("folner ratio needs k >= 1, 0 <= i < k, n >= 1");
  std::uint64_t size = 1;
  for (std::size_t t = 0; t < k; ++t) {
    if (size > limits.node_cap / n) throw ResourceLimitError("Folner set exceeds node cap");
    size *= n;
  }
  FreeAbelianMonoid m(k, limits);
  std::unordered_set<AbelianElement> box;
  std::vector<std::uint64_t> digits(k, 0);
  for (std::uint64_t c = 0; c < size; ++c) {
    AbelianElement x;
    for (std::size_t t = 0; t < k; ++t) x = m.lcm(x, m.generator(t, digits[t]));
    box.insert(std::move(x));
    for (std::size_t t = 0; t < k && ++digits[t] == n; ++t) digits[t] = 0;
  }
  const AbelianElement g = m.generator(i);
  std::unordered_set<AbelianElement> moved;
  for (const auto& x : box) moved.insert(m.multiply(g, x));
  std::uint64_t diff = 0;
  for (const auto& x : moved) diff += !box.count(x);
  for (const auto& x : box) diff += !moved.count(x);
  return Rational(diff, box.size());
}

}  // namespace castella

std::size_t std::hash<castella::AbelianElement>::operator()(const castella::AbelianElement& e) const noexcept {
  std::size_t seed = e.exponents.size();
  for (const auto& [j, x] : e.exponents) {
    seed ^= std::hash<std::uint64_t>{}(j) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    seed ^= std::hash<std::uint64_t>{}(x) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

std::size_t std::hash<castella::UVElement>::operator()(const castella::UVElement& e) const noexcept {
  return std::hash<std::uint64_t>{}(e.m) * 31 + std::hash<std::uint64_t>{}(e.n);
}
