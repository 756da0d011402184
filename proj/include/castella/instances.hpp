#pragma once

#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "castella/word.hpp"

namespace castella {

using Rational = boost::multiprecision::cpp_rational;

template <class E>
using FactorPairs = std::vector<std::pair<E, E>>;

/// identity, multiply, equality, finite factorizations, rendering.
template <class M>
concept IntegralMonoid = requires(const M& m, const typename M::element_type& a) {
  { m.identity() } -> std::convertible_to<typename M::element_type>;
  { m.multiply(a, a) } -> std::convertible_to<typename M::element_type>;
  { m.divisor_pairs(a) } -> std::convertible_to<FactorPairs<typename M::element_type>>;
  { m.render(a) } -> std::convertible_to<std::string>;
  { std::hash<typename M::element_type>{}(a) } -> std::convertible_to<std::size_t>;
} && std::equality_comparable<typename M::element_type>;

class ThompsonMonoid {
 public:
  using element_type = Element;
  explicit ThompsonMonoid(Limits limits = {}) : limits_(limits) {}
  Element identity() const { return {}; }
  Element multiply(const Element& a, const Element& b) const;
  /// Pairs (d, d^{-1}u) in canonical order of d.
  FactorPairs<Element> divisor_pairs(const Element& u) const;
  std::string render(const Element& u) const;

 private:
  Limits limits_;
};

struct AbelianElement {
  std::map<Index, Exponent> exponents;  // no zero entries
  friend bool operator==(const AbelianElement&, const AbelianElement&) = default;
  friend auto operator<=>(const AbelianElement&, const AbelianElement&) = default;
};

/// Free commutative monoid on generators p_0 .. p_{k-1}; k = 0 means unbounded.
/// With generator j standing for the j-th prime it is the multiplicative monoid of N.
class FreeAbelianMonoid {
 public:
  using element_type = AbelianElement;
  explicit FreeAbelianMonoid(std::size_t generators = 0, Limits limits = {})
      : generators_(generators), limits_(limits) {}
  std::size_t generators() const { return generators_; }

  AbelianElement identity() const { return {}; }
  /// Throws DomainError when j is outside the generator range.
  AbelianElement generator(Index j, Exponent e = 1) const;
  AbelianElement multiply(const AbelianElement& a, const AbelianElement& b) const;
  FactorPairs<AbelianElement> divisor_pairs(const AbelianElement& u) const;
  std::vector<AbelianElement> divisors(const AbelianElement& u) const;
  bool divides(const AbelianElement& d, const AbelianElement& u) const;
  std::uint64_t tau(const AbelianElement& u) const;
  int mu(const AbelianElement& u) const;
  int lambda(const AbelianElement& u) const;
  std::uint64_t omega(const AbelianElement& u) const;
  std::uint64_t big_omega(const AbelianElement& u) const;
  AbelianElement lcm(const AbelianElement& a, const AbelianElement& b) const;
  AbelianElement gcd(const AbelianElement& a, const AbelianElement& b) const;
  std::string render(const AbelianElement& u) const;
  void check(const AbelianElement& u) const;

 private:
  std::size_t generators_;
  Limits limits_;
};

inline constexpr std::uint64_t kNaturalLimit = 1'000'000'000'000ULL;

/// Factor n (1 <= n <= 10^12) by trial division; generator j is the j-th prime (p_0 = 2).
AbelianElement parse_natural(std::uint64_t n);
/// Product of the primes; throws DomainError on 64-bit overflow.
std::uint64_t to_natural(const AbelianElement& u);
/// Number of primes <= x.
std::uint64_t prime_pi(std::uint64_t x);
/// The j-th prime, counting from p_0 = 2.
std::uint64_t nth_prime(Index j);

struct UVElement {
  std::uint64_t m = 0;  // U exponent
  std::uint64_t n = 0;  // V exponent
  friend bool operator==(const UVElement&, const UVElement&) = default;
  friend auto operator<=>(const UVElement&, const UVElement&) = default;
};

/// (m1,n1)(m2,n2) = (m1+m2, 2^{m2} n1 + n2).  Throws DomainError on overflow.
UVElement uv_multiply(const UVElement& a, const UVElement& b);
FactorPairs<UVElement> uv_divisor_pairs(const UVElement& c);

/// The monoid presented by VU = UV^2, elements U^m V^n.
class UVMonoid {
 public:
  using element_type = UVElement;
  UVElement identity() const { return {}; }
  UVElement multiply(const UVElement& a, const UVElement& b) const { return uv_multiply(a, b); }
  FactorPairs<UVElement> divisor_pairs(const UVElement& c) const { return uv_divisor_pairs(c); }
  std::string render(const UVElement& u) const;
};

/// |p_i F_n symdiff F_n| / |F_n| with F_n the exponent box [0, n-1]^k in the
/// free abelian monoid on k generators.
Rational folner_ratio(std::size_t k, std::size_t i, std::uint64_t n, const Limits& limits = {});

}  // namespace castella

template <>
struct std::hash<castella::AbelianElement> {
  std::size_t operator()(const castella::AbelianElement& e) const noexcept;
};

template <>
struct std::hash<castella::UVElement> {
  std::size_t operator()(const castella::UVElement& e) const noexcept;
};
