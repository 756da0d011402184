#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "castella/word.hpp"

namespace castella {

/// Prime index -> multiplicity.
using PrimeMultiset = std::map<Index, std::size_t>;

bool divides(const Element& d, const Element& u);
/// v co-divides w iff w = e v for some e.
bool co_divides(const Element& v, const Element& w);

/// e with d e = u.  Throws DomainError if d does not divide u.
Element quotient_left(const Element& u, const Element& d);
/// e with e v = w.  Throws DomainError if v does not co-divide w.
Element quotient_right(const Element& w, const Element& v);

/// Sorted in canonical order.
std::vector<Element> divisors(const Element& u, const Limits& limits = {});
std::vector<Element> co_divisors(const Element& u, const Limits& limits = {});
std::size_t tau(const Element& u, const Limits& limits = {});

void clear_divisor_cache();
std::size_t divisor_cache_size();

Element lcm(const Element& u, const Element& v);
/// Throws DomainError on an empty list.
Element lcm(std::span<const Element> us);
Element gcd(const Element& u, const Element& v, const Limits& limits = {});
Element gcd(std::span<const Element> us, const Limits& limits = {});

Element lcm_co(const Element& w, std::span<const Element> us, const Limits& limits = {});
Element gcd_co(const Element& w, std::span<const Element> us, const Limits& limits = {});

PrimeMultiset pdm(const Element& u);
PrimeMultiset pdm_co(const Element& u);
/// Supports of pdm and pdm_co.
std::set<Index> prime_divisors(const Element& u);
std::set<Index> prime_co_divisors(const Element& u);

std::size_t omega(const Element& u);
std::size_t big_omega(const Element& u);
std::size_t omega_co(const Element& u);
std::size_t big_omega_co(const Element& u);

/// The prime q with p q = lcm[p, r], and p itself when r = p.
Index beta(Index p, Index r);

bool is_fully_castlable(const Element& u);
/// Factors u_1 ... u_t with product u, each the greatest fully castlable divisor
/// of what remains.
std::vector<Element> gfc_decompose(const Element& u);

}  // namespace castella
