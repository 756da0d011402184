#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "castella/word.hpp"

namespace castella {

struct TauPower {
  std::uint64_t n = 0;
  std::uint64_t tau = 0;
};

/// tau(u^n) for n = 1..N.  Throws DomainError when N = 0.
std::vector<TauPower> tau_powers(const Element& u, std::uint64_t N, const Limits& limits = {});

struct Tau0Sample {
  std::uint64_t n = 0;
  std::uint64_t tau = 0;
  double root = 0;  // tau^(1/n)
  // Known bracket on tau(u^n), present for prime powers, p_i^k p_j^l (i < j)
  // and p_0 p_1 ... p_{l-1}.
  std::optional<std::uint64_t> lower;
  std::optional<std::uint64_t> upper;
};

struct Tau0Estimate {
  std::vector<Tau0Sample> samples;
  double final_estimate = 0;
};

Tau0Estimate tau0_estimate(const Element& u, std::uint64_t N, const Limits& limits = {});
/// tau(u^N)^(1/N) / tau(u).
double complexity_C(const Element& u, std::uint64_t N, const Limits& limits = {});

struct SubadditivityReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks tau(u^{m+n}) <= tau(u^m) tau(u^n) for all m, n >= 1 with m + n <= N.
SubadditivityReport subadditivity_check(const Element& u, std::uint64_t N, const Limits& limits = {});

/// Twelve significant digits.
std::string format_decimal(double x);

}  // namespace castella
