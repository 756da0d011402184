#include "castella/complexity.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "castella/arith.hpp"
#include "castella/text.hpp"

namespace castella {

namespace {

using U64 = std::uint64_t;

std::optional<U64> mul(std::optional<U64> a, std::optional<U64> b) {
  if (!a || !b) return std::nullopt;
  if (*a != 0 && *b > std::numeric_limits<U64>::max() / *a) return std::nullopt;
  return *a * *b;
}

std::optional<U64> pow(U64 base, U64 n) {
  std::optional<U64> r = 1;
  for (U64 k = 0; k < n && r; ++k) r = mul(r, base);
  return r;
}

std::optional<U64> add1(std::optional<U64> a) {
  if (!a || *a == std::numeric_limits<U64>::max()) return std::nullopt;
  return *a + 1;
}

bool is_initial_segment(const Element& u) {
  const auto& runs = u.runs();
  if (runs.size() < 2) return false;
  for (std::size_t k = 0; k < runs.size(); ++k)
    if (runs[k].index != k || runs[k].exponent != 1) return false;
  return true;
}

void attach_bracket(const Element& u, Tau0Sample& s) {
  const auto& runs = u.runs();
  const U64 n = s.n;
  if (runs.empty()) {
    s.lower = s.upper = 1;
  } else if (runs.size() == 1) {
    auto v = add1(mul(n, runs[0].exponent));
    s.lower = s.upper = v;
  } else if (is_initial_segment(u)) {
    auto base = pow(runs.size(), n);
    s.lower = base;
    s.upper = mul(add1(n), base);
  } else if (runs.size() == 2) {
    auto base = pow(runs[1].exponent + 1, n);
    s.lower = base;
    s.upper = mul(add1(mul(n, runs[0].exponent)), base);
  }
  if (!s.lower || !s.upper) s.lower = s.upper = std::nullopt;
}

}  // namespace

std::vector<TauPower> tau_powers(const Element& u, U64 N, const Limits& limits) {
  if (N == 0) throw DomainError("power range must start at n = 1");
  std::vector<TauPower> out;
  Element x;
  for (U64 n = 1; n <= N; ++n) {
    x = multiply(x, u);
    out.push_back({n, tau(x, limits)});
  }
  return out;
}

Tau0Estimate tau0_estimate(const Element& u, U64 N, const Limits& limits) {
  Tau0Estimate est;
  for (const auto& [n, t] : tau_powers(u, N, limits)) {
    Tau0Sample s{n, t, std::pow(static_cast<double>(t), 1.0 / static_cast<double>(n)), {}, {}};
    attach_bracket(u, s);
    est.samples.push_back(s);
  }
  est.final_estimate = est.samples.back().root;
  return est;
}

double complexity_C(const Element& u, U64 N, const Limits& limits) {
  return tau0_estimate(u, N, limits).final_estimate / static_cast<double>(tau(u, limits));
}

SubadditivityReport subadditivity_check(const Element& u, U64 N, const Limits& limits) {
  if (N < 2) throw DomainError("subadditivity needs N >= 2");
  auto t = tau_powers(u, N, limits);
  SubadditivityReport r;
  for (U64 m = 1; m < N; ++m) {
    for (U64 n = 1; m + n <= N; ++n) {
      ++r.checked;
      U64 lhs = t[m + n - 1].tau;
      auto rhs = mul(t[m - 1].tau, t[n - 1].tau);
      if (rhs && lhs > *rhs)
        r.violations.push_back("tau(u^" + std::to_string(m + n) + ") = " + std::to_string(lhs) + " > " +
                               std::to_string(*rhs) + " for " + render(u));
    }
  }
  return r;
}

std::string format_decimal(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace castella
