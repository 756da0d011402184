#include "castella/functions.hpp"

#include "castella/arith.hpp"
#include "castella/castle.hpp"
#include "castella/text.hpp"

namespace castella {

int mu(const Element& u, const Limits& limits) {
  const std::size_t k = omega(u);
  if (k >= 63 || tau(u, limits) != (std::size_t{1} << k)) return 0;
  return k % 2 ? -1 : 1;
}

int lambda(const Element& u) { return big_omega(u) % 2 ? -1 : 1; }
int lambda_co(const Element& u) { return big_omega_co(u) % 2 ? -1 : 1; }

ThompsonFn tau_fn(const Limits& limits) {
  return make_fn(ThompsonMonoid(limits), "tau", [limits](const Element& u) { return Rational(tau(u, limits)); });
}

ThompsonFn mu_fn(const Limits& limits) {
  return make_fn(ThompsonMonoid(limits), "mu", [limits](const Element& u) { return Rational(mu(u, limits)); });
}

ThompsonFn lambda_fn(const Limits& limits) {
  return make_fn(ThompsonMonoid(limits), "lambda", [](const Element& u) { return Rational(lambda(u)); });
}

ThompsonFn lambda_co_fn(const Limits& limits) {
  return make_fn(ThompsonMonoid(limits), "lambda_co", [](const Element& u) { return Rational(lambda_co(u)); });
}

namespace {

std::string show(const Element& u, const Element& v) { return "(" + render(u) + ", " + render(v) + ")"; }

// Returns true if u v strongly castles to v~ u~ and v~, u~ are strongly castlable too.
// A one-sided strong castling such as (p0 p1, p0) -> (p0, p0 p2) does not count.
bool check_invariance(const ThompsonFn& f, const Element& u, const Element& v, PropertyReport& r) {
  auto c = strong_castle(u, v);
  if (!c || !is_strongly_castlable(c->left, c->right)) return false;
  if (f(u) != f(c->right) || f(v) != f(c->left))
    r.violations.push_back(f.name() + " not castled-invariant at " + show(u, v));
  return true;
}

void check_product(const ThompsonFn& f, const Element& u, const Element& v, PropertyReport& r) {
  if (f(multiply(u, v)) != f(u) * f(v))
    r.violations.push_back(f.name() + " not multiplicative at " + show(u, v));
}

}  // namespace

PropertyReport check_castled_invariant(const ThompsonFn& f, const ElementPairs& samples) {
  PropertyReport r;
  for (const auto& [u, v] : samples) check_invariance(f, u, v, r) ? ++r.checked : ++r.skipped;
  return r;
}

PropertyReport check_multiplicative(const ThompsonFn& f, const ElementPairs& samples) {
  PropertyReport r;
  for (const auto& [u, v] : samples) {
    bool used = check_invariance(f, u, v, r);
    if (is_castled_free(u, v)) {
      check_product(f, u, v, r);
      used = true;
    }
    used ? ++r.checked : ++r.skipped;
  }
  return r;
}

PropertyReport check_completely_multiplicative(const ThompsonFn& f, const ElementPairs& samples) {
  PropertyReport r;
  for (const auto& [u, v] : samples) {
    if (!check_invariance(f, u, v, r)) {
      ++r.skipped;
      continue;
    }
    check_product(f, u, v, r);
    ++r.checked;
  }
  return r;
}

}  // namespace castella
