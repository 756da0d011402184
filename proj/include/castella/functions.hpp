#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "castella/instances.hpp"

namespace castella {

/// Memoizing map from monoid elements to exact rationals.  Copies share one cache.
template <IntegralMonoid M>
class ArithFn {
 public:
  using element_type = typename M::element_type;
  using Eval = std::function<Rational(const ArithFn&, const element_type&)>;

  ArithFn(M monoid, std::string name, Eval eval)
      : impl_(std::make_shared<Impl>(std::move(monoid), std::move(name), std::move(eval))) {}

  Rational operator()(const element_type& z) const {
    {
      std::shared_lock lock(impl_->mutex);
      auto it = impl_->memo.find(z);
      if (it != impl_->memo.end()) return it->second;
    }
    Rational v = impl_->eval(*this, z);
    std::unique_lock lock(impl_->mutex);
    return impl_->memo.try_emplace(z, std::move(v)).first->second;
  }

  const std::string& name() const { return impl_->name; }
  const M& monoid() const { return impl_->monoid; }
  std::size_t cache_size() const {
    std::shared_lock lock(impl_->mutex);
    return impl_->memo.size();
  }

 private:
  struct Impl {
    Impl(M m, std::string n, Eval e) : monoid(std::move(m)), name(std::move(n)), eval(std::move(e)) {}
    M monoid;
    std::string name;
    Eval eval;
    mutable std::shared_mutex mutex;
    std::unordered_map<element_type, Rational> memo;
  };
  std::shared_ptr<Impl> impl_;
};

template <IntegralMonoid M>
ArithFn<M> make_fn(M monoid, std::string name,
                   std::function<Rational(const typename M::element_type&)> f) {
  return ArithFn<M>(std::move(monoid), std::move(name),
                    [f = std::move(f)](const ArithFn<M>&, const typename M::element_type& z) { return f(z); });
}

template <IntegralMonoid M>
ArithFn<M> one_fn(M monoid) {
  return make_fn<M>(std::move(monoid), "one", [](const auto&) { return Rational(1); });
}

template <IntegralMonoid M>
ArithFn<M> delta1_fn(M monoid) {
  auto e = monoid.identity();
  return make_fn<M>(std::move(monoid), "delta1",
                    [e](const auto& z) { return Rational(z == e ? 1 : 0); });
}

/// (f*g)(z) = sum over z = z1 z2 of f(z1) g(z2).
template <IntegralMonoid M>
ArithFn<M> convolve(const ArithFn<M>& f, const ArithFn<M>& g) {
  return ArithFn<M>(f.monoid(), "(" + f.name() + "*" + g.name() + ")",
                    [f, g](const ArithFn<M>& self, const typename M::element_type& z) {
                      Rational s = 0;
                      for (const auto& [a, b] : self.monoid().divisor_pairs(z)) s += f(a) * g(b);
                      return s;
                    });
}

/// Convolution inverse by g(z) = -f(1)^{-1} sum_{v | z, v != z} g(v) f(v^{-1} z).
/// Throws DomainError when f(1) = 0.
template <IntegralMonoid M>
ArithFn<M> inverse(const ArithFn<M>& f) {
  const auto e = f.monoid().identity();
  const Rational f1 = f(e);
  if (f1 == 0) throw DomainError("function " + f.name() + " is not invertible: f(1) = 0");
  return ArithFn<M>(f.monoid(), "inv(" + f.name() + ")",
                    [f, f1, e](const ArithFn<M>& self, const typename M::element_type& z) {
                      if (z == e) return Rational(1 / f1);
                      Rational s = 0;
                      for (const auto& [v, w] : self.monoid().divisor_pairs(z))
                        if (!(v == z)) s += self(v) * f(w);
                      return Rational(-s / f1);
                    });
}

using ThompsonFn = ArithFn<ThompsonMonoid>;

/// (-1)^k when omega(u) = k and tau(u) = 2^k, else 0.
int mu(const Element& u, const Limits& limits = {});
int lambda(const Element& u);
int lambda_co(const Element& u);

ThompsonFn tau_fn(const Limits& limits = {});
ThompsonFn mu_fn(const Limits& limits = {});
ThompsonFn lambda_fn(const Limits& limits = {});
ThompsonFn lambda_co_fn(const Limits& limits = {});

struct PropertyReport {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

using ElementPairs = std::vector<std::pair<Element, Element>>;

/// f(u) = f(u~) and f(v) = f(v~) whenever u v strongly castles to v~ u~ and the
/// pair (v~, u~) is itself strongly castlable.
PropertyReport check_castled_invariant(const ThompsonFn& f, const ElementPairs& samples);
/// Castled invariance plus f(uv) = f(u) f(v) on castled-free pairs.
PropertyReport check_multiplicative(const ThompsonFn& f, const ElementPairs& samples);
/// Castled invariance plus f(uv) = f(u) f(v) on the same two-sided strong pairs.
PropertyReport check_completely_multiplicative(const ThompsonFn& f, const ElementPairs& samples);

}  // namespace castella
