#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "castella/arith.hpp"
#include "castella/castle.hpp"
#include "castella/complexity.hpp"
#include "castella/functions.hpp"
#include "castella/group.hpp"
#include "castella/text.hpp"
#include "oracles.hpp"

using namespace castella;

namespace {

std::size_t max_index(const Element& u) { return u.is_identity() ? 0 : u.runs().back().index; }

std::vector<Word> words_of(const Element& u) { return enumerate_words(u); }

bool adjacent_gaps_ok(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (static_cast<long long>(w[i]) - static_cast<long long>(w[i + 1]) < -1) return false;
  return true;
}

// Increasing single castlings: P_j P_i -> P_i P_{j+1} for i < j.
std::vector<Word> increasing_neighbours(const Word& w) {
  std::vector<Word> out;
  for (std::size_t t = 0; t + 1 < w.size(); ++t) {
    Index a = w[t], b = w[t + 1];
    if (a > b) {
      Word x = w;
      x[t] = b;
      x[t + 1] = a + 1;
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace

// ---- words ----

TEST(WordProps, EnumerationMatchesBruteForce) {
  for (const auto& u : oracle::elements(0, 4, 5)) {
    auto ws = words_of(u);
    std::set<Word> got(ws.begin(), ws.end());
    EXPECT_EQ(got, oracle::words(u)) << render(u);
  }
}

TEST(WordProps, LengthsAndCountBound) {
  for (const auto& u : oracle::elements(0, 5, 6)) {
    auto ws = words_of(u);
    const double bound = std::pow(static_cast<double>(max_index(u) + 1), static_cast<double>(u.ind()));
    EXPECT_LE(static_cast<double>(ws.size()), bound) << render(u);
    for (const auto& w : ws) EXPECT_EQ(w.size(), u.ind()) << render(u);
  }
}

TEST(WordProps, IndIsAdditive) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    auto a = oracle::random_element(rng, 5, 7), b = oracle::random_element(rng, 5, 7);
    EXPECT_EQ(multiply(a, b).ind(), a.ind() + b.ind());
  }
}

TEST(WordProps, MinWordIsUniqueAndExtremal) {
  for (const auto& u : oracle::elements(1, 4, 5)) {
    auto ws = words_of(u);
    Word lo = min_word(u), hi = max_word(u);
    EXPECT_EQ(lo, oracle::min_word(u)) << render(u);
    EXPECT_EQ(hi, u.word());
    std::size_t good = 0;
    for (const auto& w : ws) {
      if (adjacent_gaps_ok(w)) {
        ++good;
        EXPECT_EQ(w, lo) << render(u);
      }
      if (w != lo) EXPECT_LT(sigma(lo), sigma(w)) << render(u);
      if (w != hi) EXPECT_LT(sigma(w), sigma(hi)) << render(u);
    }
    EXPECT_EQ(good, 1u) << render(u);
  }
}

TEST(WordProps, PrecedesMinAndMax) {
  for (const auto& u : oracle::elements(1, 4, 4)) {
    Word lo = min_word(u), hi = max_word(u);
    for (const auto& w : words_of(u)) {
      EXPECT_TRUE(word_precedes(lo, w)) << render(u);
      EXPECT_TRUE(word_precedes(w, hi)) << render(u);
    }
  }
}

TEST(WordProps, SingleCastleMovesSigmaByOne) {
  for (const auto& u : oracle::elements(2, 4, 5))
    for (const auto& w : words_of(u))
      for (const auto& x : increasing_neighbours(w)) {
        EXPECT_EQ(sigma(x), sigma(w) + 1);
        EXPECT_EQ(normalize(x), u);
      }
}

TEST(WordProps, NormalizeIsIdempotentAndMatchesOracle) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Index> letter(0, 7);
  for (int t = 0; t < 500; ++t) {
    Word w(rng() % 8);
    for (auto& x : w) x = letter(rng);
    Element u = normalize(w);
    EXPECT_EQ(normalize(u.word()), u);
    EXPECT_EQ(oracle::normalize(w), u);
  }
}

// ---- group ----

TEST(GroupProps, ReduceMatchesOracleUnderTwoStrategies) {
  std::mt19937_64 gen(2024), rng_a(1), rng_b(2);
  std::uniform_int_distribution<Index> letter(0, 6);
  for (int t = 0; t < 500; ++t) {
    std::vector<SignedLetter> w(gen() % 11);
    for (auto& x : w) x = {letter(gen), gen() % 2 ? 1 : -1};
    auto g = reduce(w);
    EXPECT_EQ(g, oracle::reduce(w, rng_a));
    EXPECT_EQ(g, oracle::reduce(w, rng_b));
    EXPECT_EQ(reduce(signed_word(g)), g);
  }
}

TEST(GroupProps, LowestTermsCondition) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 300; ++t) {
    auto x = oracle::random_element(rng, 4, 5), y = oracle::random_element(rng, 4, 5);
    auto g = lowest_terms(x, y);
    for (const auto& [j, a] : g.numerator.runs()) {
      if (g.denominator.exponent_of(j) == 0) continue;
      bool blocked = g.numerator.exponent_of(j + 1) > 0 || g.denominator.exponent_of(j + 1) > 0;
      EXPECT_TRUE(blocked) << render(g.numerator) << " / " << render(g.denominator);
    }
  }
}

TEST(GroupProps, Axioms) {
  std::mt19937_64 rng(3);
  auto rand_g = [&] { return lowest_terms(oracle::random_element(rng, 3, 5), oracle::random_element(rng, 3, 5)); };
  const GroupElement one{};
  for (int t = 0; t < 200; ++t) {
    auto a = rand_g(), b = rand_g(), c = rand_g();
    EXPECT_EQ(multiply_group(multiply_group(a, b), c), multiply_group(a, multiply_group(b, c)));
    EXPECT_EQ(multiply_group(a, one), a);
    EXPECT_EQ(multiply_group(one, a), a);
    EXPECT_EQ(invert(invert(a)), a);
    EXPECT_EQ(multiply_group(a, invert(a)), one);
  }
}

TEST(GroupProps, FractionsOfOneElementAgree) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 200; ++t) {
    auto u = oracle::random_element(rng, 4, 5), v = oracle::random_element(rng, 3, 5);
    // u v^{-1} then times v recovers u; and (u z)(v z)^{-1} equals u v^{-1}.
    auto w = positive_letters(u);
    auto vi = inverse_letters(v);
    w.insert(w.end(), vi.begin(), vi.end());
    auto g = reduce(w);
    EXPECT_EQ(multiply_group(g, to_group(v)), to_group(u));
    auto z = oracle::random_element(rng, 2, 5);
    EXPECT_EQ(lowest_terms(multiply(u, z), multiply(v, z)), g);
  }
}

// ---- castle ----

TEST(CastleProps, InvolutionAndPreservation) {
  std::mt19937_64 rng(7);
  int hits = 0;
  for (int t = 0; t < 20000 && hits < 300; ++t) {
    auto u = oracle::random_element(rng, 5, 6), v = oracle::random_element(rng, 5, 6);
    auto c = weak_castle(u, v);
    if (!c) continue;
    ++hits;
    EXPECT_EQ(multiply(u, v), multiply(c->left, c->right));
    EXPECT_EQ(c->right.ind(), u.ind());
    EXPECT_EQ(c->left.ind(), v.ind());
    auto back = weak_castle(c->left, c->right);
    ASSERT_TRUE(back) << render(u) << " | " << render(v);
    EXPECT_EQ(back->left, u);
    EXPECT_EQ(back->right, v);
  }
  EXPECT_EQ(hits, 300);
}

TEST(CastleProps, CompositionLaw) {
  std::mt19937_64 rng(8);
  int hits = 0;
  for (int t = 0; t < 50000 && hits < 200; ++t) {
    auto u1 = oracle::random_element(rng, 3, 6), u2 = oracle::random_element(rng, 3, 6),
         v = oracle::random_element(rng, 3, 6);
    auto c2 = weak_castle(u2, v);
    if (!c2) continue;
    auto c1 = weak_castle(u1, c2->left);
    if (!c1) continue;
    ++hits;
    auto c = weak_castle(multiply(u1, u2), v);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->left, c1->left);
    EXPECT_EQ(c->right, multiply(c1->right, c2->right));
  }
  EXPECT_EQ(hits, 200);
}

TEST(CastleProps, StrongCastlingsDecompose) {
  for (const auto& [u, v] : oracle::pairs_up_to(5, 4)) {
    auto c = strong_castle(u, v);
    if (!c) continue;
    EXPECT_EQ(*c, *weak_castle(u, v));
    for (const auto& u1 : divisors(u)) {
      Element u2 = quotient_left(u, u1);
      auto c2 = strong_castle(u2, v);
      ASSERT_TRUE(c2) << render(u) << " | " << render(v);
      auto c1 = strong_castle(u1, c2->left);
      ASSERT_TRUE(c1) << render(u) << " | " << render(v);
      EXPECT_EQ(c->right, multiply(c1->right, c2->right));
    }
  }
}

TEST(CastleProps, LcmMapIsInjective) {
  auto xs = oracle::elements(0, 4, 4);
  for (const auto& w : xs) {
    std::map<Element, Element> seen;
    for (const auto& u : xs) {
      if (!gcd(w, u).is_identity()) continue;
      auto [it, fresh] = seen.emplace(lcm(w, u), u);
      EXPECT_TRUE(fresh) << render(w) << ": " << render(u) << " vs " << render(it->second);
    }
  }
}

TEST(CastleProps, PrimePowersCastleToPrimePowers) {
  for (Index i = 0; i <= 6; ++i)
    for (Index j = 0; j <= 6; ++j)
      for (Exponent k = 1; k <= 4; ++k)
        for (Exponent l = 1; l <= 4; ++l) {
          auto c = weak_castle(prime(i, k), prime(j, l));
          if (i > j) {
            ASSERT_TRUE(c);
            EXPECT_EQ(c->left, prime(j, l));
            EXPECT_EQ(c->right, prime(i + l, k));
          } else if (i < j) {
            EXPECT_EQ(c.has_value(), i + k < j) << i << "^" << k << " " << j << "^" << l;
            if (c) {
              EXPECT_EQ(c->left, prime(j - k, l));
              EXPECT_EQ(c->right, prime(i, k));
            }
          } else {
            ASSERT_TRUE(c);
            EXPECT_EQ(c->left, prime(i, l));
            EXPECT_EQ(c->right, prime(i, k));
          }
        }
}

// ---- arith ----

TEST(ArithProps, DivisorsMatchPrefixOracle) {
  for (const auto& u : oracle::elements(0, 5, 5)) {
    auto d = divisors(u);
    EXPECT_EQ(std::set<Element>(d.begin(), d.end()), oracle::divisors(u)) << render(u);
    EXPECT_TRUE(std::is_sorted(d.begin(), d.end()));
  }
}

TEST(ArithProps, TauSubmultiplicativeWithSharpEquality) {
  for (const auto& [u, v] : oracle::pairs_up_to(6, 5)) {
    auto t = tau(multiply(u, v)), tu = tau(u), tv = tau(v);
    EXPECT_LE(t, tu * tv);
    EXPECT_EQ(t == tu * tv, is_castled_free(u, v)) << render(u) << " | " << render(v);
  }
}

TEST(ArithProps, GcdLcmIndAndOracle) {
  for (const auto& [u, v] : oracle::pairs_up_to(5, 4)) {
    Element g = gcd(u, v), l = lcm(u, v);
    EXPECT_EQ(g.ind() + l.ind(), u.ind() + v.ind());
    EXPECT_EQ(g, oracle::gcd({u, v})) << render(u) << " | " << render(v);
    EXPECT_TRUE(divides(u, l) && divides(v, l));
  }
}

TEST(ArithProps, TauOfPrimePowerLcm) {
  for (Index a = 0; a <= 4; ++a)
    for (Index b = a + 1; b <= 5; ++b)
      for (Index c = b + 1; c <= 6; ++c)
        for (Exponent ma = 1; ma <= 3; ++ma)
          for (Exponent mb = 1; mb <= 3; ++mb) {
            std::vector<Element> two{prime(a, ma), prime(b, mb)};
            EXPECT_EQ(tau(lcm(two)), (ma + 1) * (mb + 1));
            std::vector<Element> three{prime(a, ma), prime(b, mb), prime(c, 2)};
            EXPECT_EQ(tau(lcm(three)), (ma + 1) * (mb + 1) * 3);
            std::vector<Element> simple{prime(a), prime(b), prime(c)};
            EXPECT_EQ(tau(lcm(simple)), 8u);
          }
}

TEST(ArithProps, PrimePowerRigidity) {
  for (Index q = 0; q <= 5; ++q)
    for (Exponent m = 1; m <= 5; ++m)
      EXPECT_EQ(enumerate_words(prime(q, m)), std::vector<Word>{Word(m, q)});
}

TEST(ArithProps, PdmIsWordFree) {
  // Multiplicity of p in pdm(u) is the largest m with p^m | u.
  for (const auto& u : oracle::elements(0, 5, 5)) {
    PrimeMultiset want;
    for (Index p = 0; p <= max_index(u); ++p) {
      Exponent m = 0;
      while (divides(prime(p, m + 1), u)) ++m;
      if (m) want[p] = m;
    }
    EXPECT_EQ(pdm(u), want) << render(u);
  }
}

TEST(ArithProps, OmegaBounds) {
  for (const auto& u : oracle::elements(0, 5, 5)) {
    EXPECT_LE(big_omega(u), u.ind());
    EXPECT_LE(big_omega_co(u), u.ind());
    EXPECT_LE(omega(u), big_omega(u));
    bool fc = is_fully_castlable(u);
    EXPECT_EQ(fc, oracle::fully_castlable(u)) << render(u);
    if (fc) EXPECT_EQ(big_omega(u), big_omega_co(u)) << render(u);
  }
}

TEST(ArithProps, Duality) {
  for (const auto& [u, v] : oracle::pairs_up_to(5, 4)) {
    if (!gcd(u, v).is_identity()) continue;
    Element z = lcm(u, v);
    Element y = quotient_left(z, u), x = quotient_left(z, v);
    std::vector<Element> xy{x, y};
    EXPECT_TRUE(gcd_co(z, xy).is_identity()) << render(u) << " | " << render(v);
    EXPECT_EQ(lcm_co(z, xy), z) << render(u) << " | " << render(v);
  }
}

TEST(ArithProps, GcdOfScaledElements) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    auto c = oracle::random_element(rng, 2, 4), u = oracle::random_element(rng, 3, 4),
         v = oracle::random_element(rng, 3, 4);
    EXPECT_EQ(gcd(multiply(c, u), multiply(c, v)), multiply(c, gcd(u, v)));
  }
}

// ---- functions ----

TEST(FunctionProps, MoebiusThreeWays) {
  ThompsonMonoid m;
  auto one = one_fn(m);
  auto inv = inverse(one);
  oracle::RightInverse right(one);
  auto d = delta1_fn(m);
  auto l = convolve(inv, one), r = convolve(one, inv);
  for (const auto& u : oracle::elements(0, 4, 6)) {
    EXPECT_EQ(inv(u), Rational(mu(u))) << render(u);
    EXPECT_EQ(right(u), inv(u)) << render(u);
    EXPECT_EQ(oracle::mu_inclusion_exclusion(u), mu(u)) << render(u);
    EXPECT_EQ(l(u), d(u));
    EXPECT_EQ(r(u), d(u));
  }
}

TEST(FunctionProps, BothInversesAgreeForOtherFunctions) {
  ThompsonMonoid m;
  auto f = make_fn<ThompsonMonoid>(m, "2^ind-omega", [](const Element& u) {
    return Rational((1 << u.ind()) - static_cast<int>(omega(u)));
  });
  auto g = inverse(f);
  oracle::RightInverse h(f);
  for (const auto& u : oracle::elements(0, 4, 4)) EXPECT_EQ(g(u), h(u)) << render(u);
}

TEST(FunctionProps, ConvolutionOfMultiplicativeIsMultiplicative) {
  auto samples = oracle::pairs_up_to(4, 3);
  auto r = check_multiplicative(convolve(mu_fn(), tau_fn()), samples);
  EXPECT_TRUE(r.ok()) << (r.violations.empty() ? "" : r.violations.front());
  EXPECT_TRUE(check_castled_invariant(mu_fn(), samples).ok());
}

// ---- complexity ----

TEST(ComplexityProps, PowerIdentity) {
  for (const char* s : {"p0 p1", "p0 p2", "p1^2"}) {
    Element u = parse_element(s);
    auto base = tau_powers(u, 6);
    auto sq = tau_powers(power(u, 2), 3);
    for (const auto& x : sq) EXPECT_EQ(x.tau, base[2 * x.n - 1].tau) << s;
  }
}

TEST(ComplexityProps, AbelianPolynomialGrowth) {
  FreeAbelianMonoid m(3);
  for (std::uint64_t a = 0; a <= 2; ++a)
    for (std::uint64_t b = 0; b <= 2; ++b) {
      AbelianElement u = m.multiply(m.generator(0, a + 1), m.multiply(m.generator(1, b), m.generator(2)));
      std::uint64_t ind = a + 1 + b + 1;
      AbelianElement un = m.identity();
      for (std::uint64_t n = 1; n <= 5; ++n) {
        un = m.multiply(un, u);
        double bound = std::pow(static_cast<double>(n * ind + 1), 3.0);
        EXPECT_LE(static_cast<double>(m.tau(un)), bound);
      }
    }
}

TEST(ComplexityProps, SubadditivityOnSamples) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    auto u = oracle::random_element(rng, 3, 3);
    if (u.is_identity()) continue;
    EXPECT_TRUE(subadditivity_check(u, 5).ok()) << render(u);
  }
}
