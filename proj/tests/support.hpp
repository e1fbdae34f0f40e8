#pragma once

// Test-only oracles and generators. Nothing here calls the closed forms under test:
// basis enumeration is brute force, reduced powers are expanded from the total
// operation one generator at a time.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "milnor/expr.hpp"
#include "milnor/operations.hpp"
#include "milnor/ring.hpp"

namespace milnor::testing {

inline Element mono(const RingContext& ctx, Exponent t, std::vector<Exponent> ys,
                    std::initializer_list<std::uint32_t> xs, Coeff c = 1) {
  std::uint64_t mask = 0;
  for (auto i : xs)
    mask |= std::uint64_t{1} << (i - 1);
  return Element(ctx, Monomial(t, std::move(ys), mask), c);
}

/// Every monomial with exponents bounded by the bidegree, filtered by bidegree.
inline std::vector<Monomial> brute_force_basis(const RingContext& ctx, Bidegree b) {
  std::vector<Monomial> out;
  if (b.m < 0 || b.w < 0)
    return out;
  const auto n = ctx.rank();
  std::vector<Exponent> ys(n, 0);
  auto rec = [&](auto&& self, std::uint32_t j) -> void {
    if (j == n) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
        for (std::int64_t t = 0; t <= b.w; ++t) {
          Monomial m(static_cast<Exponent>(t), ys, mask);
          if (m.bidegree() == b)
            out.push_back(m);
        }
      return;
    }
    for (std::int64_t d = 0; 2 * d <= b.m; ++d) {
      ys[j] = static_cast<Exponent>(d);
      self(self, j + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Part of a in bidegree b.
inline Element component(const Element& a, Bidegree b) {
  Element out(a.context());
  for (const auto& [m, c] : a.terms())
    if (m.bidegree() == b)
      out.add_term(m, c);
  return out;
}

/// P^k on one monomial, by peeling generators off the left and applying the
/// Cartan formula with generator values P(tau) = tau, P(y) = y + y^l, P(x) = x,
/// and at l = 2 the twist tau * sum (beta P^a)(g) (beta P^b)(rest).
inline Element power_oracle(std::uint32_t k, const Monomial& m, const RingContext& ctx) {
  // Factor list: tau^t, y_j^{d_j} (one factor per unit), x_i.
  std::vector<Element> factors;
  for (Exponent t = 0; t < m.tau(); ++t)
    factors.push_back(tau(ctx));
  for (std::uint32_t j = 0; j < m.rank(); ++j)
    for (Exponent d = 0; d < m.y(j); ++d)
      factors.push_back(y(ctx, j + 1));
  for (auto i : m.ext_indices())
    factors.push_back(x(ctx, i + 1));

  const std::uint32_t l = ctx.prime();
  auto gen_power = [&](std::uint32_t a, const Element& g) -> Element {
    const auto& gm = g.terms().begin()->first;
    if (a == 0)
      return g;
    if (a == 1 && gm.y_degree() == 1) {
      Element out = one(ctx);
      for (std::uint32_t e = 0; e < l; ++e)
        out = out * g;
      return out;
    }
    return Element(ctx);
  };

  // value[k] = P^k(product of factors[pos..]) computed right to left.
  std::vector<Element> value(k + 1, Element(ctx));
  value[0] = one(ctx);
  for (std::size_t pos = factors.size(); pos-- > 0;) {
    const auto& g = factors[pos];
    std::vector<Element> next(k + 1, Element(ctx));
    for (std::uint32_t total = 0; total <= k; ++total) {
      for (std::uint32_t a = 0; a <= total; ++a)
        next[total] += gen_power(a, g) * value[total - a];
      if (l == 2 && total >= 1)
        for (std::uint32_t a = 0; a + 1 <= total; ++a)
          next[total] += tau(ctx) * bockstein(gen_power(a, g)) * bockstein(value[total - 1 - a]);
    }
    value = std::move(next);
  }
  return value[k];
}

inline Element power_oracle(std::uint32_t k, const Element& a) {
  Element out(a.context());
  for (const auto& [m, c] : a.terms())
    out += scalar_mul(c, power_oracle(k, m, a.context()));
  return out;
}

/// Random grammar-valid expression text over generators with indices <= rank.
class ExprFuzzer {
public:
  ExprFuzzer(std::uint64_t seed, std::uint32_t rank) : rng_(seed), rank_(rank) {}

  std::string next(int depth = 3) {
    std::string s = expr(depth);
    return s;
  }

private:
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }

  std::string space() {
    static const char* choices[] = {"", "", "", " ", "  ", "\t", "\n"};
    return choices[below(7)];
  }

  std::string generator() {
    switch (below(3)) {
    case 0:
      return "x" + std::to_string(1 + below(rank_)) + (below(4) == 0 ? "^" + std::to_string(below(2)) : "");
    case 1:
      return "y" + std::to_string(1 + below(rank_)) + (below(2) == 0 ? "^" + std::to_string(below(5)) : "");
    default:
      return (below(4) == 0 ? std::string("\xCF\x84") : std::string("tau")) +
             (below(3) == 0 ? "^" + std::to_string(below(4)) : "");
    }
  }

  std::string factor(int depth) {
    const auto r = below(depth > 0 ? 10 : 7);
    if (r < 2)
      return std::to_string(below(r == 0 ? 10 : 100000));
    if (r < 6)
      return generator();
    if (r == 6)
      return "-" + space() + factor(depth);
    return "(" + space() + expr(depth - 1) + space() + ")";
  }

  std::string term(int depth) {
    std::string s = factor(depth);
    for (auto k = below(4); k-- > 0;)
      s += space() + "*" + space() + factor(depth);
    return s;
  }

  std::string expr(int depth) {
    std::string s = term(depth);
    for (auto k = below(4); k-- > 0;)
      s += space() + (below(2) ? "+" : "-") + space() + term(depth);
    return s;
  }

  std::mt19937_64 rng_;
  std::uint32_t rank_;
};

} // namespace milnor::testing
