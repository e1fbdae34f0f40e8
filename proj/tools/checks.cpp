#include "checks.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "milnor/expr.hpp"

namespace milnor::cli {

std::vector<Monomial> basis_slice(const RingContext& ctx, int max_degree) {
  std::vector<Monomial> out;
  for (std::int64_t m = 0; m <= max_degree; ++m)
    for (std::int64_t w = (m + 1) / 2; w <= m + 1; ++w) {
      auto part = enumerate_basis(ctx, {m, w});
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

Element random_homogeneous(const RingContext& ctx, Bidegree b, Rng& rng) {
  const auto basis = enumerate_basis(ctx, b);
  Element out(ctx);
  if (basis.empty())
    return out;
  const auto terms = 1 + rng.below(3);
  for (std::uint64_t k = 0; k < terms; ++k)
    out.add_term(basis[rng.below(basis.size())], static_cast<Coeff>(1 + rng.below(ctx.prime() - 1)));
  if (out.is_zero())
    out.add_term(basis.front(), 1);
  return out;
}

namespace {

Monomial exterior(const RingContext& ctx, std::initializer_list<std::uint32_t> one_based) {
  Monomial mono(ctx.rank());
  std::uint64_t mask = 0;
  for (auto i : one_based)
    mask |= std::uint64_t{1} << (i - 1);
  mono.set_ext(mask);
  return mono;
}

Element ypow(const RingContext& ctx, std::uint32_t i, Exponent e) {
  Monomial mono(ctx.rank());
  mono.set_y(i - 1, e);
  return Element(ctx, mono);
}

Element top_class(const RingContext& ctx) { return Element(ctx, exterior(ctx, {1, 2, 3})); }

// Counts cases of one property and remembers the first failure.
class Tally {
public:
  Tally(std::string name, std::uint32_t prime) : name_(std::move(name)), prime_(prime) {}

  void check(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failures_++ == 0)
      first_failure_ = what;
  }

  CheckResult result() const {
    CheckResult r{name_, prime_, failures_ == 0, {}};
    r.detail = std::to_string(cases_) + " cases";
    if (failures_ != 0)
      r.detail += ", " + std::to_string(failures_) + " failed; first: " + first_failure_;
    return r;
  }

private:
  std::string name_;
  std::uint32_t prime_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  std::string first_failure_;
};

Element pow(const Element& a, std::uint32_t e) {
  Element out = one(a.context());
  for (std::uint32_t k = 0; k < e; ++k)
    out = out * a;
  return out;
}

std::string show(const Element& a) {
  auto s = print_element(a);
  return s.size() > 120 ? s.substr(0, 117) + "..." : s;
}

} // namespace

Element top_class_milnor_formula(const RingContext& ctx, std::uint32_t k) {
  const auto e = static_cast<Exponent>(prime_power(ctx.prime(), k));
  return ypow(ctx, 1, e) * Element(ctx, exterior(ctx, {2, 3})) -
         ypow(ctx, 2, e) * Element(ctx, exterior(ctx, {1, 3})) +
         ypow(ctx, 3, e) * Element(ctx, exterior(ctx, {1, 2}));
}

Element signed_permutation_sum(const RingContext& ctx, Exponent e1, Exponent e2, Exponent e3) {
  std::array<std::uint32_t, 3> sigma{1, 2, 3};
  Element out(ctx);
  do {
    int inversions = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        inversions += sigma[a] > sigma[b] ? 1 : 0;
    Element term = ypow(ctx, sigma[0], e1) * ypow(ctx, sigma[1], e2) * ypow(ctx, sigma[2], e3);
    out += scalar_mul(inversions % 2 == 0 ? 1 : -1, term);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<CheckResult> identity_checks(std::uint32_t prime, std::uint32_t rank) {
  std::vector<CheckResult> out;
  const std::uint32_t l = prime;

  {
    const RingContext ctx(prime, 1);
    Tally t("milnor-on-generators", l);
    for (std::uint32_t i = 0; i <= 2; ++i) {
      const auto e = static_cast<Exponent>(prime_power(l, i));
      const auto qx = milnor_recursive(i, x(ctx, 1));
      t.check(qx == ypow(ctx, 1, e), "Q" + std::to_string(i) + "(x1) = " + show(qx));
      t.check(milnor_oracle(i, x(ctx, 1)) == qx, "oracle disagrees on Q" + std::to_string(i) + "(x1)");
      const auto qy = milnor_recursive(i, y(ctx, 1));
      t.check(qy.is_zero(), "Q" + std::to_string(i) + "(y1) = " + show(qy));
    }
    out.push_back(t.result());
  }

  if (rank < 3)
    throw RangeError("identity checks on x1*x2*x3 need rank >= 3, got " + std::to_string(rank));
  const RingContext ctx(prime, rank);
  const Element top = top_class(ctx);

  {
    Tally t("milnor-on-top-exterior-class", l);
    for (std::uint32_t k = 0; k <= 2; ++k) {
      const auto q = milnor_recursive(k, top);
      t.check(q == top_class_milnor_formula(ctx, k), "Q" + std::to_string(k) + "(x1*x2*x3) = " + show(q));
    }
    out.push_back(t.result());
  }

  {
    Tally t("triple-milnor-permutation-sum", l);
    const OperationWord word({PrimitiveOp::milnor(0), PrimitiveOp::milnor(1), PrimitiveOp::milnor(2)});
    const auto v = apply_word(word, top);
    const auto expected = signed_permutation_sum(ctx, static_cast<Exponent>(prime_power(l, 2)),
                                                 static_cast<Exponent>(prime_power(l, 1)), 1);
    t.check(v == expected, "Q0Q1Q2(x1*x2*x3) = " + show(v));
    t.check(!v.is_zero(), "Q0Q1Q2(x1*x2*x3) vanished");
    t.check(v.size() == 6, "expected 6 distinct monomials, found " + std::to_string(v.size()));
    t.check(std::all_of(v.terms().begin(), v.terms().end(),
                        [&](const auto& term) { return term.second == 1 || term.second == l - 1; }),
            "coefficients other than +-1");
    out.push_back(t.result());
  }

  {
    Tally t("q1-q0-top-class-nonzero", l);
    const auto u4 = bockstein(top);
    const auto rec = milnor_recursive(1, u4);
    const auto orc = milnor_oracle(1, milnor_oracle(0, top));
    t.check(!rec.is_zero(), "Q1Q0(x1*x2*x3) vanished");
    t.check(rec == orc, "recursive " + show(rec) + " vs oracle " + show(orc));
    const Bidegree expected = Bidegree{3, 3} + bidegree_shift(PrimitiveOp::milnor(0), ctx) +
                              bidegree_shift(PrimitiveOp::milnor(1), ctx);
    t.check(!rec.is_zero() && is_homogeneous(rec) && bidegree_of(rec) == expected,
            "Q1Q0(x1*x2*x3) not of bidegree " + to_string(expected));
    out.push_back(t.result());
  }
  return out;
}

namespace {

constexpr int kRandomCases = 200;

struct NamedOp {
  std::string name;
  PrimitiveOp op;
};

std::vector<NamedOp> shifted_ops() {
  return {{"Q0", PrimitiveOp::bockstein()}, {"P1", PrimitiveOp::power(1)}, {"P2", PrimitiveOp::power(2)},
          {"Q1", PrimitiveOp::milnor(1)},   {"Q2", PrimitiveOp::milnor(2)}};
}

std::vector<Bidegree> slice_bidegrees(const std::vector<Monomial>& slice) {
  std::set<Bidegree> seen;
  for (const auto& m : slice)
    seen.insert(m.bidegree());
  return {seen.begin(), seen.end()};
}

// Sum over a + b = k of P^a(u) P^b(v), plus the tau-twisted odd cross terms at l = 2.
Element cartan_expansion(std::uint32_t k, const Element& u, const Element& v) {
  const auto& ctx = u.context();
  Element out(ctx);
  for (std::uint32_t a = 0; a <= k; ++a)
    out += power(a, u) * power(k - a, v);
  if (ctx.prime() == 2 && k >= 1) {
    Element twist(ctx);
    for (std::uint32_t a = 0; a + 1 <= k; ++a)
      twist += bockstein(power(a, u)) * bockstein(power(k - 1 - a, v));
    out += tau(ctx) * twist;
  }
  return out;
}

std::int64_t first_degree(const Element& a) { return a.is_zero() ? 0 : bidegree_of(a).m; }

} // namespace

std::vector<CheckResult> property_checks(std::uint32_t prime, std::uint32_t rank, int max_degree,
                                         std::uint64_t seed) {
  const RingContext ctx(prime, rank);
  const auto slice = basis_slice(ctx, std::max(max_degree, 0));
  const auto degrees = slice_bidegrees(slice);
  Rng rng(seed);
  auto random_element = [&] { return random_homogeneous(ctx, degrees[rng.below(degrees.size())], rng); };
  auto random_monomial = [&] { return Element(ctx, slice[rng.below(slice.size())]); };

  std::vector<CheckResult> out;
  const Element t = tau(ctx);

  {
    Tally tl("scalar-identities", prime);
    const Element u = one(ctx);
    for (std::uint32_t i = 0; i <= 2; ++i)
      tl.check(milnor_recursive(i, u).is_zero(), "Q" + std::to_string(i) + "(1) != 0");
    tl.check(power(0, t) == t, "P0(tau) != tau");
    tl.check(power(1, t).is_zero(), "P1(tau) != 0");
    tl.check(scalar_mul(prime, u).is_zero(), "l*1 != 0");
    tl.check(scalar_mul(-1, u) + u == Element(ctx), "-1 + 1 != 0");
    tl.check(u * t == t * u, "tau not central");
    out.push_back(tl.result());
  }

  {
    Tally tl("tau-linearity", prime);
    auto run = [&](const Element& a) {
      for (const auto& [name, op] : shifted_ops())
        tl.check(apply(op, t * a) == t * apply(op, a), name + "(tau*a) != tau*" + name + "(a) for a = " + show(a));
      tl.check(milnor_oracle(1, t * a) == t * milnor_oracle(1, a), "oracle Q1 not tau-linear on " + show(a));
    };
    for (const auto& m : slice)
      run(Element(ctx, m));
    for (int k = 0; k < kRandomCases; ++k)
      run(random_element());
    out.push_back(tl.result());
  }

  {
    Tally tl("instability", prime);
    auto run = [&](const Element& a, std::int64_t m) {
      for (std::int64_t i = m / 2 + 1; i <= m / 2 + 2; ++i)
        tl.check(power(static_cast<std::uint32_t>(i), a).is_zero(),
                 "P" + std::to_string(i) + " nonzero on " + show(a));
    };
    for (const auto& m : slice)
      run(Element(ctx, m), m.bidegree().m);
    for (int k = 0; k < kRandomCases; ++k) {
      const auto a = random_element();
      run(a, first_degree(a));
    }
    out.push_back(tl.result());
  }

  {
    Tally tl("frobenius", prime);
    std::vector<Bidegree> diagonal;
    for (std::int64_t i = 0; 2 * i <= std::max(max_degree, 0); ++i)
      diagonal.push_back({2 * i, i});
    for (const auto& b : diagonal)
      for (const auto& m : enumerate_basis(ctx, b)) {
        const Element a(ctx, m);
        tl.check(power(static_cast<std::uint32_t>(b.w), a) == pow(a, prime), "P^i(a) != a^l for a = " + show(a));
      }
    for (int k = 0; k < kRandomCases; ++k) {
      const auto b = diagonal[rng.below(diagonal.size())];
      const auto a = random_homogeneous(ctx, b, rng);
      tl.check(power(static_cast<std::uint32_t>(b.w), a) == pow(a, prime), "P^i(a) != a^l for a = " + show(a));
    }
    out.push_back(tl.result());
  }

  {
    Tally sq("milnor-square-zero", prime);
    Tally ac("milnor-anticommute", prime);
    Tally eq("recursive-oracle-agreement", prime);
    auto run = [&](const Element& a) {
      std::array<Element, 3> q{milnor_recursive(0, a), milnor_recursive(1, a), milnor_recursive(2, a)};
      for (std::uint32_t i = 0; i <= 2; ++i)
        eq.check(q[i] == milnor_oracle(i, a), "Q" + std::to_string(i) + " disagrees on " + show(a));
      for (std::uint32_t i = 0; i <= 2; ++i)
        for (std::uint32_t j = 0; j <= 2; ++j) {
          const auto ij = milnor_recursive(i, q[j]);
          if (i == j) {
            sq.check(ij.is_zero(), "Q" + std::to_string(i) + "^2 != 0 on " + show(a));
          } else if (i < j) {
            const auto ji = milnor_recursive(j, q[i]);
            ac.check(ij == -ji, "Q" + std::to_string(i) + "Q" + std::to_string(j) + " != -Q" +
                                    std::to_string(j) + "Q" + std::to_string(i) + " on " + show(a));
          }
        }
    };
    for (const auto& m : slice)
      run(Element(ctx, m));
    for (int k = 0; k < kRandomCases; ++k)
      run(random_element());
    out.push_back(sq.result());
    out.push_back(ac.result());
    out.push_back(eq.result());
  }

  {
    Tally tl("shift-exactness", prime);
    auto run = [&](const Element& a) {
      const auto b = bidegree_of(a);
      for (const auto& [name, op] : shifted_ops()) {
        const auto v = apply(op, a);
        if (v.is_zero())
          continue;
        const auto want = b + bidegree_shift(op, ctx);
        tl.check(is_homogeneous(v) && bidegree_of(v) == want,
                 name + " of " + show(a) + " not in bidegree " + to_string(want));
      }
    };
    for (const auto& m : slice)
      run(Element(ctx, m));
    for (int k = 0; k < kRandomCases; ++k)
      run(random_element());
    out.push_back(tl.result());
  }

  {
    Tally tl(prime == 2 ? "cartan-twisted" : "cartan", prime);
    auto run = [&](const Element& u, const Element& v) {
      for (std::uint32_t k = 0; k <= 3; ++k)
        tl.check(power(k, u * v) == cartan_expansion(k, u, v),
                 "P" + std::to_string(k) + "(u*v) for u = " + show(u) + ", v = " + show(v));
    };
    for (const auto& m : slice)
      run(Element(ctx, m), random_monomial());
    for (int k = 0; k < kRandomCases; ++k)
      run(random_element(), random_element());
    out.push_back(tl.result());
  }

  {
    Tally tl("bockstein-derivation", prime);
    auto run = [&](const Element& u, const Element& v) {
      const auto lhs = bockstein(u * v);
      const auto rhs = bockstein(u) * v + scalar_mul(first_degree(u) % 2 == 0 ? 1 : -1, u * bockstein(v));
      tl.check(lhs == rhs, "beta(u*v) for u = " + show(u) + ", v = " + show(v));
    };
    for (const auto& m : slice)
      run(Element(ctx, m), random_monomial());
    for (int k = 0; k < kRandomCases; ++k)
      run(random_element(), random_element());
    out.push_back(tl.result());
  }

  {
    Tally tl("bockstein-square-zero", prime);
    auto run = [&](const Element& a) { tl.check(bockstein(bockstein(a)).is_zero(), "beta^2 != 0 on " + show(a)); };
    for (const auto& m : slice)
      run(Element(ctx, m));
    for (int k = 0; k < kRandomCases; ++k)
      run(random_element());
    out.push_back(tl.result());
  }

  return out;
}

} // namespace milnor::cli
