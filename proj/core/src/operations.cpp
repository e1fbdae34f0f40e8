#include "milnor/operations.hpp"

#include <string>

namespace milnor {

std::uint64_t prime_power(std::uint32_t prime, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t k = 0; k < e; ++k) {
    r *= prime;
    if (r > kMaxExponent)
      throw RangeError(std::to_string(prime) + "^" + std::to_string(e) + " exceeds the exponent limit");
  }
  return r;
}

Bidegree bidegree_shift(const PrimitiveOp& op, const RingContext& ctx) {
  const std::int64_t l = ctx.prime();
  switch (op.kind()) {
  case OpKind::Bockstein:
    return {1, 0};
  case OpKind::Power: {
    const std::int64_t i = op.index();
    return {2 * i * (l - 1), i * (l - 1)};
  }
  case OpKind::Milnor: {
    const auto q = static_cast<std::int64_t>(prime_power(ctx.prime(), op.index()));
    return {2 * q - 1, q - 1};
  }
  }
  return {};
}

Bidegree bidegree_shift(const OperationWord& word, const RingContext& ctx) {
  Bidegree total;
  for (const auto& op : word.ops())
    total += bidegree_shift(op, ctx);
  return total;
}

Coeff binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p) {
  if (k > n)
    return 0;
  // Lucas: product of digit binomials; each digit binomial from a small table-free loop.
  std::uint64_t result = 1;
  while (n != 0 || k != 0) {
    const std::uint64_t nd = n % p;
    const std::uint64_t kd = k % p;
    if (kd > nd)
      return 0;
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint64_t j = 0; j < kd; ++j) {
      num = num * ((nd - j) % p) % p;
      den = den * ((j + 1) % p) % p;
    }
    // den is a unit since kd < p.
    std::uint64_t inv = 1;
    std::uint64_t base = den;
    for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
      if (e & 1U)
        inv = inv * base % p;
      base = base * base % p;
    }
    result = result * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return static_cast<Coeff>(result);
}

// ---- Bockstein ---------------------------------------------------------------

namespace {

// beta of one monomial, built factor by factor with the ring product:
// beta(u*g) = beta(u)*g + (-1)^{m(u)} u*beta(g).
Element bockstein_monomial(const RingContext& ctx, const Monomial& mono) {
  Monomial even = mono;
  even.set_ext(0);
  // tau and y have vanishing Bockstein and even first degree.
  Element u(ctx, even);
  Element beta_u(ctx);
  for (auto i : mono.ext_indices()) {
    const Element g = x(ctx, i + 1);
    const Element beta_g = y(ctx, i + 1);
    const auto m_u = u.is_zero() ? 0 : u.terms().begin()->first.bidegree().m;
    Element next_beta = beta_u * g + scalar_mul(m_u % 2 == 0 ? 1 : -1, u * beta_g);
    u = u * g;
    beta_u = std::move(next_beta);
  }
  return beta_u;
}

} // namespace

Element bockstein(const Element& a) {
  const auto& ctx = a.context();
  Element out(ctx);
  for (const auto& [mono, c] : a.terms())
    out += scalar_mul(c, bockstein_monomial(ctx, mono));
  return out;
}

// ---- Reduced powers ----------------------------------------------------------

namespace {

// P^k(tau^t y^d) = tau^t * sum_{c_1+..+c_n=k} prod C(d_j, c_j) y_j^{d_j + c_j(l-1)},
// from P(y) = y + y^l and multiplicativity on the polynomial part.
Element power_polynomial_part(const RingContext& ctx, const Monomial& poly, std::uint64_t k) {
  Element out(ctx);
  if (k > poly.y_degree())
    return out;
  const std::uint32_t n = ctx.rank();
  const std::uint32_t l = ctx.prime();
  std::vector<std::uint64_t> remaining(n + 1, 0);
  for (std::uint32_t j = n; j-- > 0;)
    remaining[j] = remaining[j + 1] + poly.y(j);

  Monomial cur = poly;
  auto rec = [&](auto&& self, std::uint32_t j, std::uint64_t left, Coeff coeff) -> void {
    if (j == n) {
      if (left == 0)
        out.add_term(cur, coeff);
      return;
    }
    const Exponent d = poly.y(j);
    if (left > remaining[j])
      return;
    const std::uint64_t top = std::min<std::uint64_t>(d, left);
    for (std::uint64_t c = 0; c <= top; ++c) {
      const Coeff b = binomial_mod(d, c, l);
      if (b == 0)
        continue;
      cur.set_y(j, d);
      cur.add_y(j, c * (l - 1));
      self(self, j + 1, left - c, ctx.mul(coeff, b));
    }
    cur.set_y(j, d);
  };
  rec(rec, 0, k, 1);
  return out;
}

// Sq^{2k} of the exterior monomial x_S at l = 2, peeling generators from the left:
// Sq^{2k}(x*r) = x*Sq^{2k}(r) + tau*y*beta(Sq^{2k-2}(r)).
Element power_exterior_two(const RingContext& ctx, const std::vector<std::uint32_t>& idx,
                           std::size_t from, std::uint64_t k) {
  Monomial mono(ctx.rank());
  if (from == idx.size())
    return k == 0 ? Element(ctx, mono) : Element(ctx);
  // Sq^{2k} vanishes above half the degree.
  if (2 * k > idx.size() - from)
    return Element(ctx);
  const auto g = idx[from];
  Element out = x(ctx, g + 1) * power_exterior_two(ctx, idx, from + 1, k);
  if (k >= 1) {
    Monomial tau_y(ctx.rank());
    tau_y.set_tau(1).set_y(g, 1);
    out += Element(ctx, tau_y) * bockstein(power_exterior_two(ctx, idx, from + 1, k - 1));
  }
  return out;
}

Element power_monomial(const RingContext& ctx, std::uint64_t k, const Monomial& mono) {
  Monomial poly = mono;
  poly.set_ext(0);
  Monomial ext(ctx.rank());
  ext.set_ext(mono.ext());

  if (ctx.prime() != 2) {
    // P^i(x_j) = 0 for i >= 1, so only the polynomial part moves; it commutes with x_S.
    return power_polynomial_part(ctx, poly, k) * Element(ctx, ext);
  }

  // l = 2: the polynomial part has zero Bockstein, so the twisted Cartan formula
  // reduces to an untwisted split between polynomial and exterior parts.
  const auto idx = mono.ext_indices();
  Element out(ctx);
  for (std::uint64_t b = 0; b <= k && 2 * b <= idx.size(); ++b) {
    Element poly_part = power_polynomial_part(ctx, poly, k - b);
    if (poly_part.is_zero())
      continue;
    out += poly_part * power_exterior_two(ctx, idx, 0, b);
  }
  return out;
}

} // namespace

Element power(std::uint32_t i, const Element& a) {
  if (i == 0)
    return a;
  const auto& ctx = a.context();
  Element out(ctx);
  for (const auto& [mono, c] : a.terms())
    out += scalar_mul(c, power_monomial(ctx, i, mono));
  return out;
}

// ---- Milnor primitives ---------------------------------------------------------

Element milnor_recursive(std::uint32_t i, const Element& a, std::uint32_t max_index) {
  if (i > max_index)
    throw RangeError("Milnor index " + std::to_string(i) + " exceeds the supported maximum " +
                     std::to_string(max_index));
  if (i == 0)
    return bockstein(a);
  const auto q = prime_power(a.context().prime(), i - 1);
  if (q > UINT32_MAX)
    throw RangeError("reduced power index overflow");
  const auto qi = static_cast<std::uint32_t>(q);
  return power(qi, milnor_recursive(i - 1, a, max_index)) -
         milnor_recursive(i - 1, power(qi, a), max_index);
}

Element milnor_oracle(std::uint32_t i, const Element& a) {
  const auto& ctx = a.context();
  Element out(ctx);
  if (a.is_zero())
    return out;
  const auto q = prime_power(ctx.prime(), i);
  for (const auto& [mono, c] : a.terms()) {
    // Q_i(x_{s_1}..x_{s_k}) = sum_p (-1)^p y_{s_p}^{l^i} x_{S - s_p}; tau and y are even.
    std::uint64_t pos = 0;
    for (auto s : mono.ext_indices()) {
      Monomial term = mono;
      term.set_ext(mono.ext() & ~(std::uint64_t{1} << s));
      term.add_y(s, q);
      out.add_term(term, ctx.mul(c, ctx.sign(pos)));
      ++pos;
    }
  }
  return out;
}

Element apply(const PrimitiveOp& op, const Element& a, std::uint32_t max_milnor_index) {
  switch (op.kind()) {
  case OpKind::Bockstein:
    return bockstein(a);
  case OpKind::Power:
    return power(op.index(), a);
  case OpKind::Milnor:
    return milnor_recursive(op.index(), a, max_milnor_index);
  }
  return a;
}

Element apply_word(const OperationWord& word, const Element& a, std::uint32_t max_milnor_index) {
  Element cur = a;
  const auto& ops = word.ops();
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    cur = apply(*it, cur, max_milnor_index);
  }
  return cur;
}

} // namespace milnor
