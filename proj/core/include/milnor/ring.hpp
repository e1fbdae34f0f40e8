#pragma once

// Bigraded ring H^{*,*'}(B(Z/l)^n, Z/l) = F_l[tau][y_1..y_n] (x) Lambda(x_1..x_n)
// with x_i^2 = tau*y_i at l = 2 and x_i^2 = 0 at odd l (rho = 0 throughout).

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "milnor/errors.hpp"

namespace milnor {

using Coeff = std::uint32_t;
using Exponent = std::uint32_t;

/// Largest exponent a monomial may carry; arithmetic beyond it throws RangeError.
inline constexpr Exponent kMaxExponent = Exponent{1} << 30;

/// Largest supported rank; exterior generators are kept in a 64-bit mask.
inline constexpr std::uint32_t kMaxRank = 64;

bool is_prime(std::uint64_t n);

/// Ambient parameters of the ring: the prime l and the number n of Z/l factors.
class RingContext {
public:
  RingContext(std::uint32_t prime, std::uint32_t rank);

  std::uint32_t prime() const noexcept { return prime_; }
  std::uint32_t rank() const noexcept { return rank_; }
  // beta(tau) = rho = 0 is the only supported setting.
  constexpr bool rho_is_zero() const noexcept { return true; }

  Coeff reduce(std::int64_t c) const noexcept;
  Coeff add(Coeff a, Coeff b) const noexcept { return static_cast<Coeff>((std::uint64_t{a} + b) % prime_); }
  Coeff sub(Coeff a, Coeff b) const noexcept { return add(a, neg(b)); }
  Coeff mul(Coeff a, Coeff b) const noexcept { return static_cast<Coeff>((std::uint64_t{a} * b) % prime_); }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : prime_ - a; }
  Coeff inverse(Coeff a) const;
  // (-1)^k in F_l.
  Coeff sign(std::uint64_t k) const noexcept { return (k & 1U) ? prime_ - 1 : 1 % prime_; }

  friend bool operator==(const RingContext&, const RingContext&) = default;

private:
  std::uint32_t prime_;
  std::uint32_t rank_;
};

/// (cohomological degree, motivic weight).
struct Bidegree {
  std::int64_t m = 0;
  std::int64_t w = 0;

  Bidegree& operator+=(const Bidegree& o) noexcept {
    m += o.m;
    w += o.w;
    return *this;
  }
  friend Bidegree operator+(Bidegree a, const Bidegree& b) noexcept { return a += b; }
  friend bool operator==(const Bidegree&, const Bidegree&) = default;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

std::string to_string(const Bidegree& b);

/// tau^t * prod y_i^{d_i} * prod_{i in S} x_i, exterior factors in ascending order.
/// Indices are 0-based internally; x_1 in the surface syntax is ext bit 0.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::uint32_t rank) : ys_(rank, 0) {}
  Monomial(Exponent tau, std::vector<Exponent> ys, std::uint64_t ext);

  std::uint32_t rank() const noexcept { return static_cast<std::uint32_t>(ys_.size()); }
  Exponent tau() const noexcept { return tau_; }
  const std::vector<Exponent>& ys() const noexcept { return ys_; }
  Exponent y(std::uint32_t i) const { return ys_.at(i); }
  std::uint64_t ext() const noexcept { return ext_; }
  bool has_x(std::uint32_t i) const noexcept { return (ext_ >> i) & 1U; }
  std::uint32_t ext_count() const noexcept;
  std::vector<std::uint32_t> ext_indices() const;
  std::uint64_t y_degree() const noexcept;
  bool is_one() const noexcept;

  Bidegree bidegree() const noexcept;

  Monomial& set_tau(Exponent t);
  Monomial& set_y(std::uint32_t i, Exponent d);
  Monomial& add_tau(std::uint64_t t);
  Monomial& add_y(std::uint32_t i, std::uint64_t d);
  Monomial& set_ext(std::uint64_t ext);

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  Exponent tau_ = 0;
  std::vector<Exponent> ys_;
  std::uint64_t ext_ = 0;
};

/// Canonical total order: (m, w, t, y-exponent vector lexicographically,
/// exterior set as an ascending index sequence lexicographically).
struct CanonicalOrder {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Product of two monomials as (coefficient, monomial); nullopt when it vanishes.
std::optional<std::pair<Coeff, Monomial>> multiply(const RingContext& ctx, const Monomial& a,
                                                   const Monomial& b);

/// Finite F_l-linear combination of monomials with every stored coefficient nonzero.
class Element {
public:
  using Terms = std::map<Monomial, Coeff, CanonicalOrder>;

  explicit Element(const RingContext& ctx) : ctx_(ctx) {}
  Element(const RingContext& ctx, const Monomial& mono, Coeff c = 1);

  const RingContext& context() const noexcept { return ctx_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  // Coefficient of mono, 0 when absent.
  Coeff coeff(const Monomial& mono) const;

  // Adds c*mono in place, pruning the term if it cancels.
  void add_term(const Monomial& mono, Coeff c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Element& a, const Element& b);
  Element operator-() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
  }

private:
  RingContext ctx_;
  Terms terms_;
};

enum class GeneratorKind { X, Y, Tau };

Element make_generator(const RingContext& ctx, GeneratorKind kind,
                       std::optional<std::uint32_t> index = std::nullopt);

// Shorthands with 1-based indices.
Element x(const RingContext& ctx, std::uint32_t i);
Element y(const RingContext& ctx, std::uint32_t i);
Element tau(const RingContext& ctx);
Element one(const RingContext& ctx);

Element add(const Element& a, const Element& b);
Element mul(const Element& a, const Element& b);
Element scalar_mul(std::int64_t c, const Element& a);

bool is_homogeneous(const Element& a);
/// Throws DegreeError for zero or inhomogeneous input.
Bidegree bidegree_of(const Element& a);

/// Every monomial of the given bidegree, in canonical order.
std::vector<Monomial> enumerate_basis(const RingContext& ctx, Bidegree bidegree);

} // namespace milnor
