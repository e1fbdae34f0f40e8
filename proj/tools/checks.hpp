#pragma once

// Fixed verification checks for the Milnor-operation identities and the
// seeded property suites run by `milnor verify`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "milnor/operations.hpp"
#include "milnor/ring.hpp"

namespace milnor::cli {

struct CheckResult {
  std::string name;
  std::uint32_t prime = 0;
  bool passed = false;
  std::string detail;
};

/// Monomials with first degree m <= max_degree and weight ceil(m/2) <= w <= m + 1,
/// in canonical order.
std::vector<Monomial> basis_slice(const RingContext& ctx, int max_degree);

/// Deterministic PRNG wrapper; avoids distribution objects whose output varies by library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

private:
  std::mt19937_64 engine_;
};

/// A nonzero random combination of up to three basis monomials of one bidegree,
/// or zero when the bidegree is empty.
Element random_homogeneous(const RingContext& ctx, Bidegree b, Rng& rng);

/// y_1^{l^k} x_2 x_3 - y_2^{l^k} x_1 x_3 + y_3^{l^k} x_1 x_2 in rank n >= 3.
Element top_class_milnor_formula(const RingContext& ctx, std::uint32_t k);

/// sum over sigma in S_3 of sgn(sigma) y_{sigma(1)}^{e1} y_{sigma(2)}^{e2} y_{sigma(3)}^{e3}.
Element signed_permutation_sum(const RingContext& ctx, Exponent e1, Exponent e2, Exponent e3);

/// Milnor-operation identities on generators and on x1*x2*x3.
std::vector<CheckResult> identity_checks(std::uint32_t prime, std::uint32_t rank);

/// Seeded invariant suites over the basis slice up to max_degree.
std::vector<CheckResult> property_checks(std::uint32_t prime, std::uint32_t rank, int max_degree,
                                         std::uint64_t seed);

} // namespace milnor::cli
