#pragma once

// Bockstein, reduced powers and Milnor primitives on the B(Z/l)^n ring.

#include <cstdint>
#include <vector>

#include "milnor/ring.hpp"

namespace milnor {

enum class OpKind { Bockstein, Power, Milnor };

/// One primitive operation. Milnor(0) is normalized to Bockstein on construction.
class PrimitiveOp {
public:
  static PrimitiveOp bockstein() noexcept { return PrimitiveOp(OpKind::Bockstein, 0); }
  static PrimitiveOp power(std::uint32_t i) noexcept { return PrimitiveOp(OpKind::Power, i); }
  static PrimitiveOp milnor(std::uint32_t i) noexcept {
    return i == 0 ? bockstein() : PrimitiveOp(OpKind::Milnor, i);
  }

  OpKind kind() const noexcept { return kind_; }
  std::uint32_t index() const noexcept { return index_; }

  friend bool operator==(const PrimitiveOp&, const PrimitiveOp&) = default;

private:
  PrimitiveOp(OpKind kind, std::uint32_t index) noexcept : kind_(kind), index_(index) {}

  OpKind kind_;
  std::uint32_t index_;
};

/// Composition of primitives; ops()[0] acts last, ops().back() acts first.
class OperationWord {
public:
  OperationWord() = default;
  explicit OperationWord(std::vector<PrimitiveOp> ops) : ops_(std::move(ops)) {}

  const std::vector<PrimitiveOp>& ops() const noexcept { return ops_; }
  bool empty() const noexcept { return ops_.empty(); }

  friend bool operator==(const OperationWord&, const OperationWord&) = default;

private:
  std::vector<PrimitiveOp> ops_;
};

/// Milnor indices above this are rejected unless a larger limit is passed.
inline constexpr std::uint32_t kDefaultMaxMilnorIndex = 3;

/// l^e, throwing RangeError past kMaxExponent.
std::uint64_t prime_power(std::uint32_t prime, std::uint32_t e);

Bidegree bidegree_shift(const PrimitiveOp& op, const RingContext& ctx);
Bidegree bidegree_shift(const OperationWord& word, const RingContext& ctx);

/// beta = Q_0, extended to products by the signed Leibniz rule.
Element bockstein(const Element& a);

/// Reduced power P^i (the even square Sq^{2i} at l = 2), via the Cartan formula.
/// At l = 2 the odd-odd cross terms carry the tau twist, with Sq^{2a+1} = beta P^a.
Element power(std::uint32_t i, const Element& a);

/// Q_i through the commutator recursion Q_i = P^{l^{i-1}} Q_{i-1} - Q_{i-1} P^{l^{i-1}}.
Element milnor_recursive(std::uint32_t i, const Element& a,
                         std::uint32_t max_index = kDefaultMaxMilnorIndex);

/// Q_i as the odd derivation with Q_i(x_j) = y_j^{l^i} and Q_i(y_j) = Q_i(tau) = 0.
Element milnor_oracle(std::uint32_t i, const Element& a);

Element apply(const PrimitiveOp& op, const Element& a,
              std::uint32_t max_milnor_index = kDefaultMaxMilnorIndex);

/// Applies the word right to left.
Element apply_word(const OperationWord& word, const Element& a,
                   std::uint32_t max_milnor_index = kDefaultMaxMilnorIndex);

/// C(n, k) mod p by Lucas' theorem.
Coeff binomial_mod(std::uint64_t n, std::uint64_t k, std::uint32_t p);

} // namespace milnor
