#pragma once

// Surface syntax for elements and operation words, canonical printing and the
// one-line JSON record for an applied word.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | GEN ('^' UINT)? | '(' expr ')' | '-' factor
//   GEN    := ('x' | 'y') UINT | 'tau'          (UTF-8 "τ" is accepted for tau)
//
// A word is a comma-separated list of Q<i>, P<i> and beta; the leftmost token acts last.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "milnor/operations.hpp"
#include "milnor/ring.hpp"

namespace milnor {

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

namespace ast {

// Digits kept verbatim; reduced mod l at elaboration.
struct Integer {
  std::string digits;
};

struct Generator {
  GeneratorKind kind;
  std::uint64_t index = 0; // unused for tau
  std::uint64_t exponent = 1;
};

struct Sum {
  // (negated, operand)
  std::vector<std::pair<bool, ExprPtr>> operands;
};

struct Product {
  std::vector<ExprPtr> factors;
};

struct Negate {
  ExprPtr operand;
};

} // namespace ast

struct ExprNode {
  std::variant<ast::Integer, ast::Generator, ast::Sum, ast::Product, ast::Negate> node;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses without reference to a ring; throws ParseError.
ExprPtr parse_expr(std::string_view src);

/// Throws ElaborationError for out-of-range indices and x-exponents >= 2.
Element elaborate(const ExprNode& expr, const RingContext& ctx);

Element parse_element(std::string_view src, const RingContext& ctx);

std::string print_monomial(const Monomial& mono);
std::string print_element(const Element& a);

/// Throws ParseError on unknown or malformed tokens.
OperationWord parse_word(std::string_view src);
/// Canonical spelling, e.g. "Q1,Q0"; beta prints as Q0.
std::string print_word(const OperationWord& word);

/// Everything emit_json needs about one application of a word.
struct ApplyRecord {
  RingContext ctx;
  OperationWord word;
  Element input;
  Element output;
};

/// Single-line JSON with keys, in order: prime, rank, input, word, output,
/// output_terms, input_bidegree, shift, output_bidegree, is_zero.
std::string emit_json(const ApplyRecord& record);

} // namespace milnor
