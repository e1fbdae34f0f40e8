#include "doctest.h"

#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

#include "milnor/expr.hpp"
#include "support.hpp"

using namespace milnor;

namespace {

std::string read_golden(const std::string& name) {
  std::ifstream f(std::string(MILNOR_GOLDEN_DIR) + "/" + name);
  REQUIRE(f.good());
  std::stringstream ss;
  ss << f.rdbuf();
  auto s = ss.str();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
    s.pop_back();
  return s;
}

} // namespace

TEST_CASE("parse_element examples") {
  const RingContext three(3, 3);
  CHECK(parse_element("x1*x2*x3", three) == x(three, 1) * x(three, 2) * x(three, 3));
  CHECK(parse_element("x2*x1 + x1*x2", RingContext(5, 3)).is_zero());
  CHECK(parse_element("tau*y1^3 - 7*y1^3*tau", three).is_zero());
  CHECK(parse_element("x2 * x1", three) == scalar_mul(-1, x(three, 1) * x(three, 2)));
  CHECK(parse_element("-(x1 + 2)", three) == scalar_mul(-1, x(three, 1)) + scalar_mul(1, one(three)));
  CHECK(parse_element("x1^0", three) == one(three));
  CHECK(parse_element("x1^1", three) == x(three, 1));
  CHECK(parse_element("\xCF\x84*y2", three) == tau(three) * y(three, 2));
  CHECK(parse_element("tau^2", three) == tau(three) * tau(three));
  CHECK(parse_element("123456789012345678901234567890*y1", three) == Element(three));
}

TEST_CASE("parse errors carry positions") {
  const RingContext ctx(3, 3);
  auto position = [&](const std::string& src) {
    try {
      parse_element(src, ctx);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  CHECK(position("x1 +") == std::pair<std::size_t, std::size_t>{1, 5});
  CHECK(position("x1\n  * )") == std::pair<std::size_t, std::size_t>{2, 5});
  CHECK(position("z1") == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(position("x1 x2") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(position("(x1") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(position("x") == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(position("y1^") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(position("x1 & x2") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(position("(2)^3") == std::pair<std::size_t, std::size_t>{1, 4});
  CHECK(position("") == std::pair<std::size_t, std::size_t>{1, 1});
}

TEST_CASE("elaboration errors") {
  const RingContext ctx(3, 3);
  CHECK_THROWS_AS(parse_element("x4", ctx), ElaborationError);
  CHECK_THROWS_AS(parse_element("y0", ctx), ElaborationError);
  CHECK_THROWS_AS(parse_element("x1^2", ctx), ElaborationError);
  CHECK_THROWS_AS(parse_element("y1^99999999999", ctx), ElaborationError);
  CHECK_THROWS_AS(parse_element("x99999999999999999999999", ctx), ElaborationError);
}

TEST_CASE("print_element") {
  const RingContext three(3, 3);
  CHECK(print_element(Element(three)) == "0");
  CHECK(print_element(x(three, 1)) == "x1");
  CHECK(print_element(scalar_mul(2, one(three))) == "2");
  CHECK(print_element(scalar_mul(2, tau(three) * tau(three) * y(three, 1) * x(three, 3))) == "2*tau^2*y1*x3");
  CHECK(print_element(bockstein(x(three, 1) * x(three, 2) * x(three, 3))) == read_golden("bockstein_x1x2x3_l3.txt"));
}

TEST_CASE("parse_word") {
  const auto w = parse_word("Q1,Q0");
  REQUIRE(w.ops().size() == 2);
  CHECK(w.ops()[0] == PrimitiveOp::milnor(1));
  CHECK(w.ops()[1] == PrimitiveOp::bockstein());
  CHECK(parse_word("beta") == parse_word("Q0"));
  CHECK(parse_word(" P2 , beta ,Q3") ==
        OperationWord({PrimitiveOp::power(2), PrimitiveOp::bockstein(), PrimitiveOp::milnor(3)}));
  CHECK(print_word(parse_word("beta,P1")) == "Q0,P1");
  CHECK_THROWS_AS(parse_word("Q-1"), ParseError);
  CHECK_THROWS_AS(parse_word("Q"), ParseError);
  CHECK_THROWS_AS(parse_word("Sq2"), ParseError);
  CHECK_THROWS_AS(parse_word("Q1,,Q0"), ParseError);
  CHECK_THROWS_AS(parse_word(""), ParseError);
  CHECK_THROWS_AS(parse_word("Q99999999999"), ParseError);
}

TEST_CASE("emit_json") {
  const RingContext two(2, 3);
  const auto word = parse_word("Q1,Q0");
  const auto input = parse_element("x1*x2*x3", two);
  const auto output = apply_word(word, input);
  const auto line = emit_json({two, word, input, output});
  CHECK(line == read_golden("q1q0_x1x2x3_l2.json"));
  CHECK(line.find('\n') == std::string::npos);

  const auto j = nlohmann::json::parse(line);
  CHECK(j["output_terms"].size() == 6);
  for (const auto& t : j["output_terms"])
    CHECK(t["coeff"] == 1);
  CHECK(j["is_zero"] == false);

  // Re-running from the emitted strings reproduces the computation.
  const auto again_in = parse_element(j["input"].get<std::string>(), two);
  const auto again_word = parse_word(j["word"].get<std::string>());
  CHECK(apply_word(again_word, again_in) == output);
  CHECK(print_element(output) == j["output"].get<std::string>());
  CHECK(emit_json({two, word, input, output}) == line);

  const auto zero = emit_json({two, parse_word("Q2"), y(two, 1), apply_word(parse_word("Q2"), y(two, 1))});
  CHECK(zero.find("\"is_zero\":true") != std::string::npos);
  CHECK(zero.find("\"output_bidegree\":null") != std::string::npos);

  std::vector<std::string> keys;
  const auto ordered = nlohmann::ordered_json::parse(line);
  for (auto it = ordered.begin(); it != ordered.end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"prime", "rank", "input", "word", "output", "output_terms",
                                         "input_bidegree", "shift", "output_bidegree", "is_zero"});
}

TEST_CASE("round trip on fuzzed expressions") {
  for (std::uint32_t l : {2u, 3u, 5u, 7u}) {
    const RingContext ctx(l, 3);
    milnor::testing::ExprFuzzer fuzz(1000 + l, 3);
    for (int k = 0; k < 300; ++k) {
      const auto src = fuzz.next();
      Element a(ctx);
      try {
        a = parse_element(src, ctx);
      } catch (const ElaborationError&) {
        continue;
      }
      const auto printed = print_element(a);
      CHECK_MESSAGE(parse_element(printed, ctx) == a, src);
      CHECK(print_element(parse_element(printed, ctx)) == printed);
    }
  }
}

TEST_CASE("parser is total on arbitrary bytes") {
  const RingContext ctx(3, 3);
  std::mt19937_64 rng(99);
  const std::string alphabet = "xyt au0123456789+-*^()\n\t ,.\xCF\x84";
  for (int k = 0; k < 2000; ++k) {
    const auto len = rng() % 4097;
    std::string s;
    for (std::size_t i = 0; i < len; ++i)
      s += (rng() % 8 == 0) ? static_cast<char>(rng() % 256) : alphabet[rng() % alphabet.size()];
    try {
      parse_element(s, ctx);
    } catch (const Error&) {
    }
  }
  // Deep nesting is rejected rather than exhausting the stack.
  CHECK_THROWS_AS(parse_element(std::string(4096, '('), ctx), ParseError);
  CHECK_THROWS_AS(parse_element(std::string(4095, '-') + "x1", ctx), ParseError);
  CHECK(parse_element(std::string(500, '(') + "x1" + std::string(500, ')'), ctx) == x(ctx, 1));
}
