#include "doctest.h"

#include "json.hpp"

#include "checks.hpp"
#include "commands.hpp"
#include "milnor/expr.hpp"
#include "support.hpp"

using namespace milnor;
using namespace milnor::cli;

TEST_CASE("apply") {
  CHECK(cmd_apply(3, 3, "Q1", "x1", Format::Human).out == "y1^3\n");
  CHECK(cmd_apply(2, 3, "Q2", "y1", Format::Human).out == "0\n");
  CHECK(cmd_apply(5, 1, "P1", "y1", Format::Human).out == "y1^5\n");
  const auto zero = cmd_apply(2, 3, "Q2", "y1", Format::Json);
  CHECK(zero.exit_code == kExitOk);
  CHECK(nlohmann::json::parse(zero.out)["is_zero"] == true);

  CHECK(cmd_apply(4, 3, "Q1", "x1", Format::Human).exit_code == kExitUsage);
  CHECK(cmd_apply(3, 3, "Q1", "x1 +", Format::Human).exit_code == kExitUsage);
  CHECK(cmd_apply(3, 3, "Q1", "x9", Format::Human).exit_code == kExitUsage);
  CHECK(cmd_apply(3, 3, "Qx", "x1", Format::Human).exit_code == kExitUsage);
  CHECK_FALSE(cmd_apply(3, 3, "Qx", "x1", Format::Human).err.empty());
}

TEST_CASE("verify") {
  VerifyOptions opts;
  opts.suite = Suite::Identities;
  opts.prime = 2;
  const auto r = cmd_verify(opts);
  CHECK(r.exit_code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("q1-q0-top-class-nonzero") != std::string::npos);

  opts.prime = 7;
  CHECK(cmd_verify(opts).exit_code == kExitOk);

  VerifyOptions props;
  props.suite = Suite::Properties;
  props.max_degree = 0;
  const auto p = cmd_verify(props);
  CHECK(p.exit_code == kExitOk);
  CHECK(p.out.find("scalar-identities") != std::string::npos);

  props.prime = 4;
  CHECK(cmd_verify(props).exit_code == kExitUsage);
  VerifyOptions small;
  small.suite = Suite::Identities;
  small.rank = 2;
  CHECK(cmd_verify(small).exit_code == kExitUsage);
}

TEST_CASE("triple Milnor composite at l = 7 matches the permutation-sum formula") {
  const RingContext ctx(7, 3);
  const auto top = x(ctx, 1) * x(ctx, 2) * x(ctx, 3);
  const auto q1q0 = apply_word(parse_word("Q1,Q0"), top);
  CHECK_FALSE(q1q0.is_zero());
  CHECK(apply_word(parse_word("Q0,Q1,Q2"), top) == signed_permutation_sum(ctx, 49, 7, 1));
}

TEST_CASE("certify") {
  const auto g2 = find_group("G2");
  REQUIRE(g2);
  const auto report = certify(*g2);
  CHECK(report.nonzero);
  CHECK(report.implementations_agree);
  const RingContext two(2, 3);
  const auto y1 = y(two, 1), y2 = y(two, 2), y3 = y(two, 3);
  const auto expected = (y1 * y2 * y2 + y2 * y1 * y1) * x(two, 3) + (y1 * y3 * y3 + y3 * y1 * y1) * x(two, 2) +
                        (y2 * y3 * y3 + y3 * y2 * y2) * x(two, 1);
  CHECK(report.q1_value == print_element(expected));
  CHECK(bidegree_of(restriction_class(*g2)) == Bidegree{4, 3});

  for (const auto& g : certified_groups()) {
    const auto r = cmd_certify(g.name, std::nullopt, Format::Human);
    CHECK(r.exit_code == kExitOk);
    CHECK(r.out.find("nonzero: true") != std::string::npos);
    CHECK(r.out == cmd_certify(g.name, g.prime, Format::Human).out);
    CHECK(bidegree_of(restriction_class(g)) == Bidegree{4, 3});
  }
  CHECK(find_group("F4")->prime == 3);
  CHECK(find_group("E8")->prime == 5);
  CHECK(cmd_certify("E6", std::nullopt, Format::Human).exit_code == kExitUsage);
  CHECK(cmd_certify("G2", 3, Format::Human).exit_code == kExitUsage);

  const auto j = nlohmann::json::parse(cmd_certify("F4", std::nullopt, Format::Json).out);
  CHECK(j["nonzero"] == true);
  CHECK(j["group"] == "F4");
}

TEST_CASE("scan") {
  const RingContext two(2, 3);
  const auto report = scan(two, {3, 3}, parse_word("Q1,Q0"));
  CHECK(report.basis.size() == 10);
  CHECK(report.kernel_basis.size() + report.image_rank == report.basis.size());
  // Oracle: apply the word to each basis monomial individually.
  std::size_t killed = 0;
  for (const auto& m : enumerate_basis(two, {3, 3})) {
    const bool zero = apply_word(parse_word("Q1,Q0"), Element(two, m)).is_zero();
    killed += zero ? 1 : 0;
    if (print_monomial(m) == "x1*x2*x3")
      CHECK_FALSE(zero);
  }
  CHECK(killed == 9);
  CHECK(report.kernel_basis.size() == 9);
  for (const auto& k : report.kernel_basis)
    CHECK(k != "x1*x2*x3");

  const auto unit = scan(RingContext(3, 3), {0, 0}, parse_word("Q1"));
  CHECK(unit.basis.size() == 1);
  CHECK(unit.kernel_basis.size() == 1);

  const auto ys = scan(RingContext(3, 3), {2, 1}, parse_word("Q1"));
  CHECK(ys.basis.size() == 3);
  CHECK(ys.kernel_basis.size() == 3);

  // A map with a nontrivial linear relation: beta on H^{2,2} at l = 3.
  const auto rel = scan(RingContext(3, 2), {2, 2}, parse_word("Q0"));
  CHECK(rel.kernel_basis.size() + rel.image_rank == rel.basis.size());
  for (const auto& k : rel.kernel_basis)
    CHECK(bockstein(parse_element(k, RingContext(3, 2))).is_zero());

  CHECK(cmd_scan(2, 3, {3, 3}, "Q1,Q0", Format::Human).out == cmd_scan(2, 3, {3, 3}, "Q1,Q0", Format::Human).out);
  CHECK(cmd_scan(2, 3, {-1, 3}, "Q1", Format::Human).exit_code == kExitUsage);
  const auto j = nlohmann::json::parse(cmd_scan(2, 3, {3, 3}, "Q1,Q0", Format::Json).out);
  CHECK(j["kernel_dimension"] == 9);
  CHECK(j["basis_size"] == 10);
}

TEST_CASE("scan rank-nullity across bidegrees") {
  for (std::uint32_t l : {2u, 3u}) {
    const RingContext ctx(l, 3);
    for (const auto* w : {"Q0", "Q1", "P1", "Q1,Q0"})
      for (std::int64_t m = 0; m <= 6; ++m)
        for (std::int64_t wt = (m + 1) / 2; wt <= m + 1; ++wt) {
          const auto r = scan(ctx, {m, wt}, parse_word(w));
          CHECK(r.kernel_basis.size() + r.image_rank == r.basis.size());
          for (const auto& k : r.kernel_basis)
            CHECK(apply_word(parse_word(w), parse_element(k, ctx)).is_zero());
        }
  }
}
