#include "commands.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#include "checks.hpp"
#include "milnor/expr.hpp"
#include "milnor/linalg.hpp"

namespace milnor::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

CommandResult usage_error(const std::string& message) { return {kExitUsage, "", "error: " + message + "\n"}; }

// Runs body, mapping library errors to usage errors and anything else to an internal defect.
template <class F>
CommandResult guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    return {kExitInternal, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

} // namespace

CommandResult cmd_apply(std::uint32_t prime, std::uint32_t rank, const std::string& word_text,
                        const std::string& expr_text, Format format) {
  return guarded([&] {
    const RingContext ctx(prime, rank);
    const auto word = parse_word(word_text);
    const auto input = parse_element(expr_text, ctx);
    const auto output = apply_word(word, input);
    if (format == Format::Json)
      return CommandResult{kExitOk, emit_json({ctx, word, input, output}) + "\n", ""};
    return CommandResult{kExitOk, print_element(output) + "\n", ""};
  });
}

CommandResult cmd_verify(const VerifyOptions& options) {
  return guarded([&] {
    std::vector<std::uint32_t> primes = options.prime ? std::vector<std::uint32_t>{*options.prime}
                                                      : std::vector<std::uint32_t>{2, 3, 5};
    for (auto p : primes)
      if (!is_prime(p))
        throw RangeError("prime must be a prime number, got " + std::to_string(p));
    if (options.rank < 3 && options.suite != Suite::Properties)
      throw RangeError("the identity suite needs rank >= 3");
    if (options.max_degree < 0)
      throw RangeError("max-degree must be nonnegative");

    std::vector<CheckResult> results;
    for (auto p : primes) {
      if (options.suite != Suite::Properties) {
        auto r = identity_checks(p, options.rank);
        results.insert(results.end(), r.begin(), r.end());
      }
      if (options.suite != Suite::Identities) {
        auto r = property_checks(p, options.rank, options.max_degree, options.seed);
        results.insert(results.end(), r.begin(), r.end());
      }
    }
    const auto failed = static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; }));
    const int code = failed == 0 ? kExitOk : kExitCheckFailed;
    const char* suite_name = options.suite == Suite::Identities ? "paper"
                             : options.suite == Suite::Properties ? "properties"
                                                                  : "all";

    if (options.format == Format::Json) {
      ordered_json checks = ordered_json::array();
      for (const auto& r : results)
        checks.push_back(ordered_json{{"name", r.name}, {"prime", r.prime}, {"passed", r.passed}, {"detail", r.detail}});
      ordered_json j;
      j["suite"] = suite_name;
      j["rank"] = options.rank;
      j["max_degree"] = options.max_degree;
      j["seed"] = options.seed;
      j["checks"] = std::move(checks);
      j["passed"] = failed == 0;
      return CommandResult{code, j.dump() + "\n", ""};
    }

    std::ostringstream os;
    os << "verify suite=" << suite_name << " rank=" << options.rank << " max-degree=" << options.max_degree
       << " seed=" << options.seed << "\n";
    for (const auto& r : results)
      os << (r.passed ? "PASS" : "FAIL") << "  l=" << r.prime << "  " << r.name << "  (" << r.detail << ")\n";
    os << results.size() << " checks, " << failed << " failed\n";
    return CommandResult{code, os.str(), ""};
  });
}

const std::vector<GroupDescriptor>& certified_groups() {
  static const std::vector<GroupDescriptor> groups{{"G2", 2}, {"F4", 3}, {"E8", 5}};
  return groups;
}

std::optional<GroupDescriptor> find_group(const std::string& name) {
  for (const auto& g : certified_groups())
    if (g.name == name)
      return g;
  return std::nullopt;
}

Element restriction_class(const GroupDescriptor& group) {
  const RingContext ctx(group.prime, 3);
  return bockstein(x(ctx, 1) * x(ctx, 2) * x(ctx, 3));
}

CertificateReport certify(const GroupDescriptor& group) {
  const auto u4 = restriction_class(group);
  const auto q1 = milnor_recursive(1, u4);
  const auto q1_oracle = milnor_oracle(1, u4);

  CertificateReport report;
  report.group = group;
  report.witness_class = print_element(u4);
  report.q1_value = print_element(q1);
  report.q1_oracle_value = print_element(q1_oracle);
  report.nonzero = report.q1_value != "0";
  report.implementations_agree = q1 == q1_oracle;
  if (report.nonzero)
    report.conclusion = "Q1(i*x4) = Q1Q0(x1*x2*x3) is nonzero in H^*(B(Z/" + std::to_string(group.prime) +
                        ")^3); Milnor operations vanish on mod-" + std::to_string(group.prime) +
                        " Chow classes of smooth varieties, so x4(" + group.name +
                        ") is not algebraic modulo torsion and the cycle class map to H^4/torsion "
                        "is not surjective";
  else
    report.conclusion = "Q1 vanishes on the witness class; no obstruction is certified";
  return report;
}

CommandResult cmd_certify(const std::string& name, std::optional<std::uint32_t> prime, Format format) {
  const auto group = find_group(name);
  if (!group)
    return usage_error("unknown group '" + name + "'; expected one of G2, F4, E8");
  if (prime && *prime != group->prime)
    return usage_error("group " + name + " is paired with l=" + std::to_string(group->prime) + ", not l=" +
                       std::to_string(*prime));
  return guarded([&] {
    const auto report = certify(*group);
    int code = kExitOk;
    std::string err;
    if (!report.implementations_agree) {
      code = kExitInternal;
      err = "internal consistency defect: recursive Q1 = " + report.q1_value + " but derivation Q1 = " +
            report.q1_oracle_value + "\n";
    } else if (!report.nonzero) {
      code = kExitCheckFailed;
    }

    if (format == Format::Json) {
      ordered_json j;
      j["group"] = report.group.name;
      j["prime"] = report.group.prime;
      j["witness_class"] = report.witness_class;
      j["q1_value"] = report.q1_value;
      j["nonzero"] = report.nonzero;
      j["implementations_agree"] = report.implementations_agree;
      j["conclusion"] = report.conclusion;
      return CommandResult{code, j.dump() + "\n", err};
    }
    std::ostringstream os;
    os << "group: " << report.group.name << "\n"
       << "prime: " << report.group.prime << "\n"
       << "witness_class: " << report.witness_class << "\n"
       << "q1_value: " << report.q1_value << "\n"
       << "nonzero: " << (report.nonzero ? "true" : "false") << "\n"
       << "implementations_agree: " << (report.implementations_agree ? "true" : "false") << "\n"
       << "conclusion: " << report.conclusion << "\n";
    return CommandResult{code, os.str(), err};
  });
}

ScanReport scan(const RingContext& ctx, Bidegree bidegree, const OperationWord& word) {
  ScanReport report;
  report.prime = ctx.prime();
  report.rank = ctx.rank();
  report.bidegree = bidegree;
  report.word = print_word(word);

  const auto basis = enumerate_basis(ctx, bidegree);
  std::vector<Element> images;
  images.reserve(basis.size());
  for (const auto& m : basis) {
    report.basis.push_back(print_monomial(m));
    images.push_back(apply_word(word, Element(ctx, m)));
  }

  std::map<Monomial, std::size_t, CanonicalOrder> rows;
  for (const auto& img : images)
    for (const auto& [mono, c] : img.terms())
      rows.emplace(mono, 0);
  std::size_t r = 0;
  for (auto& [mono, idx] : rows)
    idx = r++;

  Matrix matrix(ctx, rows.size(), basis.size());
  for (std::size_t col = 0; col < images.size(); ++col)
    for (const auto& [mono, c] : images[col].terms())
      matrix.at(rows.at(mono), col) = c;

  const auto k = kernel(std::move(matrix));
  report.image_rank = k.rank;
  for (const auto& v : k.kernel) {
    Element e(ctx);
    for (std::size_t col = 0; col < v.size(); ++col)
      e.add_term(basis[col], v[col]);
    report.kernel_basis.push_back(print_element(e));
  }
  return report;
}

CommandResult cmd_scan(std::uint32_t prime, std::uint32_t rank, Bidegree bidegree, const std::string& word_text,
                       Format format) {
  return guarded([&] {
    if (bidegree.m < 0 || bidegree.w < 0)
      throw RangeError("bidegree components must be nonnegative");
    const RingContext ctx(prime, rank);
    const auto report = scan(ctx, bidegree, parse_word(word_text));
    if (format == Format::Json) {
      ordered_json j;
      j["prime"] = report.prime;
      j["rank"] = report.rank;
      j["bidegree"] = ordered_json::array({report.bidegree.m, report.bidegree.w});
      j["word"] = report.word;
      j["basis_size"] = report.basis.size();
      j["image_rank"] = report.image_rank;
      j["kernel_dimension"] = report.kernel_basis.size();
      j["kernel_basis"] = report.kernel_basis;
      return CommandResult{kExitOk, j.dump() + "\n", ""};
    }
    std::ostringstream os;
    os << "scan prime=" << report.prime << " rank=" << report.rank << " bidegree=" << to_string(report.bidegree)
       << " word=" << report.word << "\n"
       << "basis size: " << report.basis.size() << "\n"
       << "image rank: " << report.image_rank << "\n"
       << "kernel dimension: " << report.kernel_basis.size() << "\n"
       << "kernel basis:\n";
    for (const auto& k : report.kernel_basis)
      os << "  " << k << "\n";
    return CommandResult{kExitOk, os.str(), ""};
  });
}

} // namespace milnor::cli
