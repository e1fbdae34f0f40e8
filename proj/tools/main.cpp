#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

using namespace milnor;
using namespace milnor::cli;

namespace {

std::optional<Bidegree> parse_bidegree(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    return std::nullopt;
  try {
    std::size_t used = 0;
    const auto m = std::stoll(text.substr(0, comma), &used);
    if (used != comma)
      return std::nullopt;
    const auto rest = text.substr(comma + 1);
    const auto w = std::stoll(rest, &used);
    if (used != rest.size())
      return std::nullopt;
    return Bidegree{m, w};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor operations on the mod-l motivic cohomology of B(Z/l)^n"};
  app.require_subcommand(1);

  std::uint32_t prime = 2;
  std::uint32_t rank = 3;
  std::string word;
  std::string expr;
  std::string bidegree_text;
  std::string group;
  std::string suite = "all";
  int max_degree = 12;
  std::uint64_t seed = 1;
  std::string out_path;
  Format format = Format::Human;
  const std::map<std::string, Format> formats{{"human", Format::Human}, {"json", Format::Json}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  auto* apply = app.add_subcommand("apply", "Apply an operation word to an expression");
  apply->add_option("-l,--prime", prime, "The prime l")->required();
  apply->add_option("-n,--rank", rank, "Number of Z/l factors")->required();
  apply->add_option("--word", word, "Operation word, e.g. Q1,Q0")->required();
  apply->add_option("--expr", expr, "Element, e.g. x1*x2*x3")->required();
  add_common(apply);

  std::optional<std::uint32_t> verify_prime;
  auto* verify = app.add_subcommand("verify", "Run the identity checks and property suites");
  verify->add_option("suite", suite, "paper | properties | all")
      ->check(CLI::IsMember({"paper", "properties", "all"}));
  verify->add_option("-l,--prime", verify_prime, "Restrict to one prime (default: 2, 3 and 5)");
  verify->add_option("-n,--rank", rank, "Rank of the test ring")->capture_default_str();
  verify->add_option("--max-degree", max_degree, "Largest first degree in the basis sweep")->capture_default_str();
  verify->add_option("--seed", seed, "Seed for random cases")->capture_default_str();
  add_common(verify);

  std::optional<std::uint32_t> certify_prime;
  auto* certify = app.add_subcommand("certify", "Emit the Q1 non-algebraicity certificate for a group");
  certify->add_option("--group", group, "G2, F4 or E8")->required();
  certify->add_option("-l,--prime", certify_prime, "Must match the group's prime when given");
  add_common(certify);

  auto* scan = app.add_subcommand("scan", "Kernel of an operation word on one bidegree");
  scan->add_option("-l,--prime", prime, "The prime l")->required();
  scan->add_option("-n,--rank", rank, "Number of Z/l factors")->required();
  scan->add_option("--bidegree", bidegree_text, "m,w")->required();
  scan->add_option("--word", word, "Operation word")->required();
  add_common(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  CommandResult result;
  if (*apply) {
    result = cmd_apply(prime, rank, word, expr, format);
  } else if (*verify) {
    VerifyOptions opts;
    opts.suite = suite == "paper" ? Suite::Identities : suite == "properties" ? Suite::Properties : Suite::All;
    opts.prime = verify_prime;
    opts.rank = rank;
    opts.max_degree = max_degree;
    opts.seed = seed;
    opts.format = format;
    result = cmd_verify(opts);
  } else if (*certify) {
    result = cmd_certify(group, certify_prime, format);
  } else if (*scan) {
    const auto b = parse_bidegree(bidegree_text);
    if (!b) {
      std::cerr << "error: --bidegree expects m,w\n";
      return kExitUsage;
    }
    result = cmd_scan(prime, rank, *b, word, format);
  }

  std::cerr << result.err;
  if (out_path.empty()) {
    std::cout << result.out;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return kExitUsage;
    }
    f << result.out;
  }
  return result.exit_code;
}
