#include "json.hpp"

#include "milnor/expr.hpp"

namespace milnor {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json bidegree_json(const Bidegree& b) { return ordered_json::array({b.m, b.w}); }

ordered_json maybe_bidegree(const Element& a) {
  if (a.is_zero() || !is_homogeneous(a))
    return nullptr;
  return bidegree_json(bidegree_of(a));
}

} // namespace

std::string emit_json(const ApplyRecord& record) {
  ordered_json terms = ordered_json::array();
  for (const auto& [mono, c] : record.output.terms()) {
    ordered_json xs = ordered_json::array();
    for (auto i : mono.ext_indices())
      xs.push_back(i + 1);
    terms.push_back(ordered_json{
        {"coeff", c}, {"tau", mono.tau()}, {"ys", mono.ys()}, {"xs", std::move(xs)}});
  }

  ordered_json j;
  j["prime"] = record.ctx.prime();
  j["rank"] = record.ctx.rank();
  j["input"] = print_element(record.input);
  j["word"] = print_word(record.word);
  j["output"] = print_element(record.output);
  j["output_terms"] = std::move(terms);
  j["input_bidegree"] = maybe_bidegree(record.input);
  j["shift"] = bidegree_json(bidegree_shift(record.word, record.ctx));
  j["output_bidegree"] = maybe_bidegree(record.output);
  j["is_zero"] = record.output.is_zero();
  return j.dump();
}

} // namespace milnor
