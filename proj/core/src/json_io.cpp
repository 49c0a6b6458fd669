#include "nilfactor/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nilfactor {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_content(const std::string& origin, const std::string& what) {
  raise(Errc::IoError, origin + ": " + what);
}

Json parse_or_raise(const std::string& text, const std::string& origin) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad_content(origin, "not valid JSON");
  return j;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(Errc::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) raise(Errc::IoError, "cannot read " + path);
  return buf.str();
}

int int_field(const Json& j, const char* key, const std::string& origin) {
  if (!j.contains(key) || !j[key].is_number_integer())
    bad_content(origin, std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& origin,
                          const std::string& what) {
  if (!j.is_array()) bad_content(origin, what + " must be a list of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& v : j) {
    if (!v.is_number_integer()) bad_content(origin, what + " must hold integers only");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::string group_to_json(const GroupTable& g) {
  Json j;
  j["order"] = g.order();
  Json rows = Json::array();
  for (int a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  j["table"] = std::move(rows);
  if (g.has_labels()) j["labels"] = g.labels();
  return j.dump();
}

GroupTable group_from_json_text(const std::string& text, const std::string& origin) {
  Json j = parse_or_raise(text, origin);
  if (!j.is_object()) bad_content(origin, "expected a JSON object");
  const int order = int_field(j, "order", origin);
  if (order < 1) bad_content(origin, "order must be positive");
  if (!j.contains("table") || !j["table"].is_array() ||
      static_cast<int>(j["table"].size()) != order)
    bad_content(origin, "table must be a list of " + std::to_string(order) + " rows");
  std::vector<std::vector<int>> rows;
  rows.reserve(order);
  for (const Json& r : j["table"]) rows.push_back(int_list(r, origin, "table row"));

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array() || static_cast<int>(j["labels"].size()) != order)
      bad_content(origin, "labels must list one name per element");
    for (const Json& v : j["labels"]) {
      if (!v.is_string()) bad_content(origin, "labels must be strings");
      labels.push_back(v.get<std::string>());
    }
  }
  return make_from_table(order, rows, kDefaultAssocCheckBound, std::move(labels));
}

GroupTable read_group_json(const std::string& path) {
  return group_from_json_text(slurp(path), path);
}

PermutationGroupFile read_permutation_group_json(const std::string& path) {
  Json j = parse_or_raise(slurp(path), path);
  if (!j.is_object()) bad_content(path, "expected a JSON object");
  PermutationGroupFile out;
  out.degree = int_field(j, "degree", path);
  if (out.degree < 0) bad_content(path, "degree must be nonnegative");
  if (!j.contains("generators") || !j["generators"].is_array())
    bad_content(path, "missing \"generators\" list");
  for (const Json& gen : j["generators"])
    out.generators.push_back(int_list(gen, path, "generator"));
  return out;
}

std::string factorization_to_json(const CompleteFactorization& f) {
  Json j;
  j["sizes"] = f.sizes;
  Json blocks = Json::array();
  for (const ElementSet& b : f.blocks) blocks.push_back(b.ids());
  j["blocks"] = std::move(blocks);
  if (f.trace) {
    Json trace;
    std::vector<int> chain_orders;
    chain_orders.reserve(f.trace->chain.subgroups.size());
    for (const Subgroup& h : f.trace->chain.subgroups) chain_orders.push_back(h.order());
    trace["chain_orders"] = std::move(chain_orders);
    trace["shifts"] = f.trace->shifts;
    trace["t"] = f.trace->t;
    trace["s"] = f.trace->s;
    trace["t_prime"] = f.trace->t_prime;
    trace["s_prime"] = f.trace->s_prime;
    j["trace"] = std::move(trace);
  }
  return j.dump();
}

CompleteFactorization factorization_from_json_text(const std::string& text,
                                                   const std::string& origin) {
  Json j = parse_or_raise(text, origin);
  if (!j.is_object()) bad_content(origin, "expected a JSON object");
  if (!j.contains("blocks") || !j["blocks"].is_array())
    bad_content(origin, "missing \"blocks\" list");

  CompleteFactorization f;
  for (const Json& b : j["blocks"]) {
    std::vector<int> ids = int_list(b, origin, "block");
    ElementSet set(ids);
    if (set.size() != static_cast<int>(ids.size()))
      bad_content(origin, "block repeats an element");
    f.sizes.push_back(set.size());
    f.blocks.push_back(std::move(set));
  }
  if (j.contains("sizes")) {
    std::vector<int> sizes = int_list(j["sizes"], origin, "sizes");
    if (sizes != f.sizes) bad_content(origin, "sizes disagree with the blocks");
  }
  return f;
}

CompleteFactorization read_factorization_json(const std::string& path) {
  return factorization_from_json_text(slurp(path), path);
}

std::string verify_report_to_json(const VerifyReport& report) {
  Json j;
  j["pass"] = report.pass();
  j["sizes_ok"] = report.sizes_ok;
  j["product_of_sizes"] = report.product_of_sizes;
  j["disjoint_checked"] = report.disjoint_checked;
  if (report.disjoint_checked) j["disjoint_ok"] = report.disjoint_ok;
  j["coverage_ok"] = report.coverage_ok;
  if (report.overlap) {
    j["overlap"] = Json{{"block_a", report.overlap->block_a},
                        {"block_b", report.overlap->block_b},
                        {"element", report.overlap->element}};
  }
  if (report.collision) {
    j["collision"] = Json{{"element", report.collision->element},
                          {"first", report.collision->first},
                          {"second", report.collision->second}};
  }
  if (report.uncovered) j["uncovered"] = *report.uncovered;
  return j.dump();
}

std::string search_outcome_to_json(const SearchOutcome& outcome, bool include_elapsed) {
  Json j;
  switch (outcome.status) {
    case SearchStatus::Found:
      j["status"] = "found";
      break;
    case SearchStatus::ExhaustedNotFound:
      j["status"] = "exhausted_not_found";
      break;
    case SearchStatus::BudgetExceeded:
      j["status"] = "budget_exceeded";
      break;
  }
  if (outcome.witness) {
    Json blocks = Json::array();
    for (const ElementSet& b : *outcome.witness) blocks.push_back(b.ids());
    j["witness"] = std::move(blocks);
  }
  j["nodes"] = outcome.nodes_explored;
  if (outcome.count) j["count"] = *outcome.count;
  if (include_elapsed) j["elapsed_seconds"] = outcome.elapsed_seconds;
  return j.dump();
}

}  // namespace nilfactor
