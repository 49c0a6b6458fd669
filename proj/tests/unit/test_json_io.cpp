#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>

#include "checks.hpp"
#include "doctest.h"
#include "json.hpp"
#include "nilfactor/constructors.hpp"
#include "nilfactor/json_io.hpp"

using namespace nilfactor;
using nilfactor::testing::raises;
using Json = nlohmann::json;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/nilfactor_test_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("groups round-trip through JSON with labels intact") {
  GroupTable g = make_quaternion();
  const std::string text = group_to_json(g);
  CHECK(text.find('\n') == std::string::npos);

  GroupTable back = group_from_json_text(text);
  CHECK(back.order() == 8);
  CHECK(back.flat_table() == g.flat_table());
  REQUIRE(back.has_labels());
  CHECK(back.labels() == g.labels());

  Json parsed = Json::parse(text);
  CHECK(parsed["order"] == 8);
  CHECK(parsed["table"].size() == 8);
}

TEST_CASE("group input relabels a non-zero identity") {
  // Z_2 written with the identity at index 1.
  const std::string text = R"({"order":2,"table":[[0,1],[1,0]]})";
  GroupTable g = group_from_json_text(text);
  CHECK(g.mul(0, 0) == 0);
  CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("group files are read from disk and errors carry the path") {
  GroupTable g = make_cyclic(6);
  const std::string path = write_temp("group.json", group_to_json(g));
  CHECK(read_group_json(path).order() == 6);

  CHECK(raises(Errc::IoError, [] { read_group_json("/tmp/nilfactor_absent.json"); }));
  const std::string bad = write_temp("bad.json", "{not json");
  CHECK(raises(Errc::IoError, [&] { read_group_json(bad); }));
  const std::string wrong = write_temp("wrong.json", R"({"order":"six"})");
  CHECK(raises(Errc::IoError, [&] { read_group_json(wrong); }));
  const std::string missing = write_temp("missing.json", R"({"table":[[0]]})");
  CHECK(raises(Errc::IoError, [&] { read_group_json(missing); }));
}

TEST_CASE("permutation files parse degree and generators") {
  const std::string path = write_temp(
      "perm.json", R"({"degree":3,"generators":[[1,0,2],[1,2,0]]})");
  PermutationGroupFile file = read_permutation_group_json(path);
  CHECK(file.degree == 3);
  REQUIRE(file.generators.size() == 2);
  CHECK(file.generators[0] == Permutation{1, 0, 2});
  CHECK(make_from_permutations(file.degree, file.generators).order() == 6);

  const std::string bad = write_temp("perm_bad.json", R"({"degree":3})");
  CHECK(raises(Errc::IoError, [&] { read_permutation_group_json(bad); }));
}

TEST_CASE("factorizations round-trip and keep their trace on output only") {
  GroupTable g = make_cyclic(8);
  CompleteFactorization f = construct_complete_factorization(g, {2, 2, 2});
  const std::string text = factorization_to_json(f);

  Json parsed = Json::parse(text);
  CHECK(parsed["sizes"] == Json::array({2, 2, 2}));
  CHECK(parsed["blocks"][0] == Json::array({0, 4}));
  REQUIRE(parsed.contains("trace"));
  CHECK(parsed["trace"]["chain_orders"] == Json::array({2, 4, 8}));
  CHECK(parsed["trace"]["t_prime"] == 2);

  CompleteFactorization back = factorization_from_json_text(text);
  CHECK(back.sizes == f.sizes);
  CHECK(back.blocks == f.blocks);
  CHECK_FALSE(back.trace.has_value());  // wire trace is advisory only
}

TEST_CASE("factorization input is validated") {
  // sizes, when present, must agree with the blocks
  CHECK(raises(Errc::IoError, [] {
    factorization_from_json_text(R"({"sizes":[2,3],"blocks":[[0,1],[2,3]]})");
  }));
  // blocks must not repeat an element
  CHECK(raises(Errc::IoError, [] {
    factorization_from_json_text(R"({"blocks":[[0,0],[1,2]]})");
  }));
  // blocks are required
  CHECK(raises(Errc::IoError,
               [] { factorization_from_json_text(R"({"sizes":[2]})"); }));
  // sizes alone may be omitted
  CompleteFactorization f =
      factorization_from_json_text(R"({"blocks":[[0,1],[2,3]]})");
  CHECK(f.sizes == std::vector<int>{2, 2});

  const std::string path = write_temp("fact.json", R"({"blocks":[[0,4],[1,3],[2,5]]})");
  CompleteFactorization from_disk = read_factorization_json(path);
  CHECK(from_disk.blocks.size() == 3);
  CHECK(raises(Errc::IoError,
               [] { read_factorization_json("/tmp/nilfactor_absent.json"); }));
}

TEST_CASE("verify reports serialize every witness shape") {
  GroupTable g = make_cyclic(4);

  Json overlap = Json::parse(verify_report_to_json(
      verify_complete_factorization(g, {ElementSet({0, 1}), ElementSet({1, 3})})));
  CHECK(overlap["pass"] == false);
  CHECK(overlap["disjoint_checked"] == true);
  CHECK(overlap["disjoint_ok"] == false);
  CHECK(overlap["overlap"]["element"] == 1);
  CHECK_FALSE(overlap.contains("collision"));

  Json collision = Json::parse(verify_report_to_json(
      verify_complete_factorization(g, {ElementSet({0, 1}), ElementSet({2, 3})})));
  CHECK(collision["coverage_ok"] == false);
  CHECK(collision["collision"]["element"] == 3);
  CHECK(collision["collision"]["first"] == Json::array({0, 3}));
  CHECK(collision["collision"]["second"] == Json::array({1, 2}));

  Json uncovered = Json::parse(verify_report_to_json(
      verify_complete_factorization(g, {ElementSet({0, 1})})));
  CHECK(uncovered["sizes_ok"] == false);
  CHECK(uncovered["product_of_sizes"] == 2);
  CHECK(uncovered["uncovered"] == 2);

  Json plain = Json::parse(verify_report_to_json(
      verify_factorization(g, {ElementSet({0, 1}), ElementSet({1, 3})})));
  CHECK(plain["pass"] == true);
  CHECK(plain["disjoint_checked"] == false);
  CHECK_FALSE(plain.contains("disjoint_ok"));
}

TEST_CASE("search outcomes serialize with optional elapsed time") {
  GroupTable g = make_cyclic(8);
  SearchProblem p;
  p.group = &g;
  p.sizes = {2, 2, 2};
  p.mode = SearchMode::FirstWitness;
  p.limits.max_seconds = 0;
  SearchOutcome out = search_complete_factorization(p);

  Json with = Json::parse(search_outcome_to_json(out));
  CHECK(with["status"] == "found");
  CHECK(with.contains("witness"));
  CHECK(with.contains("elapsed_seconds"));
  CHECK_FALSE(with.contains("count"));

  const std::string stable_a = search_outcome_to_json(out, false);
  CHECK(Json::parse(stable_a).contains("elapsed_seconds") == false);
  SearchOutcome again = search_complete_factorization(p);
  CHECK(stable_a == search_outcome_to_json(again, false));

  p.mode = SearchMode::CountAll;
  Json count = Json::parse(search_outcome_to_json(search_complete_factorization(p)));
  CHECK(count.contains("count"));

  p.sizes = {2, 2};
  p.group = nullptr;
  GroupTable z4 = make_cyclic(4);
  p.group = &z4;
  Json lost = Json::parse(search_outcome_to_json(search_complete_factorization(p)));
  CHECK(lost["status"] == "exhausted_not_found");
}
