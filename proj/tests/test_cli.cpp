#include "doctest.h"

#include <sstream>

#include "schurtl/cli.hpp"
#include "schurtl/json_io.hpp"

using namespace schurtl;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("lr subcommand prints the coefficient") {
  auto r = invoke({"lr", "--a", "1", "--b", "1", "--c", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("verify reproduces the 14-term worked example") {
  auto r = invoke({"verify", "--n", "3", "--lambda", "12,7,0", "--mu", "4,2,0", "--nu", "5,2,0",
                   "--rho", "11,7,0", "--json"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j.at("contained") == true);
  CHECK(j.at("nonnegative") == true);
  CHECK(j.at("difference").size() == 14);
  for (const auto& term : j.at("difference")) CHECK(term.at("coeff") == 1);
  CHECK(j.at("missing").empty());
}

TEST_CASE("verify exits 1 on a failing quadruple") {
  auto r = invoke({"verify", "--n", "2", "--lambda", "1,0", "--mu", "1,0", "--nu", "2,0",
                   "--rho", "0,0"});
  CHECK(r.code == 1);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({"lr", "--a", "1"}).code == 2);
  CHECK(invoke({"lr", "--a", "1", "--b", "1", "--c", "2,3"}).code == 2);  // not a partition
  CHECK(invoke({"nonsense"}).code == 2);
  CHECK(invoke({"char-prod", "--n", "3", "--lambda", "1,0,0", "--mu", "oops"}).code == 2);
  CHECK(invoke({"lr", "--a", "1", "--b", "1", "--c", "2", "--bogus"}).code == 2);
}

TEST_CASE("json output is byte-deterministic") {
  std::vector<std::vector<std::string>> invocations = {
      {"schur-prod", "--a", "2,1", "--b", "2,1", "--json"},
      {"char-prod", "--n", "3", "--lambda", "4,2,0", "--mu", "2,1,0", "--json"},
      {"theta", "--n", "4", "--s", "1,3,5,6", "--json"},
      {"triples", "--r", "1", "--n", "3", "--json"},
      {"pairs", "--n", "3", "--lambda", "3,1,0", "--mu", "1,0,0", "--json"},
      {"minor-decomp", "--i", "1", "--j", "2", "--random-size", "3", "--seed", "7", "--json"},
      {"sweep-theorem", "--n", "2", "--bound", "2", "--json"},
      {"sweep-conjecture", "--n", "2", "--bound", "2", "--workers", "3", "--json"},
      {"pairing", "--n", "4", "--i", "1,2", "--j", "1,3", "--k", "1,3", "--json"},
  };
  for (const auto& args : invocations) {
    auto first = invoke(args);
    auto second = invoke(args);
    CHECK(first.code == second.code);
    CHECK(first.out == second.out);
  }
}

TEST_CASE("json outputs parse back into the emitting types") {
  {
    auto r = invoke({"schur-prod", "--a", "2,1", "--b", "1", "--json"});
    SchurVector parsed = schur_vector_from_json(Json::parse(r.out));
    CHECK(parsed == schur_product(Partition({2, 1}), Partition({1})));
  }
  {
    auto r = invoke({"char-prod", "--n", "3", "--lambda", "2,1,0", "--mu", "1,0,0", "--json"});
    CharacterVector parsed = character_vector_from_json(Json::parse(r.out), 3);
    CHECK(parsed == character_product(reduce_mod_ones(Partition({2, 1}), 3),
                                      reduce_mod_ones(Partition({1}), 3)));
  }
  {
    auto r = invoke({"theta", "--n", "4", "--s", "1,3,5,6", "--json"});
    Json list = Json::parse(r.out);
    auto expected = theta(ColorSet(4, {1, 3, 5, 6}));
    REQUIRE(list.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(matching_from_json(list[i]) == expected[i]);
  }
  {
    auto r = invoke({"triples", "--r", "1", "--n", "3", "--json"});
    Json list = Json::parse(r.out);
    const auto& expected = enumerate_triples(1, 3);
    REQUIRE(list.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i)
      CHECK(triple_from_json(list[i]) == expected[i]);
  }
  {
    auto r = invoke({"sweep-theorem", "--n", "2", "--bound", "2", "--json"});
    SweepReport parsed = sweep_report_from_json(Json::parse(r.out));
    CHECK(parsed.n == 2);
    CHECK(parsed.violations.empty());
    CHECK(parsed.quadruples > 0);
  }
  {
    auto r = invoke({"verify", "--n", "3", "--lambda", "12,7,0", "--mu", "4,2,0", "--nu", "5,2,0",
                     "--rho", "11,7,0", "--json"});
    ContainmentReport parsed = containment_report_from_json(Json::parse(r.out));
    auto direct = support_containment_check(
        reduce_mod_ones(Partition({12, 7}), 3), reduce_mod_ones(Partition({4, 2}), 3),
        reduce_mod_ones(Partition({5, 2}), 3), reduce_mod_ones(Partition({11, 7}), 3));
    CHECK(parsed.inputs == direct.inputs);
    CHECK(parsed.product_lambda_mu == direct.product_lambda_mu);
    CHECK(parsed.product_nu_rho == direct.product_nu_rho);
    CHECK(parsed.difference == direct.difference);
    CHECK(parsed.missing == direct.missing);
  }
  {
    auto r = invoke({"jt-matrix", "--v", "4,3,3,2", "--u", "3,2,1,0", "--json"});
    auto parsed = h_matrix_from_json(Json::parse(r.out));
    auto direct = generalized_jacobi_trudi({4, 3, 3, 2}, {3, 2, 1, 0});
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) CHECK(parsed.at(i, j) == direct.at(i, j));
  }
  {
    auto r = invoke({"pairing", "--n", "4", "--i", "1,2", "--j", "1,3", "--k", "1,3", "--json"});
    Json j = Json::parse(r.out);
    Pairing parsed = pairing_from_json(j.at("pairing"));
    Triple t = triple_from_json(j.at("triple"));
    CHECK(verify_pairing(t, parsed));
    CHECK(matching_from_json(j.at("trace").at("matching")).half_size() == 2 * t.r());
  }
}

TEST_CASE("sweep exits 0 with no violations") {
  CHECK(invoke({"sweep-theorem", "--n", "3", "--bound", "2"}).code == 0);
  CHECK(invoke({"sweep-conjecture", "--n", "3", "--bound", "2"}).code == 0);
}

TEST_CASE("self-test passes") {
  auto r = invoke({"self-test"});
  CHECK(r.code == 0);
}

TEST_CASE("arithmetic overflow exits 3") {
  auto r = invoke({"lr", "--a", "9000000000000000000,9000000000000000000", "--b", "1", "--c", "2"});
  CHECK(r.code == 3);
}

TEST_CASE("memo cap does not change results") {
  auto reference = invoke({"char-prod", "--n", "3", "--lambda", "5,2,0", "--mu", "3,1,0", "--json"});
  auto capped = invoke({"char-prod", "--n", "3", "--lambda", "5,2,0", "--mu", "3,1,0", "--json",
                        "--memo-cap", "2"});
  CHECK(reference.out == capped.out);
  auto uncapped = invoke({"char-prod", "--n", "3", "--lambda", "5,2,0", "--mu", "3,1,0", "--json",
                          "--memo-cap", "0"});
  CHECK(reference.out == uncapped.out);
}

TEST_CASE("worker count does not change sweep bytes") {
  auto one = invoke({"sweep-conjecture", "--n", "3", "--bound", "2", "--workers", "1", "--json"});
  auto four = invoke({"sweep-conjecture", "--n", "3", "--bound", "2", "--workers", "4", "--json"});
  CHECK(one.out == four.out);
}
