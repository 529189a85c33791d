#include <fstream>
#include <sstream>

#include "affdimer/api.hpp"
#include "affdimer/errors.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace affdimer;
using io::json;

namespace {

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(AFFDIMER_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json strip_timing(json j) {
  j.erase("timing");
  if (j.contains("stats")) j["stats"].erase("wall_ms");
  return j;
}

}  // namespace

TEST_CASE("rational and vector json") {
  CHECK(io::to_json(Rational(3, 6)) == "1/2");
  CHECK(io::to_json(Rational(2)) == "2/1");
  CHECK(io::rational_from_json("2/4") == Rational(1, 2));
  CHECK(io::rational_from_json(json(3)) == Rational(3));
  CHECK_THROWS_AS(io::rational_from_json(json(0.5)), ParseError);
  CHECK_THROWS_AS(io::rational_from_json("1/0"), std::exception);
  CHECK(io::intvec_from_json(json::array({1, -2})) == IntVec2{1, -2});
  CHECK_THROWS_AS(io::intvec_from_json(json::array({1})), ParseError);
  CHECK_THROWS_AS(io::intvec_from_json(json::array({1, 0.5})), ParseError);
}

TEST_CASE("arrangement json round trip") {
  const json doc = io::parse(fixture_text("figure_certificate.json"));
  const Arrangement a = io::arrangement_from_json(doc);
  const json back = io::arrangement_to_json(a, doc["provenance"]);
  CHECK(io::arrangement_from_json(back) == a);
  CHECK(back["polygon"] == doc["polygon"]);
  CHECK_THROWS_AS(io::arrangement_from_json(json::parse(R"({"lines":[{"h":[1,0],"c":"3/2"},{"h":[0,1],"c":"0"}]})")),
                  ParseError);
  CHECK_THROWS_AS(io::arrangement_from_json(json::parse(R"({"lines":[{"h":[1,0]}]})")), ParseError);
  CHECK_THROWS_AS(io::parse("{"), ParseError);
}

TEST_CASE("polygon json") {
  const LatticePolygon p = io::polygon_from_json(json::parse(R"({"classes":[[1,0],[0,1],[-1,-1]]})"));
  CHECK(p.size() == 3);
  const LatticePolygon q = io::polygon_from_json(io::polygon_to_json(p));
  CHECK(q.same_vertices(p));
  CHECK_THROWS_AS(io::polygon_from_json(json::parse(R"({"classes":[[1,0]],"vertices":[[0,0]]})")), ParseError);
  CHECK_THROWS_AS(io::polygon_from_json(json::parse(R"({"classes":[[1,0],[0,1]]})")), ZeroSumViolation);
  CHECK_THROWS_AS(io::polygon_from_json(json::parse(R"({"vertices":[[0,0],[1,0],[2,0]]})")), InvalidInput);
}

TEST_CASE("evaluate endpoint") {
  SUBCASE("figure certificate") {
    const api::Response r = api::evaluate(fixture_text("figure_certificate.json"));
    REQUIRE(r.status == 200);
    CHECK(r.body["report"]["admissible"] == true);
    CHECK(r.body["report"]["k"] == 1);
    CHECK(r.body["report"]["counts"]["f_x"] == 5);
    CHECK(r.body["geometry"]["faces"].size() == 13);
    CHECK(r.body["geometry"]["vertices"].size() == 13);
    Rational total;
    for (const auto& f : r.body["geometry"]["faces"]) total += io::rational_from_json(f["area"]);
    CHECK(total == Rational(1));
    CHECK(r.body["timing"]["ms"].is_number());
    CHECK(r.body["polygon"]["vertices"].size() == 4);
    CHECK_FALSE(r.body.contains("matching"));
  }
  SUBCASE("with rho") {
    json body = io::parse(fixture_text("figure_certificate.json"));
    body["rho"] = {1, 1};
    const api::Response r = api::evaluate(body.dump());
    REQUIRE(r.status == 200);
    CHECK(r.body["matching"]["pairs"].size() == 4);
    body["rho"] = {1, 0};
    CHECK(api::evaluate(body.dump()).status == 422);
  }
  SUBCASE("non-admissible") {
    const api::Response r = api::evaluate(fixture_text("figure_translated.json"));
    REQUIRE(r.status == 200);
    CHECK(r.body["report"]["admissible"] == false);
    CHECK(r.body["report"]["counts"].is_null());
  }
  SUBCASE("degenerate triple point") {
    const api::Response r = api::evaluate(fixture_text("degenerate_triangle.json"));
    CHECK(r.status == 422);
    CHECK(r.body["error"]["code"] == "degenerate");
    CHECK(r.body["error"]["message"].get<std::string>().find("triple point") != std::string::npos);
    CHECK(r.body["error"]["detail"]["kind"] == "triple_point");
    CHECK(r.body["error"]["detail"]["lines"] == json::array({0, 1, 2}));
  }
  SUBCASE("zero sum") {
    const api::Response r = api::evaluate(fixture_text("zero_sum.json"));
    CHECK(r.status == 422);
    CHECK(r.body["error"]["code"] == "zero_sum");
  }
  SUBCASE("too many lines") {
    json body = {{"lines", json::array()}};
    for (int i = 0; i < 40; ++i) body["lines"].push_back({{"h", {1, 0}}, {"c", "0/1"}});
    const api::Response r = api::evaluate(body.dump());
    CHECK(r.status == 400);
    CHECK(r.body["error"]["code"] == "limit_exceeded");
  }
  SUBCASE("malformed") {
    CHECK(api::evaluate("not json").status == 400);
    CHECK(api::evaluate("[1,2]").status == 400);
    CHECK(api::evaluate(R"({"lines":[{"h":[2,0],"c":"0"},{"h":[-2,0],"c":"0"}]})").status == 422);
  }
  SUBCASE("pure function of the body") {
    const std::string body = fixture_text("pseudo_dimer.json");
    CHECK(strip_timing(api::evaluate(body).body) == strip_timing(api::evaluate(body).body));
  }
}

TEST_CASE("search endpoint") {
  api::Response r = api::search(R"({"polygon":{"vertices":[[0,0],[1,0],[1,1],[0,1]]},"budget":100,"seed":0})");
  REQUIRE(r.status == 200);
  CHECK(r.body["status"] == "found");
  CHECK(r.body["inconclusive"] == false);
  CHECK(api::evaluate(r.body["certificate"].dump()).body["report"]["matches_prescribed"] == true);

  r = api::search(R"({"polygon":{"vertices":[[0,0],[1,0],[1,1],[0,1]]},"budget":0})");
  REQUIRE(r.status == 200);
  CHECK(r.body["status"] == "trials_exhausted");
  CHECK(r.body["inconclusive"] == true);
  CHECK(r.body["certificate"].is_null());

  r = api::search(R"({"polygon":{"classes":[[1,0],[1,0],[0,1],[-1,1],[-1,-2]]},"seed":3})");
  CHECK(r.body["status"] == "found");

  r = api::search(R"({"polygon":{"vertices":[[0,0],[1,0],[1,1],[0,1]]},"mesh":2,"budget":0})");
  CHECK(r.status == 200);
  CHECK(r.body["resolution"] == 2);

  CHECK(api::search(R"({"polygon":{"vertices":[[0,0],[1,0]]}})").status == 422);
  CHECK(api::search(R"({"polygon":{"vertices":[[0,0],[1,0],[0,1]]},"budget":100000000})").status == 400);
  CHECK(api::search(R"({"polygon":{"vertices":[[0,0],[1,0],[0,1]]},"budget":"x"})").status == 400);
  CHECK(api::search(R"({"budget":5})").status == 400);
  CHECK(api::search(R"({"polygon":{"classes":[[1,0],[1,0],[0,1],[-1,1],[-1,-2]]},"mesh":2000})").status == 400);

  const std::string body = R"({"polygon":{"vertices":[[0,0],[2,0],[2,1],[0,1]]},"budget":200,"seed":7})";
  CHECK(strip_timing(api::search(body).body) == strip_timing(api::search(body).body));
}

TEST_CASE("construct endpoint") {
  api::Response r = api::construct("triangle", R"({"u":[2,0],"w":[0,2]})");
  REQUIRE(r.status == 200);
  CHECK(r.body["lines"].size() == 6);
  CHECK(r.body["provenance"]["construction"] == "triangle");
  CHECK(api::evaluate(r.body.dump()).body["report"]["matches_prescribed"] == true);

  r = api::construct("double", R"({"classes":[[1,0],[0,1]],"seed":0})");
  REQUIRE(r.status == 200);
  CHECK(r.body["lines"].size() == 4);
  CHECK(r.body["provenance"]["seed"] == 0);
  const json sq = api::evaluate(r.body.dump()).body["report"];
  CHECK(sq["matches_prescribed"] == true);
  CHECK(sq["k"] == 2);

  const json fig = io::parse(fixture_text("figure_certificate.json"));
  r = api::construct("lift", json{{"arrangement", fig}, {"lattice", {1, 0, 0, 2}}}.dump());
  REQUIRE(r.status == 200);
  const LatticePolygon lifted = io::polygon_from_json(r.body["polygon"]);
  CHECK(lifted.same_up_to_translation(
      apply_matrix(IntMat2::from_rows(2, 0, 0, 1), io::polygon_from_json(fig["polygon"]))));

  r = api::construct("linear", json{{"arrangement", fig}, {"matrix", {1, 1, 0, 1}}}.dump());
  CHECK(r.status == 200);
  r = api::construct("add-pair", json{{"arrangement", fig}, {"line", 2}}.dump());
  REQUIRE(r.status == 200);
  CHECK(r.body["lines"].size() == 7);

  CHECK(api::construct("triangle", R"({"u":[1,0],"w":[2,0]})").status == 422);
  CHECK(api::construct("triangle", R"({"u":[1,0]})").status == 400);
  CHECK(api::construct("spiral", R"({})").status == 400);
  CHECK(api::construct("lift", json{{"arrangement", fig}, {"lattice", {1, 0, 0, 0}}}.dump()).status == 422);
  CHECK(api::construct("lift", json{{"arrangement", fig}, {"lattice", {40, 0, 0, 40}}}.dump()).status == 422);
  CHECK(api::construct("add-pair", json{{"arrangement", fig}, {"line", 9}}.dump()).status == 422);
  CHECK(api::construct("add-pair", json{{"arrangement", io::parse(fixture_text("figure_translated.json"))}, {"line", 0}}.dump())
            .status == 422);
}

TEST_CASE("polygon metrics endpoint") {
  api::Response r = api::polygon_metrics({{"classes", "1,0;1,0;0,1;-1,1;-1,-2"}});
  REQUIRE(r.status == 200);
  CHECK(r.body["genus"] == 1);
  CHECK(r.body["punctures"] == 5);
  r = api::polygon_metrics({{"vertices", "0,0;1,0;0,1"}});
  CHECK(r.body["genus"] == 0);
  CHECK(r.body["closed_form_volume"]["volume"] == "1/1");
  r = api::polygon_metrics({{"vertices", "0,0;4,0;0,4"}});
  CHECK(r.body["interior"] == 3);
  CHECK(r.body["boundary"] == 12);
  CHECK(r.body["area2"] == 16);
  CHECK(api::polygon_metrics({}).status == 400);
  CHECK(api::polygon_metrics({{"vertices", "0,0;1,x"}}).status == 400);
  CHECK(api::polygon_metrics({{"vertices", "0,0;1,0;2,0"}}).status == 400);
  CHECK(api::polygon_metrics({{"vertices", "0,0;1,0;0,1"}, {"classes", "1,0"}}).status == 400);
}

TEST_CASE("vector list parsing") {
  CHECK(api::parse_vector_list("1,0; 0,1 ;-1,-1") == std::vector<IntVec2>{{1, 0}, {0, 1}, {-1, -1}});
  CHECK(api::parse_vector_list("").empty());
  CHECK_THROWS_AS(api::parse_vector_list("1"), ParseError);
  CHECK_THROWS_AS(api::parse_vector_list("1,2x"), ParseError);
}
