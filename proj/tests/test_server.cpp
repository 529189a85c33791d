#include <fstream>
#include <sstream>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "server.hpp"

using namespace affdimer;
using io::json;

namespace {

std::string fixture_text(const std::string& name) {
  std::ifstream in(std::string(AFFDIMER_FIXTURE_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("live http service") {
  service::Server server;
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread t([&] { server.listen_after_bind(); });
  for (int i = 0; i < 200 && !server.running(); ++i) std::this_thread::sleep_for(std::chrono::milliseconds(5));

  httplib::Client cli("127.0.0.1", port);
  cli.set_read_timeout(60, 0);

  auto res = cli.Post("/api/evaluate", fixture_text("figure_certificate.json"), "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(res->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(res->get_header_value("Content-Type") == "application/json");
  const json ev = json::parse(res->body);
  CHECK(ev["report"]["admissible"] == true);
  CHECK(ev["report"]["counts"]["f_x"] == 5);

  res = cli.Post("/api/evaluate", fixture_text("degenerate_triangle.json"), "application/json");
  REQUIRE(res);
  CHECK(res->status == 422);
  CHECK(json::parse(res->body)["error"]["message"].get<std::string>().find("triple point") != std::string::npos);

  res = cli.Post("/api/evaluate", "{oops", "application/json");
  REQUIRE(res);
  CHECK(res->status == 400);

  res = cli.Post("/api/search", R"({"polygon":{"vertices":[[0,0],[1,0],[1,1],[0,1]]},"budget":100})", "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body)["status"] == "found");

  res = cli.Post("/api/construct/double", R"({"classes":[[1,0],[0,1]]})", "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body)["lines"].size() == 4);

  res = cli.Post("/api/construct/triangle", R"({"u":[2,0],"w":[0,2]})", "application/json");
  REQUIRE(res);
  CHECK(res->status == 200);

  res = cli.Get("/api/polygon/metrics?vertices=0,0;4,0;0,4");
  REQUIRE(res);
  CHECK(res->status == 200);
  CHECK(json::parse(res->body)["interior"] == 3);

  res = cli.Get("/api/polygon/metrics");
  REQUIRE(res);
  CHECK(res->status == 400);

  res = cli.Options("/api/evaluate");
  REQUIRE(res);
  CHECK(res->status == 204);
  CHECK(res->get_header_value("Access-Control-Allow-Methods").find("POST") != std::string::npos);

  res = cli.Get("/api/nothing");
  REQUIRE(res);
  CHECK(res->status == 404);
  CHECK(json::parse(res->body)["error"]["code"] == "not_found");

  // Concurrent requests are independent.
  std::vector<std::thread> workers;
  std::vector<int> codes(4, 0);
  for (int k = 0; k < 4; ++k) {
    workers.emplace_back([&, k] {
      httplib::Client c("127.0.0.1", port);
      auto r = c.Post("/api/evaluate", fixture_text("pseudo_dimer.json"), "application/json");
      codes[k] = r ? r->status : -1;
    });
  }
  for (auto& w : workers) w.join();
  for (int c : codes) CHECK(c == 200);

  server.stop();
  t.join();
  CHECK_FALSE(server.running());
}
