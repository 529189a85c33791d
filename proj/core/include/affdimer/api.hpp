#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <string>

#include "affdimer/json_io.hpp"

namespace affdimer::api {

struct Limits {
  std::size_t max_lines = 16;          // evaluate, and construct inputs
  std::int64_t max_budget = 200000;    // search trials
  std::int64_t default_budget = 20000;
  std::int64_t max_mesh_points = 1000000;
  std::size_t max_output_lines = 256;  // construct outputs
};

struct Response {
  int status = 200;
  io::json body;
};

/// POST /api/evaluate. Optional "rho": [x,y] adds a matching.
Response evaluate(const std::string& body, const Limits& limits = {});

/// POST /api/search. Body: {"polygon": {...}, "budget": n, "seed": s, "mesh": m}.
Response search(const std::string& body, const Limits& limits = {}, const std::atomic<bool>* cancel = nullptr);

/// POST /api/construct/{kind}, kind in double, add-pair, lift, linear, triangle.
Response construct(const std::string& kind, const std::string& body, const Limits& limits = {});

/// GET /api/polygon/metrics?vertices=0,0;1,0;0,1 (or classes=...).
Response polygon_metrics(const std::map<std::string, std::string>& query);

/// Runs a construction from JSON parameters and returns the arrangement
/// document with provenance. Throws ParseError or InvalidInput.
io::json construct_document(const std::string& kind, const io::json& params, const Limits& limits = {});

/// Error body {"error": {"code", "message", "detail"?}}.
io::json error_body(const std::string& code, const std::string& message, const io::json& detail = nullptr);

/// "x,y;x,y;..." as used by the metrics query and the CLI.
std::vector<IntVec2> parse_vector_list(const std::string& text);

}  // namespace affdimer::api
