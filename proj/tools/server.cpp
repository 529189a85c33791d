#include "server.hpp"

#include "httplib.h"

namespace affdimer::service {

namespace {

void reply(httplib::Response& res, const api::Response& r) {
  res.status = r.status;
  res.set_content(r.body.dump(), "application/json");
}

}  // namespace

Server::Server(api::Limits limits) : limits_(limits), http_(std::make_unique<httplib::Server>()) {
  auto& s = *http_;
  s.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                         {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                         {"Access-Control-Allow-Headers", "Content-Type"}});
  s.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  s.Post("/api/evaluate", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api::evaluate(req.body, limits_));
  });
  s.Post("/api/search", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api::search(req.body, limits_, &stopping_));
  });
  s.Post(R"(/api/construct/([a-z-]+))", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, api::construct(req.matches[1], req.body, limits_));
  });
  s.Get("/api/polygon/metrics", [](const httplib::Request& req, httplib::Response& res) {
    std::map<std::string, std::string> q;
    for (const auto& [k, v] : req.params) q[k] = v;
    reply(res, api::polygon_metrics(q));
  });
  s.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"status":"ok"})", "application/json");
  });

  s.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
    std::string what = "unknown error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    reply(res, {500, api::error_body("internal", what)});
  });
  s.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    const std::string code = res.status == 404 ? "not_found" : "http_error";
    res.set_content(api::error_body(code, "HTTP " + std::to_string(res.status)).dump(), "application/json");
  });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return http_->bind_to_any_port(host);
  return http_->bind_to_port(host, port) ? port : -1;
}

bool Server::listen_after_bind() { return http_->listen_after_bind(); }

void Server::stop() {
  stopping_ = true;
  if (http_->is_running()) http_->stop();
}

bool Server::running() const { return http_->is_running(); }

}  // namespace affdimer::service
