#pragma once

#include <atomic>
#include <memory>
#include <string>

#include "affdimer/api.hpp"

namespace httplib {
class Server;
}

namespace affdimer::service {

/// HTTP front end for the api functions. CORS is open so a locally served
/// editor can call it.
class Server {
 public:
  explicit Server(api::Limits limits = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds and returns the port, or -1. Port 0 picks a free port.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen_after_bind();
  /// Cancels running searches and stops accepting connections.
  void stop();
  bool running() const;

 private:
  api::Limits limits_;
  std::atomic<bool> stopping_{false};
  std::unique_ptr<httplib::Server> http_;
};

}  // namespace affdimer::service
