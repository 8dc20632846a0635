#pragma once

// HTTP surface for the editor: POST /lint and GET /rules.
//
// LintService holds the request logic and is transport-free so it can be
// tested directly; HttpServer wires it to cpp-httplib.

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "claro/lexicon.hpp"

namespace claro {

struct ServiceConfig {
  std::size_t max_body_bytes = 1024 * 1024;
  std::string cors_origin = "*";
  int threads = 0;  // per-request lint threads; 0 = OpenMP default
};

struct Response {
  int status = 200;
  std::string body;  // JSON
};

class LintService {
 public:
  explicit LintService(ServiceConfig config = {}, LexiconSet lexicons = LexiconSet::defaults());

  /// Body: {"text"|"html": string, "profile": string, "overrides": {name: int}, "rules": [id...]}.
  Response lint(std::string_view body) const;
  Response rules() const;

  const ServiceConfig& config() const noexcept { return config_; }

 private:
  ServiceConfig config_;
  LexiconSet lexicons_;
  AbbreviationSet abbreviations_;
};

class HttpServer {
 public:
  explicit HttpServer(const LintService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds; returns the port (useful with port 0) or -1 on failure.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace claro
