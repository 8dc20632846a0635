#include "claro/service.hpp"

#include <httplib.h>

#include "claro/error.hpp"
#include "claro/report.hpp"
#include "claro/rules.hpp"

namespace claro {

namespace {

Response error_response(int status, const std::string& message) {
  Json j;
  j["error"] = message;
  return {status, j.dump()};
}

}  // namespace

LintService::LintService(ServiceConfig config, LexiconSet lexicons)
    : config_(std::move(config)), lexicons_(std::move(lexicons)), abbreviations_(lexicons_.abbreviations()) {}

Response LintService::lint(std::string_view body) const {
  if (body.size() > config_.max_body_bytes) {
    return error_response(413, "request body exceeds " + std::to_string(config_.max_body_bytes) + " bytes");
  }
  const Json req = Json::parse(body.begin(), body.end(), nullptr, false);
  if (req.is_discarded() || !req.is_object()) return error_response(400, "body must be a JSON object");

  const bool has_text = req.contains("text");
  const bool has_html = req.contains("html");
  if (has_text == has_html) return error_response(400, "exactly one of \"text\" or \"html\" is required");
  const Json& payload = has_text ? req["text"] : req["html"];
  if (!payload.is_string()) return error_response(400, "\"text\"/\"html\" must be a string");

  try {
    Profile profile = Profile::lengclaro;
    if (req.contains("profile")) {
      if (!req["profile"].is_string()) return error_response(400, "\"profile\" must be a string");
      profile = parse_profile(req["profile"].get<std::string>());
    }
    RuleConfig cfg = RuleConfig::for_profile(profile);
    if (req.contains("overrides")) {
      const Json& o = req["overrides"];
      if (!o.is_object()) return error_response(400, "\"overrides\" must be an object");
      for (const auto& [name, value] : o.items()) {
        if (!value.is_number_integer()) return error_response(400, "threshold " + name + " must be an integer");
        cfg.set_threshold(name, value.get<int>());
      }
    }
    if (req.contains("rules")) {
      const Json& r = req["rules"];
      if (!r.is_array()) return error_response(400, "\"rules\" must be an array");
      std::vector<std::string> ids;
      for (const auto& id : r) {
        if (!id.is_string()) return error_response(400, "rule ids must be strings");
        ids.push_back(id.get<std::string>());
      }
      cfg.restrict_to(ids);
    }
    cfg.validate();
    const std::string& content = payload.get_ref<const std::string&>();
    const Document doc = has_text ? parse_plain(content, abbreviations_) : parse_html(content, abbreviations_);
    return {200, lint_report(profile, claro::lint(doc, cfg, lexicons_, config_.threads)).dump()};
  } catch (const InvalidConfig& e) {
    return error_response(400, e.what());
  } catch (const MalformedEncoding& e) {
    return error_response(400, e.what());
  }
}

Response LintService::rules() const { return {200, catalog_json().dump()}; }

struct HttpServer::Impl {
  explicit Impl(const LintService& s) : service(s) {}
  const LintService& service;
  httplib::Server server;
};

HttpServer::HttpServer(const LintService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& srv = impl_->server;
  const ServiceConfig& cfg = service.config();
  // Let oversized bodies through by one byte so the service answers 413 itself.
  srv.set_payload_max_length(cfg.max_body_bytes + 1);
  srv.set_default_headers({{"Access-Control-Allow-Origin", cfg.cors_origin},
                           {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                           {"Access-Control-Allow-Headers", "Content-Type"}});
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, "application/json; charset=utf-8");
  };
  srv.Post("/lint", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, impl_->service.lint(req.body));
  });
  srv.Get("/rules", [this, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, impl_->service.rules());
  });
  srv.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

}  // namespace claro
