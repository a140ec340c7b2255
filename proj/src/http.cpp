#include <httplib.h>

#include "grasp/errors.hpp"
#include "grasp/service.hpp"

namespace grasp::service {

namespace {

void reply(httplib::Response& res, const Response& r) {
  res.status = r.status;
  res.set_content(r.body, "application/json");
}

// Query parameters win over fields of a JSON body.
std::string param(const httplib::Request& req, const char* name) {
  if (req.has_param(name)) return req.get_param_value(name);
  if (req.body.empty()) return {};
  auto doc = nlohmann::json::parse(req.body, nullptr, false);
  if (!doc.is_object() || !doc.contains(name)) return {};
  const auto& v = doc[name];
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (const auto& x : v) {
      if (!x.is_string()) continue;
      if (!joined.empty()) joined += ',';
      joined += x.get<std::string>();
    }
    return joined;
  }
  return {};
}

}  // namespace

struct HttpServer::Impl {
  httplib::Server svr;
};

HttpServer::HttpServer(ServiceCore& core) : impl_(std::make_unique<Impl>()) {
  auto& svr = impl_->svr;
  svr.Post("/graphs", [&core](const httplib::Request& req, httplib::Response& res) {
    reply(res, core.post_graph(req.body));
  });
  svr.Get(R"(/graphs/([^/]+)/stats)", [&core](const httplib::Request& req, httplib::Response& res) {
    reply(res, core.graph_stats(req.matches[1]));
  });
  svr.Post(R"(/graphs/([^/]+)/summaries)",
           [&core](const httplib::Request& req, httplib::Response& res) {
             reply(res, core.post_summary(req.matches[1], param(req, "labels"),
                                          param(req, "mode")));
           });
  svr.Get(R"(/summaries/([^/]+)/treemap)",
          [&core](const httplib::Request& req, httplib::Response& res) {
            reply(res, core.treemap(req.matches[1]));
          });
  svr.Post(R"(/summaries/([^/]+)/query)",
           [&core](const httplib::Request& req, httplib::Response& res) {
             reply(res, core.query(req.matches[1], req.body));
           });
  svr.set_exception_handler([](const httplib::Request&, httplib::Response& res,
                               std::exception_ptr ep) {
    std::string message = "internal error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      message = e.what();
    } catch (...) {
    }
    res.status = 500;
    res.set_content(nlohmann::json{{"error", "internal"}, {"message", message}}.dump(),
                    "application/json");
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->svr.bind_to_any_port(host);
    if (bound < 0) throw Error("cannot bind " + host);
    return bound;
  }
  if (!impl_->svr.bind_to_port(host, port))
    throw Error("cannot listen on " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::run() { impl_->svr.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->svr.stop();
}

void serve(ServiceCore& core, const std::string& host, int port) {
  HttpServer server(core);
  server.bind(host, port);
  server.run();
}

}  // namespace grasp::service
