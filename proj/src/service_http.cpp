#include <httplib.h>

#include <stdexcept>

#include "hclpal/service.hpp"

namespace hclpal::service {

namespace {

void add_cors(httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
}

}  // namespace

Server::Server(const Catalog& catalog) : catalog_(catalog), impl_(std::make_unique<httplib::Server>()) {
    const auto forward = [this](const httplib::Request& req, httplib::Response& res) {
        Request r;
        r.method = req.method;
        r.path = req.path;
        for (const auto& [k, v] : req.params) r.query.emplace_back(k, v);
        r.body = req.body;
        const auto out = handle(r, catalog_);
        res.status = out.status;
        for (const auto& [k, v] : out.headers) res.set_header(k, v);
        add_cors(res);
        res.set_content(out.body, out.content_type);
    };
    impl_->Get(".*", forward);
    impl_->Post(".*", forward);
    impl_->Options(".*", [](const httplib::Request&, httplib::Response& res) {
        add_cors(res);
        res.status = 204;
    });
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
    if (port == 0) {
        const int bound = impl_->bind_to_any_port(host);
        if (bound < 0) throw std::runtime_error("cannot bind to " + host);
        return bound;
    }
    if (!impl_->bind_to_port(host, port)) {
        throw std::runtime_error("cannot bind to " + host + ":" + std::to_string(port));
    }
    return port;
}

void Server::listen() { impl_->listen_after_bind(); }

void Server::stop() {
    if (impl_) impl_->stop();
}

}  // namespace hclpal::service
