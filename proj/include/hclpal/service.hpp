#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hclpal/analysis.hpp"
#include "hclpal/errors.hpp"
#include "hclpal/registry.hpp"

namespace httplib {
class Server;
}

namespace hclpal::service {

using Json = nlohmann::ordered_json;

struct Request {
    std::string method = "GET";
    std::string path;
    std::vector<std::pair<std::string, std::string>> query;
    std::string body;

    std::optional<std::string> param(std::string_view key) const;
    std::vector<std::string> params(std::string_view key) const;
};

struct Response {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
    std::vector<std::pair<std::string, std::string>> headers;
};

/// Trajectory fields that failed validation, keyed by field name.
class FieldErrors : public DomainError {
public:
    explicit FieldErrors(std::map<std::string, std::string> fields);

    const std::map<std::string, std::string>& fields() const noexcept { return fields_; }

private:
    std::map<std::string, std::string> fields_;
};

/// Routes one request. Never throws; errors become 400, 404 or 422 bodies.
Response handle(const Request& request, const Catalog& catalog = Catalog::builtin());

/// Largest n accepted by any endpoint.
inline constexpr int kMaxColors = 10000;

double round4(double x) noexcept;

Json color_json(const Color& color, const std::optional<std::string>& label = std::nullopt);
Json colors_json(const std::string& name, std::string_view kind, std::span<const NamedColor> colors);
Json colors_json(const std::string& name, std::string_view kind, std::span<const Color> colors);
Json safety_json(const SafetyReport& report);
Json spectrum_json(const SpectrumPath& path);

/// Reads a trajectory object (kind plus parameter fields). Throws FieldErrors
/// naming every invalid field, ParseError for a body of the wrong shape.
Trajectory parse_trajectory(const Json& body);

/// Blocking HTTP front end for handle(), with permissive CORS headers.
class Server {
public:
    explicit Server(const Catalog& catalog = Catalog::builtin());
    ~Server();
    Server(const Server&) = delete;
    Server& operator=(const Server&) = delete;

    /// Binds and returns the port; port 0 picks a free one. Throws std::runtime_error.
    int bind(const std::string& host, int port);
    void listen();
    void stop();

private:
    const Catalog& catalog_;
    std::unique_ptr<httplib::Server> impl_;
};

/// The explicit flag wins, then a numeric PORT environment value, then the fallback.
int resolve_port(std::optional<int> flag, const char* env_port, int fallback = 8080);

}  // namespace hclpal::service
