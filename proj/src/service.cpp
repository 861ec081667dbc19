#include "hclpal/service.hpp"

#include <charconv>
#include <cmath>
#include <functional>

#include "hclpal/cvd.hpp"
#include "hclpal/render.hpp"

namespace hclpal::service {

namespace {

// Malformed request: wrong shape, unparsable value, missing parameter.
class BadRequest : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Response json_response(int status, const Json& body) {
    Response r;
    r.status = status;
    r.body = body.dump();
    return r;
}

Response error_response(int status, std::string_view error, const std::string& detail, Json extra = Json::object()) {
    Json body = {{"error", error}, {"detail", detail}};
    for (auto& [k, v] : extra.items()) body[k] = v;
    return json_response(status, body);
}

int parse_int(std::string_view key, std::string_view text) {
    int value = 0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw BadRequest("parameter '" + std::string(key) + "' must be an integer");
    }
    return value;
}

double parse_real(std::string_view key, std::string_view text) {
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, value);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(value)) {
        throw BadRequest("parameter '" + std::string(key) + "' must be a number");
    }
    return value;
}

bool parse_flag(std::string_view key, std::string_view text) {
    if (text == "true" || text == "1" || text == "yes" || text.empty()) return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw BadRequest("parameter '" + std::string(key) + "' must be true or false");
}

void check_count(int n) {
    if (n < 1) throw ParameterError("n", "number of colors must be at least 1");
    if (n > kMaxColors) throw ParameterError("n", "at most " + std::to_string(kMaxColors) + " colors per request");
}

void check_alpha(const std::optional<double>& alpha) {
    if (alpha && !(*alpha >= 0.0 && *alpha <= 1.0)) throw ParameterError("alpha", "alpha must be in [0,1]");
}

// Members of a JSON body, typed or rejected with 400.
std::optional<double> body_real(const Json& body, const char* key) {
    const auto it = body.find(key);
    if (it == body.end() || it->is_null()) return std::nullopt;
    if (!it->is_number()) throw BadRequest(std::string("field '") + key + "' must be a number");
    return it->get<double>();
}

std::optional<int> body_int(const Json& body, const char* key) {
    const auto it = body.find(key);
    if (it == body.end() || it->is_null()) return std::nullopt;
    if (!it->is_number_integer()) throw BadRequest(std::string("field '") + key + "' must be an integer");
    return it->get<int>();
}

std::optional<bool> body_bool(const Json& body, const char* key) {
    const auto it = body.find(key);
    if (it == body.end() || it->is_null()) return std::nullopt;
    if (!it->is_boolean()) throw BadRequest(std::string("field '") + key + "' must be true or false");
    return it->get<bool>();
}

std::optional<std::string> body_string(const Json& body, const char* key) {
    const auto it = body.find(key);
    if (it == body.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) throw BadRequest(std::string("field '") + key + "' must be a string");
    return it->get<std::string>();
}

Json parse_body(const Request& req) {
    Json body;
    try {
        body = Json::parse(req.body);
    } catch (const Json::parse_error& e) {
        throw BadRequest(std::string("body is not valid JSON: ") + e.what());
    }
    if (!body.is_object()) throw BadRequest("body must be a JSON object");
    return body;
}

// Enumerated tokens that fail to parse are malformed requests, not domain errors.
template <typename F>
auto token(F&& parse) -> decltype(parse()) {
    try {
        return parse();
    } catch (const DomainError& e) {
        throw BadRequest(e.what());
    }
}

std::optional<Scope> query_scope(const Request& req) {
    if (auto s = req.param("scope")) return token([&] { return parse_scope(*s); });
    return std::nullopt;
}

SampleOptions query_options(const Request& req) {
    SampleOptions opts;
    if (auto v = req.param("rev")) opts.rev = parse_flag("rev", *v);
    if (auto v = req.param("fixup")) opts.fixup = parse_flag("fixup", *v);
    if (auto v = req.param("alpha")) opts.alpha = parse_real("alpha", *v);
    check_alpha(opts.alpha);
    return opts;
}

std::optional<int> query_count(const Request& req) {
    if (auto v = req.param("n")) {
        const int n = parse_int("n", *v);
        check_count(n);
        return n;
    }
    return std::nullopt;
}

// Colors named by a body: an explicit "colors" list or a "palette" lookup.
std::vector<Color> body_colors(const Json& body, const Catalog& catalog) {
    if (const auto it = body.find("colors"); it != body.end()) {
        if (!it->is_array()) throw BadRequest("field 'colors' must be an array of hex strings");
        std::vector<Color> out;
        for (const auto& item : *it) {
            if (!item.is_string()) throw BadRequest("field 'colors' must be an array of hex strings");
            out.push_back(parse_color(item.get<std::string>()));
        }
        return out;
    }
    if (auto name = body_string(body, "palette")) {
        std::optional<Scope> scope;
        if (auto s = body_string(body, "scope")) scope = token([&] { return parse_scope(*s); });
        const auto n = body_int(body, "n");
        if (n) check_count(*n);
        SampleOptions opts;
        opts.rev = body_bool(body, "rev").value_or(false);
        return plain_colors(entry_colors(resolve_palette(catalog, *name, scope), n, opts,
                                         body_bool(body, "recycle").value_or(false)));
    }
    throw BadRequest("body needs 'colors' or 'palette'");
}

// Rows for the SVG endpoints: each palette parameter, then an explicit colors list.
std::vector<SwatchRow> query_rows(const Request& req, const Catalog& catalog) {
    const auto n = query_count(req);
    const auto opts = query_options(req);
    const auto scope = query_scope(req);
    const bool recycle = req.param("recycle") ? parse_flag("recycle", *req.param("recycle")) : false;
    std::vector<SwatchRow> rows;
    for (const auto& name : req.params("palette")) {
        const auto& entry = resolve_palette(catalog, name, scope);
        rows.push_back({entry.name, plain_colors(entry_colors(entry, n, opts, recycle))});
    }
    for (const auto& list : req.params("colors")) {
        rows.push_back({rows.empty() ? "custom" : "custom " + std::to_string(rows.size() + 1), parse_color_list(list)});
    }
    if (rows.empty()) throw BadRequest("parameter 'palette' or 'colors' is required");
    return rows;
}

Response get_pals(const Request& req, const Catalog& catalog) {
    std::optional<KindFilter> filter;
    if (auto t = req.param("type")) filter = token([&] { return parse_kind_filter(*t); });
    const auto scope = query_scope(req);
    Json list = Json::array();
    const auto add = [&](Scope s) {
        for (const auto& e : catalog.entries(s)) {
            if (s == Scope::Hcl && filter && !matches(*filter, e.kind)) continue;
            Json item = {{"name", e.name}, {"kind", to_string(e.kind)}, {"scope", to_string(s)}, {"source", e.source}};
            if (e.is_fixed()) item["size"] = e.colors.size();
            list.push_back(std::move(item));
        }
    };
    if ((!scope && !filter) || scope == Scope::Fixed) add(Scope::Fixed);
    if (!scope || *scope == Scope::Hcl) add(Scope::Hcl);
    return json_response(200, {{"palettes", list}});
}

Response get_colors(const Request& req, const Catalog& catalog) {
    const auto name = req.param("palette");
    if (!name) throw BadRequest("parameter 'palette' is required");
    const auto& entry = resolve_palette(catalog, *name, query_scope(req));
    const bool recycle = req.param("recycle") ? parse_flag("recycle", *req.param("recycle")) : false;
    const auto colors = entry_colors(entry, query_count(req), query_options(req), recycle);
    return json_response(200, colors_json(entry.name, to_string(entry.kind), colors));
}

Response post_custom(const Request& req) {
    const auto body = parse_body(req);
    const auto traj = parse_trajectory(body);
    const auto n = body_int(body, "n");
    if (!n) throw FieldErrors(std::map<std::string, std::string>{{"n", "number of colors is required"}});
    check_count(*n);
    SampleOptions opts;
    opts.rev = body_bool(body, "rev").value_or(false);
    opts.fixup = body_bool(body, "fixup").value_or(true);
    opts.alpha = body_real(body, "alpha");
    check_alpha(opts.alpha);
    const auto colors = sample_palette(traj, *n, opts);
    return json_response(200, colors_json("custom", body.at("kind").get<std::string>(), colors));
}

Response post_simulate(const Request& req, const Catalog& catalog) {
    const auto body = parse_body(req);
    const auto colors = body_colors(body, catalog);
    const auto kind_name = body_string(body, "kind");
    if (!kind_name) throw BadRequest("field 'kind' is required");
    const CvdKind kind = token([&] { return parse_cvd_kind(*kind_name); });
    const double severity = body_real(body, "severity").value_or(1.0);
    if (!(severity >= 0.0 && severity <= 1.0)) throw ParameterError("severity", "severity must be in [0,1]");
    const auto out = simulate(colors, kind, severity);
    Json j = colors_json("simulated", to_string(kind), out);
    j["severity"] = round4(severity);
    return json_response(200, j);
}

Response post_check(const Request& req, const Catalog& catalog) {
    const auto body = parse_body(req);
    const auto colors = body_colors(body, catalog);
    const double threshold = body_real(body, "threshold").value_or(kDefaultSafetyThreshold);
    if (!(threshold > 0.0)) throw ParameterError("threshold", "threshold must be positive");
    return json_response(200, safety_json(safety_check(colors, threshold)));
}

Response post_spectrum(const Request& req, const Catalog& catalog) {
    const auto body = parse_body(req);
    return json_response(200, spectrum_json(spectrum(body_colors(body, catalog))));
}

Response svg_response(std::string svg) {
    Response r;
    r.content_type = "image/svg+xml";
    r.body = std::move(svg);
    return r;
}

Response get_swatch(const Request& req, const Catalog& catalog) {
    SwatchSpec spec;
    spec.rows = query_rows(req, catalog);
    std::vector<CvdSpec> cvd;
    for (const auto& t : req.params("cvd")) {
        const auto kind = t.substr(0, t.find(':'));
        if (kind != "all") token([&] { return parse_cvd_kind(kind); });
        for (const auto& s : parse_cvd_specs(t)) cvd.push_back(s);
    }
    if (!cvd.empty()) spec.rows = with_cvd_rows(spec.rows, cvd);
    if (auto style = req.param("style")) spec.style = token([&] { return parse_swatch_style(*style); });
    return svg_response(swatch_svg(spec));
}

Response get_specplot(const Request& req, const Catalog& catalog) {
    const auto rows = query_rows(req, catalog);
    if (rows.size() != 1) throw BadRequest("specplot takes exactly one palette or color list");
    const bool labels = req.param("labels") ? parse_flag("labels", *req.param("labels")) : true;
    return svg_response(specplot_svg(spectrum(rows.front().colors), labels));
}

struct Route {
    const char* method;
    const char* path;
    std::function<Response(const Request&, const Catalog&)> run;
};

const std::vector<Route>& routes() {
    static const std::vector<Route> table = {
        {"GET", "/api/pals", get_pals},
        {"GET", "/api/colors", get_colors},
        {"POST", "/api/custom", [](const Request& r, const Catalog&) { return post_custom(r); }},
        {"POST", "/api/simulate", post_simulate},
        {"POST", "/api/check", post_check},
        {"POST", "/api/spectrum", post_spectrum},
        {"GET", "/api/swatch.svg", get_swatch},
        {"GET", "/api/specplot.svg", get_specplot},
    };
    return table;
}

std::optional<std::string> field_string(const Json& body, const char* key, std::map<std::string, std::string>& errors) {
    const auto it = body.find(key);
    if (it == body.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) {
        errors[key] = "must be a string";
        return std::nullopt;
    }
    return it->get<std::string>();
}

}  // namespace

std::optional<std::string> Request::param(std::string_view key) const {
    for (const auto& [k, v] : query) {
        if (k == key) return v;
    }
    return std::nullopt;
}

std::vector<std::string> Request::params(std::string_view key) const {
    std::vector<std::string> out;
    for (const auto& [k, v] : query) {
        if (k == key) out.push_back(v);
    }
    return out;
}

FieldErrors::FieldErrors(std::map<std::string, std::string> fields)
    : DomainError([&] {
          std::string msg = "invalid parameters:";
          for (const auto& [k, v] : fields) msg += " " + k + " (" + v + ")";
          return msg;
      }()),
      fields_(std::move(fields)) {}

double round4(double x) noexcept {
    const double r = std::round(x * 1e4) / 1e4;
    return r == 0.0 ? 0.0 : r;
}

Json color_json(const Color& color, const std::optional<std::string>& label) {
    const auto hcl = srgb_to_hcl(color);
    Json j = {{"hex", format_hex(color)},
              {"h", hcl.h ? Json(round4(*hcl.h)) : Json(nullptr)},
              {"c", round4(hcl.c)},
              {"l", round4(hcl.l)}};
    if (label) j["label"] = *label;
    return j;
}

Json colors_json(const std::string& name, std::string_view kind, std::span<const NamedColor> colors) {
    Json list = Json::array();
    for (const auto& nc : colors) list.push_back(color_json(nc.color, nc.name));
    return {{"name", name}, {"kind", kind}, {"colors", list}};
}

Json colors_json(const std::string& name, std::string_view kind, std::span<const Color> colors) {
    Json list = Json::array();
    for (const auto& c : colors) list.push_back(color_json(c));
    return {{"name", name}, {"kind", kind}, {"colors", list}};
}

Json safety_json(const SafetyReport& report) {
    Json results = Json::array();
    for (const auto& r : report.results) {
        results.push_back({{"vision", to_string(r.vision)},
                           {"min_distance", round4(r.min_distance)},
                           {"pair", {r.i, r.j}},
                           {"pass", r.pass}});
    }
    return {{"threshold", round4(report.threshold)}, {"pass", report.pass()}, {"results", results}};
}

Json spectrum_json(const SpectrumPath& path) {
    Json hue = Json::array(), chroma = Json::array(), lum = Json::array(), hex = Json::array();
    for (std::size_t k = 0; k < path.size(); ++k) {
        hue.push_back(path.hue[k] ? Json(round4(*path.hue[k])) : Json(nullptr));
        chroma.push_back(round4(path.chroma[k]));
        lum.push_back(round4(path.luminance[k]));
        hex.push_back(format_hex(path.colors[k]));
    }
    const auto shape = classify_shape(path);
    return {{"colors", hex},
            {"hue", hue},
            {"chroma", chroma},
            {"luminance", lum},
            {"shape",
             {{"hue", to_string(shape.hue)}, {"chroma", to_string(shape.chroma)}, {"luminance", to_string(shape.luminance)}}}};
}

Trajectory parse_trajectory(const Json& body) {
    if (!body.is_object()) throw ParseError("trajectory must be a JSON object");
    std::map<std::string, std::string> errors;

    struct Field {
        const char* name;
        ParamRole role;
        bool required;
    };
    const auto kind = field_string(body, "kind", errors);
    if (!kind) {
        if (!errors.count("kind")) errors["kind"] = "is required";
        throw FieldErrors(errors);
    }

    std::vector<Field> fields;
    using R = ParamRole;
    if (*kind == "qualitative") {
        fields = {{"h1", R::Hue, true}, {"h2", R::Hue, false}, {"c1", R::Chroma, true}, {"l1", R::Luminance, true}};
    } else if (*kind == "sequential") {
        fields = {{"h1", R::Hue, true},       {"h2", R::Hue, false},       {"c1", R::Chroma, true},
                  {"c2", R::Chroma, false},   {"cmax", R::Chroma, false},  {"l1", R::Luminance, true},
                  {"l2", R::Luminance, false}, {"p1", R::Power, false},     {"p2", R::Power, false}};
    } else if (*kind == "diverging") {
        fields = {{"h1", R::Hue, true},          {"h2", R::Hue, false},        {"c1", R::Chroma, true},
                  {"cmax", R::Chroma, false},    {"l1", R::Luminance, true},   {"l2", R::Luminance, false},
                  {"p1", R::Power, false},       {"p2", R::Power, false}};
    } else if (*kind == "divergingx") {
        fields = {{"h1", R::Hue, true},          {"h2", R::Hue, false},        {"h3", R::Hue, true},
                  {"c1", R::Chroma, true},       {"c2", R::Chroma, false},     {"c3", R::Chroma, false},
                  {"cmax1", R::Chroma, false},   {"cmax2", R::Chroma, false},  {"l1", R::Luminance, true},
                  {"l2", R::Luminance, false},   {"l3", R::Luminance, false},  {"p1", R::Power, false},
                  {"p2", R::Power, false},       {"p3", R::Power, false},      {"p4", R::Power, false}};
    } else {
        errors["kind"] = "must be qualitative, sequential, diverging or divergingx";
        throw FieldErrors(errors);
    }

    std::map<std::string, std::optional<double>> v;
    for (const auto& f : fields) {
        const auto it = body.find(f.name);
        if (it == body.end() || it->is_null()) {
            if (f.required) errors[f.name] = "is required";
            v[f.name] = std::nullopt;
            continue;
        }
        if (!it->is_number()) {
            errors[f.name] = "must be a number";
            continue;
        }
        const double x = it->get<double>();
        if (auto problem = param_problem(f.role, x)) {
            errors[f.name] = *problem;
            continue;
        }
        v[f.name] = x;
    }
    if (!errors.empty()) throw FieldErrors(errors);

    const auto get = [&](const char* k) { return v.at(k); };
    Trajectory out;
    if (*kind == "qualitative") {
        out = QualTrajectory{*get("h1"), get("h2"), *get("c1"), *get("l1")};
    } else if (*kind == "sequential") {
        SeqTrajectory t;
        t.h1 = *get("h1");
        t.h2 = get("h2").value_or(t.h1);
        t.c1 = *get("c1");
        t.c2 = get("c2").value_or(0.0);
        t.cmax = get("cmax");
        t.l1 = *get("l1");
        t.l2 = get("l2").value_or(t.l1);
        t.p1 = get("p1").value_or(1.0);
        t.p2 = get("p2").value_or(t.p1);
        out = t;
    } else if (*kind == "diverging") {
        DivTrajectory t;
        t.h1 = *get("h1");
        t.h2 = get("h2").value_or(t.h1);
        t.c1 = *get("c1");
        t.cmax = get("cmax");
        t.l1 = *get("l1");
        t.l2 = get("l2").value_or(t.l1);
        t.p1 = get("p1").value_or(1.0);
        t.p2 = get("p2").value_or(t.p1);
        out = t;
    } else {
        DivxTrajectory t;
        t.h1 = *get("h1");
        t.h2 = get("h2").value_or(t.h1);
        t.h3 = *get("h3");
        t.c1 = *get("c1");
        t.c2 = get("c2").value_or(0.0);
        t.c3 = get("c3").value_or(t.c1);
        t.cmax1 = get("cmax1");
        t.cmax2 = get("cmax2");
        t.l1 = *get("l1");
        t.l2 = get("l2").value_or(t.l1);
        t.l3 = get("l3").value_or(t.l1);
        t.p1 = get("p1").value_or(1.0);
        t.p2 = get("p2").value_or(t.p1);
        t.p3 = get("p3").value_or(t.p1);
        t.p4 = get("p4").value_or(t.p2);
        out = t;
    }
    validate(out);
    return out;
}

Response handle(const Request& request, const Catalog& catalog) {
    try {
        bool path_known = false;
        for (const auto& route : routes()) {
            if (request.path != route.path) continue;
            path_known = true;
            if (request.method == route.method) return route.run(request, catalog);
        }
        if (path_known) {
            auto r = error_response(405, "method_not_allowed", "method " + request.method + " not allowed here");
            return r;
        }
        return error_response(404, "not_found", "no endpoint " + request.path);
    } catch (const BadRequest& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const ParseError& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const Json::exception& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const UnknownPaletteError& e) {
        return error_response(404, "unknown_palette", e.what(), {{"suggestions", e.suggestions()}});
    } catch (const FieldErrors& e) {
        return error_response(422, "invalid_parameters", e.what(), {{"fields", e.fields()}});
    } catch (const ParameterError& e) {
        return error_response(422, "domain_error", e.what(), {{"fields", {{e.field(), e.detail()}}}});
    } catch (const OutOfGamutError& e) {
        return error_response(422, "out_of_gamut", e.what(), {{"indices", e.indices()}});
    } catch (const DomainError& e) {
        return error_response(422, "domain_error", e.what());
    } catch (const std::exception& e) {
        return error_response(500, "internal_error", e.what());
    }
}

int resolve_port(std::optional<int> flag, const char* env_port, int fallback) {
    if (flag) return *flag;
    if (env_port && *env_port) {
        const std::string_view text(env_port);
        int value = 0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec == std::errc() && res.ptr == text.data() + text.size() && value >= 0 && value <= 65535) {
            return value;
        }
    }
    return fallback;
}

}  // namespace hclpal::service
