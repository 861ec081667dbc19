#include "hclpal/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hclpal/analysis.hpp"
#include "hclpal/cvd.hpp"
#include "hclpal/errors.hpp"
#include "hclpal/legacy.hpp"
#include "hclpal/registry.hpp"
#include "hclpal/render.hpp"
#include "hclpal/service.hpp"

namespace hclpal::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot write '" + path + "'");
    file << text;
    if (!file.flush()) throw IoError("cannot write '" + path + "'");
}

// A positional token that names colors rather than a palette.
bool is_color_list(const std::string& token) {
    return !token.empty() && (token.front() == '#' || token.front() == '@' || token.find(',') != std::string::npos);
}

std::vector<Color> read_colors(const std::vector<std::string>& tokens) {
    std::string text;
    for (const auto& t : tokens) {
        text += t.size() > 1 && t.front() == '@' ? read_file(t.substr(1)) : t;
        text += ' ';
    }
    return parse_color_list(text);
}

std::string fixed4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", service::round4(x));
    return buf;
}

struct Common {
    int n = 0;
    std::string scope;
    bool recycle = false;
    CLI::Option* n_opt = nullptr;

    std::optional<int> count() const { return n_opt && n_opt->count() ? std::optional<int>(n) : std::nullopt; }
    std::optional<Scope> parsed_scope() const { return scope.empty() ? std::nullopt : std::optional(parse_scope(scope)); }
};

void add_common(CLI::App* sub, Common& c) {
    c.n_opt = sub->add_option("-n,--n", c.n, "Number of colors");
    sub->add_option("--scope", c.scope, "Catalog to search")->check(CLI::IsMember({"fixed", "hcl"}));
    sub->add_flag("--recycle", c.recycle, "Repeat a fixed palette past its size");
}

struct Row {
    std::string label;
    std::string kind;
    std::vector<NamedColor> colors;
};

Row palette_row(const std::string& name, const Common& c, const SampleOptions& opts) {
    const auto& entry = resolve_palette(Catalog::builtin(), name, c.parsed_scope());
    return {entry.name, std::string(to_string(entry.kind)), entry_colors(entry, c.count(), opts, c.recycle)};
}

// A single palette name, or every token read as colors.
Row target_row(const std::vector<std::string>& tokens, const Common& c) {
    if (tokens.size() == 1 && !is_color_list(tokens.front())) return palette_row(tokens.front(), c, {});
    Row row{"custom", "custom", {}};
    for (const auto& col : read_colors(tokens)) row.colors.push_back({std::nullopt, col});
    return row;
}

void print_colors(std::ostream& out, const std::string& format, const std::string& name, const std::string& kind,
                  const std::vector<NamedColor>& colors) {
    if (format == "json") {
        out << service::colors_json(name, kind, colors).dump(2) << '\n';
        return;
    }
    for (const auto& nc : colors) out << format_hex(nc.color) << '\n';
}

std::vector<NamedColor> unnamed(const std::vector<Color>& colors) {
    std::vector<NamedColor> out;
    for (const auto& c : colors) out.push_back({std::nullopt, c});
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"HCL palette toolkit", "hclpal"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for every subcommand");

    const std::vector<std::string> formats{"hex", "json"};

    // list
    std::string list_scope, list_type, list_format = "text";
    auto* list = app.add_subcommand("list", "List palette names");
    list->add_option("--scope", list_scope, "fixed or hcl (default both)")->check(CLI::IsMember({"fixed", "hcl"}));
    list->add_option("--type", list_type, "qualitative, sequential, diverging or divergingx");
    list->add_option("--format", list_format, "text or json")->check(CLI::IsMember({"text", "json"}));

    // colors
    Common colors_c;
    std::string colors_name, colors_format = "hex";
    bool colors_rev = false, colors_nofix = false;
    double colors_alpha = 1.0;
    auto* colors = app.add_subcommand("colors", "Print the colors of a palette");
    colors->add_option("name", colors_name, "Palette name")->required();
    add_common(colors, colors_c);
    colors->add_flag("--rev", colors_rev, "Reverse the order");
    auto* colors_alpha_opt = colors->add_option("--alpha", colors_alpha, "Alpha in [0,1]");
    colors->add_flag("--no-fixup", colors_nofix, "Fail instead of clamping out-of-gamut colors");
    colors->add_option("--format", colors_format, "hex or json")->check(CLI::IsMember(formats));

    // swatch
    Common swatch_c;
    std::vector<std::string> swatch_names, swatch_cvd;
    std::string swatch_out, swatch_style = "rects";
    auto* swatch = app.add_subcommand("swatch", "Write an SVG swatch of one or more palettes");
    swatch->add_option("palettes", swatch_names, "Palette names or color lists")->required();
    add_common(swatch, swatch_c);
    swatch->add_option("--cvd", swatch_cvd, "Add simulated rows: kind[:severity] or all");
    swatch->add_option("--style", swatch_style, "rects or circles")->check(CLI::IsMember({"rects", "circles"}));
    swatch->add_option("-o,--output", swatch_out, "Output file (default stdout)");

    // specplot
    Common spec_c;
    std::vector<std::string> spec_target;
    std::string spec_out;
    bool spec_nolabels = false;
    auto* specplot = app.add_subcommand("specplot", "Write an SVG of hue, chroma and luminance");
    specplot->add_option("palette", spec_target, "Palette name or color list")->required();
    add_common(specplot, spec_c);
    specplot->add_option("-o,--output", spec_out, "Output file (default stdout)");
    specplot->add_flag("--no-labels", spec_nolabels, "Omit legend and axis labels");

    // check
    Common check_c;
    std::vector<std::string> check_target;
    double check_threshold = kDefaultSafetyThreshold;
    bool check_json = false;
    auto* check = app.add_subcommand("check", "Minimum color distances under simulated deficiencies");
    check->add_option("palette", check_target, "Palette name or color list")->required();
    add_common(check, check_c);
    check->add_option("--threshold", check_threshold, "Pass threshold in CIELUV units");
    check->add_flag("--json", check_json, "JSON output");

    // simulate
    std::vector<std::string> sim_colors;
    std::string sim_kind, sim_format = "hex";
    double sim_severity = 1.0;
    auto* sim = app.add_subcommand("simulate", "Simulate a color-vision deficiency");
    sim->add_option("colors", sim_colors, "Colors (comma or space separated, or @file)")->required();
    sim->add_option("--kind", sim_kind, "deutan, protan or tritan")->required();
    sim->add_option("--severity", sim_severity, "Severity in [0,1]");
    sim->add_option("--format", sim_format, "hex or json")->check(CLI::IsMember(formats));

    // ramp
    std::vector<std::string> ramp_anchors;
    int ramp_n = 0;
    std::string ramp_space = "srgb", ramp_format = "hex";
    auto* ramp_cmd = app.add_subcommand("ramp", "Interpolate between anchor colors");
    ramp_cmd->add_option("anchors", ramp_anchors, "Anchor colors")->required();
    ramp_cmd->add_option("-n,--n", ramp_n, "Number of colors")->required();
    ramp_cmd->add_option("--space", ramp_space, "srgb or luv")->check(CLI::IsMember({"srgb", "luv"}));
    ramp_cmd->add_option("--format", ramp_format, "hex or json")->check(CLI::IsMember(formats));

    // legacy
    std::string legacy_kind, legacy_format = "hex";
    int legacy_n = 0;
    LegacyOptions legacy_opts;
    double ls = 0, lv = 0, lstart = 0, lend = 0, lgamma = 0;
    auto* legacy = app.add_subcommand("legacy", "Classic palette generators");
    legacy->add_option("kind", legacy_kind, "rainbow, heat, terrain, topo, cm, gray or R3")->required();
    legacy->add_option("-n,--n", legacy_n, "Number of colors")->required();
    auto* o_s = legacy->add_option("--saturation", ls, "Saturation (rainbow)");
    auto* o_v = legacy->add_option("--value", lv, "Value (rainbow)");
    auto* o_start = legacy->add_option("--start", lstart, "Start in [0,1]");
    auto* o_end = legacy->add_option("--end", lend, "End in [0,1]");
    auto* o_gamma = legacy->add_option("--gamma", lgamma, "Gamma (gray)");
    legacy->add_option("--format", legacy_format, "hex or json")->check(CLI::IsMember(formats));

    // serve
    int serve_port = 0;
    std::string serve_host = "127.0.0.1";
    auto* serve = app.add_subcommand("serve", "Run the JSON service");
    auto* port_opt = serve->add_option("--port", serve_port, "Port (default PORT or 8080)")
                         ->check(CLI::Range(0, 65535));
    serve->add_option("--host", serve_host, "Bind address");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        const auto& catalog = Catalog::builtin();
        if (*list) {
            std::optional<KindFilter> filter;
            if (!list_type.empty()) filter = parse_kind_filter(list_type);
            std::vector<std::pair<Scope, std::string>> names;
            const bool both = list_scope.empty();
            for (Scope s : {Scope::Fixed, Scope::Hcl}) {
                if (!both && parse_scope(list_scope) != s) continue;
                if (both && filter && s == Scope::Fixed) continue;
                for (auto& name : catalog.list(s, filter)) names.emplace_back(s, std::move(name));
            }
            if (list_format == "json") {
                service::Json arr = service::Json::array();
                for (const auto& [s, name] : names) {
                    const auto& e = catalog.find(s, name);
                    service::Json item = {{"name", e.name}, {"kind", to_string(e.kind)}, {"scope", to_string(s)},
                                          {"source", e.source}};
                    if (e.is_fixed()) item["size"] = e.colors.size();
                    arr.push_back(std::move(item));
                }
                out << service::Json{{"palettes", arr}}.dump(2) << '\n';
            } else {
                for (const auto& [s, name] : names) out << name << '\n';
            }
        } else if (*colors) {
            SampleOptions opts;
            opts.rev = colors_rev;
            opts.fixup = !colors_nofix;
            if (colors_alpha_opt->count()) opts.alpha = colors_alpha;
            if (opts.alpha && !(*opts.alpha >= 0.0 && *opts.alpha <= 1.0)) throw DomainError("alpha must be in [0,1]");
            const auto row = palette_row(colors_name, colors_c, opts);
            print_colors(out, colors_format, row.label, row.kind, row.colors);
        } else if (*swatch) {
            SwatchSpec spec;
            spec.style = parse_swatch_style(swatch_style);
            std::vector<std::string> pending;
            const auto flush = [&] {
                if (pending.empty()) return;
                auto label = spec.rows.empty() ? std::string("custom") : "custom " + std::to_string(spec.rows.size() + 1);
                spec.rows.push_back({label, read_colors(pending)});
                pending.clear();
            };
            for (const auto& token : swatch_names) {
                if (is_color_list(token)) {
                    pending.push_back(token);
                    continue;
                }
                flush();
                const auto row = palette_row(token, swatch_c, {});
                spec.rows.push_back({row.label, plain_colors(row.colors)});
            }
            flush();
            std::vector<CvdSpec> cvd;
            for (const auto& token : swatch_cvd) {
                for (const auto& s : parse_cvd_specs(token)) cvd.push_back(s);
            }
            if (!cvd.empty()) spec.rows = with_cvd_rows(spec.rows, cvd);
            write_output(swatch_out, swatch_svg(spec), out);
        } else if (*specplot) {
            const auto row = target_row(spec_target, spec_c);
            write_output(spec_out, specplot_svg(spectrum(plain_colors(row.colors)), !spec_nolabels), out);
        } else if (*check) {
            const auto row = target_row(check_target, check_c);
            const auto plain = plain_colors(row.colors);
            const auto report = safety_check(plain, check_threshold);
            if (check_json) {
                out << service::safety_json(report).dump(2) << '\n';
            } else {
                out << "vision\tmin_distance\tpair\tverdict\n";
                for (const auto& r : report.results) {
                    out << to_string(r.vision) << '\t' << fixed4(r.min_distance) << '\t' << format_hex(plain[r.i]) << ' '
                        << format_hex(plain[r.j]) << '\t' << (r.pass ? "pass" : "fail") << '\n';
                }
            }
        } else if (*sim) {
            const auto kind = parse_cvd_kind(sim_kind);
            const auto result = simulate(read_colors(sim_colors), kind, sim_severity);
            print_colors(out, sim_format, "simulated", std::string(to_string(kind)), unnamed(result));
        } else if (*ramp_cmd) {
            if (ramp_n < 1) throw DomainError("number of colors must be at least 1");
            const auto result = ramp(read_colors(ramp_anchors), ramp_n, parse_ramp_space(ramp_space));
            print_colors(out, ramp_format, "ramp", ramp_space, unnamed(result));
        } else if (*legacy) {
            const auto kind = parse_legacy_kind(legacy_kind);
            if (o_s->count()) legacy_opts.saturation = ls;
            if (o_v->count()) legacy_opts.value = lv;
            if (o_start->count()) legacy_opts.start = lstart;
            if (o_end->count()) legacy_opts.end = lend;
            if (o_gamma->count()) legacy_opts.gamma = lgamma;
            const auto result = legacy_palette(kind, legacy_n, legacy_opts);
            print_colors(out, legacy_format, std::string(to_string(kind)), "legacy", unnamed(result));
        } else if (*serve) {
            const int port = service::resolve_port(port_opt->count() ? std::optional<int>(serve_port) : std::nullopt,
                                                   std::getenv("PORT"));
            service::Server server;
            const int bound = server.bind(serve_host, port);
            err << "listening on http://" << serve_host << ':' << bound << std::endl;
            err.flush();
            server.listen();
        }
        return kOk;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIo;
    } catch (const UnknownPaletteError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const OutOfGamutError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::runtime_error& e) {
        // Socket failures from serve.
        err << "error: " << e.what() << '\n';
        return kIo;
    }
}

}  // namespace hclpal::cli
