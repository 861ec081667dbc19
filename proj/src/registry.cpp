#include "hclpal/registry.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "hclpal/errors.hpp"

namespace hclpal {

namespace detail {
extern const std::string_view kFixedTable;
extern const std::string_view kHclTable;
}  // namespace detail

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<std::pair<int, std::string_view>> data_lines(std::string_view table) {
    std::vector<std::pair<int, std::string_view>> out;
    int number = 0;
    for (auto line : split(table, '\n')) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty() || trim(line).front() == '#') continue;
        out.emplace_back(number, line);
    }
    return out;
}

ParseError table_error(const char* table, int line, const std::string& why) {
    return ParseError(std::string(table) + " line " + std::to_string(line) + ": " + why);
}

std::optional<double> parse_number(std::string_view token, const char* table, int line) {
    token = trim(token);
    if (token == "NA") return std::nullopt;
    double value = 0.0;
    const auto* end = token.data() + token.size();
    const auto res = std::from_chars(token.data(), end, value);
    if (res.ec != std::errc() || res.ptr != end) {
        throw table_error(table, line, "invalid number '" + std::string(token) + "'");
    }
    return value;
}

std::vector<std::string_view> tokens(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        const auto start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i > start) out.push_back(text.substr(start, i - start));
    }
    return out;
}

std::vector<PaletteEntry> parse_fixed(std::string_view table) {
    constexpr const char* kName = "fixed palette table";
    std::vector<PaletteEntry> out;
    for (const auto& [line, text] : data_lines(table)) {
        const auto fields = split(text, '\t');
        if (fields.size() != 3) throw table_error(kName, line, "expected 3 tab-separated fields");
        PaletteEntry entry;
        entry.name = std::string(trim(fields[0]));
        entry.source = std::string(trim(fields[1]));
        entry.kind = PaletteKind::FixedQualitative;
        for (auto tok : tokens(fields[2])) {
            NamedColor nc;
            if (const auto eq = tok.find('='); eq != std::string_view::npos) {
                nc.name = std::string(tok.substr(0, eq));
                tok = tok.substr(eq + 1);
            }
            try {
                nc.color = parse_color(tok);
            } catch (const ParseError& e) {
                throw table_error(kName, line, e.what());
            }
            entry.colors.push_back(std::move(nc));
        }
        if (entry.colors.empty()) throw table_error(kName, line, "palette has no colors");
        out.push_back(std::move(entry));
    }
    return out;
}

PaletteKind parse_hcl_kind(std::string_view token, int line) {
    if (token == "qualitative") return PaletteKind::HclQualitative;
    if (token == "sequential") return PaletteKind::Sequential;
    if (token == "diverging") return PaletteKind::Diverging;
    if (token == "divergingx") return PaletteKind::DivergingX;
    throw table_error("hcl palette table", line, "unknown kind '" + std::string(token) + "'");
}

enum Column { H1, H2, H3, C1, C2, C3, Cmax1, Cmax2, L1, L2, L3, P1, P2, P3, P4, kColumns };

Trajectory build_trajectory(PaletteKind kind, const std::array<std::optional<double>, kColumns>& v,
                            int line) {
    const auto need = [&](Column col, const char* field) {
        if (!v[col]) throw table_error("hcl palette table", line, std::string("missing ") + field);
        return *v[col];
    };
    static constexpr const char* kNames[kColumns] = {"h1",    "h2", "h3", "c1", "c2", "c3", "cmax1", "cmax2",
                                                     "l1",    "l2", "l3", "p1", "p2", "p3", "p4"};
    const auto unused = [&](std::initializer_list<Column> cols) {
        for (Column col : cols) {
            if (v[col]) throw table_error("hcl palette table", line, std::string(kNames[col]) + " must be NA");
        }
    };
    switch (kind) {
        case PaletteKind::HclQualitative: unused({H3, C2, C3, Cmax1, Cmax2, L2, L3, P1, P2, P3, P4}); break;
        case PaletteKind::Sequential: unused({H3, C3, Cmax2, L3, P3, P4}); break;
        case PaletteKind::Diverging: unused({H3, C2, C3, Cmax2, L3, P3, P4}); break;
        default: break;
    }
    switch (kind) {
        case PaletteKind::HclQualitative:
            return QualTrajectory{need(H1, "h1"), v[H2], need(C1, "c1"), need(L1, "l1")};
        case PaletteKind::Sequential: {
            SeqTrajectory t;
            t.h1 = need(H1, "h1");
            t.h2 = v[H2].value_or(t.h1);
            t.c1 = need(C1, "c1");
            t.c2 = v[C2].value_or(0.0);
            t.cmax = v[Cmax1];
            t.l1 = need(L1, "l1");
            t.l2 = v[L2].value_or(t.l1);
            t.p1 = v[P1].value_or(1.0);
            t.p2 = v[P2].value_or(t.p1);
            return t;
        }
        case PaletteKind::Diverging: {
            DivTrajectory t;
            t.h1 = need(H1, "h1");
            t.h2 = v[H2].value_or(t.h1);
            t.c1 = need(C1, "c1");
            t.cmax = v[Cmax1];
            t.l1 = need(L1, "l1");
            t.l2 = v[L2].value_or(t.l1);
            t.p1 = v[P1].value_or(1.0);
            t.p2 = v[P2].value_or(t.p1);
            return t;
        }
        case PaletteKind::DivergingX: {
            DivxTrajectory t;
            t.h1 = need(H1, "h1");
            t.h2 = v[H2].value_or(t.h1);
            t.h3 = need(H3, "h3");
            t.c1 = need(C1, "c1");
            t.c2 = v[C2].value_or(0.0);
            t.c3 = v[C3].value_or(t.c1);
            t.cmax1 = v[Cmax1];
            t.cmax2 = v[Cmax2];
            t.l1 = need(L1, "l1");
            t.l2 = v[L2].value_or(t.l1);
            t.l3 = v[L3].value_or(t.l1);
            t.p1 = v[P1].value_or(1.0);
            t.p2 = v[P2].value_or(t.p1);
            t.p3 = v[P3].value_or(t.p1);
            t.p4 = v[P4].value_or(t.p2);
            return t;
        }
        case PaletteKind::FixedQualitative:
            break;
    }
    throw table_error("hcl palette table", line, "fixed kind in HCL table");
}

std::vector<PaletteEntry> parse_hcl(std::string_view table) {
    constexpr const char* kName = "hcl palette table";
    std::vector<PaletteEntry> out;
    for (const auto& [line, text] : data_lines(table)) {
        const auto fields = split(text, '\t');
        if (fields.size() != 3 + kColumns) {
            throw table_error(kName, line, "expected " + std::to_string(3 + kColumns) + " tab-separated fields");
        }
        PaletteEntry entry;
        entry.name = std::string(trim(fields[0]));
        entry.kind = parse_hcl_kind(trim(fields[1]), line);
        entry.source = std::string(trim(fields[2]));
        std::array<std::optional<double>, kColumns> values;
        for (std::size_t c = 0; c < kColumns; ++c) values[c] = parse_number(fields[3 + c], kName, line);
        entry.trajectory = build_trajectory(entry.kind, values, line);
        try {
            validate(*entry.trajectory);
        } catch (const DomainError& e) {
            throw table_error(kName, line, entry.name + ": " + e.what());
        }
        out.push_back(std::move(entry));
    }
    return out;
}

void check_unique(const std::vector<PaletteEntry>& entries, const char* table) {
    std::unordered_set<std::string> seen;
    for (const auto& e : entries) {
        if (!seen.insert(normalize_name(e.name)).second) {
            throw ParseError(std::string(table) + ": duplicate palette name '" + e.name + "'");
        }
    }
}

const PaletteEntry* find_in(const std::vector<PaletteEntry>& entries, std::string_view raw) noexcept {
    const auto key = normalize_name(raw);
    for (const auto& e : entries) {
        if (normalize_name(e.name) == key) return &e;
    }
    return nullptr;
}

}  // namespace

std::string_view to_string(PaletteKind kind) noexcept {
    switch (kind) {
        case PaletteKind::FixedQualitative: return "fixed-qualitative";
        case PaletteKind::HclQualitative: return "qualitative";
        case PaletteKind::Sequential: return "sequential";
        case PaletteKind::Diverging: return "diverging";
        case PaletteKind::DivergingX: return "divergingx";
    }
    return "unknown";
}

std::string_view to_string(Scope scope) noexcept { return scope == Scope::Fixed ? "fixed" : "hcl"; }

Scope parse_scope(std::string_view token) {
    if (token == "fixed") return Scope::Fixed;
    if (token == "hcl") return Scope::Hcl;
    throw DomainError("invalid scope '" + std::string(token) + "' (expected fixed or hcl)");
}

KindFilter parse_kind_filter(std::string_view token) {
    if (token == "qualitative") return KindFilter::Qualitative;
    if (token == "sequential") return KindFilter::Sequential;
    if (token == "diverging") return KindFilter::Diverging;
    if (token == "divergingx") return KindFilter::DivergingX;
    throw DomainError("invalid palette type '" + std::string(token) +
                      "' (expected qualitative, sequential, diverging or divergingx)");
}

bool matches(KindFilter filter, PaletteKind kind) noexcept {
    switch (filter) {
        case KindFilter::Qualitative:
            return kind == PaletteKind::HclQualitative || kind == PaletteKind::FixedQualitative;
        case KindFilter::Sequential: return kind == PaletteKind::Sequential;
        case KindFilter::Diverging: return kind == PaletteKind::Diverging;
        case KindFilter::DivergingX: return kind == PaletteKind::DivergingX;
    }
    return false;
}

std::string normalize_name(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char ch : raw) {
        if (ch == ' ' || ch == '-') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    return out;
}

std::size_t edit_distance(std::string_view a, std::string_view b) {
    std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= a.size(); ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b.size(); ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[b.size()];
}

Catalog Catalog::parse(std::string_view fixed_table, std::string_view hcl_table) {
    Catalog cat;
    cat.fixed_ = parse_fixed(fixed_table);
    cat.hcl_ = parse_hcl(hcl_table);
    check_unique(cat.fixed_, "fixed palette table");
    check_unique(cat.hcl_, "hcl palette table");
    return cat;
}

const Catalog& Catalog::builtin() {
    static const Catalog catalog = parse(detail::kFixedTable, detail::kHclTable);
    return catalog;
}

const std::vector<PaletteEntry>& Catalog::entries(Scope scope) const noexcept {
    return scope == Scope::Fixed ? fixed_ : hcl_;
}

const PaletteEntry* Catalog::try_find(Scope scope, std::string_view raw) const noexcept {
    return find_in(entries(scope), raw);
}

const PaletteEntry& Catalog::find(Scope scope, std::string_view raw) const {
    if (const auto* e = try_find(scope, raw)) return *e;
    throw UnknownPaletteError(std::string(raw), suggestions(scope, raw));
}

std::string Catalog::resolve_name(Scope scope, std::string_view raw) const { return find(scope, raw).name; }

std::string Catalog::resolve_name(std::string_view raw) const {
    if (const auto* e = try_find(Scope::Hcl, raw)) return e->name;
    if (const auto* e = try_find(Scope::Fixed, raw)) return e->name;
    throw UnknownPaletteError(std::string(raw), suggestions(raw));
}

namespace {

std::vector<std::string> nearest(const std::vector<const PaletteEntry*>& pool, std::string_view raw,
                                 std::size_t count) {
    const auto key = normalize_name(raw);
    std::vector<std::pair<std::size_t, std::size_t>> scored;  // (distance, pool index)
    for (std::size_t i = 0; i < pool.size(); ++i) {
        scored.emplace_back(edit_distance(key, normalize_name(pool[i]->name)), i);
    }
    std::stable_sort(scored.begin(), scored.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::string> out;
    for (const auto& [d, i] : scored) {
        if (out.size() == count) break;
        if (std::find(out.begin(), out.end(), pool[i]->name) == out.end()) out.push_back(pool[i]->name);
    }
    return out;
}

}  // namespace

std::vector<std::string> Catalog::suggestions(Scope scope, std::string_view raw, std::size_t count) const {
    std::vector<const PaletteEntry*> pool;
    for (const auto& e : entries(scope)) pool.push_back(&e);
    return nearest(pool, raw, count);
}

std::vector<std::string> Catalog::suggestions(std::string_view raw, std::size_t count) const {
    std::vector<const PaletteEntry*> pool;
    for (const auto& e : hcl_) pool.push_back(&e);
    for (const auto& e : fixed_) pool.push_back(&e);
    return nearest(pool, raw, count);
}

std::vector<std::string> Catalog::list(Scope scope, std::optional<KindFilter> filter) const {
    std::vector<std::string> out;
    for (const auto& e : entries(scope)) {
        if (scope == Scope::Hcl && filter && !matches(*filter, e.kind)) continue;
        out.push_back(e.name);
    }
    return out;
}

std::vector<NamedColor> palette_colors(const Catalog& catalog, std::optional<int> n, std::string_view name,
                                       bool recycle) {
    return entry_colors(catalog.find(Scope::Fixed, name), n, {}, recycle);
}

std::vector<NamedColor> palette_colors(std::optional<int> n, std::string_view name, bool recycle) {
    return palette_colors(Catalog::builtin(), n, name, recycle);
}

std::vector<Color> hcl_colors(const Catalog& catalog, int n, std::string_view name, const SampleOptions& opts) {
    if (n < 1) throw DomainError("number of colors must be at least 1");
    const auto& entry = catalog.find(Scope::Hcl, name);
    return sample_palette(*entry.trajectory, n, opts);
}

std::vector<Color> hcl_colors(int n, std::string_view name, const SampleOptions& opts) {
    return hcl_colors(Catalog::builtin(), n, name, opts);
}

const PaletteEntry& resolve_palette(const Catalog& catalog, std::string_view raw, std::optional<Scope> scope) {
    if (scope) return catalog.find(*scope, raw);
    if (const auto* e = catalog.try_find(Scope::Hcl, raw)) return *e;
    if (const auto* e = catalog.try_find(Scope::Fixed, raw)) return *e;
    throw UnknownPaletteError(std::string(raw), catalog.suggestions(raw));
}

std::vector<NamedColor> entry_colors(const PaletteEntry& entry, std::optional<int> n, const SampleOptions& opts,
                                     bool recycle) {
    std::vector<NamedColor> out;
    if (entry.is_fixed()) {
        const auto size = static_cast<int>(entry.colors.size());
        const int count = n.value_or(size);
        if (count < 1) throw DomainError("number of colors must be at least 1");
        if (count > size && !recycle) {
            throw DomainError("palette '" + entry.name + "' has " + std::to_string(size) + " colors, " +
                              std::to_string(count) + " requested (set recycle to repeat it)");
        }
        for (int k = 0; k < count; ++k) out.push_back(entry.colors[static_cast<std::size_t>(k % size)]);
        if (opts.rev) std::reverse(out.begin(), out.end());
        if (opts.alpha) {
            for (auto& nc : out) nc.color = nc.color.with_alpha(opts.alpha);
        }
        return out;
    }
    for (auto& c : sample_palette(*entry.trajectory, n.value_or(kDefaultHclCount), opts)) {
        out.push_back(NamedColor{std::nullopt, c});
    }
    return out;
}

std::vector<Color> plain_colors(const std::vector<NamedColor>& colors) {
    std::vector<Color> out;
    out.reserve(colors.size());
    for (const auto& nc : colors) out.push_back(nc.color);
    return out;
}

std::vector<std::string> list_palettes(Scope scope, std::optional<KindFilter> filter) {
    return Catalog::builtin().list(scope, filter);
}

}  // namespace hclpal
