#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hclpal/color.hpp"
#include "hclpal/trajectory.hpp"

namespace hclpal {

enum class PaletteKind { FixedQualitative, HclQualitative, Sequential, Diverging, DivergingX };

std::string_view to_string(PaletteKind kind) noexcept;

enum class Scope { Fixed, Hcl };

std::string_view to_string(Scope scope) noexcept;
Scope parse_scope(std::string_view token);

/// Filter tokens accepted by list_palettes: qualitative, sequential, diverging, divergingx.
enum class KindFilter { Qualitative, Sequential, Diverging, DivergingX };

KindFilter parse_kind_filter(std::string_view token);
bool matches(KindFilter filter, PaletteKind kind) noexcept;

struct NamedColor {
    std::optional<std::string> name;
    Color color;
};

struct PaletteEntry {
    std::string name;
    PaletteKind kind = PaletteKind::FixedQualitative;
    std::string source;
    std::vector<NamedColor> colors;     // fixed palettes
    std::optional<Trajectory> trajectory;  // HCL palettes

    bool is_fixed() const noexcept { return kind == PaletteKind::FixedQualitative; }
};

/// Lowercase with spaces and hyphens removed; the key used for name matching.
std::string normalize_name(std::string_view raw);

std::size_t edit_distance(std::string_view a, std::string_view b);

/// Both palette catalogs. Immutable once built.
class Catalog {
public:
    /// Parses the two tab-separated tables (see docs/palette-data-format.md).
    static Catalog parse(std::string_view fixed_table, std::string_view hcl_table);

    /// The catalog compiled into the library from data/.
    static const Catalog& builtin();

    const std::vector<PaletteEntry>& fixed() const noexcept { return fixed_; }
    const std::vector<PaletteEntry>& hcl() const noexcept { return hcl_; }
    const std::vector<PaletteEntry>& entries(Scope scope) const noexcept;

    /// Throws UnknownPaletteError with the three nearest names on failure.
    const PaletteEntry& find(Scope scope, std::string_view raw) const;
    const PaletteEntry* try_find(Scope scope, std::string_view raw) const noexcept;

    std::string resolve_name(Scope scope, std::string_view raw) const;
    /// Searches the HCL catalog first, then the fixed one.
    std::string resolve_name(std::string_view raw) const;

    std::vector<std::string> suggestions(Scope scope, std::string_view raw, std::size_t count = 3) const;
    std::vector<std::string> suggestions(std::string_view raw, std::size_t count = 3) const;

    /// Names in catalog order. The filter applies to the HCL scope only.
    std::vector<std::string> list(Scope scope, std::optional<KindFilter> filter = std::nullopt) const;

private:
    std::vector<PaletteEntry> fixed_;
    std::vector<PaletteEntry> hcl_;
};

inline constexpr std::string_view kDefaultFixedPalette = "Okabe-Ito";

/// First n colors of a fixed palette (all of them when n is absent).
/// n beyond the palette size needs recycle, which wraps around.
std::vector<NamedColor> palette_colors(const Catalog& catalog, std::optional<int> n,
                                       std::string_view name = kDefaultFixedPalette,
                                       bool recycle = false);
std::vector<NamedColor> palette_colors(std::optional<int> n = std::nullopt,
                                       std::string_view name = kDefaultFixedPalette,
                                       bool recycle = false);

std::vector<Color> hcl_colors(const Catalog& catalog, int n, std::string_view name,
                              const SampleOptions& opts = {});
std::vector<Color> hcl_colors(int n, std::string_view name, const SampleOptions& opts = {});

/// Color count used when an HCL palette is requested without one.
inline constexpr int kDefaultHclCount = 7;

/// Looks the name up in the given scope, or the HCL catalog then the fixed one.
const PaletteEntry& resolve_palette(const Catalog& catalog, std::string_view raw,
                                    std::optional<Scope> scope = std::nullopt);

/// Colors of any entry. Fixed entries honor recycle, HCL entries the sampling
/// options; alpha applies to both. n defaults to the fixed size or kDefaultHclCount.
std::vector<NamedColor> entry_colors(const PaletteEntry& entry, std::optional<int> n,
                                     const SampleOptions& opts = {}, bool recycle = false);

std::vector<Color> plain_colors(const std::vector<NamedColor>& colors);

std::vector<std::string> list_palettes(Scope scope, std::optional<KindFilter> filter = std::nullopt);

}  // namespace hclpal
