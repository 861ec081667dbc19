#include "hclpal/errors.hpp"

#include <sstream>

namespace hclpal {

namespace {

std::string unknown_message(const std::string& name, const std::vector<std::string>& suggestions) {
    std::ostringstream os;
    os << "unknown palette '" << name << "'";
    if (!suggestions.empty()) {
        os << "; did you mean ";
        for (std::size_t i = 0; i < suggestions.size(); ++i) {
            if (i > 0) os << (i + 1 == suggestions.size() ? " or " : ", ");
            os << "'" << suggestions[i] << "'";
        }
        os << "?";
    }
    return os.str();
}

std::string gamut_message(const std::vector<std::size_t>& indices) {
    std::ostringstream os;
    os << "colors outside the sRGB gamut at positions";
    for (auto i : indices) os << ' ' << i + 1;
    return os.str();
}

}  // namespace

UnknownPaletteError::UnknownPaletteError(std::string name, std::vector<std::string> suggestions)
    : std::invalid_argument(unknown_message(name, suggestions)),
      name_(std::move(name)),
      suggestions_(std::move(suggestions)) {}

OutOfGamutError::OutOfGamutError(std::vector<std::size_t> indices)
    : std::range_error(gamut_message(indices)), indices_(std::move(indices)) {}

}  // namespace hclpal
