#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hclpal {

/// Malformed textual input (hex codes, data tables).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An argument outside the domain of an operation (n < 1, severity > 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A trajectory parameter outside its domain; names the offending field.
class ParameterError : public DomainError {
public:
    ParameterError(std::string field, const std::string& message)
        : DomainError(field + ": " + message), field_(std::move(field)), detail_(message) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string field_;
    std::string detail_;
};

/// A palette name that does not resolve. Carries the closest known names.
class UnknownPaletteError : public std::invalid_argument {
public:
    UnknownPaletteError(std::string name, std::vector<std::string> suggestions);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& suggestions() const noexcept { return suggestions_; }

private:
    std::string name_;
    std::vector<std::string> suggestions_;
};

/// Raised when gamut fixup is disabled and a requested color cannot be displayed.
class OutOfGamutError : public std::range_error {
public:
    explicit OutOfGamutError(std::vector<std::size_t> indices);

    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

private:
    std::vector<std::size_t> indices_;
};

}  // namespace hclpal
