#pragma once

#include <stdexcept>
#include <string>

namespace cliflat {

// Precondition violations: bad axes, dimension mismatches, invalid parameters.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text/JSON. `path` names the offending location.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// A structural mathematical failure (a residual that should have been zero,
// a proportionality that does not hold). Carries the offending detail.
class math_error : public std::runtime_error {
public:
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cliflat
