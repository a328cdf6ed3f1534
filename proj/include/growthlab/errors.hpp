#pragma once

#include <stdexcept>
#include <string>

namespace growthlab {

// Malformed or out-of-range input (scenario files, bad parameter values).
// `path` identifies the offending field when one is known, e.g. "drivers.training".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message),
          path_(std::move(path)) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// Root finder could not bracket or converge on a solution.
class SolveError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace growthlab
