#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace jumpcoal {

/// Scenario or parameter validation failure. Carries every violation found,
/// not just the first one.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what_arg,
                         std::vector<std::string> issues = {})
        : std::runtime_error(what_arg), issues_(std::move(issues)) {}

    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// Non-finite value produced during time integration.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& what_arg, long step_index, double time)
        : std::runtime_error(what_arg), step_index_(step_index), time_(time) {}

    long step_index() const { return step_index_; }
    double time() const { return time_; }

private:
    long step_index_;
    double time_;
};

/// Hard resource cap hit (knot count after domain growth).
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace jumpcoal
