#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcond {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: expressions, scenario files, mass tables. CLI exit code 1.
class validation_error : public error {
public:
    using error::error;
};

class parse_error : public validation_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : validation_error(what + " (offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class scale_mismatch_error : public validation_error {
public:
    using validation_error::validation_error;
};

class model_mismatch_error : public validation_error {
public:
    using validation_error::validation_error;
};

// Complement used under a union/intersection-only model.
class mode_error : public validation_error {
public:
    using validation_error::validation_error;
};

class capacity_error : public validation_error {
public:
    using validation_error::validation_error;
};

// The conditioning event is empty under the model. CLI exit code 2.
class impossible_problem_error : public error {
public:
    using error::error;
};

// Dempster combination with conflict K = 1. CLI exit code 3.
class total_conflict_error : public error {
public:
    using error::error;
};

} // namespace bcond
