#pragma once

#include <stdexcept>
#include <string>

namespace poset_ramsey {

// Caller handed us something outside an operation's domain.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size/memory/time guard was hit.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Something that a proven statement rules out happened anyway: a bug or
// corrupted input, never a legitimate outcome.
class invariant_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Malformed file content; `where` carries line/offset information.
class format_error : public std::runtime_error {
public:
    format_error(const std::string& what, std::string where)
        : std::runtime_error(what + " (" + where + ")"), where_(std::move(where)) {}

    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

} // namespace poset_ramsey
