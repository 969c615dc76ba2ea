#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latticecf {

// Every failure raised by the library is an Error carrying one of these kinds.
// The CLI maps all of them to the "domain error" exit status.
enum class ErrorKind {
    domain,
    invalid_sequence,
    division_by_zero,
    zero_vector,
    degenerate_cone,
    regular_cone,
    not_contractible,
    disconnected,
    unknown_vertex,
    invalid_cycle,
    cycle_too_short,
    parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace latticecf
