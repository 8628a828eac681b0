#pragma once

#include <stdexcept>
#include <string>

namespace vkh {

enum class ErrorKind {
    malformed_token,
    label_count_mismatch,
    sign_conflict,
    length_mismatch,
    disconnected_diagram,
    not_colorable,
    not_symmetric,
    filtration_violation,
    single_cycle_found,
    not_a_knot,
    not_positive,
    not_negative,
    unknown_crossing,
    not_classical,
    inconsistent_inputs,
    internal_invariant,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace vkh
