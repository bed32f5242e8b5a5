#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gsr {

enum class ErrorKind {
    Domain,       // argument outside the mathematical domain (x <= -1, t < 0, ...)
    Argument,     // malformed request (N < 2, index out of range, m = 0, ...)
    Numeric,      // a computed quantity violated an invariant
    Calibration,  // threshold search failed to bracket the target
    Undefined,    // conditional quantity with a zero-probability condition
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception thrown by every gsr module. Carries the originating module name
/// so the CLI can surface a machine-readable error record.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string module, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& module() const noexcept { return module_; }

private:
    ErrorKind kind_;
    std::string module_;
};

}  // namespace gsr
