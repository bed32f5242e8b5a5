#include "gsr/error.hpp"

namespace gsr {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Argument: return "argument";
        case ErrorKind::Numeric: return "numeric";
        case ErrorKind::Calibration: return "calibration";
        case ErrorKind::Undefined: return "undefined";
    }
    return "unknown";
}

Error::Error(ErrorKind kind, std::string module, const std::string& message)
    : std::runtime_error(message), kind_(kind), module_(std::move(module)) {}

}  // namespace gsr
