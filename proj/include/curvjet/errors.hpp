#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace curvjet {

/// Base class for all typed domain failures. `kind()` is a stable machine
/// name; `what()` carries the human-readable context.
class Error : public std::runtime_error {
public:
    Error(std::string_view kind, const std::string& detail)
        : std::runtime_error(std::string(kind) + ": " + detail), kind_(kind) {}

    std::string_view kind() const noexcept { return kind_; }

private:
    std::string_view kind_;  // always points at a string literal
};

#define CURVJET_ERROR_TYPE(Name)                                          \
    struct Name : Error {                                                 \
        explicit Name(const std::string& detail) : Error(#Name, detail) {} \
    }

CURVJET_ERROR_TYPE(NotSkew);
CURVJET_ERROR_TYPE(NotRotation);
CURVJET_ERROR_TYPE(NearPiRotation);
CURVJET_ERROR_TYPE(TangentMapSingular);
CURVJET_ERROR_TYPE(IndexError);
CURVJET_ERROR_TYPE(OrderMismatch);
CURVJET_ERROR_TYPE(JetDomain);
CURVJET_ERROR_TYPE(GimbalDomain);
CURVJET_ERROR_TYPE(SmallAngleAmbiguous);
CURVJET_ERROR_TYPE(InconsistentGibbsPair);
CURVJET_ERROR_TYPE(StencilExceedsInterval);
CURVJET_ERROR_TYPE(InvalidSpec);

#undef CURVJET_ERROR_TYPE

}  // namespace curvjet
