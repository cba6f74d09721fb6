#pragma once

#include <stdexcept>
#include <string>

namespace corkcalc {

/* One exception type for the whole library.  `code` is a stable
 * machine-checkable tag ("NotMeridian", "NonPlanar", ...); what() carries the
 * human-readable message prefixed by the tag. */
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

}  // namespace corkcalc
