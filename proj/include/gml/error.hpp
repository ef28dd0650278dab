#pragma once

#include <stdexcept>
#include <string>

namespace gml {

// Every user-facing failure carries a stable machine-readable code
// (e.g. "input/schema", "core/zero-denominator", "ibp/unreduced").
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace gml
