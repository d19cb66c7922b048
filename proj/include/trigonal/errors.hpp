#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace trigonal {

// Every failure carries a stable machine-readable code plus a human message
// naming the offending vertex/edge/parameter.  The CLI maps codes to exit
// status; tests match on code().
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool ok, const std::string& code, const std::string& message) {
    if (!ok) fail(code, message);
}

}  // namespace trigonal
