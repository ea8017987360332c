#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pcx {

// Every failure raised by the library carries a stable machine-readable tag
// next to the human-readable message; the CLI and the scenario runner key on
// the tag, tests key on both.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace pcx
