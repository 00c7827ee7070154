#pragma once

#include <stdexcept>
#include <string>

namespace kcirc {

// All library failures carry a stable machine-readable kind tag
// ("KernelUndefined", "NotABase", ...) next to the human message.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
    throw error(kind, message);
}

}  // namespace kcirc
