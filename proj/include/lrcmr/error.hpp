#ifndef LRCMR_ERROR_HPP
#define LRCMR_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lrcmr {

// All precondition / domain failures carry a short machine-checkable kind
// ("NotPrime", "FieldMismatch", ...) followed by a human message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
    throw Error(kind, msg);
}

}  // namespace lrcmr

#endif
