#pragma once

#include <stdexcept>
#include <string>

namespace colorgraph {

// Bad arguments or malformed input data.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A configured cap (polygon size, time budget turned hard) was exceeded.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed; indicates a bug.
struct VerificationError : std::logic_error {
    explicit VerificationError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace colorgraph
