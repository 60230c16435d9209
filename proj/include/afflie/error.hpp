#pragma once

#include <stdexcept>
#include <string>

namespace afflie {

enum class ErrorKind {
    InvalidModulus,
    ModulusMismatch,
    Parse,
    Precondition,
    ContractViolation,
    Inconsistency,
    Unsupported,
    ResourceLimit,
    CrossCheck,
};

// stable short code used in CLI diagnostics
const char* error_code(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline void require(bool cond, ErrorKind k, const std::string& msg) {
    if (!cond) fail(k, msg);
}

// nonnegative residue
inline int mod(long long a, int n) {
    long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

} // namespace afflie
