#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace palf {

enum class ErrorKind {
    ZeroVector,
    Unsupported,
    ClassMismatch,
    BadZ,
    NotMember,
    IndexOutOfRange,
    LengthMismatch,
    InvalidStep,
    CurveUnsupported,
    PreconditionFailed,
    ParseError,
    NonCoprime,
    EmptyTuple,
    Overflow,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Overflow-checked int64 arithmetic. Slope and matrix entries grow
// exponentially in word length, so every product goes through these.
inline int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer addition");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer subtraction");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "integer multiplication");
    return r;
}

inline int64_t checked_neg(int64_t a) { return checked_sub(0, a); }

inline int64_t checked_abs(int64_t a) { return a < 0 ? checked_neg(a) : a; }

} // namespace palf
