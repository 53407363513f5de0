#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sumprod {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (rationals, polynomials, GGP specs, set files).
/// `position()` is a zero-based byte offset into the offending text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Mathematically invalid argument (zero denominator, empty set, zero polynomial, 0 in a
/// multiplicative structure operation).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A pair count or enumeration size exceeded its configured cap.
class CapExceeded : public Error {
public:
    CapExceeded(const std::string& what, unsigned long long requested, unsigned long long cap)
        : Error(what + ": " + std::to_string(requested) + " exceeds cap " + std::to_string(cap)),
          requested_(requested), cap_(cap) {}

    unsigned long long requested() const noexcept { return requested_; }
    unsigned long long cap() const noexcept { return cap_; }

private:
    unsigned long long requested_;
    unsigned long long cap_;
};

enum class Precondition {
    parallel_vectors,
    exceptional_polynomial,
    trivial_polynomial,
    support_too_small,
    support_too_large,
    not_distinct,
    nonpositive_generator,
    dilation_too_small,
};

const char* to_string(Precondition p) noexcept;

/// An operation was called outside its documented precondition. Each violated condition has
/// its own `kind()` so callers can report it distinctly.
class PreconditionError : public Error {
public:
    PreconditionError(Precondition kind, const std::string& what)
        : Error(what), kind_(kind) {}

    Precondition kind() const noexcept { return kind_; }

private:
    Precondition kind_;
};

}  // namespace sumprod
