#ifndef GRASSMORPH_ERRORS_HPP
#define GRASSMORPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grassmorph {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Prime divides a denominator that must stay invertible.
struct BadPrime : Error {
    explicit BadPrime(const std::string& msg) : Error(msg) {}
};

/// Two forms share a positive-dimensional component where a finite
/// intersection was required.
struct CommonComponent : Error {
    explicit CommonComponent(const std::string& msg) : Error(msg) {}
};

/// A matrix expected to present a 2-plane has rank < 2.
struct RankDeficient : Error {
    explicit RankDeficient(const std::string& msg) : Error(msg) {}
};

/// Random coordinate change failed to separate zeros (internal; retried).
struct DegenerateCoordinates : Error {
    explicit DegenerateCoordinates(const std::string& msg) : Error(msg) {}
};

struct RetriesExhausted : Error {
    explicit RetriesExhausted(const std::string& msg) : Error(msg) {}
};

/// Enumeration or verification budget exceeded; result would not be exact.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

/// Exact elimination exceeded the configured degree cap; no verdict.
struct Inconclusive : Error {
    explicit Inconclusive(const std::string& msg) : Error(msg) {}
};

/// Operation requires a validated bundle surjection.
struct Unsurjective : Error {
    explicit Unsurjective(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace grassmorph

#endif
