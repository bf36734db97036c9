#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subreg {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A word is a sequence of letter indices into some Alphabet.
using Word = std::vector<Letter>;

/// Thrown when a construction would exceed a configured resource cap
/// (subset construction, monoid closure, tuple enumeration).
class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a solver's promised language class turns out to be violated
/// by the actual input. Promise violations are errors, never wrong answers.
class PromiseViolation : public std::runtime_error {
public:
    explicit PromiseViolation(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed input files.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Resource caps for the exponential constructions. All operations that
/// may blow up take a cap and fail loudly instead of thrashing.
struct Caps {
    std::size_t determinize_states = std::size_t{1} << 20;
    std::size_t residual_states = std::size_t{1} << 16;
    std::size_t monoid_elements = 1'000'000;
    std::size_t product_states = std::size_t{1} << 20;
    std::size_t tuple_combinations = 4'000'000;
};

inline Caps default_caps() { return Caps{}; }

} // namespace subreg
