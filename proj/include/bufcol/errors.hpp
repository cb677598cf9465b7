#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bufcol {

/// Malformed edge-list input. The message names the offending 1-based line.
class ParseError final : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("edge list line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// Input too large for an exhaustive computation (exact chromatic search,
/// all-orders worst case, Kneser construction).
class SizeLimitError final : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Exact branch enumeration exceeded its branch budget.
class BranchCapExceeded final : public std::runtime_error {
public:
    BranchCapExceeded(std::uint64_t explored, std::uint64_t cap)
        : std::runtime_error("branch enumeration exceeded cap of " + std::to_string(cap) +
                             " after exploring " + std::to_string(explored) + " branches"),
          explored_(explored) {}

    std::uint64_t branches_explored() const { return explored_; }

private:
    std::uint64_t explored_;
};

}  // namespace bufcol
