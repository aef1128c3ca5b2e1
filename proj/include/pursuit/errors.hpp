#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pursuit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Input outside the domain of an operation (disconnected graph handed to the
// solver, non-cop-win graph handed to the partition capture time, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class UnsupportedOrder : public DomainError {
public:
    using DomainError::DomainError;
};

class StructuralError : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(std::uint64_t states, std::uint64_t budget)
        : Error("state budget exceeded: " + std::to_string(states) + " states > budget " +
                std::to_string(budget)),
          states_(states) {}
    std::uint64_t states() const noexcept { return states_; }

private:
    std::uint64_t states_;
};

class CopNumberExceeded : public Error {
public:
    explicit CopNumberExceeded(int k_max)
        : Error("robber escapes every team of at most " + std::to_string(k_max) + " cops"),
          k_max_(k_max) {}
    int k_max() const noexcept { return k_max_; }

private:
    int k_max_;
};

class PolicyError : public Error {
public:
    using Error::Error;
};

class TraceError : public Error {
public:
    TraceError(const std::string& what, int round)
        : Error("round " + std::to_string(round) + ": " + what), round_(round) {}
    int round() const noexcept { return round_; }

private:
    int round_;
};

class IoError : public Error {
public:
    IoError(const std::string& what, const std::string& path)
        : Error(what + ": " + path), path_(path) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace pursuit
