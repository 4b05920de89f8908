#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace scopefoil {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A debug-mode scope check failed. Indicates a bug in the caller or the library.
class ScopeViolation : public Error {
public:
    using Error::Error;
};

class FuelExhausted : public Error {
public:
    explicit FuelExhausted(std::uint64_t limit)
        : Error("normalization exceeded step budget of " + std::to_string(limit)), limit_(limit) {}

    [[nodiscard]] std::uint64_t limit() const noexcept { return limit_; }

protected:
    FuelExhausted(const std::string& message, std::uint64_t limit) : Error(message), limit_(limit) {}

private:
    std::uint64_t limit_;
};

/// An intermediate term grew past the budget's size limit.
class SizeExhausted : public FuelExhausted {
public:
    explicit SizeExhausted(std::uint64_t limit)
        : FuelExhausted("normalization exceeded term size limit of " + std::to_string(limit), limit) {}
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(std::string ident)
        : Error("unbound variable: " + ident), ident_(std::move(ident)) {}

    [[nodiscard]] const std::string& ident() const noexcept { return ident_; }

private:
    std::string ident_;
};

class DuplicateBinder : public Error {
public:
    explicit DuplicateBinder(std::string ident)
        : Error("duplicate binder in pattern: " + ident), ident_(std::move(ident)) {}

    [[nodiscard]] const std::string& ident() const noexcept { return ident_; }

private:
    std::string ident_;
};

class UnsupportedPattern : public Error {
public:
    using Error::Error;
};

/// Counts reduction steps and throws FuelExhausted once the limit is passed.
/// A budget without a limit never throws. The optional size limit bounds
/// intermediate terms and is only honoured by nf_debruijn.
class StepBudget {
public:
    StepBudget() = default;
    explicit StepBudget(std::optional<std::uint64_t> limit, std::optional<std::uint64_t> size_limit = std::nullopt)
        : limit_(limit), size_limit_(size_limit) {}

    void tick() {
        ++used_;
        if (limit_ && used_ > *limit_) {
            throw FuelExhausted(*limit_);
        }
    }

    [[nodiscard]] std::uint64_t used() const noexcept { return used_; }
    [[nodiscard]] std::optional<std::uint64_t> limit() const noexcept { return limit_; }
    [[nodiscard]] std::optional<std::uint64_t> size_limit() const noexcept { return size_limit_; }

private:
    std::optional<std::uint64_t> limit_;
    std::optional<std::uint64_t> size_limit_;
    std::uint64_t used_ = 0;
};

}  // namespace scopefoil
