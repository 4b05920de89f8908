#pragma once

// Term generators and the normalization benchmark harness.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "scopefoil/error.hpp"
#include "scopefoil/naive.hpp"
#include "scopefoil/oracles.hpp"

namespace scopefoil {

/// `lam f . lam x . f (... (f x))` with n applications.
[[nodiscard]] NaiveTerm gen_church(std::uint64_t n);
[[nodiscard]] NaiveTerm church_succ();
[[nodiscard]] NaiveTerm church_plus();
[[nodiscard]] NaiveTerm church_mult();
/// Factorial on Church numerals, iterating (k, k!) -> (k+1, (k+1)!) over Church pairs.
[[nodiscard]] NaiveTerm church_fact();

/// The applied terms `plus m n`, `mult m n` and `fact n`.
[[nodiscard]] NaiveTerm church_plus(std::uint64_t m, std::uint64_t n);
[[nodiscard]] NaiveTerm church_mult(std::uint64_t m, std::uint64_t n);
[[nodiscard]] NaiveTerm church_fact(std::uint64_t n);

inline constexpr std::uint64_t kDefaultGeneratorFuel = 2000;
inline constexpr std::size_t kGeneratorAttempts = 1000;
/// Largest intermediate term (in nodes) an accepted random term may reach.
inline constexpr std::uint64_t kGeneratorSizeLimit = 5000;

struct RandomTerm {
    NaiveTerm term;
    /// Internal-node count actually produced. Smaller than requested only if
    /// every attempt at the requested size failed to normalize within fuel.
    std::size_t size;
    std::size_t attempts;
};

/// Closed term over Lam/App/Var with exactly `size` Lam and App nodes that
/// normalizes under nf_debruijn within `fuel` steps without any intermediate
/// term exceeding kGeneratorSizeLimit nodes. Deterministic in (seed, size, fuel).
[[nodiscard]] RandomTerm gen_random_report(std::uint64_t seed, std::size_t size,
                                           std::uint64_t fuel = kDefaultGeneratorFuel);
[[nodiscard]] NaiveTerm gen_random(std::uint64_t seed, std::size_t size);

/// Seed for the index-th term of a batch.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// A term prepared for one implementation: `normalize` is the timed part,
/// `result` reads back the last normal form.
struct PreparedTerm {
    std::function<void()> normalize;
    std::function<DBTerm()> result;
};

struct Implementation {
    std::string name;
    std::function<PreparedTerm(const NaiveTerm& term, std::optional<std::uint64_t> fuel)> prepare;
};

/// named, debruijn, foil_direct, free_foil, nbe.
[[nodiscard]] const std::vector<Implementation>& standard_implementations();
[[nodiscard]] const std::vector<std::string>& standard_groups();

struct BenchConfig {
    std::vector<std::string> groups;
    std::vector<std::string> implementations;
    std::uint64_t seed = 0;
    std::size_t terms_per_random_group = 100;
    std::size_t warmup_runs = 2;
    std::size_t measured_runs = 5;
    std::optional<std::uint64_t> fuel;
};

struct BenchRow {
    std::string group;
    std::string implementation;
    std::size_t term_index;
    std::uint64_t median_ns;
    std::uint64_t result_hash;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class ResultMismatch : public Error {
public:
    ResultMismatch(std::string group, std::size_t term, std::string impl_a, std::string impl_b,
                   std::uint64_t hash_a, std::uint64_t hash_b);

    [[nodiscard]] const std::string& group() const noexcept { return group_; }
    [[nodiscard]] std::size_t term() const noexcept { return term_; }
    [[nodiscard]] const std::string& impl_a() const noexcept { return impl_a_; }
    [[nodiscard]] const std::string& impl_b() const noexcept { return impl_b_; }

private:
    std::string group_;
    std::size_t term_;
    std::string impl_a_;
    std::string impl_b_;
};

/// Terms of a group in index order.
[[nodiscard]] std::vector<NaiveTerm> group_terms(const std::string& group, const BenchConfig& config);

/// Runs every (group, term, implementation) sequentially. Each result is
/// checked against the de Bruijn oracle before its timing is kept.
/// Implementations are looked up in `available` by name.
[[nodiscard]] std::vector<BenchRow> run_benchmarks(const BenchConfig& config,
                                                   const std::vector<Implementation>& available);
[[nodiscard]] std::vector<BenchRow> run_benchmarks(const BenchConfig& config);

void write_csv(const std::vector<BenchRow>& rows, const std::string& path);
[[nodiscard]] std::string format_csv(const std::vector<BenchRow>& rows);

/// Per group, implementations ordered by total median time, fastest first.
[[nodiscard]] std::string format_summary(const std::vector<BenchRow>& rows);

}  // namespace scopefoil
