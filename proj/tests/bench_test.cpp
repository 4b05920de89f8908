#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "scopefoil/bench.hpp"
#include "scopefoil/syntax.hpp"
#include "support/support.hpp"

using namespace scopefoil;

namespace {

std::size_t internal_nodes(const NaiveTerm& term) {
    if (const auto* app = term.as<NaiveTerm::App>()) {
        return 1 + internal_nodes(app->fun) + internal_nodes(app->arg);
    }
    if (const auto* lam = term.as<NaiveTerm::Lam>()) {
        return 1 + internal_nodes(lam->body.term);
    }
    return 0;
}

bool pure_lambda(const NaiveTerm& term) {
    if (term.as<NaiveTerm::Var>() != nullptr) {
        return true;
    }
    if (const auto* app = term.as<NaiveTerm::App>()) {
        return pure_lambda(app->fun) && pure_lambda(app->arg);
    }
    if (const auto* lam = term.as<NaiveTerm::Lam>()) {
        return lam->pattern.node().index() == 1 && pure_lambda(lam->body.term);
    }
    return false;
}

BenchConfig small_config(std::vector<std::string> groups) {
    BenchConfig config;
    config.groups = std::move(groups);
    for (const auto& impl : standard_implementations()) {
        config.implementations.push_back(impl.name);
    }
    config.seed = 42;
    config.terms_per_random_group = 10;
    config.warmup_runs = 1;
    config.measured_runs = 1;
    return config;
}

}  // namespace

TEST(Church, Numerals) {
    EXPECT_EQ(pretty_term(gen_church(0)), "lam f . lam x . x");
    EXPECT_EQ(pretty_term(gen_church(2)), "lam f . lam x . f (f x)");
}

TEST(Church, ArithmeticNormalizes) {
    EXPECT_TRUE(alpha_eq(nf_debruijn(to_debruijn(church_plus(2, 2))), to_debruijn(gen_church(4))));
    EXPECT_TRUE(alpha_eq(nf_debruijn(to_debruijn(church_mult(2, 3))), to_debruijn(gen_church(6))));
    EXPECT_TRUE(alpha_eq(nf_debruijn(to_debruijn(church_fact(4))), to_debruijn(gen_church(24))));
    EXPECT_TRUE(alpha_eq(nf_debruijn(to_debruijn(church_fact(0))), to_debruijn(gen_church(1))));
    EXPECT_TRUE(free_idents(church_fact()).empty());
}

TEST(GenRandom, DeterministicClosedAndExactSize) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const std::size_t size = 1 + seed % 20;
        const RandomTerm first = gen_random_report(seed, size);
        const RandomTerm second = gen_random_report(seed, size);
        EXPECT_EQ(first.term, second.term);
        EXPECT_TRUE(free_idents(first.term).empty());
        EXPECT_TRUE(pure_lambda(first.term));
        EXPECT_EQ(first.size, size);
        EXPECT_EQ(internal_nodes(first.term), first.size);
        StepBudget budget(kDefaultGeneratorFuel);
        EXPECT_NO_THROW((void)nf_debruijn(to_debruijn(first.term), budget));
    }
}

TEST(GenRandom, SeedsProduceVariety) {
    std::set<std::string> distinct;
    for (std::uint64_t i = 0; i < 50; ++i) {
        distinct.insert(pretty_term(gen_random(derive_seed(7, i), 15)));
    }
    EXPECT_GT(distinct.size(), 45u);
}

TEST(GenRandom, ShrinksWhenNothingNormalizesWithinFuel) {
    // With zero fuel only redex-free terms are accepted; some attempts fail
    // but a result is always produced.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RandomTerm result = gen_random_report(seed, 12, 0);
        StepBudget budget(0);
        EXPECT_NO_THROW((void)nf_debruijn(to_debruijn(result.term), budget));
        EXPECT_LE(result.size, 12u);
        EXPECT_EQ(internal_nodes(result.term), result.size);
    }
}

TEST(RunBenchmarks, NfGroupHasOneRowPerImplementation) {
    const auto rows = run_benchmarks(small_config({"nf"}));
    ASSERT_EQ(rows.size(), 5u);
    for (const BenchRow& row : rows) {
        EXPECT_EQ(row.result_hash, canonical_hash(to_debruijn(gen_church(720))));
        EXPECT_EQ(row.term_index, 0u);
    }
}

TEST(RunBenchmarks, RandomGroupRowCount) {
    const auto rows = run_benchmarks(small_config({"random15"}));
    EXPECT_EQ(rows.size(), 50u);
    const auto again = run_benchmarks(small_config({"random15"}));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].result_hash, again[i].result_hash);
        EXPECT_EQ(rows[i].implementation, again[i].implementation);
    }
}

TEST(RunBenchmarks, FaultInjectedImplementationIsCaught) {
    std::vector<Implementation> impls = standard_implementations();
    impls.push_back({"broken", [](const NaiveTerm&, std::optional<std::uint64_t>) {
                         return PreparedTerm{[] {}, [] { return DBTerm::universe(); }};
                     }});
    BenchConfig config = small_config({"random15"});
    config.implementations = {"debruijn", "broken"};
    try {
        (void)run_benchmarks(config, impls);
        FAIL() << "expected ResultMismatch";
    } catch (const ResultMismatch& e) {
        EXPECT_EQ(e.group(), "random15");
        EXPECT_EQ(e.term(), 0u);
        EXPECT_EQ(e.impl_a(), "debruijn");
        EXPECT_EQ(e.impl_b(), "broken");
    }
}

TEST(RunBenchmarks, RejectsInvalidConfigs) {
    BenchConfig config = small_config({});
    EXPECT_THROW((void)run_benchmarks(config), ConfigError);
    config = small_config({"random99"});
    EXPECT_THROW((void)run_benchmarks(config), ConfigError);
    config = small_config({"nf"});
    config.implementations = {"nope"};
    EXPECT_THROW((void)run_benchmarks(config), ConfigError);
    config = small_config({"nf"});
    config.measured_runs = 0;
    EXPECT_THROW((void)run_benchmarks(config), ConfigError);
}

TEST(RunBenchmarks, FuelLimitPropagates) {
    BenchConfig config = small_config({"nf"});
    config.fuel = 10;
    EXPECT_THROW((void)run_benchmarks(config), FuelExhausted);
}

TEST(Csv, ExactColumns) {
    const std::vector<BenchRow> rows = {{"nf", "nbe", 0, 1234, 0xabcULL}};
    EXPECT_EQ(format_csv(rows), "group,impl,term,median_ns,hash\nnf,nbe,0,1234,0000000000000abc\n");
    const auto path = std::filesystem::temp_directory_path() / "scopefoil_bench_test.csv";
    write_csv(rows, path.string());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "group,impl,term,median_ns,hash");
    std::filesystem::remove(path);
}

TEST(Summary, OrdersFastestFirst) {
    const std::vector<BenchRow> rows = {
        {"nf", "slow", 0, 3000000, 1}, {"nf", "fast", 0, 1000000, 1}, {"random15", "fast", 0, 5, 1}};
    EXPECT_EQ(format_summary(rows), "nf: fast (1.000 ms) < slow (3.000 ms)\nrandom15: fast (0.000 ms)\n");
}
