#include "scopefoil/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "scopefoil/bridge.hpp"
#include "scopefoil/direct.hpp"
#include "scopefoil/lambda_pi_free.hpp"
#include "scopefoil/nbe.hpp"
#include "scopefoil/syntax.hpp"

namespace scopefoil {

namespace {

std::string parens(const NaiveTerm& term) { return "(" + pretty_term(term) + ")"; }

NaiveTerm apply(NaiveTerm fun, std::initializer_list<NaiveTerm> args) {
    for (const NaiveTerm& arg : args) {
        fun = NaiveTerm::app(std::move(fun), arg);
    }
    return fun;
}

class RandomLambda {
public:
    explicit RandomLambda(std::uint64_t seed) : rng_(seed) {}

    NaiveTerm term(std::size_t internal, std::size_t depth) {
        if (internal == 0) {
            return NaiveTerm::var("x" + std::to_string(below(depth)));
        }
        if (depth == 0 || below(2) == 0) {
            return NaiveTerm::lam(NaivePattern::var(VarIdent{"x" + std::to_string(depth)}),
                                  term(internal - 1, depth + 1));
        }
        const std::size_t left = below(internal);
        NaiveTerm fun = term(left, depth);
        return NaiveTerm::app(std::move(fun), term(internal - 1 - left, depth));
    }

private:
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

    std::mt19937_64 rng_;
};

bool normalizes_within(const NaiveTerm& term, std::uint64_t fuel) {
    StepBudget budget(fuel, kGeneratorSizeLimit);
    try {
        (void)nf_debruijn(to_debruijn(term), budget);
        return true;
    } catch (const FuelExhausted&) {
        return false;
    }
}

template <typename T, typename Normalize, typename Read>
PreparedTerm prepared(T input, std::optional<std::uint64_t> fuel, Normalize normalize, Read read) {
    auto state = std::make_shared<std::pair<T, std::optional<decltype(normalize(input, std::declval<StepBudget&>()))>>>(
        std::move(input), std::nullopt);
    return PreparedTerm{
        [state, fuel, normalize] {
            StepBudget budget(fuel);
            state->second = normalize(state->first, budget);
        },
        [state, read] {
            if (!state->second) {
                throw Error("result requested before normalization");
            }
            return read(*state->second);
        },
    };
}

std::vector<Implementation> make_implementations() {
    std::vector<Implementation> impls;
    impls.push_back({"named", [](const NaiveTerm& term, std::optional<std::uint64_t> fuel) {
                         return prepared(
                             term, fuel, [](const NaiveTerm& t, StepBudget& b) { return nf_named(t, b); },
                             [](const NaiveTerm& t) { return to_debruijn(t); });
                     }});
    impls.push_back({"debruijn", [](const NaiveTerm& term, std::optional<std::uint64_t> fuel) {
                         return prepared(
                             to_debruijn(term), fuel, [](const DBTerm& t, StepBudget& b) { return nf_debruijn(t, b); },
                             [](const DBTerm& t) { return t; });
                     }});
    impls.push_back({"foil_direct", [](const NaiveTerm& term, std::optional<std::uint64_t> fuel) {
                         return prepared(
                             to_foil_closed(term), fuel,
                             [](const DirectTerm& t, StepBudget& b) { return nf_direct(Scope{}, t, b); },
                             [](const DirectTerm& t) { return to_debruijn(t); });
                     }});
    impls.push_back({"free_foil", [](const NaiveTerm& term, std::optional<std::uint64_t> fuel) {
                         return prepared(
                             direct_to_free(to_foil_closed(term)), fuel,
                             [](const FreeTerm& t, StepBudget& b) { return nf_free(Scope{}, t, b); },
                             [](const FreeTerm& t) { return to_debruijn(t); });
                     }});
    impls.push_back({"nbe", [](const NaiveTerm& term, std::optional<std::uint64_t> fuel) {
                         return prepared(
                             direct_to_free(to_foil_closed(term)), fuel,
                             [](const FreeTerm& t, StepBudget& b) { return nf_nbe(Scope{}, t, b); },
                             [](const FreeTerm& t) { return to_debruijn(t); });
                     }});
    return impls;
}

std::uint64_t median(std::vector<std::uint64_t> samples) {
    const auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
    std::nth_element(samples.begin(), mid, samples.end());
    return *mid;
}

std::uint64_t time_once(const PreparedTerm& prepared) {
    const auto start = std::chrono::steady_clock::now();
    prepared.normalize();
    const auto stop = std::chrono::steady_clock::now();
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
}

std::string hex(std::uint64_t value) {
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(value));
    return buffer;
}

void validate(const BenchConfig& config) {
    if (config.groups.empty()) {
        throw ConfigError("at least one benchmark group is required");
    }
    for (const std::string& group : config.groups) {
        const auto& known = standard_groups();
        if (std::find(known.begin(), known.end(), group) == known.end()) {
            throw ConfigError("unknown benchmark group: " + group);
        }
    }
    if (config.implementations.empty()) {
        throw ConfigError("at least one implementation is required");
    }
    if (config.terms_per_random_group == 0 || config.warmup_runs == 0 || config.measured_runs == 0) {
        throw ConfigError("term and run counts must be positive");
    }
}

}  // namespace

NaiveTerm gen_church(std::uint64_t n) {
    NaiveTerm body = NaiveTerm::var("x");
    for (std::uint64_t i = 0; i < n; ++i) {
        body = NaiveTerm::app(NaiveTerm::var("f"), std::move(body));
    }
    return NaiveTerm::lam(NaivePattern::var(VarIdent{"f"}), NaiveTerm::lam(NaivePattern::var(VarIdent{"x"}), std::move(body)));
}

NaiveTerm church_succ() { return parse_term("lam n . lam f . lam x . f (n f x)"); }

NaiveTerm church_plus() { return parse_term("lam m . lam n . lam f . lam x . m f (n f x)"); }

NaiveTerm church_mult() { return parse_term("lam m . lam n . lam f . m (n f)"); }

NaiveTerm church_fact() {
    const std::string pair = "(lam a . lam b . lam s . s a b)";
    const std::string fst = "(lam p . p (lam a . lam b . a))";
    const std::string snd = "(lam p . p (lam a . lam b . b))";
    const std::string step = "(lam p . " + pair + " (" + parens(church_succ()) + " (" + fst + " p)) (" +
                             parens(church_mult()) + " (" + fst + " p) (" + snd + " p)))";
    const std::string one = parens(gen_church(1));
    return parse_term("lam n . " + snd + " (n " + step + " (" + pair + " " + one + " " + one + "))");
}

NaiveTerm church_plus(std::uint64_t m, std::uint64_t n) { return apply(church_plus(), {gen_church(m), gen_church(n)}); }

NaiveTerm church_mult(std::uint64_t m, std::uint64_t n) { return apply(church_mult(), {gen_church(m), gen_church(n)}); }

NaiveTerm church_fact(std::uint64_t n) { return apply(church_fact(), {gen_church(n)}); }

RandomTerm gen_random_report(std::uint64_t seed, std::size_t size, std::uint64_t fuel) {
    if (size == 0) {
        throw ConfigError("random terms need at least one internal node");
    }
    RandomLambda gen(seed);
    std::size_t attempts = 0;
    for (std::size_t current = size; current >= 1; --current) {
        for (std::size_t i = 0; i < kGeneratorAttempts; ++i) {
            ++attempts;
            NaiveTerm term = gen.term(current, 0);
            if (normalizes_within(term, fuel)) {
                return RandomTerm{std::move(term), current, attempts};
            }
        }
    }
    // Size one is always `lam x0 . x0`, which normalizes in zero steps.
    throw Error("random term generation failed");
}

NaiveTerm gen_random(std::uint64_t seed, std::size_t size) { return gen_random_report(seed, size).term; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

const std::vector<Implementation>& standard_implementations() {
    static const std::vector<Implementation> impls = make_implementations();
    return impls;
}

const std::vector<std::string>& standard_groups() {
    static const std::vector<std::string> groups{"nf", "random15", "random20"};
    return groups;
}

ResultMismatch::ResultMismatch(std::string group, std::size_t term, std::string impl_a, std::string impl_b,
                               std::uint64_t hash_a, std::uint64_t hash_b)
    : Error("result mismatch in group " + group + ", term " + std::to_string(term) + ": " + impl_a + " gave " +
            hex(hash_a) + ", " + impl_b + " gave " + hex(hash_b)),
      group_(std::move(group)),
      term_(term),
      impl_a_(std::move(impl_a)),
      impl_b_(std::move(impl_b)) {}

std::vector<NaiveTerm> group_terms(const std::string& group, const BenchConfig& config) {
    if (group == "nf") {
        return {church_fact(6)};
    }
    std::size_t size = 0;
    if (group == "random15") {
        size = 15;
    } else if (group == "random20") {
        size = 20;
    } else {
        throw ConfigError("unknown benchmark group: " + group);
    }
    const std::uint64_t group_seed = derive_seed(config.seed, size);
    std::vector<NaiveTerm> terms;
    terms.reserve(config.terms_per_random_group);
    for (std::size_t i = 0; i < config.terms_per_random_group; ++i) {
        terms.push_back(gen_random(derive_seed(group_seed, i), size));
    }
    return terms;
}

std::vector<BenchRow> run_benchmarks(const BenchConfig& config, const std::vector<Implementation>& available) {
    validate(config);
    std::vector<const Implementation*> impls;
    for (const std::string& name : config.implementations) {
        const auto it = std::find_if(available.begin(), available.end(),
                                     [&](const Implementation& impl) { return impl.name == name; });
        if (it == available.end()) {
            throw ConfigError("unknown implementation: " + name);
        }
        impls.push_back(&*it);
    }

    std::vector<BenchRow> rows;
    for (const std::string& group : config.groups) {
        const std::vector<NaiveTerm> terms = group_terms(group, config);
        for (std::size_t index = 0; index < terms.size(); ++index) {
            StepBudget oracle_budget(config.fuel);
            const std::uint64_t expected = canonical_hash(nf_debruijn(to_debruijn(terms[index]), oracle_budget));
            std::string reference = "oracle";
            for (const Implementation* impl : impls) {
                const PreparedTerm prepared = impl->prepare(terms[index], config.fuel);
                for (std::size_t i = 0; i < config.warmup_runs; ++i) {
                    prepared.normalize();
                }
                std::vector<std::uint64_t> samples;
                samples.reserve(config.measured_runs);
                for (std::size_t i = 0; i < config.measured_runs; ++i) {
                    samples.push_back(time_once(prepared));
                }
                const std::uint64_t hash = canonical_hash(prepared.result());
                if (hash != expected) {
                    throw ResultMismatch(group, index, reference, impl->name, expected, hash);
                }
                reference = impl->name;
                rows.push_back(BenchRow{group, impl->name, index, median(std::move(samples)), hash});
            }
        }
    }
    return rows;
}

std::vector<BenchRow> run_benchmarks(const BenchConfig& config) {
    return run_benchmarks(config, standard_implementations());
}

std::string format_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "group,impl,term,median_ns,hash\n";
    for (const BenchRow& row : rows) {
        out << row.group << ',' << row.implementation << ',' << row.term_index << ',' << row.median_ns << ','
            << hex(row.result_hash) << '\n';
    }
    return out.str();
}

void write_csv(const std::vector<BenchRow>& rows, const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot open " + path + " for writing");
    }
    file << format_csv(rows);
    if (!file.flush()) {
        throw ConfigError("failed writing " + path);
    }
}

std::string format_summary(const std::vector<BenchRow>& rows) {
    std::vector<std::string> groups;
    std::map<std::string, std::vector<std::pair<std::string, std::uint64_t>>> totals;
    for (const BenchRow& row : rows) {
        auto& entries = totals[row.group];
        if (entries.empty()) {
            groups.push_back(row.group);
        }
        auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const auto& entry) { return entry.first == row.implementation; });
        if (it == entries.end()) {
            entries.emplace_back(row.implementation, 0);
            it = std::prev(entries.end());
        }
        it->second += row.median_ns;
    }
    std::ostringstream out;
    for (const std::string& group : groups) {
        auto entries = totals[group];
        std::stable_sort(entries.begin(), entries.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; });
        out << group << ':';
        for (std::size_t i = 0; i < entries.size(); ++i) {
            char ms[32];
            std::snprintf(ms, sizeof ms, "%.3f", static_cast<double>(entries[i].second) / 1e6);
            out << (i == 0 ? " " : " < ") << entries[i].first << " (" << ms << " ms)";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace scopefoil
