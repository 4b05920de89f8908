#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>

#include "scopefoil/bench.hpp"
#include "scopefoil/bridge.hpp"
#include "scopefoil/direct.hpp"
#include "scopefoil/lambda_pi_free.hpp"
#include "scopefoil/nbe.hpp"
#include "scopefoil/oracles.hpp"
#include "scopefoil/syntax.hpp"

namespace scopefoil::cli {

namespace {

enum class Engine { Direct, Free, Nbe };

class UserError : public Error {
public:
    using Error::Error;
};

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UserError(path + ": cannot read file");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::string display_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

Program parse_file(const std::string& path, const std::string& text) {
    try {
        return parse_program(text);
    } catch (const SyntaxError& e) {
        throw UserError(display_name(path) + ":" + e.what());
    }
}

std::string located(const std::string& path, SourcePos pos, const std::string& message) {
    return display_name(path) + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
}

// Normal form of a closed direct term under `engine`, with free raw names in
// `scope`. Binders of the result are renamed canonically so the printed form
// does not depend on the engine.
DBTerm normalize_with(Engine engine, bool whnf_only, const Scope& scope, const DirectTerm& term,
                      StepBudget& budget, const RawNaming& naming) {
    switch (engine) {
        case Engine::Direct:
            return to_debruijn(whnf_only ? whnf_direct(scope, term, budget) : nf_direct(scope, term, budget), naming);
        case Engine::Free: {
            const FreeTerm free = direct_to_free(term);
            return to_debruijn(whnf_only ? whnf_free(scope, free, budget) : nf_free(scope, free, budget), naming);
        }
        case Engine::Nbe:
            if (whnf_only) {
                throw UserError("--whnf is not supported by the nbe engine");
            }
            return to_debruijn(nf_nbe(scope, direct_to_free(term), budget), naming);
    }
    throw Error("unknown engine");
}

int run_program(const std::string& path, Engine engine, std::optional<std::uint64_t> fuel, std::ostream& out,
                std::istream& in) {
    const Program program = parse_file(path, read_input(path, in));
    for (const Command& command : program.commands) {
        try {
            const DirectTerm term = to_foil_closed(command.term);
            (void)to_foil_closed(command.type);
            if (command.kind == Command::Kind::Check) {
                out << "scope-ok\n";
                continue;
            }
            StepBudget budget(fuel);
            const DBTerm normal = normalize_with(engine, false, Scope{}, term, budget, default_ident);
            out << pretty_term(from_debruijn(normal)) << '\n';
        } catch (const UserError&) {
            throw;
        } catch (const ScopeViolation&) {
            throw;
        } catch (const ResultMismatch&) {
            throw;
        } catch (const Error& e) {
            throw UserError(located(path, command.pos, e.what()));
        }
    }
    return kOk;
}

int normalize_term(const std::string& path, Engine engine, bool whnf_only, std::optional<std::uint64_t> fuel,
                   std::ostream& out, std::istream& in) {
    const std::string text = read_input(path, in);
    NaiveTerm term = [&] {
        try {
            return parse_term(text);
        } catch (const SyntaxError& e) {
            throw UserError(display_name(path) + ":" + e.what());
        }
    }();
    // Free identifiers become the names 0..k-1 of the starting scope and are
    // printed back under their own names.
    const std::vector<VarIdent> free = free_idents(term);
    std::vector<std::pair<VarIdent, Name>> table;
    std::vector<RawName> raws;
    for (std::size_t i = 0; i < free.size(); ++i) {
        table.emplace_back(free[i], Name{i});
        raws.push_back(i);
    }
    const Scope scope = Scope::from_members(raws);
    const RawNaming naming = [&](RawName raw) { return raw < free.size() ? free[raw] : default_ident(raw); };
    try {
        const DirectTerm direct = to_foil_term(table_renaming(table), scope, term);
        StepBudget budget(fuel);
        out << pretty_term(from_debruijn(normalize_with(engine, whnf_only, scope, direct, budget, naming))) << '\n';
    } catch (const UserError&) {
        throw;
    } catch (const ScopeViolation&) {
        throw;
    } catch (const Error& e) {
        throw UserError(display_name(path) + ": " + e.what());
    }
    return kOk;
}

int echo_file(const std::string& path, std::ostream& out, std::istream& in) {
    out << pretty_program(parse_file(path, read_input(path, in)));
    return kOk;
}

int run_bench(const BenchConfig& config, const std::string& csv_path, std::ostream& out) {
    const std::vector<BenchRow> rows = run_benchmarks(config);
    write_csv(rows, csv_path);
    out << "wrote " << rows.size() << " rows to " << csv_path << '\n';
    out << "all result hashes agree with the de Bruijn oracle\n";
    out << "ordering by total median time (fastest first):\n" << format_summary(rows);
    return kOk;
}

std::vector<std::string> implementation_names() {
    std::vector<std::string> names;
    for (const Implementation& impl : standard_implementations()) {
        names.push_back(impl.name);
    }
    return names;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Scope-safe λΠ toolkit: run programs, normalize terms, benchmark normalizers", "scopefoil"};
    app.require_subcommand(1);

    const std::map<std::string, Engine> engines{
        {"direct", Engine::Direct}, {"free", Engine::Free}, {"nbe", Engine::Nbe}};
    Engine engine = Engine::Free;
    std::optional<std::uint64_t> fuel;
    std::string path;
    bool whnf_only = false;

    auto* run = app.add_subcommand("run", "Check and compute every command of a program");
    run->add_option("file", path, "Program file")->required();
    run->add_option("--engine", engine, "Normalizer: direct, free or nbe")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
    run->add_option("--fuel", fuel, "Maximum reduction steps per command");

    auto* normalize = app.add_subcommand("normalize", "Normalize a single term read from a file or '-'");
    normalize->add_option("file", path, "Term file, or '-' for standard input")->required();
    normalize->add_flag("--whnf", whnf_only, "Stop at weak head normal form");
    normalize->add_option("--engine", engine, "Normalizer: direct, free or nbe")
        ->transform(CLI::CheckedTransformer(engines, CLI::ignore_case));
    normalize->add_option("--fuel", fuel, "Maximum reduction steps");

    auto* echo = app.add_subcommand("echo", "Parse a program and print it back");
    echo->add_option("file", path, "Program file")->required();

    BenchConfig config;
    std::string csv_path;
    auto* bench = app.add_subcommand("bench", "Time normalization across implementations");
    bench->add_option("--group", config.groups, "nf, random15 or random20 (repeatable)")
        ->required()
        ->check(CLI::IsMember(standard_groups()));
    bench->add_option("--impl", config.implementations,
                      "named, debruijn, foil_direct, free_foil or nbe (repeatable; default all)")
        ->check(CLI::IsMember(implementation_names()));
    bench->add_option("--seed", config.seed, "Seed for random groups")->required();
    bench->add_option("--terms", config.terms_per_random_group, "Terms per random group")
        ->required()
        ->check(CLI::PositiveNumber);
    bench->add_option("--csv", csv_path, "Output CSV path")->required();
    bench->add_option("--fuel", config.fuel, "Maximum reduction steps per normalization");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUserError;
    }

    try {
        if (run->parsed()) {
            return run_program(path, engine, fuel, out, in);
        }
        if (normalize->parsed()) {
            return normalize_term(path, engine, whnf_only, fuel, out, in);
        }
        if (echo->parsed()) {
            return echo_file(path, out, in);
        }
        if (config.implementations.empty()) {
            config.implementations = implementation_names();
        }
        return run_bench(config, csv_path, out);
    } catch (const UserError& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    } catch (const FuelExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kUserError;
    } catch (const ScopeViolation& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const ResultMismatch& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace scopefoil::cli
