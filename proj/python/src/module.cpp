#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scopefoil/bench.hpp"
#include "scopefoil/bridge.hpp"
#include "scopefoil/direct.hpp"
#include "scopefoil/lambda_pi_free.hpp"
#include "scopefoil/nbe.hpp"
#include "scopefoil/oracles.hpp"
#include "scopefoil/syntax.hpp"

namespace py = pybind11;
using namespace scopefoil;

namespace {

// Free identifiers of `term` become the starting scope 0..k-1.
struct OpenTerm {
    std::vector<VarIdent> free;
    Scope scope;
    DirectTerm direct;

    RawNaming naming() const {
        return [this](RawName raw) { return raw < free.size() ? free[raw] : default_ident(raw); };
    }
};

OpenTerm open_term(const NaiveTerm& term) {
    std::vector<VarIdent> free = free_idents(term);
    std::vector<std::pair<VarIdent, Name>> table;
    std::vector<RawName> raws;
    for (std::size_t i = 0; i < free.size(); ++i) {
        table.emplace_back(free[i], Name{i});
        raws.push_back(i);
    }
    Scope scope = Scope::from_members(raws);
    DirectTerm direct = to_foil_term(table_renaming(std::move(table)), scope, term);
    return OpenTerm{std::move(free), std::move(scope), std::move(direct)};
}

DBTerm normal_form(const NaiveTerm& term, const std::string& engine, StepBudget& budget) {
    if (engine == "named") {
        return to_debruijn(nf_named(term, budget));
    }
    if (engine == "debruijn") {
        return nf_debruijn(to_debruijn(term), budget);
    }
    const OpenTerm open = open_term(term);
    if (engine == "direct") {
        return to_debruijn(nf_direct(open.scope, open.direct, budget), open.naming());
    }
    if (engine == "free") {
        return to_debruijn(nf_free(open.scope, direct_to_free(open.direct), budget), open.naming());
    }
    if (engine == "nbe") {
        return to_debruijn(nf_nbe(open.scope, direct_to_free(open.direct), budget), open.naming());
    }
    throw py::value_error("unknown engine: " + engine);
}

std::string normalize(const std::string& text, const std::string& engine, std::optional<std::uint64_t> fuel) {
    StepBudget budget(fuel);
    return pretty_term(from_debruijn(normal_form(parse_term(text), engine, budget)));
}

std::vector<std::string> run_program(const std::string& text, const std::string& engine,
                                     std::optional<std::uint64_t> fuel) {
    std::vector<std::string> lines;
    for (const Command& command : parse_program(text).commands) {
        (void)to_foil_closed(command.term);
        (void)to_foil_closed(command.type);
        if (command.kind == Command::Kind::Check) {
            lines.emplace_back("scope-ok");
            continue;
        }
        StepBudget budget(fuel);
        lines.push_back(pretty_term(from_debruijn(normal_form(command.term, engine, budget))));
    }
    return lines;
}

py::list bench(const std::vector<std::string>& groups, std::optional<std::vector<std::string>> impls,
               std::uint64_t seed, std::size_t terms, std::size_t warmup, std::size_t measured,
               std::optional<std::uint64_t> fuel) {
    BenchConfig config;
    config.groups = groups;
    if (impls) {
        config.implementations = *impls;
    } else {
        for (const Implementation& impl : standard_implementations()) {
            config.implementations.push_back(impl.name);
        }
    }
    config.seed = seed;
    config.terms_per_random_group = terms;
    config.warmup_runs = warmup;
    config.measured_runs = measured;
    config.fuel = fuel;
    std::vector<BenchRow> rows;
    {
        py::gil_scoped_release release;
        rows = run_benchmarks(config);
    }
    py::list out;
    for (const BenchRow& row : rows) {
        py::dict d;
        d["group"] = row.group;
        d["impl"] = row.implementation;
        d["term"] = row.term_index;
        d["median_ns"] = row.median_ns;
        d["hash"] = row.result_hash;
        out.append(d);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(scopefoil, m) {
    m.doc() = "Scope-safe syntax toolkit for lambda-Pi with pairs and patterns";

    static py::exception<Error> error(m, "Error");
    static py::exception<SyntaxError> syntax_error(m, "ParseError", error.ptr());
    static py::exception<FuelExhausted> fuel_error(m, "FuelExhausted", error.ptr());
    static py::exception<ScopeViolation> scope_error(m, "ScopeViolation", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const SyntaxError& e) {
            py::set_error(syntax_error, e.what());
        } catch (const FuelExhausted& e) {
            py::set_error(fuel_error, e.what());
        } catch (const ScopeViolation& e) {
            py::set_error(scope_error, e.what());
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("parse", [](const std::string& text) { return pretty_term(parse_term(text)); }, py::arg("text"),
          "Parse a term and print it back in canonical layout.");
    m.def("echo", [](const std::string& text) { return pretty_program(parse_program(text)); }, py::arg("text"));
    m.def(
        "free_variables",
        [](const std::string& text) {
            std::vector<std::string> out;
            for (const VarIdent& id : free_idents(parse_term(text))) {
                out.push_back(id.text);
            }
            return out;
        },
        py::arg("text"));
    m.def("normalize", &normalize, py::arg("text"), py::arg("engine") = "free", py::arg("fuel") = py::none(),
          "Normal form of a term. Engines: named, debruijn, direct, free, nbe.");
    m.def("run", &run_program, py::arg("program"), py::arg("engine") = "free", py::arg("fuel") = py::none(),
          "Run every command of a program and return the output lines.");
    m.def(
        "alpha_equal",
        [](const std::string& a, const std::string& b) { return alpha_eq(parse_term(a), parse_term(b)); },
        py::arg("a"), py::arg("b"));
    m.def(
        "canonical_hash", [](const std::string& text) { return canonical_hash(to_debruijn(parse_term(text))); },
        py::arg("text"));
    m.def("church", [](std::uint64_t n) { return pretty_term(gen_church(n)); }, py::arg("n"));
    m.def("church_plus", [](std::uint64_t a, std::uint64_t b) { return pretty_term(church_plus(a, b)); });
    m.def("church_mult", [](std::uint64_t a, std::uint64_t b) { return pretty_term(church_mult(a, b)); });
    m.def("church_fact", [](std::uint64_t n) { return pretty_term(church_fact(n)); });
    m.def(
        "gen_random", [](std::uint64_t seed, std::size_t size) { return pretty_term(gen_random(seed, size)); },
        py::arg("seed"), py::arg("size"));
    m.def("bench", &bench, py::arg("groups"), py::arg("impls") = py::none(), py::arg("seed") = 0,
          py::arg("terms") = 100, py::arg("warmup") = 2, py::arg("measured") = 5, py::arg("fuel") = py::none(),
          "Run the benchmark harness and return one dict per row.");
}
