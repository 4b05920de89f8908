// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "scopefoil/bench.hpp"
#include "scopefoil/nbe.hpp"
#include "scopefoil/syntax.hpp"
#include "support/support.hpp"

using namespace scopefoil;
using scopefoil::testing::Rng;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> check;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

Outcome capture_avoidance() {
    const NaiveTerm term = parse_term("(lam x . lam y . x) y");
    const DBTerm expected = to_debruijn(parse_term("lam z . y"));
    const auto r = scopefoil::testing::normalize_five_ways(term);
    const std::vector<std::pair<const char*, const DBTerm*>> all = {
        {"named", &r.named}, {"debruijn", &r.debruijn}, {"direct", &r.direct}, {"free", &r.free}, {"nbe", &r.nbe}};
    for (const auto& [name, result] : all) {
        if (!alpha_eq(*result, expected)) {
            return fail(std::string(name) + " gave " + scopefoil::testing::describe(*result));
        }
    }
    return {true, "all five give " + scopefoil::testing::describe(r.direct)};
}

Outcome differential() {
    const auto corpus = scopefoil::testing::differential_corpus();
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto results = scopefoil::testing::normalize_five_ways(corpus[i]);
        if (auto problem = scopefoil::testing::five_way_disagreement(results)) {
            return fail("term " + std::to_string(i) + " " + pretty_term(corpus[i]) + ": " + *problem);
        }
    }
    return {true, std::to_string(corpus.size()) + " terms, zero mismatches"};
}

Outcome sink_identity() {
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
        const Scope from = Scope::from_members({0, 2, 5});
        const Scope to = from.with(7).with(8);
        const DirectTerm term = scopefoil::testing::random_direct_term(rng, from, 1 + rng.below(40), i % 2 == 0);
        if (encode(sink(term, from, to)) != encode(term) || encode(sink(term)) != encode(term)) {
            return fail("direct term " + std::to_string(i) + " changed under sink");
        }
        if (i % 2 == 0) {
            const FreeTerm free = direct_to_free(term);
            if (encode(sink_ast(free, from, to)) != encode(free)) {
                return fail("free term " + std::to_string(i) + " changed under sink");
            }
        }
    }
    return {true, "200 terms byte-identical"};
}

Outcome refresh_reuse() {
    int cases = 0;
    for (unsigned mask = 0; mask < 256; ++mask) {
        std::vector<RawName> members;
        for (RawName raw = 0; raw < 8; ++raw) {
            if ((mask >> raw) & 1U) {
                members.push_back(raw);
            }
        }
        const Scope scope = Scope::from_members(members);
        for (RawName n = 0; n < 8; ++n) {
            ++cases;
            const NameBinder binder = with_refreshed(scope, Name{n});
            const bool reused = binder.raw == n;
            if (reused == scope.contains(n) || scope.contains(binder.raw)) {
                return fail("mask " + std::to_string(mask) + ", name " + std::to_string(n));
            }
        }
    }
    return {cases == 2048, std::to_string(cases) + " cases"};
}

Outcome identity_substitution() {
    Rng rng(5);
    const Scope scope = Scope::from_members({0, 1, 2});
    std::map<std::string, DirectTerm> distinct;
    while (distinct.size() < 200) {
        DirectTerm term = scopefoil::testing::random_direct_term(rng, scope, 2 + rng.below(30), true);
        distinct.emplace(encode(term), std::move(term));
    }
    for (const auto& [bytes, term] : distinct) {
        if (!(subst_direct(scope, identity_subst<DirectTerm>(), term) == term)) {
            return fail("direct: " + pretty_term(from_foil_term(term)));
        }
        const FreeTerm free = direct_to_free(term);
        if (!(substitute(scope, identity_subst<FreeTerm>(), free) == free)) {
            return fail("free: " + pretty_term(from_foil_term(term)));
        }
    }
    return {true, "200 distinct terms, direct and free"};
}

bool same_shape(const Pattern& a, const Pattern& b) {
    if (a.node().index() != b.node().index()) {
        return false;
    }
    if (const auto* pa = std::get_if<Pattern::Pair>(&a.node())) {
        const auto& pb = std::get<Pattern::Pair>(b.node());
        return same_shape(pa->left, pb.left) && same_shape(pa->right, pb.right);
    }
    return true;
}

std::string subst_bytes(const DirectSubst& subst) {
    std::string out;
    encode_subst(out, subst, [](std::string& o, const DirectTerm& t) { encode_to(o, t); });
    return out;
}

Outcome pattern_laws() {
    Rng rng(6);
    int checked = 0;
    for (int i = 0; i < 3000; ++i) {
        std::vector<RawName> members;
        for (RawName raw = 0; raw < 12; ++raw) {
            if (rng.chance(40)) {
                members.push_back(raw);
            }
        }
        const Scope scope = Scope::from_members(members);
        DirectSubst subst;
        for (RawName raw : members) {
            if (rng.chance(30)) {
                subst = add_subst(subst, NameBinder{raw}, DirectTerm::universe());
            }
        }
        const Pattern pattern = i % 10 == 0 ? Pattern::wildcard() : scopefoil::testing::random_pattern(rng, 4, 16);
        if (scopefoil::testing::pattern_depth(pattern) > 4) {
            return fail("generator exceeded depth 4");
        }
        const auto result = with_pattern(scope, pattern, subst);
        const std::size_t binders = names_of_pattern(pattern).size();
        if (!same_shape(pattern, result.pattern)) {
            return fail("shape changed for case " + std::to_string(i));
        }
        if (result.scope.size() != scope.size() + binders || !scope.subset_of(result.scope)) {
            return fail("scope grew wrongly for case " + std::to_string(i));
        }
        if (std::holds_alternative<Pattern::Wildcard>(pattern.node())) {
            if (!(result.scope == scope) || subst_bytes(result.subst) != subst_bytes(subst) ||
                !result.subst.env().same_root(subst.env())) {
                return fail("wildcard changed scope or substitution in case " + std::to_string(i));
            }
        }
        ++checked;
    }
    return {true, std::to_string(checked) + " patterns of depth <= 4"};
}

Outcome church_arithmetic() {
    for (const auto& c : scopefoil::testing::church_corpus()) {
        const auto r = scopefoil::testing::normalize_five_ways(c.term);
        const DBTerm expected = to_debruijn(gen_church(c.expected));
        for (const DBTerm* result : {&r.named, &r.debruijn, &r.direct, &r.free, &r.nbe}) {
            if (!alpha_eq(*result, expected)) {
                return fail(c.label + " gave " + scopefoil::testing::describe(*result));
            }
        }
    }
    return {true, "plus(2,2)=4, mult(3,3)=9, fact(4)=24 in all five"};
}

Outcome round_trips() {
    Rng rng(8);
    for (int i = 0; i < 500; ++i) {
        const NaiveTerm term = scopefoil::testing::random_surface_term(rng, 1 + rng.below(30));
        const std::string text = pretty_term(term);
        if (!(parse_term(text) == term)) {
            return fail("parse(pretty) differs for " + text);
        }
    }
    for (int i = 0; i < 200; ++i) {
        const NaiveTerm term = scopefoil::testing::random_closed_term(rng, 1 + rng.below(30));
        if (!alpha_eq(from_foil_term(to_foil_closed(term)), term)) {
            return fail("from_foil(to_foil) not alpha-equal for " + pretty_term(term));
        }
    }
    return {true, "500 parse/pretty, 200 foil round-trips"};
}

Outcome bench_harness() {
    const auto csv = std::filesystem::temp_directory_path() / "scopefoil_acceptance_bench.csv";
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in;
    const int code = cli::execute({"bench", "--group", "nf", "--group", "random15", "--seed", "42", "--terms", "20",
                                   "--csv", csv.string()},
                                  out, err, in);
    if (code != 0) {
        return fail("exit " + std::to_string(code) + ": " + err.str());
    }
    std::ifstream file(csv);
    std::string line;
    std::getline(file, line);
    if (line != "group,impl,term,median_ns,hash") {
        return fail("bad header: " + line);
    }
    std::map<std::string, std::string> hash_of;
    std::size_t rows = 0;
    while (std::getline(file, line)) {
        ++rows;
        std::vector<std::string> fields;
        std::stringstream split(line);
        for (std::string field; std::getline(split, field, ',');) {
            fields.push_back(field);
        }
        if (fields.size() != 5) {
            return fail("malformed row: " + line);
        }
        const std::string key = fields[0] + "/" + fields[2];
        const auto [it, inserted] = hash_of.emplace(key, fields[4]);
        if (!inserted && it->second != fields[4]) {
            return fail("hash mismatch for " + key);
        }
    }
    std::filesystem::remove(csv);
    if (rows != 5 * (1 + 20)) {
        return fail(std::to_string(rows) + " data rows");
    }
    std::cout << out.str();
    return {true, "1 header + " + std::to_string(rows) + " rows, hashes agree"};
}

Outcome nbe_equivalence() {
    std::size_t checked = 0;
    std::vector<NaiveTerm> terms = scopefoil::testing::differential_corpus();
    for (const auto& c : scopefoil::testing::church_corpus()) {
        terms.push_back(c.term);
    }
    for (const NaiveTerm& term : terms) {
        const FreeTerm free = direct_to_free(to_foil_closed(term));
        if (!alpha_eq(nf_nbe(Scope{}, free), nf_free(Scope{}, free))) {
            return fail("disagreement on " + pretty_term(term));
        }
        ++checked;
    }
    return {true, std::to_string(checked) + " terms"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "capture avoidance", 1, capture_avoidance},
        {2, "differential normalization", 120, differential},
        {3, "sink identity", 10, sink_identity},
        {4, "refresh reuse law", 1, refresh_reuse},
        {5, "identity substitution", 10, identity_substitution},
        {6, "pattern laws", 10, pattern_laws},
        {7, "church arithmetic", 5, church_arithmetic},
        {8, "round trips", 30, round_trips},
        {9, "benchmark harness", 300, bench_harness},
        {10, "nbe equivalence", 120, nbe_equivalence},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (outcome.pass && seconds > c.limit_seconds) {
            outcome = fail(outcome.detail + "; over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit");
        }
        failures += outcome.pass ? 0 : 1;
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << (outcome.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << outcome.detail
                  << " (" << timing << ")" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
