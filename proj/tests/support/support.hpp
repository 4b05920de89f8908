#pragma once

// Seeded generators and cross-implementation helpers shared by the unit
// tests and the acceptance runner.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "scopefoil/bridge.hpp"
#include "scopefoil/direct.hpp"
#include "scopefoil/lambda_pi_free.hpp"
#include "scopefoil/naive.hpp"
#include "scopefoil/oracles.hpp"

namespace scopefoil::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, n).
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }
    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::mt19937_64 engine_;
};

/// Any term of the surface grammar, free identifiers allowed. Binders may
/// shadow; patterns never repeat an identifier. `budget` bounds the node count.
NaiveTerm random_surface_term(Rng& rng, std::size_t budget);

/// Closed terms of the full grammar (patterns included), shadowing allowed.
NaiveTerm random_closed_term(Rng& rng, std::size_t budget);

/// A direct term whose free names are in `scope` and whose binders are never
/// already in scope. Raw names of binders are picked with gaps. With
/// `single_binders` every pattern is a variable, so the term converts to the
/// free representation.
DirectTerm random_direct_term(Rng& rng, const Scope& scope, std::size_t budget, bool single_binders);

/// Pattern of depth at most `max_depth` with distinct binders drawn from
/// [0, name_range). Binders may collide with any scope.
Pattern random_pattern(Rng& rng, std::size_t max_depth, RawName name_range);

std::size_t pattern_depth(const Pattern& pattern);

/// The five normal forms of one term, each read back as a de Bruijn term.
/// Free identifiers of the input stay free identifiers of the output.
struct FiveWay {
    DBTerm named;
    DBTerm debruijn;
    DBTerm direct;
    DBTerm free;
    DBTerm nbe;
};

FiveWay normalize_five_ways(const NaiveTerm& term);

/// Empty when all five agree, otherwise a description of the first disagreement.
std::optional<std::string> five_way_disagreement(const FiveWay& results);

/// 500 closed pure lambda terms of sizes 1..15 from a fixed seed.
std::vector<NaiveTerm> differential_corpus();

struct ChurchCase {
    std::string label;
    NaiveTerm term;
    std::uint64_t expected;
};

/// plus(2,2)=4, mult(3,3)=9, fact(4)=24.
std::vector<ChurchCase> church_corpus();

std::string describe(const DBTerm& term);

}  // namespace scopefoil::testing
