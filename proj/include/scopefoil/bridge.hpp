#pragma once

// Conversions between the naive λΠ syntax and the scope-safe direct
// representation.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "scopefoil/direct.hpp"
#include "scopefoil/naive.hpp"

namespace scopefoil {

/// Resolves free identifiers. Returning nullopt reports the identifier as unbound.
using Renaming = std::function<std::optional<Name>(const VarIdent&)>;

/// The renaming for closed terms: every identifier is unbound.
[[nodiscard]] Renaming closed_renaming();

/// Resolves identifiers through an explicit table.
[[nodiscard]] Renaming table_renaming(std::vector<std::pair<VarIdent, Name>> table);

/// Bindings introduced by a pattern, in binding order.
using IdentBindings = std::vector<std::pair<VarIdent, Name>>;

struct FoilPattern {
    Pattern pattern;
    IdentBindings bindings;
    /// Inner scope of `pattern`.
    Scope scope;
};

/// Allocates a fresh binder for each variable of `pattern`, left to right.
/// Throws DuplicateBinder if an identifier occurs twice.
[[nodiscard]] FoilPattern to_foil_pattern(const Scope& scope, const NaivePattern& pattern);

/// Converts a naive term whose free identifiers `rename` resolves into
/// `scope`. Binders are allocated with fresh_binder() against the scope
/// accumulated so far, and identifiers resolve innermost binder first.
/// Throws UnboundVariable or DuplicateBinder.
[[nodiscard]] DirectTerm to_foil_term(const Renaming& rename, const Scope& scope, const NaiveTerm& term);

/// Converts a closed naive term into the empty scope.
[[nodiscard]] DirectTerm to_foil_closed(const NaiveTerm& term);

/// Default naming scheme for raw names: "x" followed by the number. May
/// collide with user identifiers; only use it after original names are gone.
[[nodiscard]] VarIdent default_ident(RawName raw);

using RawNaming = std::function<VarIdent(RawName)>;

[[nodiscard]] NaivePattern from_foil_pattern(const RawNaming& naming, const Pattern& pattern);
[[nodiscard]] NaiveTerm from_foil_term(const RawNaming& naming, const DirectTerm& term);
[[nodiscard]] NaiveTerm from_foil_term(const DirectTerm& term);

}  // namespace scopefoil
