#pragma once

// Reference implementations used to cross-check the foil-based ones:
// named normalization with free-variable-driven renaming, de Bruijn
// normalization, and alpha-equivalence through de Bruijn terms.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "scopefoil/bridge.hpp"
#include "scopefoil/direct.hpp"
#include "scopefoil/error.hpp"
#include "scopefoil/lambda_pi_free.hpp"
#include "scopefoil/naive.hpp"

namespace scopefoil {

/// Shape of a pattern with the identifiers erased. Variables are indexed
/// left to right; the rightmost one is the innermost binder (index 0).
class DBPattern {
public:
    enum class Kind { Wildcard, Var, Pair };

    static DBPattern wildcard();
    static DBPattern var();
    static DBPattern pair(DBPattern left, DBPattern right);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] const DBPattern& left() const { return children_->first; }
    [[nodiscard]] const DBPattern& right() const { return children_->second; }
    /// Number of variables bound.
    [[nodiscard]] std::size_t arity() const noexcept { return arity_; }

    friend bool operator==(const DBPattern& a, const DBPattern& b);

private:
    Kind kind_ = Kind::Wildcard;
    std::size_t arity_ = 0;
    std::shared_ptr<const std::pair<DBPattern, DBPattern>> children_;
};

class DBTerm {
public:
    struct BVar {
        std::size_t index;
        friend bool operator==(const BVar&, const BVar&) = default;
    };
    struct FVar {
        VarIdent ident;
        friend bool operator==(const FVar&, const FVar&) = default;
    };
    struct App;
    struct Lam;
    struct Pi;
    struct Pair;
    struct First;
    struct Second;
    struct Universe {
        friend bool operator==(const Universe&, const Universe&) = default;
    };
    using Node = std::variant<BVar, FVar, App, Lam, Pi, Pair, First, Second, Universe>;

    static DBTerm bvar(std::size_t index);
    static DBTerm fvar(VarIdent ident);
    static DBTerm app(DBTerm fun, DBTerm arg);
    static DBTerm lam(DBPattern pattern, DBTerm body);
    static DBTerm lam(DBTerm body) { return lam(DBPattern::var(), std::move(body)); }
    static DBTerm pi(DBPattern pattern, DBTerm domain, DBTerm codomain);
    static DBTerm pair(DBTerm left, DBTerm right);
    static DBTerm first(DBTerm term);
    static DBTerm second(DBTerm term);
    static DBTerm universe();

    [[nodiscard]] const Node& node() const noexcept;

    template <typename T>
    [[nodiscard]] const T* as() const noexcept;

    friend bool operator==(const DBTerm& a, const DBTerm& b);

private:
    explicit DBTerm(Node node);
    std::shared_ptr<const Node> node_;
};

struct DBTerm::App {
    DBTerm fun;
    DBTerm arg;
    friend bool operator==(const App&, const App&) = default;
};
struct DBTerm::Lam {
    DBPattern pattern;
    DBTerm body;
    friend bool operator==(const Lam&, const Lam&) = default;
};
struct DBTerm::Pi {
    DBPattern pattern;
    DBTerm domain;
    DBTerm codomain;
    friend bool operator==(const Pi&, const Pi&) = default;
};
struct DBTerm::Pair {
    DBTerm left;
    DBTerm right;
    friend bool operator==(const Pair&, const Pair&) = default;
};
struct DBTerm::First {
    DBTerm term;
    friend bool operator==(const First&, const First&) = default;
};
struct DBTerm::Second {
    DBTerm term;
    friend bool operator==(const Second&, const Second&) = default;
};

inline const DBTerm::Node& DBTerm::node() const noexcept { return *node_; }

template <typename T>
const T* DBTerm::as() const noexcept {
    return std::get_if<T>(node_.get());
}

/// Normal-order normalization by capture-avoiding substitution on named
/// terms. Binders are renamed only when they would capture a free variable.
[[nodiscard]] NaiveTerm nf_named(const NaiveTerm& term, StepBudget& budget);
[[nodiscard]] NaiveTerm nf_named(const NaiveTerm& term);

/// Innermost binder gets index 0; unbound identifiers become FVar.
[[nodiscard]] DBTerm to_debruijn(const NaiveTerm& term);
/// Bound raw names become indices; free raw names become FVar(naming(raw)).
[[nodiscard]] DBTerm to_debruijn(const DirectTerm& term, const RawNaming& naming);
[[nodiscard]] DBTerm to_debruijn(const DirectTerm& term);
[[nodiscard]] DBTerm to_debruijn(const FreeTerm& term, const RawNaming& naming);
[[nodiscard]] DBTerm to_debruijn(const FreeTerm& term);

/// Binder names are "x<depth>", primed as needed to avoid free identifiers.
[[nodiscard]] NaiveTerm from_debruijn(const DBTerm& term);

/// Normal-order normalization with shifting and substitution.
[[nodiscard]] DBTerm nf_debruijn(const DBTerm& term, StepBudget& budget);
[[nodiscard]] DBTerm nf_debruijn(const DBTerm& term);

[[nodiscard]] bool alpha_eq(const DBTerm& a, const DBTerm& b);
[[nodiscard]] bool alpha_eq(const NaiveTerm& a, const NaiveTerm& b);
[[nodiscard]] bool alpha_eq(const DirectTerm& a, const DirectTerm& b);
[[nodiscard]] bool alpha_eq(const FreeTerm& a, const FreeTerm& b);

/// Canonical byte encoding and its 64-bit FNV-1a hash.
[[nodiscard]] std::string encode(const DBTerm& term);
[[nodiscard]] std::uint64_t canonical_hash(const DBTerm& term);

[[nodiscard]] std::size_t term_size(const DBTerm& term);

}  // namespace scopefoil
