#pragma once

// λΠ with pairs and patterns in the foil representation, with a hand-written
// capture-avoiding substitution and normal-order evaluation.

#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "scopefoil/foil.hpp"
#include "scopefoil/pattern.hpp"

namespace scopefoil {

class DirectTerm {
public:
    struct Var {
        Name name;
        friend bool operator==(const Var&, const Var&) = default;
    };
    struct Pair;
    struct First;
    struct Second;
    struct App;
    struct Lam;
    struct Pi;
    struct Universe {
        friend bool operator==(const Universe&, const Universe&) = default;
    };
    using Node = std::variant<Var, Pair, First, Second, App, Lam, Pi, Universe>;

    static DirectTerm var(Name name);
    static DirectTerm pair(DirectTerm left, DirectTerm right);
    static DirectTerm first(DirectTerm term);
    static DirectTerm second(DirectTerm term);
    static DirectTerm app(DirectTerm fun, DirectTerm arg);
    /// `body` lives in the inner scope of `pattern`.
    static DirectTerm lam(Pattern pattern, DirectTerm body);
    /// `domain` lives in the outer scope, `codomain` in the inner scope of `pattern`.
    static DirectTerm pi(Pattern pattern, DirectTerm domain, DirectTerm codomain);
    static DirectTerm universe();

    [[nodiscard]] const Node& node() const noexcept;

    template <typename T>
    [[nodiscard]] const T* as() const noexcept;

    /// Structural equality (raw names compared as-is, not up to alpha).
    friend bool operator==(const DirectTerm& a, const DirectTerm& b);

private:
    explicit DirectTerm(Node node);
    std::shared_ptr<const Node> node_;
};

struct DirectTerm::Pair {
    DirectTerm left;
    DirectTerm right;
    friend bool operator==(const Pair&, const Pair&) = default;
};
struct DirectTerm::First {
    DirectTerm term;
    friend bool operator==(const First&, const First&) = default;
};
struct DirectTerm::Second {
    DirectTerm term;
    friend bool operator==(const Second&, const Second&) = default;
};
struct DirectTerm::App {
    DirectTerm fun;
    DirectTerm arg;
    friend bool operator==(const App&, const App&) = default;
};
struct DirectTerm::Lam {
    Pattern pattern;
    DirectTerm body;
    friend bool operator==(const Lam&, const Lam&) = default;
};
struct DirectTerm::Pi {
    Pattern pattern;
    DirectTerm domain;
    DirectTerm codomain;
    friend bool operator==(const Pi&, const Pi&) = default;
};

inline const DirectTerm::Node& DirectTerm::node() const noexcept { return *node_; }

template <typename T>
const T* DirectTerm::as() const noexcept {
    return std::get_if<T>(node_.get());
}

using DirectSubst = Subst<DirectTerm>;

/// Capture-avoiding substitution. `term` lives in the input scope of `subst`,
/// `scope` is the (distinct) output scope.
[[nodiscard]] DirectTerm subst_direct(const Scope& scope, const DirectSubst& subst,
                                      const DirectTerm& term);

/// Binds the variables of `pattern` to the matching projections of `arg`.
[[nodiscard]] DirectSubst match_pattern(const Pattern& pattern, const DirectTerm& arg,
                                        const DirectSubst& subst);

[[nodiscard]] DirectTerm whnf_direct(const Scope& scope, const DirectTerm& term,
                                     StepBudget& budget);
[[nodiscard]] DirectTerm whnf_direct(const Scope& scope, const DirectTerm& term);

/// Normal-order full normalization.
[[nodiscard]] DirectTerm nf_direct(const Scope& scope, const DirectTerm& term, StepBudget& budget);
[[nodiscard]] DirectTerm nf_direct(const Scope& scope, const DirectTerm& term);

/// True when the head of `term` is not a beta or projection redex.
[[nodiscard]] bool is_head_normal(const DirectTerm& term);
/// True when no subterm is a redex.
[[nodiscard]] bool is_normal(const DirectTerm& term);

/// Free raw names of `term`, in increasing order.
[[nodiscard]] Scope free_names(const DirectTerm& term);

/// Full traversal checking that every free name is in `scope` and that no
/// pattern binds the same name twice. Throws ScopeViolation on failure
/// regardless of whether debug checks are enabled.
void validate_scoped(const Scope& scope, const DirectTerm& term);

/// Stronger condition satisfied by freshly converted terms: additionally every
/// binder is absent from the scope it extends (no shadowing anywhere).
[[nodiscard]] bool is_distinct_scoped(const Scope& scope, const DirectTerm& term);

/// Canonical preorder encoding: one tag byte per node, varint raw names.
[[nodiscard]] std::string encode(const DirectTerm& term);
void encode_to(std::string& out, const DirectTerm& term);

[[nodiscard]] std::size_t term_size(const DirectTerm& term);

}  // namespace scopefoil
