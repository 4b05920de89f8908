#pragma once

// Patterns: bundles of zero or more binders, chaining scope extensions left to right.

#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "scopefoil/foil.hpp"

namespace scopefoil {

class Pattern {
public:
    struct Wildcard {
        friend bool operator==(const Wildcard&, const Wildcard&) = default;
    };
    struct Var {
        NameBinder binder;
        friend bool operator==(const Var&, const Var&) = default;
    };
    struct Pair;
    using Node = std::variant<Wildcard, Var, Pair>;

    /// The wildcard pattern.
    Pattern();

    static Pattern wildcard();
    static Pattern var(NameBinder binder);
    static Pattern pair(Pattern left, Pattern right);

    [[nodiscard]] const Node& node() const noexcept;

    friend bool operator==(const Pattern& a, const Pattern& b);

private:
    explicit Pattern(Node node);
    std::shared_ptr<const Node> node_;
};

struct Pattern::Pair {
    Pattern left;
    Pattern right;
    friend bool operator==(const Pair&, const Pair&) = default;
};

inline const Pattern::Node& Pattern::node() const noexcept { return *node_; }

/// Binder raw names, left to right.
[[nodiscard]] std::vector<RawName> names_of_pattern(const Pattern& pattern);

/// `scope` extended with every binder of `pattern`, in order.
[[nodiscard]] Scope extend_scope_pattern(const Pattern& pattern, const Scope& scope);

/// Zero-cost renaming evidence: sinking never changes raw names.
struct IdentityRenaming {
    [[nodiscard]] constexpr Name operator()(Name name) const noexcept { return name; }
};

/// Sinks a pattern into an extended outer scope. The representation is unchanged.
[[nodiscard]] inline std::pair<Pattern, IdentityRenaming> extend_renaming(const Pattern& pattern) {
    return {pattern, IdentityRenaming{}};
}

/// Appends the canonical encoding of `pattern`.
void encode_pattern(std::string& out, const Pattern& pattern);

template <VarInjectable E>
struct RefreshedPattern {
    Pattern pattern;
    Subst<E> subst;
    Scope scope;
};

/// Refreshes every binder of `pattern` against the accumulated scope, left to
/// right, and extends `subst` with a renaming from each old binder to its
/// replacement. Returns the refreshed pattern, the extended substitution, and
/// the inner scope of the refreshed pattern.
template <VarInjectable E>
[[nodiscard]] RefreshedPattern<E> with_pattern(const Scope& scope, const Pattern& pattern,
                                               const Subst<E>& subst) {
    return std::visit(
        [&](const auto& node) -> RefreshedPattern<E> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Pattern::Wildcard>) {
                return {pattern, sink_subst(subst), scope};
            } else if constexpr (std::is_same_v<T, Pattern::Var>) {
                const NameBinder fresh = with_refreshed(scope, name_of(node.binder));
                return {Pattern::var(fresh),
                        add_rename(sink_subst(subst), node.binder, name_of(fresh)),
                        extend_scope(fresh, scope)};
            } else {
                auto left = with_pattern(scope, node.left, subst);
                auto right = with_pattern(left.scope, node.right, left.subst);
                return {Pattern::pair(std::move(left.pattern), std::move(right.pattern)),
                        std::move(right.subst), std::move(right.scope)};
            }
        },
        pattern.node());
}

}  // namespace scopefoil
