#pragma once

// The free foil: scope-safe syntax freely generated from a two-sorted
// signature, with one generic sinking and one generic capture-avoiding
// substitution shared by every language built on it.
//
// A signature is a class template `Sig<Scoped, Term>` describing one layer of
// syntax, where `Scoped` marks children under a binder and `Term` marks plain
// children. The only obligation it carries is a `map_node(node, on_scoped,
// on_term)` function (found by ADL) that rebuilds the node with `on_scoped`
// applied to every scoped child and `on_term` to every plain child, in
// left-to-right order, preserving the constructor.

#include <concepts>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "scopefoil/foil.hpp"

namespace scopefoil {

template <template <class, class> class Sig>
class AST;

/// A child that binds exactly one name. `body` lives in the inner scope of `binder`.
template <template <class, class> class Sig>
struct ScopedAST {
    NameBinder binder;
    AST<Sig> body;

    friend bool operator==(const ScopedAST&, const ScopedAST&) = default;
};

template <template <class, class> class Sig>
class AST {
public:
    using Node = Sig<ScopedAST<Sig>, AST<Sig>>;
    struct Var {
        Name name;
        friend bool operator==(const Var&, const Var&) = default;
    };
    using Rep = std::variant<Var, Node>;

    static AST var(Name name) { return AST(Rep{std::in_place_index<0>, Var{name}}); }
    static AST node(Node node) { return AST(Rep{std::in_place_index<1>, std::move(node)}); }

    [[nodiscard]] const Var* as_var() const noexcept { return std::get_if<0>(rep_.get()); }
    [[nodiscard]] const Node* as_node() const noexcept { return std::get_if<1>(rep_.get()); }

    friend bool operator==(const AST& a, const AST& b) {
        return a.rep_ == b.rep_ || *a.rep_ == *b.rep_;
    }

private:
    explicit AST(Rep rep) : rep_(std::make_shared<const Rep>(std::move(rep))) {}
    std::shared_ptr<const Rep> rep_;
};

namespace detail {
struct Unit {
    friend bool operator==(Unit, Unit) = default;
};
}  // namespace detail

template <template <class, class> class Sig>
concept Signature = requires(const Sig<ScopedAST<Sig>, AST<Sig>>& node) {
    {
        map_node(
            node, [](const ScopedAST<Sig>&) { return detail::Unit{}; },
            [](const AST<Sig>&) { return detail::Unit{}; })
    } -> std::same_as<Sig<detail::Unit, detail::Unit>>;
};

/// Visits every child of `node` once, scoped and plain, in order.
template <template <class, class> class Sig, typename OnScoped, typename OnTerm>
void for_each_child(const typename AST<Sig>::Node& node, OnScoped&& on_scoped, OnTerm&& on_term) {
    (void)map_node(
        node,
        [&](const ScopedAST<Sig>& child) {
            on_scoped(child);
            return detail::Unit{};
        },
        [&](const AST<Sig>& child) {
            on_term(child);
            return detail::Unit{};
        });
}

/// Moves an AST into an extended scope. Identity on the representation.
template <template <class, class> class Sig>
[[nodiscard]] const AST<Sig>& sink_ast(const AST<Sig>& ast) noexcept {
    return ast;
}

/// Structural form of sinking: checks node by node that every free name is
/// in `scope` and that no binder is already in the scope it extends. Throws
/// ScopeViolation on failure.
template <template <class, class> class Sig>
void validate_ast(const Scope& scope, const AST<Sig>& ast) {
    if (const auto* var = ast.as_var()) {
        if (!scope.contains(var->name)) {
            throw ScopeViolation("name #" + std::to_string(var->name.raw) + " is not in scope");
        }
        return;
    }
    for_each_child<Sig>(
        *ast.as_node(),
        [&](const ScopedAST<Sig>& child) {
            if (scope.contains(child.binder.raw)) {
                throw ScopeViolation("binder #" + std::to_string(child.binder.raw) +
                                     " is not fresh for its scope");
            }
            validate_ast(scope.with(child.binder.raw), child.body);
        },
        [&](const AST<Sig>& child) { validate_ast(scope, child); });
}

/// Like validate_ast() but tolerates shadowing binders: only checks that the
/// free names of `ast` are in `scope`.
template <template <class, class> class Sig>
[[nodiscard]] bool free_names_within(const Scope& scope, const AST<Sig>& ast) {
    if (const auto* var = ast.as_var()) {
        return scope.contains(var->name);
    }
    bool ok = true;
    for_each_child<Sig>(
        *ast.as_node(),
        [&](const ScopedAST<Sig>& child) {
            ok = ok && free_names_within(scope.with(child.binder.raw), child.body);
        },
        [&](const AST<Sig>& child) { ok = ok && free_names_within(scope, child); });
    return ok;
}

/// Sinking with the structural check enabled in debug mode.
template <template <class, class> class Sig>
[[nodiscard]] const AST<Sig>& sink_ast(const AST<Sig>& ast, const Scope& from, const Scope& to) {
    check_scope(from.subset_of(to), "sink_ast: target scope does not extend source scope");
    if (debug_scopes_enabled() && !free_names_within(to, ast)) {
        throw ScopeViolation("sink_ast: free name outside target scope");
    }
    return ast;
}

template <template <class, class> class Sig>
using ASTSubst = Subst<AST<Sig>>;

/// Capture-avoiding substitution for any signature. Each scoped child is
/// refreshed independently against `scope` (the distinct output scope).
template <template <class, class> class Sig>
[[nodiscard]] AST<Sig> substitute(const Scope& scope, const Subst<AST<Sig>>& subst, const AST<Sig>& ast) {
    if (const auto* var = ast.as_var()) {
        return lookup_subst(subst, var->name);
    }
    return AST<Sig>::node(map_node(
        *ast.as_node(),
        [&](const ScopedAST<Sig>& child) {
            const NameBinder binder = with_refreshed(scope, name_of(child.binder));
            const auto inner_subst = add_rename(sink_subst(subst), child.binder, name_of(binder));
            const Scope inner_scope = extend_scope(binder, scope);
            return ScopedAST<Sig>{binder, substitute(inner_scope, inner_subst, child.body)};
        },
        [&](const AST<Sig>& child) { return substitute(scope, subst, child); }));
}

/// Refreshes a scoped child so that its binder is fresh for `scope`; the body
/// is renamed only when the binder changes.
template <template <class, class> class Sig>
[[nodiscard]] ScopedAST<Sig> refresh_scoped(const Scope& scope, const ScopedAST<Sig>& scoped) {
    const NameBinder binder = with_refreshed(scope, name_of(scoped.binder));
    if (binder == scoped.binder) {
        return scoped;
    }
    const auto rename = add_rename(identity_subst<AST<Sig>>(), scoped.binder, name_of(binder));
    return ScopedAST<Sig>{binder, substitute(extend_scope(binder, scope), rename, scoped.body)};
}

template <template <class, class> class Sig>
[[nodiscard]] std::size_t ast_size(const AST<Sig>& ast) {
    if (ast.as_var() != nullptr) {
        return 1;
    }
    std::size_t total = 1;
    for_each_child<Sig>(
        *ast.as_node(), [&](const ScopedAST<Sig>& child) { total += ast_size(child.body); },
        [&](const AST<Sig>& child) { total += ast_size(child); });
    return total;
}

}  // namespace scopefoil
