#pragma once

// Core of the foil: names, scopes, binders, and substitutions.
//
// Scope indices are not tracked in the C++ types. Instead every operation that
// relies on a scope relationship (extension, distinctness, membership) checks
// it at runtime when debug scope checks are enabled; see debug_scopes_enabled().
// None of the checks change results, so disabling them is always sound for
// well-scoped inputs.

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scopefoil/error.hpp"
#include "scopefoil/intmap.hpp"

namespace scopefoil {

using RawName = std::uint64_t;

/// Debug scope checks are on by default in builds without NDEBUG. The
/// SCOPEFOIL_DEBUG_SCOPES environment variable (1/0) overrides the default.
[[nodiscard]] bool debug_scopes_enabled() noexcept;
void set_debug_scopes(bool enabled) noexcept;

/// Throws ScopeViolation with `message` when debug checks are on and `ok` is false.
inline void check_scope(bool ok, const char* message) {
    if (!ok && debug_scopes_enabled()) {
        throw ScopeViolation(message);
    }
}

struct Name {
    RawName raw = 0;

    friend constexpr bool operator==(Name, Name) = default;
    friend constexpr auto operator<=>(Name, Name) = default;
};

/// A binding occurrence. Created against an outer scope, it evidences the
/// inner scope `outer ∪ {raw}`.
struct NameBinder {
    RawName raw = 0;

    friend constexpr bool operator==(NameBinder, NameBinder) = default;
};

class Scope {
public:
    Scope() = default;

    static Scope from_members(const std::vector<RawName>& members);

    [[nodiscard]] bool contains(RawName raw) const noexcept { return members_.contains(raw); }
    [[nodiscard]] bool contains(Name name) const noexcept { return contains(name.raw); }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] bool empty() const noexcept { return members_.empty(); }
    [[nodiscard]] std::optional<RawName> max_raw() const noexcept { return max_raw_; }
    /// Members in increasing order.
    [[nodiscard]] std::vector<RawName> members() const { return members_.keys(); }

    /// Adds `raw` without any distinctness check. Prefer extend_scope().
    [[nodiscard]] Scope with(RawName raw) const;

    /// True when every member of `this` is a member of `other`.
    [[nodiscard]] bool subset_of(const Scope& other) const;

    friend bool operator==(const Scope& a, const Scope& b);

private:
    struct Unit {};
    IntMap<Unit> members_;
    std::optional<RawName> max_raw_;
};

/// 0 for the empty scope, otherwise one past the largest member. Gaps are never reused.
[[nodiscard]] inline RawName fresh_raw_name(const Scope& scope) noexcept {
    const auto max = scope.max_raw();
    return max ? *max + 1 : 0;
}

/// A binder for a name absent from `scope`. The binder must only be used
/// within the scope produced by extend_scope(binder, scope).
[[nodiscard]] inline NameBinder fresh_binder(const Scope& scope) noexcept {
    return NameBinder{fresh_raw_name(scope)};
}

/// Rapier rule: reuse `name` when it is not in `scope`, otherwise pick a fresh one.
[[nodiscard]] inline NameBinder with_refreshed(const Scope& scope, Name name) noexcept {
    return scope.contains(name) ? fresh_binder(scope) : NameBinder{name.raw};
}

[[nodiscard]] constexpr Name name_of(NameBinder binder) noexcept { return Name{binder.raw}; }

/// The inner scope of `binder`. Asserts distinctness in debug mode.
[[nodiscard]] inline Scope extend_scope(NameBinder binder, const Scope& scope) {
    check_scope(!scope.contains(binder.raw), "extend_scope: binder already in scope");
    return scope.with(binder.raw);
}

/// Moves a value into an extended scope. Identity on the representation.
template <typename T>
[[nodiscard]] const T& sink(const T& value) noexcept {
    return value;
}

/// Checked variant of sink(): asserts that `to` extends `from` in debug mode.
template <typename T>
[[nodiscard]] const T& sink(const T& value, const Scope& from, const Scope& to) {
    check_scope(from.subset_of(to), "sink: target scope does not extend source scope");
    return value;
}

/// Expression types usable in a Subst provide a variable injection.
template <typename E>
concept VarInjectable = requires(Name n) {
    { E::var(n) } -> std::convertible_to<E>;
};

/// Finite map from raw names to expressions. Unmapped names are sent to the
/// variable injection of the expression type.
template <VarInjectable E>
class Subst {
public:
    Subst() = default;

    [[nodiscard]] const IntMap<E>& env() const noexcept { return env_; }

    friend Subst<E> add_subst(const Subst<E>& subst, NameBinder binder, E expr) {
        Subst<E> out;
        out.env_ = subst.env_.insert(binder.raw, std::move(expr));
        return out;
    }

private:
    IntMap<E> env_;
};

template <VarInjectable E>
[[nodiscard]] Subst<E> identity_subst() {
    return Subst<E>{};
}

template <VarInjectable E>
[[nodiscard]] E lookup_subst(const Subst<E>& subst, Name name) {
    if (const E* hit = subst.env().find(name.raw)) {
        return *hit;
    }
    return E::var(name);
}

/// add_subst(subst, binder, Var name). The entry is always stored, even when
/// binder and name coincide.
template <VarInjectable E>
[[nodiscard]] Subst<E> add_rename(const Subst<E>& subst, NameBinder binder, Name name) {
    return add_subst(subst, binder, E::var(name));
}

/// Sinking a substitution changes only its output scope index.
template <VarInjectable E>
[[nodiscard]] const Subst<E>& sink_subst(const Subst<E>& subst) noexcept {
    return subst;
}

// Canonical byte encoding helpers shared by every term encoder.
namespace encoding {

inline void put_varint(std::string& out, std::uint64_t value) {
    while (value >= 0x80) {
        out.push_back(static_cast<char>((value & 0x7f) | 0x80));
        value >>= 7;
    }
    out.push_back(static_cast<char>(value));
}

inline void put_tag(std::string& out, std::uint8_t tag) { out.push_back(static_cast<char>(tag)); }

}  // namespace encoding

/// Encodes a substitution as its entry count followed by (key, expression)
/// pairs in increasing key order. `encode_expr` appends one expression.
template <VarInjectable E, typename Encoder>
void encode_subst(std::string& out, const Subst<E>& subst, Encoder&& encode_expr) {
    encoding::put_varint(out, subst.env().size());
    subst.env().for_each([&](RawName key, const E& expr) {
        encoding::put_varint(out, key);
        encode_expr(out, expr);
    });
}

}  // namespace scopefoil
