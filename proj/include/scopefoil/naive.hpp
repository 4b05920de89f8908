#pragma once

// Naive (string-named) λΠ syntax: the shape a parser produces, with no scope
// information. Identifiers are not checked against any scope here.

#include <compare>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace scopefoil {

struct VarIdent {
    std::string text;

    friend bool operator==(const VarIdent&, const VarIdent&) = default;
    friend auto operator<=>(const VarIdent&, const VarIdent&) = default;
};

/// A letter followed by letters, digits, '_' or '\''. Keywords are excluded.
[[nodiscard]] bool is_valid_ident(std::string_view text);
[[nodiscard]] bool is_keyword(std::string_view text);

class NaivePattern {
public:
    struct Wildcard {
        friend bool operator==(const Wildcard&, const Wildcard&) = default;
    };
    struct Var {
        VarIdent ident;
        friend bool operator==(const Var&, const Var&) = default;
    };
    struct Pair;
    using Node = std::variant<Wildcard, Var, Pair>;

    static NaivePattern wildcard();
    static NaivePattern var(VarIdent ident);
    static NaivePattern pair(NaivePattern left, NaivePattern right);

    [[nodiscard]] const Node& node() const noexcept;

    friend bool operator==(const NaivePattern& a, const NaivePattern& b);

private:
    explicit NaivePattern(Node node);
    std::shared_ptr<const Node> node_;
};

struct NaivePattern::Pair {
    NaivePattern left;
    NaivePattern right;
    friend bool operator==(const Pair&, const Pair&) = default;
};

inline const NaivePattern::Node& NaivePattern::node() const noexcept { return *node_; }

/// Identifiers bound by `pattern`, left to right.
[[nodiscard]] std::vector<VarIdent> pattern_idents(const NaivePattern& pattern);

class NaiveTerm;

/// A term under the binders of the enclosing constructor's pattern.
struct NaiveScopedTerm;

class NaiveTerm {
public:
    struct Var {
        VarIdent ident;
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

    static NaiveTerm var(VarIdent ident);
    static NaiveTerm var(std::string text) { return var(VarIdent{std::move(text)}); }
    static NaiveTerm pair(NaiveTerm left, NaiveTerm right);
    static NaiveTerm first(NaiveTerm term);
    static NaiveTerm second(NaiveTerm term);
    static NaiveTerm app(NaiveTerm fun, NaiveTerm arg);
    static NaiveTerm lam(NaivePattern pattern, NaiveTerm body);
    static NaiveTerm pi(NaivePattern pattern, NaiveTerm domain, NaiveTerm codomain);
    static NaiveTerm universe();

    [[nodiscard]] const Node& node() const noexcept;

    template <typename T>
    [[nodiscard]] const T* as() const noexcept;

    friend bool operator==(const NaiveTerm& a, const NaiveTerm& b);

private:
    explicit NaiveTerm(Node node);
    std::shared_ptr<const Node> node_;
};

struct NaiveScopedTerm {
    NaiveTerm term;
    friend bool operator==(const NaiveScopedTerm&, const NaiveScopedTerm&) = default;
};

struct NaiveTerm::Pair {
    NaiveTerm left;
    NaiveTerm right;
    friend bool operator==(const Pair&, const Pair&) = default;
};
struct NaiveTerm::First {
    NaiveTerm term;
    friend bool operator==(const First&, const First&) = default;
};
struct NaiveTerm::Second {
    NaiveTerm term;
    friend bool operator==(const Second&, const Second&) = default;
};
struct NaiveTerm::App {
    NaiveTerm fun;
    NaiveTerm arg;
    friend bool operator==(const App&, const App&) = default;
};
struct NaiveTerm::Lam {
    NaivePattern pattern;
    NaiveScopedTerm body;
    friend bool operator==(const Lam&, const Lam&) = default;
};
struct NaiveTerm::Pi {
    NaivePattern pattern;
    NaiveTerm domain;
    NaiveScopedTerm codomain;
    friend bool operator==(const Pi&, const Pi&) = default;
};

inline const NaiveTerm::Node& NaiveTerm::node() const noexcept { return *node_; }

template <typename T>
const T* NaiveTerm::as() const noexcept {
    return std::get_if<T>(node_.get());
}

/// Free identifiers of `term`, sorted and deduplicated.
[[nodiscard]] std::vector<VarIdent> free_idents(const NaiveTerm& term);

[[nodiscard]] std::size_t term_size(const NaiveTerm& term);

struct SourcePos {
    int line = 1;
    int column = 1;
    friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

struct Command {
    enum class Kind { Check, Compute };
    Kind kind = Kind::Compute;
    NaiveTerm term;
    NaiveTerm type;
    SourcePos pos;

    friend bool operator==(const Command& a, const Command& b) {
        return a.kind == b.kind && a.term == b.term && a.type == b.type;
    }
};

struct Program {
    std::vector<Command> commands;
    friend bool operator==(const Program&, const Program&) = default;
};

}  // namespace scopefoil

template <>
struct std::hash<scopefoil::VarIdent> {
    std::size_t operator()(const scopefoil::VarIdent& ident) const noexcept {
        return std::hash<std::string>{}(ident.text);
    }
};
