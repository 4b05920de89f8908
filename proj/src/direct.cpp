#include "scopefoil/direct.hpp"

namespace scopefoil {

namespace {

template <typename... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

enum Tag : std::uint8_t {
    kVar = 0x01,
    kPair = 0x02,
    kFirst = 0x03,
    kSecond = 0x04,
    kApp = 0x05,
    kLam = 0x06,
    kPi = 0x07,
    kUniverse = 0x08,
};

DirectTerm subst_rec(const Scope& scope, const DirectSubst& subst, const DirectTerm& term) {
    return std::visit(
        Overloaded{
            [&](const DirectTerm::Var& v) { return lookup_subst(subst, v.name); },
            [&](const DirectTerm::Pair& p) {
                return DirectTerm::pair(subst_rec(scope, subst, p.left),
                                        subst_rec(scope, subst, p.right));
            },
            [&](const DirectTerm::First& f) {
                return DirectTerm::first(subst_rec(scope, subst, f.term));
            },
            [&](const DirectTerm::Second& s) {
                return DirectTerm::second(subst_rec(scope, subst, s.term));
            },
            [&](const DirectTerm::App& a) {
                return DirectTerm::app(subst_rec(scope, subst, a.fun), subst_rec(scope, subst, a.arg));
            },
            [&](const DirectTerm::Lam& l) {
                auto inner = with_pattern(scope, l.pattern, subst);
                return DirectTerm::lam(std::move(inner.pattern),
                                       subst_rec(inner.scope, inner.subst, l.body));
            },
            [&](const DirectTerm::Pi& p) {
                auto inner = with_pattern(scope, p.pattern, subst);
                return DirectTerm::pi(std::move(inner.pattern), subst_rec(scope, subst, p.domain),
                                      subst_rec(inner.scope, inner.subst, p.codomain));
            },
            [&](const DirectTerm::Universe&) { return DirectTerm::universe(); },
        },
        term.node());
}

DirectTerm whnf_rec(const Scope& scope, DirectTerm term, StepBudget& budget) {
    while (true) {
        if (const auto* first = term.as<DirectTerm::First>()) {
            DirectTerm inner = whnf_rec(scope, first->term, budget);
            if (const auto* pair = inner.as<DirectTerm::Pair>()) {
                budget.tick();
                term = pair->left;
                continue;
            }
            return DirectTerm::first(std::move(inner));
        }
        if (const auto* second = term.as<DirectTerm::Second>()) {
            DirectTerm inner = whnf_rec(scope, second->term, budget);
            if (const auto* pair = inner.as<DirectTerm::Pair>()) {
                budget.tick();
                term = pair->right;
                continue;
            }
            return DirectTerm::second(std::move(inner));
        }
        if (const auto* app = term.as<DirectTerm::App>()) {
            DirectTerm fun = whnf_rec(scope, app->fun, budget);
            if (const auto* lam = fun.as<DirectTerm::Lam>()) {
                budget.tick();
                const DirectSubst subst = match_pattern(lam->pattern, app->arg, identity_subst<DirectTerm>());
                term = subst_rec(scope, subst, lam->body);
                continue;
            }
            return DirectTerm::app(std::move(fun), app->arg);
        }
        return term;
    }
}

struct Refreshed {
    Pattern pattern;
    Scope scope;
    DirectTerm body;
};

// Goes under a binder: the pattern is refreshed against `scope`, and the body is
// renamed only when some binder actually changed.
Refreshed refresh_binder(const Scope& scope, const Pattern& pattern, const DirectTerm& body) {
    auto inner = with_pattern(scope, pattern, identity_subst<DirectTerm>());
    if (inner.pattern == pattern) {
        return {pattern, std::move(inner.scope), body};
    }
    DirectTerm renamed = subst_rec(inner.scope, inner.subst, body);
    return {std::move(inner.pattern), std::move(inner.scope), std::move(renamed)};
}

DirectTerm nf_rec(const Scope& scope, const DirectTerm& term, StepBudget& budget) {
    const DirectTerm head = whnf_rec(scope, term, budget);
    return std::visit(
        Overloaded{
            [&](const DirectTerm::Var&) { return head; },
            [&](const DirectTerm::Universe&) { return head; },
            [&](const DirectTerm::Pair& p) {
                return DirectTerm::pair(nf_rec(scope, p.left, budget), nf_rec(scope, p.right, budget));
            },
            [&](const DirectTerm::First& f) { return DirectTerm::first(nf_rec(scope, f.term, budget)); },
            [&](const DirectTerm::Second& s) {
                return DirectTerm::second(nf_rec(scope, s.term, budget));
            },
            [&](const DirectTerm::App& a) {
                return DirectTerm::app(nf_rec(scope, a.fun, budget), nf_rec(scope, a.arg, budget));
            },
            [&](const DirectTerm::Lam& l) {
                auto [pattern, inner_scope, body] = refresh_binder(scope, l.pattern, l.body);
                return DirectTerm::lam(std::move(pattern), nf_rec(inner_scope, body, budget));
            },
            [&](const DirectTerm::Pi& p) {
                auto [pattern, inner_scope, codomain] = refresh_binder(scope, p.pattern, p.codomain);
                return DirectTerm::pi(std::move(pattern), nf_rec(scope, p.domain, budget),
                                      nf_rec(inner_scope, codomain, budget));
            },
        },
        head.node());
}

void collect_free(const DirectTerm& term, const Scope& bound, Scope& out) {
    std::visit(Overloaded{
                   [&](const DirectTerm::Var& v) {
                       if (!bound.contains(v.name) && !out.contains(v.name)) {
                           out = out.with(v.name.raw);
                       }
                   },
                   [&](const DirectTerm::Pair& p) {
                       collect_free(p.left, bound, out);
                       collect_free(p.right, bound, out);
                   },
                   [&](const DirectTerm::First& f) { collect_free(f.term, bound, out); },
                   [&](const DirectTerm::Second& s) { collect_free(s.term, bound, out); },
                   [&](const DirectTerm::App& a) {
                       collect_free(a.fun, bound, out);
                       collect_free(a.arg, bound, out);
                   },
                   [&](const DirectTerm::Lam& l) {
                       Scope inner = bound;
                       for (RawName raw : names_of_pattern(l.pattern)) {
                           inner = inner.with(raw);
                       }
                       collect_free(l.body, inner, out);
                   },
                   [&](const DirectTerm::Pi& p) {
                       collect_free(p.domain, bound, out);
                       Scope inner = bound;
                       for (RawName raw : names_of_pattern(p.pattern)) {
                           inner = inner.with(raw);
                       }
                       collect_free(p.codomain, inner, out);
                   },
                   [&](const DirectTerm::Universe&) {},
               },
               term.node());
}

Scope bind_pattern(const Scope& scope, const Pattern& pattern) {
    Scope out = scope;
    Scope own;
    for (RawName raw : names_of_pattern(pattern)) {
        if (own.contains(raw)) {
            throw ScopeViolation("pattern binds #" + std::to_string(raw) + " twice");
        }
        own = own.with(raw);
        out = out.with(raw);
    }
    return out;
}

bool distinct_rec(const Scope& scope, const DirectTerm& term);

std::optional<Scope> distinct_pattern(const Scope& scope, const Pattern& pattern) {
    Scope out = scope;
    for (RawName raw : names_of_pattern(pattern)) {
        if (out.contains(raw)) {
            return std::nullopt;
        }
        out = out.with(raw);
    }
    return out;
}

bool distinct_rec(const Scope& scope, const DirectTerm& term) {
    return std::visit(Overloaded{
                          [&](const DirectTerm::Var& v) { return scope.contains(v.name); },
                          [&](const DirectTerm::Universe&) { return true; },
                          [&](const DirectTerm::Pair& p) {
                              return distinct_rec(scope, p.left) && distinct_rec(scope, p.right);
                          },
                          [&](const DirectTerm::First& f) { return distinct_rec(scope, f.term); },
                          [&](const DirectTerm::Second& s) { return distinct_rec(scope, s.term); },
                          [&](const DirectTerm::App& a) {
                              return distinct_rec(scope, a.fun) && distinct_rec(scope, a.arg);
                          },
                          [&](const DirectTerm::Lam& l) {
                              auto inner = distinct_pattern(scope, l.pattern);
                              return inner && distinct_rec(*inner, l.body);
                          },
                          [&](const DirectTerm::Pi& p) {
                              auto inner = distinct_pattern(scope, p.pattern);
                              return inner && distinct_rec(scope, p.domain) && distinct_rec(*inner, p.codomain);
                          },
                      },
                      term.node());
}

}  // namespace

DirectTerm::DirectTerm(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

DirectTerm DirectTerm::var(Name name) { return DirectTerm(Node{Var{name}}); }
DirectTerm DirectTerm::pair(DirectTerm left, DirectTerm right) {
    return DirectTerm(Node{Pair{std::move(left), std::move(right)}});
}
DirectTerm DirectTerm::first(DirectTerm term) { return DirectTerm(Node{First{std::move(term)}}); }
DirectTerm DirectTerm::second(DirectTerm term) { return DirectTerm(Node{Second{std::move(term)}}); }
DirectTerm DirectTerm::app(DirectTerm fun, DirectTerm arg) {
    return DirectTerm(Node{App{std::move(fun), std::move(arg)}});
}
DirectTerm DirectTerm::lam(Pattern pattern, DirectTerm body) {
    return DirectTerm(Node{Lam{std::move(pattern), std::move(body)}});
}
DirectTerm DirectTerm::pi(Pattern pattern, DirectTerm domain, DirectTerm codomain) {
    return DirectTerm(Node{Pi{std::move(pattern), std::move(domain), std::move(codomain)}});
}
DirectTerm DirectTerm::universe() {
    static const DirectTerm shared{Node{Universe{}}};
    return shared;
}

bool operator==(const DirectTerm& a, const DirectTerm& b) {
    return a.node_ == b.node_ || *a.node_ == *b.node_;
}

DirectSubst match_pattern(const Pattern& pattern, const DirectTerm& arg, const DirectSubst& subst) {
    return std::visit(Overloaded{
                          [&](const Pattern::Wildcard&) { return subst; },
                          [&](const Pattern::Var& v) { return add_subst(subst, v.binder, arg); },
                          [&](const Pattern::Pair& p) {
                              DirectSubst left = match_pattern(p.left, DirectTerm::first(arg), subst);
                              return match_pattern(p.right, DirectTerm::second(arg), left);
                          },
                      },
                      pattern.node());
}

DirectTerm subst_direct(const Scope& scope, const DirectSubst& subst, const DirectTerm& term) {
    DirectTerm result = subst_rec(scope, subst, term);
    if (debug_scopes_enabled()) {
        validate_scoped(scope, result);
    }
    return result;
}

DirectTerm whnf_direct(const Scope& scope, const DirectTerm& term, StepBudget& budget) {
    if (debug_scopes_enabled()) {
        validate_scoped(scope, term);
    }
    return whnf_rec(scope, term, budget);
}

DirectTerm whnf_direct(const Scope& scope, const DirectTerm& term) {
    StepBudget unlimited;
    return whnf_direct(scope, term, unlimited);
}

DirectTerm nf_direct(const Scope& scope, const DirectTerm& term, StepBudget& budget) {
    if (debug_scopes_enabled()) {
        validate_scoped(scope, term);
    }
    return nf_rec(scope, term, budget);
}

DirectTerm nf_direct(const Scope& scope, const DirectTerm& term) {
    StepBudget unlimited;
    return nf_direct(scope, term, unlimited);
}

bool is_head_normal(const DirectTerm& term) {
    if (const auto* app = term.as<DirectTerm::App>()) {
        return app->fun.as<DirectTerm::Lam>() == nullptr && is_head_normal(app->fun);
    }
    if (const auto* first = term.as<DirectTerm::First>()) {
        return first->term.as<DirectTerm::Pair>() == nullptr && is_head_normal(first->term);
    }
    if (const auto* second = term.as<DirectTerm::Second>()) {
        return second->term.as<DirectTerm::Pair>() == nullptr && is_head_normal(second->term);
    }
    return true;
}

bool is_normal(const DirectTerm& term) {
    if (!is_head_normal(term)) {
        return false;
    }
    return std::visit(Overloaded{
                          [](const DirectTerm::Var&) { return true; },
                          [](const DirectTerm::Universe&) { return true; },
                          [](const DirectTerm::Pair& p) { return is_normal(p.left) && is_normal(p.right); },
                          [](const DirectTerm::First& f) { return is_normal(f.term); },
                          [](const DirectTerm::Second& s) { return is_normal(s.term); },
                          [](const DirectTerm::App& a) { return is_normal(a.fun) && is_normal(a.arg); },
                          [](const DirectTerm::Lam& l) { return is_normal(l.body); },
                          [](const DirectTerm::Pi& p) { return is_normal(p.domain) && is_normal(p.codomain); },
                      },
                      term.node());
}

bool is_distinct_scoped(const Scope& scope, const DirectTerm& term) { return distinct_rec(scope, term); }

Scope free_names(const DirectTerm& term) {
    Scope out;
    collect_free(term, Scope{}, out);
    return out;
}

void validate_scoped(const Scope& scope, const DirectTerm& term) {
    std::visit(Overloaded{
                   [&](const DirectTerm::Var& v) {
                       if (!scope.contains(v.name)) {
                           throw ScopeViolation("name #" + std::to_string(v.name.raw) + " is not in scope");
                       }
                   },
                   [&](const DirectTerm::Pair& p) {
                       validate_scoped(scope, p.left);
                       validate_scoped(scope, p.right);
                   },
                   [&](const DirectTerm::First& f) { validate_scoped(scope, f.term); },
                   [&](const DirectTerm::Second& s) { validate_scoped(scope, s.term); },
                   [&](const DirectTerm::App& a) {
                       validate_scoped(scope, a.fun);
                       validate_scoped(scope, a.arg);
                   },
                   [&](const DirectTerm::Lam& l) { validate_scoped(bind_pattern(scope, l.pattern), l.body); },
                   [&](const DirectTerm::Pi& p) {
                       validate_scoped(scope, p.domain);
                       validate_scoped(bind_pattern(scope, p.pattern), p.codomain);
                   },
                   [&](const DirectTerm::Universe&) {},
               },
               term.node());
}

void encode_to(std::string& out, const DirectTerm& term) {
    using encoding::put_tag;
    std::visit(Overloaded{
                   [&](const DirectTerm::Var& v) {
                       put_tag(out, kVar);
                       encoding::put_varint(out, v.name.raw);
                   },
                   [&](const DirectTerm::Pair& p) {
                       put_tag(out, kPair);
                       encode_to(out, p.left);
                       encode_to(out, p.right);
                   },
                   [&](const DirectTerm::First& f) {
                       put_tag(out, kFirst);
                       encode_to(out, f.term);
                   },
                   [&](const DirectTerm::Second& s) {
                       put_tag(out, kSecond);
                       encode_to(out, s.term);
                   },
                   [&](const DirectTerm::App& a) {
                       put_tag(out, kApp);
                       encode_to(out, a.fun);
                       encode_to(out, a.arg);
                   },
                   [&](const DirectTerm::Lam& l) {
                       put_tag(out, kLam);
                       encode_pattern(out, l.pattern);
                       encode_to(out, l.body);
                   },
                   [&](const DirectTerm::Pi& p) {
                       put_tag(out, kPi);
                       encode_pattern(out, p.pattern);
                       encode_to(out, p.domain);
                       encode_to(out, p.codomain);
                   },
                   [&](const DirectTerm::Universe&) { put_tag(out, kUniverse); },
               },
               term.node());
}

std::string encode(const DirectTerm& term) {
    std::string out;
    encode_to(out, term);
    return out;
}

std::size_t term_size(const DirectTerm& term) {
    return 1 + std::visit(Overloaded{
                              [](const DirectTerm::Var&) -> std::size_t { return 0; },
                              [](const DirectTerm::Universe&) -> std::size_t { return 0; },
                              [](const DirectTerm::Pair& p) { return term_size(p.left) + term_size(p.right); },
                              [](const DirectTerm::First& f) { return term_size(f.term); },
                              [](const DirectTerm::Second& s) { return term_size(s.term); },
                              [](const DirectTerm::App& a) { return term_size(a.fun) + term_size(a.arg); },
                              [](const DirectTerm::Lam& l) { return term_size(l.body); },
                              [](const DirectTerm::Pi& p) { return term_size(p.domain) + term_size(p.codomain); },
                          },
                          term.node());
}

}  // namespace scopefoil
