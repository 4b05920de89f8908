#include "scopefoil/bridge.hpp"

#include <algorithm>

namespace scopefoil {

namespace {

template <typename... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

class ToFoil {
public:
    explicit ToFoil(const Renaming& rename) : rename_(rename) {}

    DirectTerm term(const Scope& scope, const NaiveTerm& t) {
        return std::visit(
            Overloaded{
                [&](const NaiveTerm::Var& v) { return DirectTerm::var(resolve(v.ident)); },
                [&](const NaiveTerm::Pair& p) { return DirectTerm::pair(term(scope, p.left), term(scope, p.right)); },
                [&](const NaiveTerm::First& f) { return DirectTerm::first(term(scope, f.term)); },
                [&](const NaiveTerm::Second& s) { return DirectTerm::second(term(scope, s.term)); },
                [&](const NaiveTerm::App& a) { return DirectTerm::app(term(scope, a.fun), term(scope, a.arg)); },
                [&](const NaiveTerm::Lam& l) {
                    FoilPattern bound = to_foil_pattern(scope, l.pattern);
                    DirectTerm body = under(bound, l.body.term);
                    return DirectTerm::lam(std::move(bound.pattern), std::move(body));
                },
                [&](const NaiveTerm::Pi& p) {
                    DirectTerm domain = term(scope, p.domain);
                    FoilPattern bound = to_foil_pattern(scope, p.pattern);
                    DirectTerm codomain = under(bound, p.codomain.term);
                    return DirectTerm::pi(std::move(bound.pattern), std::move(domain), std::move(codomain));
                },
                [](const NaiveTerm::Universe&) { return DirectTerm::universe(); },
            },
            t.node());
    }

private:
    DirectTerm under(const FoilPattern& bound, const NaiveTerm& body) {
        const std::size_t mark = env_.size();
        env_.insert(env_.end(), bound.bindings.begin(), bound.bindings.end());
        DirectTerm result = term(bound.scope, body);
        env_.resize(mark);
        return result;
    }

    Name resolve(const VarIdent& ident) const {
        const auto hit = std::find_if(env_.rbegin(), env_.rend(),
                                      [&](const auto& entry) { return entry.first == ident; });
        if (hit != env_.rend()) {
            return hit->second;
        }
        if (auto name = rename_(ident)) {
            return *name;
        }
        throw UnboundVariable(ident.text);
    }

    const Renaming& rename_;
    IdentBindings env_;
};

void pattern_rec(const NaivePattern& pattern, FoilPattern& acc, Pattern& out) {
    std::visit(Overloaded{
                   [&](const NaivePattern::Wildcard&) { out = Pattern::wildcard(); },
                   [&](const NaivePattern::Var& v) {
                       const bool duplicate =
                           std::any_of(acc.bindings.begin(), acc.bindings.end(),
                                       [&](const auto& entry) { return entry.first == v.ident; });
                       if (duplicate) {
                           throw DuplicateBinder(v.ident.text);
                       }
                       const NameBinder binder = fresh_binder(acc.scope);
                       acc.scope = extend_scope(binder, acc.scope);
                       acc.bindings.emplace_back(v.ident, name_of(binder));
                       out = Pattern::var(binder);
                   },
                   [&](const NaivePattern::Pair& p) {
                       Pattern left;
                       Pattern right;
                       pattern_rec(p.left, acc, left);
                       pattern_rec(p.right, acc, right);
                       out = Pattern::pair(std::move(left), std::move(right));
                   },
               },
               pattern.node());
}

}  // namespace

Renaming closed_renaming() {
    return [](const VarIdent&) -> std::optional<Name> { return std::nullopt; };
}

Renaming table_renaming(std::vector<std::pair<VarIdent, Name>> table) {
    return [table = std::move(table)](const VarIdent& ident) -> std::optional<Name> {
        for (const auto& [key, name] : table) {
            if (key == ident) {
                return name;
            }
        }
        return std::nullopt;
    };
}

FoilPattern to_foil_pattern(const Scope& scope, const NaivePattern& pattern) {
    FoilPattern acc{Pattern::wildcard(), {}, scope};
    pattern_rec(pattern, acc, acc.pattern);
    return acc;
}

DirectTerm to_foil_term(const Renaming& rename, const Scope& scope, const NaiveTerm& term) {
    DirectTerm result = ToFoil(rename).term(scope, term);
    if (debug_scopes_enabled()) {
        validate_scoped(scope, result);
    }
    return result;
}

DirectTerm to_foil_closed(const NaiveTerm& term) { return to_foil_term(closed_renaming(), Scope{}, term); }

VarIdent default_ident(RawName raw) { return VarIdent{"x" + std::to_string(raw)}; }

NaivePattern from_foil_pattern(const RawNaming& naming, const Pattern& pattern) {
    return std::visit(Overloaded{
                          [](const Pattern::Wildcard&) { return NaivePattern::wildcard(); },
                          [&](const Pattern::Var& v) { return NaivePattern::var(naming(v.binder.raw)); },
                          [&](const Pattern::Pair& p) {
                              return NaivePattern::pair(from_foil_pattern(naming, p.left),
                                                        from_foil_pattern(naming, p.right));
                          },
                      },
                      pattern.node());
}

NaiveTerm from_foil_term(const RawNaming& naming, const DirectTerm& term) {
    return std::visit(
        Overloaded{
            [&](const DirectTerm::Var& v) { return NaiveTerm::var(naming(v.name.raw)); },
            [&](const DirectTerm::Pair& p) {
                return NaiveTerm::pair(from_foil_term(naming, p.left), from_foil_term(naming, p.right));
            },
            [&](const DirectTerm::First& f) { return NaiveTerm::first(from_foil_term(naming, f.term)); },
            [&](const DirectTerm::Second& s) { return NaiveTerm::second(from_foil_term(naming, s.term)); },
            [&](const DirectTerm::App& a) {
                return NaiveTerm::app(from_foil_term(naming, a.fun), from_foil_term(naming, a.arg));
            },
            [&](const DirectTerm::Lam& l) {
                return NaiveTerm::lam(from_foil_pattern(naming, l.pattern), from_foil_term(naming, l.body));
            },
            [&](const DirectTerm::Pi& p) {
                return NaiveTerm::pi(from_foil_pattern(naming, p.pattern), from_foil_term(naming, p.domain),
                                     from_foil_term(naming, p.codomain));
            },
            [](const DirectTerm::Universe&) { return NaiveTerm::universe(); },
        },
        term.node());
}

NaiveTerm from_foil_term(const DirectTerm& term) { return from_foil_term(default_ident, term); }

}  // namespace scopefoil
