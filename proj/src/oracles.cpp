#include "scopefoil/oracles.hpp"

#include <algorithm>
#include <set>
#include <vector>

namespace scopefoil {

namespace {

template <typename... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// ---------------------------------------------------------------------------
// Named substitution.

NaivePattern rename_pattern(const NaivePattern& pattern, const std::vector<std::pair<VarIdent, VarIdent>>& renames) {
    return std::visit(Overloaded{
                          [&](const NaivePattern::Wildcard&) { return pattern; },
                          [&](const NaivePattern::Var& v) {
                              for (const auto& [from, to] : renames) {
                                  if (from == v.ident) {
                                      return NaivePattern::var(to);
                                  }
                              }
                              return pattern;
                          },
                          [&](const NaivePattern::Pair& p) {
                              return NaivePattern::pair(rename_pattern(p.left, renames),
                                                        rename_pattern(p.right, renames));
                          },
                      },
                      pattern.node());
}

VarIdent fresh_ident(const VarIdent& base, const std::set<VarIdent>& taken) {
    for (std::size_t k = 1;; ++k) {
        VarIdent candidate{base.text + std::to_string(k)};
        if (!taken.contains(candidate)) {
            return candidate;
        }
    }
}

// Simultaneous substitution. Entries without a value mark identifiers
// rebound by an inner binder. `avoid_` over-approximates the free
// identifiers of every replacement term.
class NamedSubst {
public:
    void bind(VarIdent key, NaiveTerm value) {
        for (const VarIdent& ident : free_idents(value)) {
            avoid_.insert(ident);
        }
        env_.push_back({std::move(key), std::move(value)});
    }

    NaiveTerm apply(const NaiveTerm& term) {
        return std::visit(
            Overloaded{
                [&](const NaiveTerm::Var& v) {
                    for (auto it = env_.rbegin(); it != env_.rend(); ++it) {
                        if (it->key == v.ident) {
                            return it->value ? *it->value : term;
                        }
                    }
                    return term;
                },
                [&](const NaiveTerm::Pair& p) { return NaiveTerm::pair(apply(p.left), apply(p.right)); },
                [&](const NaiveTerm::First& f) { return NaiveTerm::first(apply(f.term)); },
                [&](const NaiveTerm::Second& s) { return NaiveTerm::second(apply(s.term)); },
                [&](const NaiveTerm::App& a) { return NaiveTerm::app(apply(a.fun), apply(a.arg)); },
                [&](const NaiveTerm::Lam& l) {
                    const std::size_t mark = env_.size();
                    NaivePattern pattern = enter(l.pattern, l.body.term);
                    NaiveTerm body = apply(l.body.term);
                    env_.resize(mark);
                    return NaiveTerm::lam(std::move(pattern), std::move(body));
                },
                [&](const NaiveTerm::Pi& p) {
                    NaiveTerm domain = apply(p.domain);
                    const std::size_t mark = env_.size();
                    NaivePattern pattern = enter(p.pattern, p.codomain.term);
                    NaiveTerm codomain = apply(p.codomain.term);
                    env_.resize(mark);
                    return NaiveTerm::pi(std::move(pattern), std::move(domain), std::move(codomain));
                },
                [&](const NaiveTerm::Universe&) { return term; },
            },
            term.node());
    }

private:
    struct Entry {
        VarIdent key;
        std::optional<NaiveTerm> value;
    };

    // Pushes the bindings of `pattern`, renaming any binder that could capture
    // a free identifier of a replacement term.
    NaivePattern enter(const NaivePattern& pattern, const NaiveTerm& body) {
        const std::vector<VarIdent> idents = pattern_idents(pattern);
        const bool collides =
            std::any_of(idents.begin(), idents.end(), [&](const VarIdent& id) { return avoid_.contains(id); });
        if (!collides) {
            for (const VarIdent& id : idents) {
                env_.push_back({id, std::nullopt});
            }
            return pattern;
        }
        std::set<VarIdent> taken = avoid_;
        for (const VarIdent& id : free_idents(body)) {
            taken.insert(id);
        }
        taken.insert(idents.begin(), idents.end());
        std::vector<std::pair<VarIdent, VarIdent>> renames;
        for (const VarIdent& id : idents) {
            if (!avoid_.contains(id)) {
                env_.push_back({id, std::nullopt});
                continue;
            }
            VarIdent fresh = fresh_ident(id, taken);
            taken.insert(fresh);
            avoid_.insert(fresh);
            env_.push_back({id, NaiveTerm::var(fresh)});
            renames.emplace_back(id, std::move(fresh));
        }
        return rename_pattern(pattern, renames);
    }

    std::vector<Entry> env_;
    std::set<VarIdent> avoid_;
};

void match_named(const NaivePattern& pattern, const NaiveTerm& arg, NamedSubst& subst) {
    std::visit(Overloaded{
                   [](const NaivePattern::Wildcard&) {},
                   [&](const NaivePattern::Var& v) { subst.bind(v.ident, arg); },
                   [&](const NaivePattern::Pair& p) {
                       match_named(p.left, NaiveTerm::first(arg), subst);
                       match_named(p.right, NaiveTerm::second(arg), subst);
                   },
               },
               pattern.node());
}

NaiveTerm whnf_named(NaiveTerm term, StepBudget& budget) {
    while (true) {
        if (const auto* first = term.as<NaiveTerm::First>()) {
            NaiveTerm inner = whnf_named(first->term, budget);
            if (const auto* pair = inner.as<NaiveTerm::Pair>()) {
                budget.tick();
                term = pair->left;
                continue;
            }
            return NaiveTerm::first(std::move(inner));
        }
        if (const auto* second = term.as<NaiveTerm::Second>()) {
            NaiveTerm inner = whnf_named(second->term, budget);
            if (const auto* pair = inner.as<NaiveTerm::Pair>()) {
                budget.tick();
                term = pair->right;
                continue;
            }
            return NaiveTerm::second(std::move(inner));
        }
        if (const auto* app = term.as<NaiveTerm::App>()) {
            NaiveTerm fun = whnf_named(app->fun, budget);
            if (const auto* lam = fun.as<NaiveTerm::Lam>()) {
                budget.tick();
                NamedSubst subst;
                match_named(lam->pattern, app->arg, subst);
                term = subst.apply(lam->body.term);
                continue;
            }
            return NaiveTerm::app(std::move(fun), app->arg);
        }
        return term;
    }
}

NaiveTerm nf_named_rec(const NaiveTerm& term, StepBudget& budget) {
    const NaiveTerm head = whnf_named(term, budget);
    return std::visit(
        Overloaded{
            [&](const NaiveTerm::Var&) { return head; },
            [&](const NaiveTerm::Universe&) { return head; },
            [&](const NaiveTerm::Pair& p) {
                return NaiveTerm::pair(nf_named_rec(p.left, budget), nf_named_rec(p.right, budget));
            },
            [&](const NaiveTerm::First& f) { return NaiveTerm::first(nf_named_rec(f.term, budget)); },
            [&](const NaiveTerm::Second& s) { return NaiveTerm::second(nf_named_rec(s.term, budget)); },
            [&](const NaiveTerm::App& a) {
                return NaiveTerm::app(nf_named_rec(a.fun, budget), nf_named_rec(a.arg, budget));
            },
            [&](const NaiveTerm::Lam& l) { return NaiveTerm::lam(l.pattern, nf_named_rec(l.body.term, budget)); },
            [&](const NaiveTerm::Pi& p) {
                return NaiveTerm::pi(p.pattern, nf_named_rec(p.domain, budget),
                                     nf_named_rec(p.codomain.term, budget));
            },
        },
        head.node());
}

// ---------------------------------------------------------------------------
// De Bruijn conversion.

DBPattern db_pattern(const NaivePattern& pattern) {
    return std::visit(Overloaded{
                          [](const NaivePattern::Wildcard&) { return DBPattern::wildcard(); },
                          [](const NaivePattern::Var&) { return DBPattern::var(); },
                          [](const NaivePattern::Pair& p) {
                              return DBPattern::pair(db_pattern(p.left), db_pattern(p.right));
                          },
                      },
                      pattern.node());
}

DBPattern db_pattern(const Pattern& pattern) {
    return std::visit(Overloaded{
                          [](const Pattern::Wildcard&) { return DBPattern::wildcard(); },
                          [](const Pattern::Var&) { return DBPattern::var(); },
                          [](const Pattern::Pair& p) {
                              return DBPattern::pair(db_pattern(p.left), db_pattern(p.right));
                          },
                      },
                      pattern.node());
}

DBTerm naive_to_db(const NaiveTerm& term, std::vector<VarIdent>& env) {
    auto under = [&](const NaivePattern& pattern, const NaiveTerm& body) {
        const std::size_t mark = env.size();
        for (VarIdent& id : pattern_idents(pattern)) {
            env.push_back(std::move(id));
        }
        DBTerm result = naive_to_db(body, env);
        env.resize(mark);
        return result;
    };
    return std::visit(
        Overloaded{
            [&](const NaiveTerm::Var& v) {
                for (std::size_t i = env.size(); i-- > 0;) {
                    if (env[i] == v.ident) {
                        return DBTerm::bvar(env.size() - 1 - i);
                    }
                }
                return DBTerm::fvar(v.ident);
            },
            [&](const NaiveTerm::Pair& p) { return DBTerm::pair(naive_to_db(p.left, env), naive_to_db(p.right, env)); },
            [&](const NaiveTerm::First& f) { return DBTerm::first(naive_to_db(f.term, env)); },
            [&](const NaiveTerm::Second& s) { return DBTerm::second(naive_to_db(s.term, env)); },
            [&](const NaiveTerm::App& a) { return DBTerm::app(naive_to_db(a.fun, env), naive_to_db(a.arg, env)); },
            [&](const NaiveTerm::Lam& l) { return DBTerm::lam(db_pattern(l.pattern), under(l.pattern, l.body.term)); },
            [&](const NaiveTerm::Pi& p) {
                DBTerm domain = naive_to_db(p.domain, env);
                return DBTerm::pi(db_pattern(p.pattern), std::move(domain), under(p.pattern, p.codomain.term));
            },
            [](const NaiveTerm::Universe&) { return DBTerm::universe(); },
        },
        term.node());
}

DBTerm direct_to_db(const DirectTerm& term, std::vector<RawName>& env, const RawNaming& naming) {
    auto under = [&](const Pattern& pattern, const DirectTerm& body) {
        const std::size_t mark = env.size();
        for (RawName raw : names_of_pattern(pattern)) {
            env.push_back(raw);
        }
        DBTerm result = direct_to_db(body, env, naming);
        env.resize(mark);
        return result;
    };
    return std::visit(
        Overloaded{
            [&](const DirectTerm::Var& v) {
                for (std::size_t i = env.size(); i-- > 0;) {
                    if (env[i] == v.name.raw) {
                        return DBTerm::bvar(env.size() - 1 - i);
                    }
                }
                return DBTerm::fvar(naming(v.name.raw));
            },
            [&](const DirectTerm::Pair& p) {
                return DBTerm::pair(direct_to_db(p.left, env, naming), direct_to_db(p.right, env, naming));
            },
            [&](const DirectTerm::First& f) { return DBTerm::first(direct_to_db(f.term, env, naming)); },
            [&](const DirectTerm::Second& s) { return DBTerm::second(direct_to_db(s.term, env, naming)); },
            [&](const DirectTerm::App& a) {
                return DBTerm::app(direct_to_db(a.fun, env, naming), direct_to_db(a.arg, env, naming));
            },
            [&](const DirectTerm::Lam& l) { return DBTerm::lam(db_pattern(l.pattern), under(l.pattern, l.body)); },
            [&](const DirectTerm::Pi& p) {
                DBTerm domain = direct_to_db(p.domain, env, naming);
                return DBTerm::pi(db_pattern(p.pattern), std::move(domain), under(p.pattern, p.codomain));
            },
            [](const DirectTerm::Universe&) { return DBTerm::universe(); },
        },
        term.node());
}

void collect_fvars(const DBTerm& term, std::set<VarIdent>& out) {
    std::visit(Overloaded{
                   [](const DBTerm::BVar&) {},
                   [&](const DBTerm::FVar& v) { out.insert(v.ident); },
                   [&](const DBTerm::App& a) {
                       collect_fvars(a.fun, out);
                       collect_fvars(a.arg, out);
                   },
                   [&](const DBTerm::Lam& l) { collect_fvars(l.body, out); },
                   [&](const DBTerm::Pi& p) {
                       collect_fvars(p.domain, out);
                       collect_fvars(p.codomain, out);
                   },
                   [&](const DBTerm::Pair& p) {
                       collect_fvars(p.left, out);
                       collect_fvars(p.right, out);
                   },
                   [&](const DBTerm::First& f) { collect_fvars(f.term, out); },
                   [&](const DBTerm::Second& s) { collect_fvars(s.term, out); },
                   [](const DBTerm::Universe&) {},
               },
               term.node());
}

class FromDeBruijn {
public:
    explicit FromDeBruijn(const DBTerm& term) { collect_fvars(term, free_); }

    NaiveTerm term(const DBTerm& t) {
        return std::visit(
            Overloaded{
                [&](const DBTerm::BVar& v) { return NaiveTerm::var(env_.at(env_.size() - 1 - v.index)); },
                [&](const DBTerm::FVar& v) { return NaiveTerm::var(v.ident); },
                [&](const DBTerm::App& a) { return NaiveTerm::app(term(a.fun), term(a.arg)); },
                [&](const DBTerm::Lam& l) {
                    const std::size_t mark = env_.size();
                    NaivePattern pattern = bind(l.pattern);
                    NaiveTerm body = term(l.body);
                    env_.resize(mark);
                    return NaiveTerm::lam(std::move(pattern), std::move(body));
                },
                [&](const DBTerm::Pi& p) {
                    NaiveTerm domain = term(p.domain);
                    const std::size_t mark = env_.size();
                    NaivePattern pattern = bind(p.pattern);
                    NaiveTerm codomain = term(p.codomain);
                    env_.resize(mark);
                    return NaiveTerm::pi(std::move(pattern), std::move(domain), std::move(codomain));
                },
                [&](const DBTerm::Pair& p) { return NaiveTerm::pair(term(p.left), term(p.right)); },
                [&](const DBTerm::First& f) { return NaiveTerm::first(term(f.term)); },
                [&](const DBTerm::Second& s) { return NaiveTerm::second(term(s.term)); },
                [](const DBTerm::Universe&) { return NaiveTerm::universe(); },
            },
            t.node());
    }

private:
    NaivePattern bind(const DBPattern& pattern) {
        switch (pattern.kind()) {
            case DBPattern::Kind::Wildcard: return NaivePattern::wildcard();
            case DBPattern::Kind::Var: {
                VarIdent name{"x" + std::to_string(env_.size())};
                while (free_.contains(name)) {
                    name.text += '\'';
                }
                env_.push_back(name);
                return NaivePattern::var(std::move(name));
            }
            case DBPattern::Kind::Pair: {
                NaivePattern left = bind(pattern.left());
                return NaivePattern::pair(std::move(left), bind(pattern.right()));
            }
        }
        return NaivePattern::wildcard();
    }

    std::set<VarIdent> free_;
    std::vector<VarIdent> env_;
};

// ---------------------------------------------------------------------------
// De Bruijn normalization.

DBTerm shift(const DBTerm& term, std::size_t delta, std::size_t cutoff) {
    if (delta == 0) {
        return term;
    }
    return std::visit(
        Overloaded{
            [&](const DBTerm::BVar& v) { return v.index >= cutoff ? DBTerm::bvar(v.index + delta) : term; },
            [&](const DBTerm::FVar&) { return term; },
            [&](const DBTerm::App& a) { return DBTerm::app(shift(a.fun, delta, cutoff), shift(a.arg, delta, cutoff)); },
            [&](const DBTerm::Lam& l) {
                return DBTerm::lam(l.pattern, shift(l.body, delta, cutoff + l.pattern.arity()));
            },
            [&](const DBTerm::Pi& p) {
                return DBTerm::pi(p.pattern, shift(p.domain, delta, cutoff),
                                  shift(p.codomain, delta, cutoff + p.pattern.arity()));
            },
            [&](const DBTerm::Pair& p) {
                return DBTerm::pair(shift(p.left, delta, cutoff), shift(p.right, delta, cutoff));
            },
            [&](const DBTerm::First& f) { return DBTerm::first(shift(f.term, delta, cutoff)); },
            [&](const DBTerm::Second& s) { return DBTerm::second(shift(s.term, delta, cutoff)); },
            [&](const DBTerm::Universe&) { return term; },
        },
        term.node());
}

// Replaces the `args.size()` outermost-bound indices of `body` (the binders
// of one pattern, args in binding order) and lowers the remaining ones.
DBTerm instantiate(const DBTerm& term, const std::vector<DBTerm>& args, std::size_t depth) {
    const std::size_t k = args.size();
    return std::visit(
        Overloaded{
            [&](const DBTerm::BVar& v) {
                if (v.index < depth) {
                    return term;
                }
                if (v.index - depth < k) {
                    return shift(args[k - 1 - (v.index - depth)], depth, 0);
                }
                return DBTerm::bvar(v.index - k);
            },
            [&](const DBTerm::FVar&) { return term; },
            [&](const DBTerm::App& a) {
                return DBTerm::app(instantiate(a.fun, args, depth), instantiate(a.arg, args, depth));
            },
            [&](const DBTerm::Lam& l) {
                return DBTerm::lam(l.pattern, instantiate(l.body, args, depth + l.pattern.arity()));
            },
            [&](const DBTerm::Pi& p) {
                return DBTerm::pi(p.pattern, instantiate(p.domain, args, depth),
                                  instantiate(p.codomain, args, depth + p.pattern.arity()));
            },
            [&](const DBTerm::Pair& p) {
                return DBTerm::pair(instantiate(p.left, args, depth), instantiate(p.right, args, depth));
            },
            [&](const DBTerm::First& f) { return DBTerm::first(instantiate(f.term, args, depth)); },
            [&](const DBTerm::Second& s) { return DBTerm::second(instantiate(s.term, args, depth)); },
            [&](const DBTerm::Universe&) { return term; },
        },
        term.node());
}

void match_db(const DBPattern& pattern, const DBTerm& arg, std::vector<DBTerm>& out) {
    switch (pattern.kind()) {
        case DBPattern::Kind::Wildcard: return;
        case DBPattern::Kind::Var: out.push_back(arg); return;
        case DBPattern::Kind::Pair:
            match_db(pattern.left(), DBTerm::first(arg), out);
            match_db(pattern.right(), DBTerm::second(arg), out);
            return;
    }
}

// Counts nodes of `term` as a tree, giving up once `budget` is spent.
bool larger_than(const DBTerm& term, std::uint64_t& budget) {
    if (budget == 0) {
        return true;
    }
    --budget;
    return std::visit(
        Overloaded{
            [&](const DBTerm::App& a) { return larger_than(a.fun, budget) || larger_than(a.arg, budget); },
            [&](const DBTerm::Lam& l) { return larger_than(l.body, budget); },
            [&](const DBTerm::Pi& p) { return larger_than(p.domain, budget) || larger_than(p.codomain, budget); },
            [&](const DBTerm::Pair& p) { return larger_than(p.left, budget) || larger_than(p.right, budget); },
            [&](const DBTerm::First& f) { return larger_than(f.term, budget); },
            [&](const DBTerm::Second& s) { return larger_than(s.term, budget); },
            [](const auto&) { return false; },
        },
        term.node());
}

DBTerm whnf_db(DBTerm term, StepBudget& budget) {
    while (true) {
        if (const auto* first = term.as<DBTerm::First>()) {
            DBTerm inner = whnf_db(first->term, budget);
            if (const auto* pair = inner.as<DBTerm::Pair>()) {
                budget.tick();
                term = pair->left;
                continue;
            }
            return DBTerm::first(std::move(inner));
        }
        if (const auto* second = term.as<DBTerm::Second>()) {
            DBTerm inner = whnf_db(second->term, budget);
            if (const auto* pair = inner.as<DBTerm::Pair>()) {
                budget.tick();
                term = pair->right;
                continue;
            }
            return DBTerm::second(std::move(inner));
        }
        if (const auto* app = term.as<DBTerm::App>()) {
            DBTerm fun = whnf_db(app->fun, budget);
            if (const auto* lam = fun.as<DBTerm::Lam>()) {
                budget.tick();
                std::vector<DBTerm> args;
                match_db(lam->pattern, app->arg, args);
                term = instantiate(lam->body, args, 0);
                if (const auto cap = budget.size_limit()) {
                    std::uint64_t remaining = *cap;
                    if (larger_than(term, remaining)) {
                        throw SizeExhausted(*cap);
                    }
                }
                continue;
            }
            return DBTerm::app(std::move(fun), app->arg);
        }
        return term;
    }
}

DBTerm nf_db_rec(const DBTerm& term, StepBudget& budget) {
    const DBTerm head = whnf_db(term, budget);
    return std::visit(
        Overloaded{
            [&](const DBTerm::BVar&) { return head; },
            [&](const DBTerm::FVar&) { return head; },
            [&](const DBTerm::Universe&) { return head; },
            [&](const DBTerm::App& a) { return DBTerm::app(nf_db_rec(a.fun, budget), nf_db_rec(a.arg, budget)); },
            [&](const DBTerm::Lam& l) { return DBTerm::lam(l.pattern, nf_db_rec(l.body, budget)); },
            [&](const DBTerm::Pi& p) {
                return DBTerm::pi(p.pattern, nf_db_rec(p.domain, budget), nf_db_rec(p.codomain, budget));
            },
            [&](const DBTerm::Pair& p) { return DBTerm::pair(nf_db_rec(p.left, budget), nf_db_rec(p.right, budget)); },
            [&](const DBTerm::First& f) { return DBTerm::first(nf_db_rec(f.term, budget)); },
            [&](const DBTerm::Second& s) { return DBTerm::second(nf_db_rec(s.term, budget)); },
        },
        head.node());
}

void encode_pattern_shape(std::string& out, const DBPattern& pattern) {
    switch (pattern.kind()) {
        case DBPattern::Kind::Wildcard: encoding::put_tag(out, 0x10); return;
        case DBPattern::Kind::Var: encoding::put_tag(out, 0x11); return;
        case DBPattern::Kind::Pair:
            encoding::put_tag(out, 0x12);
            encode_pattern_shape(out, pattern.left());
            encode_pattern_shape(out, pattern.right());
            return;
    }
}

void encode_db(std::string& out, const DBTerm& term) {
    using encoding::put_tag;
    using encoding::put_varint;
    std::visit(Overloaded{
                   [&](const DBTerm::BVar& v) {
                       put_tag(out, 0x20);
                       put_varint(out, v.index);
                   },
                   [&](const DBTerm::FVar& v) {
                       put_tag(out, 0x21);
                       put_varint(out, v.ident.text.size());
                       out += v.ident.text;
                   },
                   [&](const DBTerm::App& a) {
                       put_tag(out, 0x05);
                       encode_db(out, a.fun);
                       encode_db(out, a.arg);
                   },
                   [&](const DBTerm::Lam& l) {
                       put_tag(out, 0x06);
                       encode_pattern_shape(out, l.pattern);
                       encode_db(out, l.body);
                   },
                   [&](const DBTerm::Pi& p) {
                       put_tag(out, 0x07);
                       encode_pattern_shape(out, p.pattern);
                       encode_db(out, p.domain);
                       encode_db(out, p.codomain);
                   },
                   [&](const DBTerm::Pair& p) {
                       put_tag(out, 0x02);
                       encode_db(out, p.left);
                       encode_db(out, p.right);
                   },
                   [&](const DBTerm::First& f) {
                       put_tag(out, 0x03);
                       encode_db(out, f.term);
                   },
                   [&](const DBTerm::Second& s) {
                       put_tag(out, 0x04);
                       encode_db(out, s.term);
                   },
                   [&](const DBTerm::Universe&) { put_tag(out, 0x08); },
               },
               term.node());
}

}  // namespace

DBPattern DBPattern::wildcard() { return DBPattern{}; }

DBPattern DBPattern::var() {
    DBPattern p;
    p.kind_ = Kind::Var;
    p.arity_ = 1;
    return p;
}

DBPattern DBPattern::pair(DBPattern left, DBPattern right) {
    DBPattern p;
    p.kind_ = Kind::Pair;
    p.arity_ = left.arity_ + right.arity_;
    p.children_ = std::make_shared<const std::pair<DBPattern, DBPattern>>(std::move(left), std::move(right));
    return p;
}

bool operator==(const DBPattern& a, const DBPattern& b) {
    if (a.kind_ != b.kind_) {
        return false;
    }
    if (a.kind_ != DBPattern::Kind::Pair) {
        return true;
    }
    return a.left() == b.left() && a.right() == b.right();
}

DBTerm::DBTerm(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}
DBTerm DBTerm::bvar(std::size_t index) { return DBTerm(Node{BVar{index}}); }
DBTerm DBTerm::fvar(VarIdent ident) { return DBTerm(Node{FVar{std::move(ident)}}); }
DBTerm DBTerm::app(DBTerm fun, DBTerm arg) { return DBTerm(Node{App{std::move(fun), std::move(arg)}}); }
DBTerm DBTerm::lam(DBPattern pattern, DBTerm body) { return DBTerm(Node{Lam{std::move(pattern), std::move(body)}}); }
DBTerm DBTerm::pi(DBPattern pattern, DBTerm domain, DBTerm codomain) {
    return DBTerm(Node{Pi{std::move(pattern), std::move(domain), std::move(codomain)}});
}
DBTerm DBTerm::pair(DBTerm left, DBTerm right) { return DBTerm(Node{Pair{std::move(left), std::move(right)}}); }
DBTerm DBTerm::first(DBTerm term) { return DBTerm(Node{First{std::move(term)}}); }
DBTerm DBTerm::second(DBTerm term) { return DBTerm(Node{Second{std::move(term)}}); }
DBTerm DBTerm::universe() {
    static const DBTerm shared{Node{Universe{}}};
    return shared;
}

bool operator==(const DBTerm& a, const DBTerm& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

NaiveTerm nf_named(const NaiveTerm& term, StepBudget& budget) { return nf_named_rec(term, budget); }

NaiveTerm nf_named(const NaiveTerm& term) {
    StepBudget unlimited;
    return nf_named_rec(term, unlimited);
}

DBTerm to_debruijn(const NaiveTerm& term) {
    std::vector<VarIdent> env;
    return naive_to_db(term, env);
}

DBTerm to_debruijn(const DirectTerm& term, const RawNaming& naming) {
    std::vector<RawName> env;
    return direct_to_db(term, env, naming);
}

DBTerm to_debruijn(const DirectTerm& term) { return to_debruijn(term, default_ident); }

DBTerm to_debruijn(const FreeTerm& term, const RawNaming& naming) {
    return to_debruijn(free_to_direct(term), naming);
}

DBTerm to_debruijn(const FreeTerm& term) { return to_debruijn(term, default_ident); }

NaiveTerm from_debruijn(const DBTerm& term) { return FromDeBruijn(term).term(term); }

DBTerm nf_debruijn(const DBTerm& term, StepBudget& budget) { return nf_db_rec(term, budget); }

DBTerm nf_debruijn(const DBTerm& term) {
    StepBudget unlimited;
    return nf_db_rec(term, unlimited);
}

bool alpha_eq(const DBTerm& a, const DBTerm& b) { return a == b; }
bool alpha_eq(const NaiveTerm& a, const NaiveTerm& b) { return to_debruijn(a) == to_debruijn(b); }
bool alpha_eq(const DirectTerm& a, const DirectTerm& b) { return to_debruijn(a) == to_debruijn(b); }
bool alpha_eq(const FreeTerm& a, const FreeTerm& b) { return to_debruijn(a) == to_debruijn(b); }

std::string encode(const DBTerm& term) {
    std::string out;
    encode_db(out, term);
    return out;
}

std::uint64_t canonical_hash(const DBTerm& term) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (const char c : encode(term)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::size_t term_size(const DBTerm& term) {
    return 1 + std::visit(Overloaded{
                              [](const DBTerm::BVar&) -> std::size_t { return 0; },
                              [](const DBTerm::FVar&) -> std::size_t { return 0; },
                              [](const DBTerm::Universe&) -> std::size_t { return 0; },
                              [](const DBTerm::App& a) { return term_size(a.fun) + term_size(a.arg); },
                              [](const DBTerm::Lam& l) { return term_size(l.body); },
                              [](const DBTerm::Pi& p) { return term_size(p.domain) + term_size(p.codomain); },
                              [](const DBTerm::Pair& p) { return term_size(p.left) + term_size(p.right); },
                              [](const DBTerm::First& f) { return term_size(f.term); },
                              [](const DBTerm::Second& s) { return term_size(s.term); },
                          },
                          term.node());
}

}  // namespace scopefoil
