#include "scopefoil/nbe.hpp"

namespace scopefoil::nbe {

namespace {

ValuePtr make(Value::Neutral n) { return std::make_shared<const Value>(Value{std::move(n)}); }

ValuePtr universe_value() {
    static const ValuePtr shared = std::make_shared<const Value>(Value{Value::Universe{}});
    return shared;
}

ValuePtr push_elim(const ValuePtr& head, Elim elim) {
    if (const auto* neutral = std::get_if<Value::Neutral>(&head->node)) {
        return make(Value::Neutral{neutral->head, std::make_shared<const SpineCell>(SpineCell{std::move(elim), neutral->spine})});
    }
    return make(Value::Neutral{head, std::make_shared<const SpineCell>(SpineCell{std::move(elim), nullptr})});
}

ValuePtr project(const ValuePtr& value, Elim::Kind kind, StepBudget& budget) {
    if (const auto* pair = std::get_if<Value::Pair>(&value->node)) {
        budget.tick();
        return (kind == Elim::Kind::First ? pair->left : pair->right)->force(budget);
    }
    return push_elim(value, Elim{kind, nullptr});
}

FreeTerm quote_spine(const Scope& scope, FreeTerm head, const Spine& spine, StepBudget& budget) {
    if (!spine) {
        return head;
    }
    FreeTerm inner = quote_spine(scope, std::move(head), spine->rest, budget);
    switch (spine->elim.kind) {
        case Elim::Kind::App: return mk_app(std::move(inner), quote(scope, spine->elim.arg->force(budget), budget));
        case Elim::Kind::First: return mk_first(std::move(inner));
        case Elim::Kind::Second: return mk_second(std::move(inner));
    }
    return inner;
}

// Evaluates `body` with `binder` bound to a fresh neutral variable and reads
// it back under the extended scope.
std::pair<NameBinder, FreeTerm> quote_closure(const Scope& scope, const Env& env, NameBinder binder,
                                              const FreeTerm& body, StepBudget& budget) {
    const NameBinder fresh = fresh_binder(scope);
    const Env inner = env.insert(binder.raw, Thunk::ready(make(Value::Neutral{name_of(fresh), nullptr})));
    return {fresh, quote(extend_scope(fresh, scope), eval(inner, body, budget), budget)};
}

}  // namespace

ThunkPtr Thunk::ready(ValuePtr value) { return ThunkPtr(new Thunk(std::move(value))); }

ThunkPtr Thunk::delayed(Env env, FreeTerm term) { return ThunkPtr(new Thunk(Delayed{std::move(env), std::move(term)})); }

ThunkPtr Thunk::projection(ThunkPtr source, Elim::Kind kind) {
    return ThunkPtr(new Thunk(Projection{std::move(source), kind}));
}

const ValuePtr& Thunk::force(StepBudget& budget) {
    if (const auto* delayed = std::get_if<Delayed>(&state_)) {
        ValuePtr value = eval(delayed->env, delayed->term, budget);
        state_ = std::move(value);
    } else if (const auto* proj = std::get_if<Projection>(&state_)) {
        ValuePtr value = project(proj->source->force(budget), proj->kind, budget);
        state_ = std::move(value);
    }
    return std::get<ValuePtr>(state_);
}

ValuePtr eval(const Env& initial_env, const FreeTerm& initial_term, StepBudget& budget) {
    Env env = initial_env;
    FreeTerm term = initial_term;
    // Applications of closures continue in this loop rather than recursing,
    // so long reduction sequences do not grow the stack.
    while (true) {
        if (const auto* var = term.as_var()) {
            if (const ThunkPtr* bound = env.find(var->name.raw)) {
                return (*bound)->force(budget);
            }
            return make(Value::Neutral{var->name, nullptr});
        }
        if (const auto* app = view_app(term)) {
            const ValuePtr fun = eval(env, app->fun, budget);
            ThunkPtr arg = Thunk::delayed(env, app->arg);
            if (const auto* lam = std::get_if<Value::Lam>(&fun->node)) {
                budget.tick();
                env = lam->env.insert(lam->binder.raw, std::move(arg));
                term = lam->body;
                continue;
            }
            return push_elim(fun, Elim{Elim::Kind::App, std::move(arg)});
        }
        if (const auto* lam = view_lam(term)) {
            return std::make_shared<const Value>(Value{Value::Lam{env, lam->body.binder, lam->body.body}});
        }
        if (const auto* pi = view_pi(term)) {
            ValuePtr domain = eval(env, pi->domain, budget);
            return std::make_shared<const Value>(
                Value{Value::Pi{env, std::move(domain), pi->codomain.binder, pi->codomain.body}});
        }
        if (view_universe(term)) {
            return universe_value();
        }
        if (const auto* pair = view_pair(term)) {
            return std::make_shared<const Value>(
                Value{Value::Pair{Thunk::delayed(env, pair->left), Thunk::delayed(env, pair->right)}});
        }
        if (const auto* first = view_first(term)) {
            return project(eval(env, first->term, budget), Elim::Kind::First, budget);
        }
        const auto* second = view_second(term);
        return project(eval(env, second->term, budget), Elim::Kind::Second, budget);
    }
}

ValuePtr eval(const Env& env, const FreeTerm& term) {
    StepBudget unlimited;
    return eval(env, term, unlimited);
}

FreeTerm quote(const Scope& scope, const ValuePtr& value, StepBudget& budget) {
    return std::visit(
        [&](const auto& v) -> FreeTerm {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Value::Neutral>) {
                FreeTerm head = std::holds_alternative<Name>(v.head) ? mk_var(std::get<Name>(v.head))
                                                                     : quote(scope, std::get<ValuePtr>(v.head), budget);
                return quote_spine(scope, std::move(head), v.spine, budget);
            } else if constexpr (std::is_same_v<V, Value::Lam>) {
                auto [binder, body] = quote_closure(scope, v.env, v.binder, v.body, budget);
                return mk_lam(binder, std::move(body));
            } else if constexpr (std::is_same_v<V, Value::Pi>) {
                FreeTerm domain = quote(scope, v.domain, budget);
                auto [binder, body] = quote_closure(scope, v.env, v.binder, v.body, budget);
                return mk_pi(binder, std::move(domain), std::move(body));
            } else if constexpr (std::is_same_v<V, Value::Pair>) {
                FreeTerm left = quote(scope, v.left->force(budget), budget);
                return mk_pair(std::move(left), quote(scope, v.right->force(budget), budget));
            } else {
                return mk_universe();
            }
        },
        value->node);
}

FreeTerm quote(const Scope& scope, const ValuePtr& value) {
    StepBudget unlimited;
    return quote(scope, value, unlimited);
}

FreeTerm nf_nbe(const Scope& scope, const FreeTerm& term, StepBudget& budget) {
    if (debug_scopes_enabled() && !free_names_within(scope, term)) {
        throw ScopeViolation("nf_nbe: term has names outside its scope");
    }
    return quote(scope, eval(Env{}, term, budget), budget);
}

FreeTerm nf_nbe(const Scope& scope, const FreeTerm& term) {
    StepBudget unlimited;
    return nf_nbe(scope, term, unlimited);
}

}  // namespace scopefoil::nbe
