#include "scopefoil/lambda_pi_free.hpp"

namespace scopefoil {

namespace {

using SumNode = FreeTerm::Node;

FreeTerm make_lp(FreeLambdaPiNode node) {
    return FreeTerm::node(SumNode{std::variant<FreeLambdaPiNode, FreePairNode>{std::in_place_index<0>,
                                                                               std::move(node)}});
}

FreeTerm make_pair_node(FreePairNode node) {
    return FreeTerm::node(SumNode{std::variant<FreeLambdaPiNode, FreePairNode>{std::in_place_index<1>,
                                                                               std::move(node)}});
}

template <typename T>
const T* view_lp(const FreeTerm& term) {
    const auto* node = term.as_node();
    if (node == nullptr) {
        return nullptr;
    }
    const auto* lp = std::get_if<0>(&node->value);
    return lp == nullptr ? nullptr : std::get_if<T>(&lp->value);
}

template <typename T>
const T* view_pr(const FreeTerm& term) {
    const auto* node = term.as_node();
    if (node == nullptr) {
        return nullptr;
    }
    const auto* pr = std::get_if<1>(&node->value);
    return pr == nullptr ? nullptr : std::get_if<T>(&pr->value);
}

FreeTerm whnf_rec(const Scope& scope, FreeTerm term, StepBudget& budget) {
    while (true) {
        if (const auto* first = view_first(term)) {
            FreeTerm inner = whnf_rec(scope, first->term, budget);
            if (const auto* pair = view_pair(inner)) {
                budget.tick();
                term = pair->left;
                continue;
            }
            return mk_first(std::move(inner));
        }
        if (const auto* second = view_second(term)) {
            FreeTerm inner = whnf_rec(scope, second->term, budget);
            if (const auto* pair = view_pair(inner)) {
                budget.tick();
                term = pair->right;
                continue;
            }
            return mk_second(std::move(inner));
        }
        if (const auto* app = view_app(term)) {
            FreeTerm fun = whnf_rec(scope, app->fun, budget);
            if (const auto* lam = view_lam(fun)) {
                budget.tick();
                const FreeSubst subst = add_subst(identity_subst<FreeTerm>(), lam->body.binder, app->arg);
                term = substitute(scope, subst, lam->body.body);
                continue;
            }
            return mk_app(std::move(fun), app->arg);
        }
        return term;
    }
}

FreeTerm nf_rec(const Scope& scope, const FreeTerm& term, StepBudget& budget) {
    const FreeTerm head = whnf_rec(scope, term, budget);
    if (head.as_var() != nullptr) {
        return head;
    }
    return FreeTerm::node(map_node(
        *head.as_node(),
        [&](const FreeScoped& child) {
            FreeScoped fresh = refresh_scoped(scope, child);
            const Scope inner = extend_scope(fresh.binder, scope);
            return FreeScoped{fresh.binder, nf_rec(inner, fresh.body, budget)};
        },
        [&](const FreeTerm& child) { return nf_rec(scope, child, budget); }));
}

bool children_normal(const FreeTerm& term) {
    if (term.as_var() != nullptr) {
        return true;
    }
    bool ok = true;
    for_each_child<LambdaPiPairF>(
        *term.as_node(), [&](const FreeScoped& child) { ok = ok && is_normal(child.body); },
        [&](const FreeTerm& child) { ok = ok && is_normal(child); });
    return ok;
}

// Tags shared with the direct encoding.
constexpr std::uint8_t kVar = 0x01;
constexpr std::uint8_t kPair = 0x02;
constexpr std::uint8_t kFirst = 0x03;
constexpr std::uint8_t kSecond = 0x04;
constexpr std::uint8_t kApp = 0x05;
constexpr std::uint8_t kLam = 0x06;
constexpr std::uint8_t kPi = 0x07;
constexpr std::uint8_t kUniverse = 0x08;
constexpr std::uint8_t kPatternVar = 0x11;

void encode_rec(std::string& out, const FreeTerm& term) {
    using encoding::put_tag;
    using encoding::put_varint;
    if (const auto* var = term.as_var()) {
        put_tag(out, kVar);
        put_varint(out, var->name.raw);
    } else if (const auto* app = view_app(term)) {
        put_tag(out, kApp);
        encode_rec(out, app->fun);
        encode_rec(out, app->arg);
    } else if (const auto* lam = view_lam(term)) {
        put_tag(out, kLam);
        put_tag(out, kPatternVar);
        put_varint(out, lam->body.binder.raw);
        encode_rec(out, lam->body.body);
    } else if (const auto* pi = view_pi(term)) {
        put_tag(out, kPi);
        put_tag(out, kPatternVar);
        put_varint(out, pi->codomain.binder.raw);
        encode_rec(out, pi->domain);
        encode_rec(out, pi->codomain.body);
    } else if (view_universe(term)) {
        put_tag(out, kUniverse);
    } else if (const auto* pair = view_pair(term)) {
        put_tag(out, kPair);
        encode_rec(out, pair->left);
        encode_rec(out, pair->right);
    } else if (const auto* first = view_first(term)) {
        put_tag(out, kFirst);
        encode_rec(out, first->term);
    } else {
        put_tag(out, kSecond);
        encode_rec(out, view_second(term)->term);
    }
}

NameBinder single_binder(const Pattern& pattern) {
    if (const auto* var = std::get_if<Pattern::Var>(&pattern.node())) {
        return var->binder;
    }
    throw UnsupportedPattern("only single-variable patterns convert to the free foil representation");
}

}  // namespace

FreeTerm mk_var(Name name) { return FreeTerm::var(name); }
FreeTerm mk_app(FreeTerm fun, FreeTerm arg) {
    return make_lp(FreeLambdaPiNode{FreeLambdaPiNode::App{std::move(fun), std::move(arg)}});
}
FreeTerm mk_lam(NameBinder binder, FreeTerm body) {
    return make_lp(FreeLambdaPiNode{FreeLambdaPiNode::Lam{FreeScoped{binder, std::move(body)}}});
}
FreeTerm mk_pi(NameBinder binder, FreeTerm domain, FreeTerm codomain) {
    return make_lp(
        FreeLambdaPiNode{FreeLambdaPiNode::Pi{std::move(domain), FreeScoped{binder, std::move(codomain)}}});
}
FreeTerm mk_universe() {
    static const FreeTerm shared = make_lp(FreeLambdaPiNode{FreeLambdaPiNode::Universe{}});
    return shared;
}
FreeTerm mk_pair(FreeTerm left, FreeTerm right) {
    return make_pair_node(FreePairNode{FreePairNode::Pair{std::move(left), std::move(right)}});
}
FreeTerm mk_first(FreeTerm term) { return make_pair_node(FreePairNode{FreePairNode::First{std::move(term)}}); }
FreeTerm mk_second(FreeTerm term) {
    return make_pair_node(FreePairNode{FreePairNode::Second{std::move(term)}});
}

const FreeLambdaPiNode::App* view_app(const FreeTerm& term) { return view_lp<FreeLambdaPiNode::App>(term); }
const FreeLambdaPiNode::Lam* view_lam(const FreeTerm& term) { return view_lp<FreeLambdaPiNode::Lam>(term); }
const FreeLambdaPiNode::Pi* view_pi(const FreeTerm& term) { return view_lp<FreeLambdaPiNode::Pi>(term); }
bool view_universe(const FreeTerm& term) { return view_lp<FreeLambdaPiNode::Universe>(term) != nullptr; }
const FreePairNode::Pair* view_pair(const FreeTerm& term) { return view_pr<FreePairNode::Pair>(term); }
const FreePairNode::First* view_first(const FreeTerm& term) { return view_pr<FreePairNode::First>(term); }
const FreePairNode::Second* view_second(const FreeTerm& term) { return view_pr<FreePairNode::Second>(term); }

FreeTerm whnf_free(const Scope& scope, const FreeTerm& term, StepBudget& budget) {
    if (debug_scopes_enabled() && !free_names_within(scope, term)) {
        throw ScopeViolation("whnf_free: term has names outside its scope");
    }
    return whnf_rec(scope, term, budget);
}

FreeTerm whnf_free(const Scope& scope, const FreeTerm& term) {
    StepBudget unlimited;
    return whnf_free(scope, term, unlimited);
}

FreeTerm nf_free(const Scope& scope, const FreeTerm& term, StepBudget& budget) {
    if (debug_scopes_enabled() && !free_names_within(scope, term)) {
        throw ScopeViolation("nf_free: term has names outside its scope");
    }
    return nf_rec(scope, term, budget);
}

FreeTerm nf_free(const Scope& scope, const FreeTerm& term) {
    StepBudget unlimited;
    return nf_free(scope, term, unlimited);
}

bool is_head_normal(const FreeTerm& term) {
    if (const auto* app = view_app(term)) {
        return view_lam(app->fun) == nullptr && is_head_normal(app->fun);
    }
    if (const auto* first = view_first(term)) {
        return view_pair(first->term) == nullptr && is_head_normal(first->term);
    }
    if (const auto* second = view_second(term)) {
        return view_pair(second->term) == nullptr && is_head_normal(second->term);
    }
    return true;
}

bool is_normal(const FreeTerm& term) { return is_head_normal(term) && children_normal(term); }

DirectTerm free_to_direct(const FreeTerm& term) {
    if (const auto* var = term.as_var()) {
        return DirectTerm::var(var->name);
    }
    if (const auto* app = view_app(term)) {
        return DirectTerm::app(free_to_direct(app->fun), free_to_direct(app->arg));
    }
    if (const auto* lam = view_lam(term)) {
        return DirectTerm::lam(Pattern::var(lam->body.binder), free_to_direct(lam->body.body));
    }
    if (const auto* pi = view_pi(term)) {
        return DirectTerm::pi(Pattern::var(pi->codomain.binder), free_to_direct(pi->domain),
                              free_to_direct(pi->codomain.body));
    }
    if (view_universe(term)) {
        return DirectTerm::universe();
    }
    if (const auto* pair = view_pair(term)) {
        return DirectTerm::pair(free_to_direct(pair->left), free_to_direct(pair->right));
    }
    if (const auto* first = view_first(term)) {
        return DirectTerm::first(free_to_direct(first->term));
    }
    return DirectTerm::second(free_to_direct(view_second(term)->term));
}

FreeTerm direct_to_free(const DirectTerm& term) {
    struct Convert {
        FreeTerm operator()(const DirectTerm::Var& v) const { return mk_var(v.name); }
        FreeTerm operator()(const DirectTerm::Pair& p) const {
            return mk_pair(direct_to_free(p.left), direct_to_free(p.right));
        }
        FreeTerm operator()(const DirectTerm::First& f) const { return mk_first(direct_to_free(f.term)); }
        FreeTerm operator()(const DirectTerm::Second& s) const { return mk_second(direct_to_free(s.term)); }
        FreeTerm operator()(const DirectTerm::App& a) const {
            return mk_app(direct_to_free(a.fun), direct_to_free(a.arg));
        }
        FreeTerm operator()(const DirectTerm::Lam& l) const {
            return mk_lam(single_binder(l.pattern), direct_to_free(l.body));
        }
        FreeTerm operator()(const DirectTerm::Pi& p) const {
            return mk_pi(single_binder(p.pattern), direct_to_free(p.domain), direct_to_free(p.codomain));
        }
        FreeTerm operator()(const DirectTerm::Universe&) const { return mk_universe(); }
    };
    return std::visit(Convert{}, term.node());
}

std::string encode(const FreeTerm& term) {
    std::string out;
    encode_rec(out, term);
    return out;
}

}  // namespace scopefoil
