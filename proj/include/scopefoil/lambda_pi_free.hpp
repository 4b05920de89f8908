#pragma once

// λΠ with pairs on top of the free foil, assembled from two signatures
// (λΠ proper and pairs) joined by a signature sum.

#include <string>
#include <type_traits>
#include <utility>
#include <variant>

#include "scopefoil/direct.hpp"
#include "scopefoil/free_foil.hpp"

namespace scopefoil {

template <class Scoped, class Term>
struct LambdaPiF {
    struct App {
        Term fun;
        Term arg;
        friend bool operator==(const App&, const App&) = default;
    };
    struct Lam {
        Scoped body;
        friend bool operator==(const Lam&, const Lam&) = default;
    };
    struct Pi {
        Term domain;
        Scoped codomain;
        friend bool operator==(const Pi&, const Pi&) = default;
    };
    struct Universe {
        friend bool operator==(const Universe&, const Universe&) = default;
    };

    std::variant<App, Lam, Pi, Universe> value;

    friend bool operator==(const LambdaPiF&, const LambdaPiF&) = default;

    template <typename OnScoped, typename OnTerm>
    friend auto map_node(const LambdaPiF& node, OnScoped&& on_scoped, OnTerm&& on_term) {
        using S = std::invoke_result_t<OnScoped&, const Scoped&>;
        using T = std::invoke_result_t<OnTerm&, const Term&>;
        using Out = LambdaPiF<S, T>;
        return std::visit(
            [&](const auto& n) -> Out {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, App>) {
                    T fun = on_term(n.fun);
                    T arg = on_term(n.arg);
                    return Out{typename Out::App{std::move(fun), std::move(arg)}};
                } else if constexpr (std::is_same_v<N, Lam>) {
                    return Out{typename Out::Lam{on_scoped(n.body)}};
                } else if constexpr (std::is_same_v<N, Pi>) {
                    T domain = on_term(n.domain);
                    S codomain = on_scoped(n.codomain);
                    return Out{typename Out::Pi{std::move(domain), std::move(codomain)}};
                } else {
                    return Out{typename Out::Universe{}};
                }
            },
            node.value);
    }
};

template <class Scoped, class Term>
struct PairF {
    struct Pair {
        Term left;
        Term right;
        friend bool operator==(const Pair&, const Pair&) = default;
    };
    struct First {
        Term term;
        friend bool operator==(const First&, const First&) = default;
    };
    struct Second {
        Term term;
        friend bool operator==(const Second&, const Second&) = default;
    };

    std::variant<Pair, First, Second> value;

    friend bool operator==(const PairF&, const PairF&) = default;

    template <typename OnScoped, typename OnTerm>
    friend auto map_node(const PairF& node, OnScoped&&, OnTerm&& on_term) {
        using T = std::invoke_result_t<OnTerm&, const Term&>;
        // PairF has no scoped children, so the scoped sort is carried as a
        // phantom and its result type follows the mapping function.
        using S = std::invoke_result_t<OnScoped&, const Scoped&>;
        using Out = PairF<S, T>;
        return std::visit(
            [&](const auto& n) -> Out {
                using N = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<N, Pair>) {
                    T left = on_term(n.left);
                    T right = on_term(n.right);
                    return Out{typename Out::Pair{std::move(left), std::move(right)}};
                } else if constexpr (std::is_same_v<N, First>) {
                    return Out{typename Out::First{on_term(n.term)}};
                } else {
                    return Out{typename Out::Second{on_term(n.term)}};
                }
            },
            node.value);
    }
};

/// Sum of two signatures: a node is a node of either.
template <template <class, class> class F, template <class, class> class G>
struct SigSum {
    template <class Scoped, class Term>
    struct Node {
        std::variant<F<Scoped, Term>, G<Scoped, Term>> value;

        friend bool operator==(const Node&, const Node&) = default;

        template <typename OnScoped, typename OnTerm>
        friend auto map_node(const Node& node, OnScoped&& on_scoped, OnTerm&& on_term) {
            using S = std::invoke_result_t<OnScoped&, const Scoped&>;
            using T = std::invoke_result_t<OnTerm&, const Term&>;
            using Out = typename SigSum::template Node<S, T>;
            if (const auto* left = std::get_if<0>(&node.value)) {
                return Out{std::variant<F<S, T>, G<S, T>>{std::in_place_index<0>,
                                                          map_node(*left, on_scoped, on_term)}};
            }
            return Out{std::variant<F<S, T>, G<S, T>>{
                std::in_place_index<1>, map_node(std::get<1>(node.value), on_scoped, on_term)}};
        }
    };
};

template <class Scoped, class Term>
using LambdaPiPairF = typename SigSum<LambdaPiF, PairF>::template Node<Scoped, Term>;

using FreeTerm = AST<LambdaPiPairF>;
using FreeScoped = ScopedAST<LambdaPiPairF>;
using FreeSubst = Subst<FreeTerm>;
using FreeLambdaPiNode = LambdaPiF<FreeScoped, FreeTerm>;
using FreePairNode = PairF<FreeScoped, FreeTerm>;

static_assert(Signature<LambdaPiPairF>);

// Smart constructors.
[[nodiscard]] FreeTerm mk_var(Name name);
[[nodiscard]] FreeTerm mk_app(FreeTerm fun, FreeTerm arg);
/// `body` lives in the inner scope of `binder`.
[[nodiscard]] FreeTerm mk_lam(NameBinder binder, FreeTerm body);
[[nodiscard]] FreeTerm mk_pi(NameBinder binder, FreeTerm domain, FreeTerm codomain);
[[nodiscard]] FreeTerm mk_universe();
[[nodiscard]] FreeTerm mk_pair(FreeTerm left, FreeTerm right);
[[nodiscard]] FreeTerm mk_first(FreeTerm term);
[[nodiscard]] FreeTerm mk_second(FreeTerm term);

// Views: null unless the term has that shape.
[[nodiscard]] const FreeLambdaPiNode::App* view_app(const FreeTerm& term);
[[nodiscard]] const FreeLambdaPiNode::Lam* view_lam(const FreeTerm& term);
[[nodiscard]] const FreeLambdaPiNode::Pi* view_pi(const FreeTerm& term);
[[nodiscard]] bool view_universe(const FreeTerm& term);
[[nodiscard]] const FreePairNode::Pair* view_pair(const FreeTerm& term);
[[nodiscard]] const FreePairNode::First* view_first(const FreeTerm& term);
[[nodiscard]] const FreePairNode::Second* view_second(const FreeTerm& term);

[[nodiscard]] FreeTerm whnf_free(const Scope& scope, const FreeTerm& term, StepBudget& budget);
[[nodiscard]] FreeTerm whnf_free(const Scope& scope, const FreeTerm& term);

/// Normal-order full normalization.
[[nodiscard]] FreeTerm nf_free(const Scope& scope, const FreeTerm& term, StepBudget& budget);
[[nodiscard]] FreeTerm nf_free(const Scope& scope, const FreeTerm& term);

[[nodiscard]] bool is_head_normal(const FreeTerm& term);
[[nodiscard]] bool is_normal(const FreeTerm& term);

/// Converts to the direct representation; single binders become variable patterns.
[[nodiscard]] DirectTerm free_to_direct(const FreeTerm& term);
/// Inverse of free_to_direct(). Throws UnsupportedPattern on wildcard or pair patterns.
[[nodiscard]] FreeTerm direct_to_free(const DirectTerm& term);

/// Canonical encoding, byte-compatible with encode(DirectTerm) on the
/// single-binder fragment.
[[nodiscard]] std::string encode(const FreeTerm& term);

}  // namespace scopefoil
