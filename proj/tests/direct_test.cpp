#include <gtest/gtest.h>

#include "scopefoil/bridge.hpp"
#include "scopefoil/direct.hpp"
#include "scopefoil/oracles.hpp"
#include "scopefoil/syntax.hpp"
#include "support/support.hpp"

using namespace scopefoil;

namespace {

DirectTerm v(RawName raw) { return DirectTerm::var(Name{raw}); }
Pattern pv(RawName raw) { return Pattern::var(NameBinder{raw}); }
DirectTerm lam(RawName raw, DirectTerm body) { return DirectTerm::lam(pv(raw), std::move(body)); }

DirectTerm closed(const char* text) { return to_foil_closed(parse_term(text)); }

}  // namespace

TEST(SubstDirect, AvoidsCaptureByRenamingBinder) {
    // (lam #1 . #0)[#0 := #1] in scope {1}: the binder must move off #1.
    const Scope scope = Scope::from_members({1});
    const DirectSubst subst = add_subst(identity_subst<DirectTerm>(), NameBinder{0}, v(1));
    const DirectTerm result = subst_direct(scope, subst, lam(1, v(0)));
    EXPECT_EQ(result, lam(2, v(1)));
}

TEST(SubstDirect, KeepsBindersThatDoNotClash) {
    const Scope scope = Scope::from_members({0});
    EXPECT_EQ(subst_direct(scope, identity_subst<DirectTerm>(), lam(3, DirectTerm::app(v(3), v(0)))),
              lam(3, DirectTerm::app(v(3), v(0))));
}

TEST(SubstDirect, OutputStaysInScope) {
    scopefoil::testing::Rng rng(31);
    const Scope scope = Scope::from_members({0, 1});
    for (int i = 0; i < 300; ++i) {
        const DirectTerm term = scopefoil::testing::random_direct_term(rng, scope, 1 + rng.below(25), false);
        const DirectSubst subst = add_subst(identity_subst<DirectTerm>(), NameBinder{0},
                                            scopefoil::testing::random_direct_term(rng, scope, 5, false));
        const DirectTerm result = subst_direct(scope, subst, term);
        EXPECT_NO_THROW(validate_scoped(scope, result));
        EXPECT_TRUE(free_names(result).subset_of(scope));
    }
}

TEST(MatchPattern, PairPatternsBindProjections) {
    const DirectSubst subst = match_pattern(Pattern::pair(pv(0), Pattern::pair(Pattern::wildcard(), pv(1))), v(9),
                                            identity_subst<DirectTerm>());
    EXPECT_EQ(lookup_subst(subst, Name{0}), DirectTerm::first(v(9)));
    EXPECT_EQ(lookup_subst(subst, Name{1}), DirectTerm::second(DirectTerm::second(v(9))));
}

TEST(WhnfDirect, ReducesOnlyTheHead) {
    const DirectTerm term = closed("(lam x . lam y . (lam z . z) x) U");
    const DirectTerm head = whnf_direct(Scope{}, term);
    EXPECT_TRUE(is_head_normal(head));
    EXPECT_FALSE(is_normal(head));
    EXPECT_TRUE(alpha_eq(head, closed("lam y . (lam z . z) U")));
}

TEST(WhnfDirect, ProjectsPairs) {
    EXPECT_EQ(whnf_direct(Scope{}, closed("second (U, lam x . x)")), closed("lam x . x"));
}

TEST(NfDirect, NormalizesUnderBinders) {
    const DirectTerm nf = nf_direct(Scope{}, closed("lam x . (lam y . y) x"));
    EXPECT_TRUE(is_normal(nf));
    EXPECT_TRUE(alpha_eq(nf, closed("lam x . x")));
}

TEST(NfDirect, PatternBetaUsesProjections) {
    EXPECT_TRUE(alpha_eq(nf_direct(Scope{}, closed("(lam (a, b) . (b, a)) (U, lam z . z)")),
                         closed("(lam z . z, U)")));
    const Scope scope = Scope::from_members({0});
    const DirectTerm stuck = DirectTerm::app(DirectTerm::lam(Pattern::pair(pv(1), pv(2)), v(1)), v(0));
    EXPECT_EQ(nf_direct(scope, stuck), DirectTerm::first(v(0)));
}

TEST(NfDirect, WildcardDiscardsArgument) {
    EXPECT_EQ(nf_direct(Scope{}, closed("(lam _ . U) (lam x . x x)")), DirectTerm::universe());
}

TEST(NfDirect, RefreshesShadowingBinders) {
    // Beta produces `lam #2 . lam #2 . #2` style shadowing; the result must
    // still be well scoped and alpha-equal to the oracle.
    const DirectTerm term = DirectTerm::app(lam(1, lam(2, v(1))), lam(2, v(2)));
    const DirectTerm nf = nf_direct(Scope{}, term);
    EXPECT_NO_THROW(validate_scoped(Scope{}, nf));
    EXPECT_TRUE(alpha_eq(to_debruijn(nf), nf_debruijn(to_debruijn(term))));
}

TEST(NfDirect, FuelExhaustionOnOmega) {
    const DirectTerm omega = closed("(lam x . x x) (lam x . x x)");
    StepBudget budget(200000);
    EXPECT_THROW((void)nf_direct(Scope{}, omega, budget), FuelExhausted);
    EXPECT_EQ(budget.used(), 200001u);
}

TEST(NfDirect, NormalOrderSkipsDivergentArgument) {
    EXPECT_TRUE(alpha_eq(nf_direct(Scope{}, closed("(lam x . lam y . y) ((lam x . x x) (lam x . x x))")),
                         closed("lam y . y")));
}

TEST(ValidateScoped, RejectsEscapingNames) {
    EXPECT_THROW(validate_scoped(Scope{}, v(0)), ScopeViolation);
    EXPECT_THROW(validate_scoped(Scope{}, DirectTerm::lam(Pattern::pair(pv(0), pv(0)), v(0))), ScopeViolation);
    EXPECT_NO_THROW(validate_scoped(Scope::from_members({0}), lam(0, v(0))));
    EXPECT_FALSE(is_distinct_scoped(Scope::from_members({0}), lam(0, v(0))));
    EXPECT_TRUE(is_distinct_scoped(Scope::from_members({0}), lam(1, v(0))));
}

TEST(EncodeDirect, TagsAndVarints) {
    EXPECT_EQ(encode(lam(1, DirectTerm::app(v(1), DirectTerm::universe()))),
              std::string("\x06\x11\x01\x05\x01\x01\x08"));
    EXPECT_EQ(term_size(lam(1, DirectTerm::app(v(1), DirectTerm::universe()))), 4u);
}

TEST(NfDirect, AgreesWithDeBruijnOracleOnRandomTerms) {
    const auto corpus = scopefoil::testing::differential_corpus();
    for (std::size_t i = 0; i < 100; ++i) {
        const DirectTerm term = to_foil_closed(corpus[i]);
        const DirectTerm nf = nf_direct(Scope{}, term);
        EXPECT_TRUE(is_normal(nf));
        EXPECT_TRUE(alpha_eq(to_debruijn(nf), nf_debruijn(to_debruijn(corpus[i])))) << pretty_term(corpus[i]);
    }
}
