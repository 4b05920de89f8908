#include "support.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "scopefoil/bench.hpp"
#include "scopefoil/nbe.hpp"
#include "scopefoil/syntax.hpp"

namespace scopefoil::testing {

namespace {

constexpr std::array<const char*, 10> kIdents = {"x", "y", "z", "f", "g", "a", "b", "x1", "y'", "foo_bar"};

class SurfaceGen {
public:
    SurfaceGen(Rng& rng, bool closed) : rng_(rng), closed_(closed) {}

    NaiveTerm term(std::size_t budget) {
        if (budget <= 1) {
            return leaf();
        }
        switch (rng_.below(7)) {
            case 0: return leaf();
            case 1: {
                const std::size_t left = 1 + rng_.below(budget - 1);
                NaiveTerm fun = term(left);
                return NaiveTerm::app(std::move(fun), term(std::max<std::size_t>(1, budget - 1 - left)));
            }
            case 2:
            case 3: {
                NaivePattern pattern = this->pattern(rng_.below(3));
                return NaiveTerm::lam(pattern, under(pattern, budget - 1));
            }
            case 4: {
                const std::size_t left = 1 + rng_.below(budget - 1);
                NaiveTerm domain = term(left);
                NaivePattern pattern = this->pattern(rng_.below(2));
                return NaiveTerm::pi(pattern, std::move(domain), under(pattern, std::max<std::size_t>(1, budget - 1 - left)));
            }
            case 5: {
                const std::size_t left = 1 + rng_.below(budget - 1);
                NaiveTerm first = term(left);
                return NaiveTerm::pair(std::move(first), term(std::max<std::size_t>(1, budget - 1 - left)));
            }
            default:
                return rng_.chance(50) ? NaiveTerm::first(term(budget - 1)) : NaiveTerm::second(term(budget - 1));
        }
    }

private:
    NaiveTerm leaf() {
        if (closed_) {
            if (bound_.empty() || rng_.chance(10)) {
                return NaiveTerm::universe();
            }
            return NaiveTerm::var(bound_[rng_.below(bound_.size())]);
        }
        if (rng_.chance(10)) {
            return NaiveTerm::universe();
        }
        return NaiveTerm::var(VarIdent{kIdents[rng_.below(kIdents.size())]});
    }

    NaiveTerm under(const NaivePattern& pattern, std::size_t budget) {
        const std::size_t mark = bound_.size();
        for (VarIdent& id : pattern_idents(pattern)) {
            bound_.push_back(std::move(id));
        }
        NaiveTerm body = term(budget);
        bound_.resize(mark);
        return body;
    }

    NaivePattern pattern(std::size_t depth) {
        std::set<std::string> used;
        return pattern_rec(depth, used);
    }

    NaivePattern pattern_rec(std::size_t depth, std::set<std::string>& used) {
        if (depth > 0 && rng_.chance(40)) {
            NaivePattern left = pattern_rec(depth - 1, used);
            return NaivePattern::pair(std::move(left), pattern_rec(depth - 1, used));
        }
        if (rng_.chance(15)) {
            return NaivePattern::wildcard();
        }
        const std::string ident = kIdents[rng_.below(kIdents.size())];
        if (!used.insert(ident).second) {
            return NaivePattern::wildcard();
        }
        return NaivePattern::var(VarIdent{ident});
    }

    Rng& rng_;
    bool closed_;
    std::vector<VarIdent> bound_;
};

class DirectGen {
public:
    DirectGen(Rng& rng, bool single_binders) : rng_(rng), single_(single_binders) {}

    DirectTerm term(const Scope& scope, std::size_t budget) {
        if (budget <= 1) {
            return leaf(scope);
        }
        switch (rng_.below(single_ ? 6 : 7)) {
            case 0: return leaf(scope);
            case 1: {
                const std::size_t left = 1 + rng_.below(budget - 1);
                DirectTerm fun = term(scope, left);
                return DirectTerm::app(std::move(fun), term(scope, rest(budget, left)));
            }
            case 2: {
                auto [pattern, inner] = binder_pattern(scope);
                return DirectTerm::lam(std::move(pattern), term(inner, budget - 1));
            }
            case 3: {
                const std::size_t left = 1 + rng_.below(budget - 1);
                DirectTerm domain = term(scope, left);
                auto [pattern, inner] = binder_pattern(scope);
                return DirectTerm::pi(std::move(pattern), std::move(domain), term(inner, rest(budget, left)));
            }
            case 4: {
                const std::size_t left = 1 + rng_.below(budget - 1);
                DirectTerm first = term(scope, left);
                return DirectTerm::pair(std::move(first), term(scope, rest(budget, left)));
            }
            case 5:
                return rng_.chance(50) ? DirectTerm::first(term(scope, budget - 1))
                                       : DirectTerm::second(term(scope, budget - 1));
            default: {
                auto [pattern, inner] = nested_pattern(scope, 1 + rng_.below(3));
                return DirectTerm::lam(std::move(pattern), term(inner, budget - 1));
            }
        }
    }

private:
    static std::size_t rest(std::size_t budget, std::size_t left) {
        return std::max<std::size_t>(1, budget - 1 - left);
    }

    DirectTerm leaf(const Scope& scope) {
        if (scope.empty() || rng_.chance(15)) {
            return DirectTerm::universe();
        }
        const std::vector<RawName> members = scope.members();
        return DirectTerm::var(Name{members[rng_.below(members.size())]});
    }

    NameBinder gap_binder(const Scope& scope) { return NameBinder{fresh_raw_name(scope) + rng_.below(3)}; }

    std::pair<Pattern, Scope> binder_pattern(const Scope& scope) {
        if (single_) {
            const NameBinder binder = gap_binder(scope);
            return {Pattern::var(binder), extend_scope(binder, scope)};
        }
        return nested_pattern(scope, rng_.below(3));
    }

    std::pair<Pattern, Scope> nested_pattern(const Scope& scope, std::size_t depth) {
        if (depth > 0 && rng_.chance(50)) {
            auto [left, middle] = nested_pattern(scope, depth - 1);
            auto [right, inner] = nested_pattern(middle, depth - 1);
            return {Pattern::pair(std::move(left), std::move(right)), std::move(inner)};
        }
        if (rng_.chance(20)) {
            return {Pattern::wildcard(), scope};
        }
        const NameBinder binder = gap_binder(scope);
        return {Pattern::var(binder), extend_scope(binder, scope)};
    }

    Rng& rng_;
    bool single_;
};

Pattern pattern_rec(Rng& rng, std::size_t depth, RawName range, std::set<RawName>& used) {
    if (depth > 0 && rng.chance(45)) {
        Pattern left = pattern_rec(rng, depth - 1, range, used);
        return Pattern::pair(std::move(left), pattern_rec(rng, depth - 1, range, used));
    }
    if (rng.chance(25)) {
        return Pattern::wildcard();
    }
    const RawName raw = rng.below(range);
    if (!used.insert(raw).second) {
        return Pattern::wildcard();
    }
    return Pattern::var(NameBinder{raw});
}

}  // namespace

NaiveTerm random_surface_term(Rng& rng, std::size_t budget) { return SurfaceGen(rng, false).term(budget); }

NaiveTerm random_closed_term(Rng& rng, std::size_t budget) { return SurfaceGen(rng, true).term(budget); }

DirectTerm random_direct_term(Rng& rng, const Scope& scope, std::size_t budget, bool single_binders) {
    return DirectGen(rng, single_binders).term(scope, budget);
}

Pattern random_pattern(Rng& rng, std::size_t max_depth, RawName name_range) {
    std::set<RawName> used;
    return pattern_rec(rng, max_depth, name_range, used);
}

std::size_t pattern_depth(const Pattern& pattern) {
    if (const auto* pair = std::get_if<Pattern::Pair>(&pattern.node())) {
        return 1 + std::max(pattern_depth(pair->left), pattern_depth(pair->right));
    }
    return 0;
}

FiveWay normalize_five_ways(const NaiveTerm& term) {
    const std::vector<VarIdent> free = free_idents(term);
    std::vector<std::pair<VarIdent, Name>> table;
    std::vector<RawName> raws;
    for (std::size_t i = 0; i < free.size(); ++i) {
        table.emplace_back(free[i], Name{i});
        raws.push_back(i);
    }
    const Scope scope = Scope::from_members(raws);
    const RawNaming naming = [&](RawName raw) { return raw < free.size() ? free[raw] : default_ident(raw); };

    const DirectTerm direct = to_foil_term(table_renaming(table), scope, term);
    const FreeTerm free_term = direct_to_free(direct);
    return FiveWay{
        to_debruijn(nf_named(term)),
        nf_debruijn(to_debruijn(term)),
        to_debruijn(nf_direct(scope, direct), naming),
        to_debruijn(nf_free(scope, free_term), naming),
        to_debruijn(nf_nbe(scope, free_term), naming),
    };
}

std::optional<std::string> five_way_disagreement(const FiveWay& r) {
    const std::array<std::pair<const char*, const DBTerm*>, 5> all = {{
        {"named", &r.named},
        {"debruijn", &r.debruijn},
        {"direct", &r.direct},
        {"free", &r.free},
        {"nbe", &r.nbe},
    }};
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            if (!alpha_eq(*all[i].second, *all[j].second)) {
                return std::string(all[i].first) + " gave " + describe(*all[i].second) + " but " + all[j].first +
                       " gave " + describe(*all[j].second);
            }
        }
    }
    return std::nullopt;
}

std::vector<NaiveTerm> differential_corpus() {
    constexpr std::uint64_t kSeed = 0x5eed;
    std::vector<NaiveTerm> terms;
    terms.reserve(500);
    for (std::size_t i = 0; i < 500; ++i) {
        terms.push_back(gen_random(derive_seed(kSeed, i), 1 + i % 15));
    }
    return terms;
}

std::vector<ChurchCase> church_corpus() {
    return {
        {"plus(2,2)", church_plus(2, 2), 4},
        {"mult(3,3)", church_mult(3, 3), 9},
        {"fact(4)", church_fact(4), 24},
    };
}

std::string describe(const DBTerm& term) { return pretty_term(from_debruijn(term)); }

}  // namespace scopefoil::testing
