#include "scopefoil/naive.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

namespace scopefoil {

namespace {

template <typename... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

constexpr std::array<std::string_view, 7> kKeywords = {"lam", "fun", "check", "compute", "first", "second", "U"};

void collect_pattern(const NaivePattern& pattern, std::vector<VarIdent>& out) {
    std::visit(Overloaded{
                   [](const NaivePattern::Wildcard&) {},
                   [&](const NaivePattern::Var& v) { out.push_back(v.ident); },
                   [&](const NaivePattern::Pair& p) {
                       collect_pattern(p.left, out);
                       collect_pattern(p.right, out);
                   },
               },
               pattern.node());
}

// `bound` is a multiset stack of identifiers in scope.
void collect_free(const NaiveTerm& term, std::vector<VarIdent>& bound, std::set<VarIdent>& out) {
    auto under = [&](const NaivePattern& pattern, const NaiveTerm& body) {
        const std::size_t mark = bound.size();
        collect_pattern(pattern, bound);
        collect_free(body, bound, out);
        bound.resize(mark);
    };
    std::visit(Overloaded{
                   [&](const NaiveTerm::Var& v) {
                       if (std::find(bound.begin(), bound.end(), v.ident) == bound.end()) {
                           out.insert(v.ident);
                       }
                   },
                   [&](const NaiveTerm::Pair& p) {
                       collect_free(p.left, bound, out);
                       collect_free(p.right, bound, out);
                   },
                   [&](const NaiveTerm::First& f) { collect_free(f.term, bound, out); },
                   [&](const NaiveTerm::Second& s) { collect_free(s.term, bound, out); },
                   [&](const NaiveTerm::App& a) {
                       collect_free(a.fun, bound, out);
                       collect_free(a.arg, bound, out);
                   },
                   [&](const NaiveTerm::Lam& l) { under(l.pattern, l.body.term); },
                   [&](const NaiveTerm::Pi& p) {
                       collect_free(p.domain, bound, out);
                       under(p.pattern, p.codomain.term);
                   },
                   [](const NaiveTerm::Universe&) {},
               },
               term.node());
}

}  // namespace

bool is_keyword(std::string_view text) {
    return std::find(kKeywords.begin(), kKeywords.end(), text) != kKeywords.end();
}

bool is_valid_ident(std::string_view text) {
    if (text.empty() || std::isalpha(static_cast<unsigned char>(text.front())) == 0) {
        return false;
    }
    const bool tail_ok = std::all_of(text.begin() + 1, text.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
    });
    return tail_ok && !is_keyword(text);
}

NaivePattern::NaivePattern(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}
NaivePattern NaivePattern::wildcard() {
    static const NaivePattern shared{Node{Wildcard{}}};
    return shared;
}
NaivePattern NaivePattern::var(VarIdent ident) { return NaivePattern(Node{Var{std::move(ident)}}); }
NaivePattern NaivePattern::pair(NaivePattern left, NaivePattern right) {
    return NaivePattern(Node{Pair{std::move(left), std::move(right)}});
}
bool operator==(const NaivePattern& a, const NaivePattern& b) {
    return a.node_ == b.node_ || *a.node_ == *b.node_;
}

std::vector<VarIdent> pattern_idents(const NaivePattern& pattern) {
    std::vector<VarIdent> out;
    collect_pattern(pattern, out);
    return out;
}

NaiveTerm::NaiveTerm(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}
NaiveTerm NaiveTerm::var(VarIdent ident) { return NaiveTerm(Node{Var{std::move(ident)}}); }
NaiveTerm NaiveTerm::pair(NaiveTerm left, NaiveTerm right) {
    return NaiveTerm(Node{Pair{std::move(left), std::move(right)}});
}
NaiveTerm NaiveTerm::first(NaiveTerm term) { return NaiveTerm(Node{First{std::move(term)}}); }
NaiveTerm NaiveTerm::second(NaiveTerm term) { return NaiveTerm(Node{Second{std::move(term)}}); }
NaiveTerm NaiveTerm::app(NaiveTerm fun, NaiveTerm arg) {
    return NaiveTerm(Node{App{std::move(fun), std::move(arg)}});
}
NaiveTerm NaiveTerm::lam(NaivePattern pattern, NaiveTerm body) {
    return NaiveTerm(Node{Lam{std::move(pattern), NaiveScopedTerm{std::move(body)}}});
}
NaiveTerm NaiveTerm::pi(NaivePattern pattern, NaiveTerm domain, NaiveTerm codomain) {
    return NaiveTerm(Node{Pi{std::move(pattern), std::move(domain), NaiveScopedTerm{std::move(codomain)}}});
}
NaiveTerm NaiveTerm::universe() {
    static const NaiveTerm shared{Node{Universe{}}};
    return shared;
}
bool operator==(const NaiveTerm& a, const NaiveTerm& b) { return a.node_ == b.node_ || *a.node_ == *b.node_; }

std::vector<VarIdent> free_idents(const NaiveTerm& term) {
    std::vector<VarIdent> bound;
    std::set<VarIdent> out;
    collect_free(term, bound, out);
    return {out.begin(), out.end()};
}

std::size_t term_size(const NaiveTerm& term) {
    return 1 + std::visit(Overloaded{
                              [](const NaiveTerm::Var&) -> std::size_t { return 0; },
                              [](const NaiveTerm::Universe&) -> std::size_t { return 0; },
                              [](const NaiveTerm::Pair& p) { return term_size(p.left) + term_size(p.right); },
                              [](const NaiveTerm::First& f) { return term_size(f.term); },
                              [](const NaiveTerm::Second& s) { return term_size(s.term); },
                              [](const NaiveTerm::App& a) { return term_size(a.fun) + term_size(a.arg); },
                              [](const NaiveTerm::Lam& l) { return term_size(l.body.term); },
                              [](const NaiveTerm::Pi& p) { return term_size(p.domain) + term_size(p.codomain.term); },
                          },
                          term.node());
}

}  // namespace scopefoil
