#include "scopefoil/pattern.hpp"

namespace scopefoil {

namespace {

constexpr std::uint8_t kTagWildcard = 0x10;
constexpr std::uint8_t kTagVar = 0x11;
constexpr std::uint8_t kTagPair = 0x12;

void collect_names(const Pattern& pattern, std::vector<RawName>& out) {
    const auto& node = pattern.node();
    if (const auto* var = std::get_if<Pattern::Var>(&node)) {
        out.push_back(var->binder.raw);
    } else if (const auto* pair = std::get_if<Pattern::Pair>(&node)) {
        collect_names(pair->left, out);
        collect_names(pair->right, out);
    }
}

}  // namespace

Pattern::Pattern(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

Pattern::Pattern() : Pattern(wildcard()) {}

Pattern Pattern::wildcard() {
    static const Pattern shared{Node{Wildcard{}}};
    return shared;
}

Pattern Pattern::var(NameBinder binder) { return Pattern(Node{Var{binder}}); }

Pattern Pattern::pair(Pattern left, Pattern right) {
    return Pattern(Node{Pair{std::move(left), std::move(right)}});
}

bool operator==(const Pattern& a, const Pattern& b) {
    return a.node_ == b.node_ || *a.node_ == *b.node_;
}

std::vector<RawName> names_of_pattern(const Pattern& pattern) {
    std::vector<RawName> out;
    collect_names(pattern, out);
    return out;
}

Scope extend_scope_pattern(const Pattern& pattern, const Scope& scope) {
    Scope out = scope;
    for (RawName raw : names_of_pattern(pattern)) {
        out = extend_scope(NameBinder{raw}, out);
    }
    return out;
}

void encode_pattern(std::string& out, const Pattern& pattern) {
    const auto& node = pattern.node();
    if (std::holds_alternative<Pattern::Wildcard>(node)) {
        encoding::put_tag(out, kTagWildcard);
    } else if (const auto* var = std::get_if<Pattern::Var>(&node)) {
        encoding::put_tag(out, kTagVar);
        encoding::put_varint(out, var->binder.raw);
    } else {
        const auto& pair = std::get<Pattern::Pair>(node);
        encoding::put_tag(out, kTagPair);
        encode_pattern(out, pair.left);
        encode_pattern(out, pair.right);
    }
}

}  // namespace scopefoil
