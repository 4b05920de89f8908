#include "scopefoil/foil.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>

namespace scopefoil {

namespace {

bool default_debug_scopes() noexcept {
    if (const char* env = std::getenv("SCOPEFOIL_DEBUG_SCOPES")) {
        return std::strcmp(env, "0") != 0 && *env != '\0';
    }
#ifdef NDEBUG
    return false;
#else
    return true;
#endif
}

std::atomic<bool>& debug_flag() noexcept {
    static std::atomic<bool> flag{default_debug_scopes()};
    return flag;
}

}  // namespace

bool debug_scopes_enabled() noexcept { return debug_flag().load(std::memory_order_relaxed); }

void set_debug_scopes(bool enabled) noexcept { debug_flag().store(enabled, std::memory_order_relaxed); }

Scope Scope::from_members(const std::vector<RawName>& members) {
    Scope scope;
    for (RawName raw : members) {
        scope = scope.with(raw);
    }
    return scope;
}

Scope Scope::with(RawName raw) const {
    Scope out;
    out.members_ = members_.insert(raw, Unit{});
    out.max_raw_ = max_raw_ ? std::max(*max_raw_, raw) : raw;
    return out;
}

bool Scope::subset_of(const Scope& other) const {
    if (size() > other.size()) {
        return false;
    }
    bool ok = true;
    members_.for_each([&](RawName raw, const Unit&) { ok = ok && other.contains(raw); });
    return ok;
}

bool operator==(const Scope& a, const Scope& b) {
    return a.size() == b.size() && a.subset_of(b);
}

}  // namespace scopefoil
