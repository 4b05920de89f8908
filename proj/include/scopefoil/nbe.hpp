#pragma once

// Normalization by evaluation for the free-foil λΠ terms. Terms evaluate to
// values whose binders are closures (environment plus unevaluated body);
// normal forms are read back by applying closures to fresh neutral variables.
//
// Arguments and pair components are evaluated on demand and memoized, so a
// term has a normal form here exactly when it has one under normal order.
// Values memoize in place and must not be shared across threads.

#include <memory>
#include <optional>
#include <variant>

#include "scopefoil/error.hpp"
#include "scopefoil/intmap.hpp"
#include "scopefoil/lambda_pi_free.hpp"

namespace scopefoil::nbe {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

class Thunk;
using ThunkPtr = std::shared_ptr<Thunk>;

/// Values of captured variables. Names without an entry evaluate to neutral variables.
using Env = IntMap<ThunkPtr>;

struct Elim {
    enum class Kind { App, First, Second };
    Kind kind;
    /// Argument of an App elimination, null otherwise.
    ThunkPtr arg;
};

/// Eliminations applied to a neutral head, most recent first.
struct SpineCell {
    Elim elim;
    std::shared_ptr<const SpineCell> rest;
};
using Spine = std::shared_ptr<const SpineCell>;

struct Value {
    /// A variable, or a value that cannot be eliminated the way it was
    /// (such as a pair applied to an argument), under a spine of eliminations.
    struct Neutral {
        std::variant<Name, ValuePtr> head;
        Spine spine;
    };
    struct Lam {
        Env env;
        NameBinder binder;
        FreeTerm body;
    };
    struct Pi {
        Env env;
        ValuePtr domain;
        NameBinder binder;
        FreeTerm body;
    };
    struct Pair {
        ThunkPtr left;
        ThunkPtr right;
    };
    struct Universe {};

    std::variant<Neutral, Lam, Pi, Pair, Universe> node;
};

/// A value evaluated at most once, on first demand.
class Thunk {
public:
    static ThunkPtr ready(ValuePtr value);
    static ThunkPtr delayed(Env env, FreeTerm term);
    static ThunkPtr projection(ThunkPtr source, Elim::Kind kind);

    const ValuePtr& force(StepBudget& budget);

private:
    struct Delayed {
        Env env;
        FreeTerm term;
    };
    struct Projection {
        ThunkPtr source;
        Elim::Kind kind;
    };

    explicit Thunk(std::variant<ValuePtr, Delayed, Projection> state) : state_(std::move(state)) {}

    std::variant<ValuePtr, Delayed, Projection> state_;
};

[[nodiscard]] ValuePtr eval(const Env& env, const FreeTerm& term, StepBudget& budget);
[[nodiscard]] ValuePtr eval(const Env& env, const FreeTerm& term);

/// Reads a value back as a normal form in `scope`, which must contain every
/// free name of the value.
[[nodiscard]] FreeTerm quote(const Scope& scope, const ValuePtr& value, StepBudget& budget);
[[nodiscard]] FreeTerm quote(const Scope& scope, const ValuePtr& value);

[[nodiscard]] FreeTerm nf_nbe(const Scope& scope, const FreeTerm& term, StepBudget& budget);
[[nodiscard]] FreeTerm nf_nbe(const Scope& scope, const FreeTerm& term);

}  // namespace scopefoil::nbe

namespace scopefoil {
using nbe::nf_nbe;
}
