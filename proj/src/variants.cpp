// regula: bracketing root finders with convergence diagnostics
// Copyright 2026 The regula Authors.
// SPDX-License-Identifier: Apache-2.0

#include "regula/variants.hpp"

#include <cmath>
#include <numeric>

namespace regula {

namespace {

std::optional<StepOutcome> bisect_step(const Bracket& b, const Evaluator& f) {
    const double x = std::midpoint(b.u, b.v);
    if (!(b.u < x && x < b.v)) return std::nullopt;
    return detail::classify_point(b, x, f(x), false);
}

enum class Weighting { Illinois, AndersonBjorck };

std::optional<StepOutcome> down_weighted_step(const Bracket& b, const Evaluator& f,
                                              DownWeightState& state,
                                              bool fallback_enabled, Weighting mode) {
    double x = (b.u * state.gv - b.v * state.gu) / (state.gv - state.gu);
    bool fallback = false;
    if (!(b.u < x && x < b.v)) {
        if (!fallback_enabled) return std::nullopt;
        x = std::midpoint(b.u, b.v);
        if (!(b.u < x && x < b.v)) return std::nullopt;
        fallback = true;
    }
    auto out = detail::classify_point(b, x, f(x), fallback);
    if (!out.next) return out;

    // Which side the true values replaced, fallback or not.
    const bool replaced_lower = sign_of(out->fx) == sign_of(b.fu);
    if (replaced_lower) {
        const bool repeat = state.last_side == Side::ReplacedLower;
        state.gu = out->fx;
        if (repeat)
            state.gv *= mode == Weighting::Illinois
                            ? 0.5
                            : anderson_bjorck_factor(out->fx, b.fu);
        state.last_side = Side::ReplacedLower;
    } else {
        const bool repeat = state.last_side == Side::ReplacedUpper;
        state.gv = out->fx;
        if (repeat)
            state.gu *= mode == Weighting::Illinois
                            ? 0.5
                            : anderson_bjorck_factor(out->fx, b.fv);
        state.last_side = Side::ReplacedUpper;
    }
    return out;
}

} // namespace

double anderson_bjorck_factor(double fx_new, double fx_prev) {
    const double m = 1.0 - fx_new / fx_prev;
    return m > 0.0 ? m : 0.5;
}

std::optional<StepOutcome> illinois_step(const Bracket& b, const Evaluator& f,
                                         DownWeightState& state, bool fallback_enabled) {
    return down_weighted_step(b, f, state, fallback_enabled, Weighting::Illinois);
}

std::optional<StepOutcome> anderson_bjorck_step(const Bracket& b, const Evaluator& f,
                                                DownWeightState& state,
                                                bool fallback_enabled) {
    return down_weighted_step(b, f, state, fallback_enabled, Weighting::AndersonBjorck);
}

SolveResult bisect(const Evaluator& f, double a, double b, const SolvePolicy& policy) {
    return detail::run_bracketing(MethodId::Bisection, f, a, b, policy, bisect_step);
}

SolveResult solve_with(MethodId method, const Evaluator& f, double a, double b,
                       const SolvePolicy& policy) {
    switch (method) {
    case MethodId::RegulaFalsi:
        return solve(f, a, b, policy);
    case MethodId::Bisection:
        return bisect(f, a, b, policy);
    case MethodId::Illinois:
    case MethodId::AndersonBjorck: {
        // State outlives the per-step lambda; initialised lazily so the
        // working values start from the first bracket the driver builds.
        auto state = std::make_shared<std::optional<DownWeightState>>();
        auto stepper = [method, state, &policy](const Bracket& br, const Evaluator& fn) {
            if (!*state) *state = DownWeightState::from(br);
            return method == MethodId::Illinois
                       ? illinois_step(br, fn, **state, policy.fallback_enabled)
                       : anderson_bjorck_step(br, fn, **state, policy.fallback_enabled);
        };
        return detail::run_bracketing(method, f, a, b, policy, stepper);
    }
    }
    throw std::invalid_argument("unknown method");
}

} // namespace regula
