// regula: bracketing root finders with convergence diagnostics
// Copyright 2026 The regula Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "regula/solver.hpp"

namespace regula {

/// Plain bisection with the shared trace format. Serves as the independent
/// root oracle: run it with zeroed tolerances and a generous cap and it
/// refines the bracket to floating-point resolution.
SolveResult bisect(const Evaluator& f, double a, double b,
                   const SolvePolicy& policy = {});

/// Working state for the down-weighting variants. `gu`/`gv` are the values
/// the interpolation sees; the sign test and the recorded trace always use
/// the true endpoint values.
struct DownWeightState {
    double gu = 0;
    double gv = 0;
    std::optional<Side> last_side;

    static DownWeightState from(const Bracket& b) { return {b.fu, b.fv, std::nullopt}; }
};

/// Illinois step: after two consecutive updates of the same side, the
/// retained endpoint's working value is halved. The first step on a fresh
/// bracket is identical to rf_step.
std::optional<StepOutcome> illinois_step(const Bracket& b, const Evaluator& f,
                                         DownWeightState& state,
                                         bool fallback_enabled = true);

/// Anderson-Bjorck step: like Illinois, but the retained endpoint's working
/// value is scaled by 1 - f(x_new)/f(x_prev), clamped to 1/2 when that
/// factor is not positive.
std::optional<StepOutcome> anderson_bjorck_step(const Bracket& b, const Evaluator& f,
                                                DownWeightState& state,
                                                bool fallback_enabled = true);

/// Scale factor used by anderson_bjorck_step, exposed for testing.
double anderson_bjorck_factor(double fx_new, double fx_prev);

/// Run any of the bracketing methods with the same policy and trace shape.
SolveResult solve_with(MethodId method, const Evaluator& f, double a, double b,
                       const SolvePolicy& policy = {});

} // namespace regula
