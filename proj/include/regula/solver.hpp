// regula: bracketing root finders with convergence diagnostics
// Copyright 2026 The regula Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "regula/types.hpp"

namespace regula {

/// The false-position point of a bracket: the x-intercept of the chord
/// through (u, f(u)) and (v, f(v)),
///
///     x = (u * fv - v * fu) / (fv - fu).
///
/// In exact arithmetic this lies strictly inside (u, v). Floating-point
/// rounding can push it onto or past an endpoint; the raw value is returned
/// either way and the caller decides what to do.
double rf_point(const Bracket& b);

/// One false-position step.
///
/// Computes rf_point, evaluates f there and keeps the half interval that
/// still changes sign. The sign test compares extracted signs rather than
/// the product f(x)*f(u); an exact zero terminates with Side::ExactRoot.
///
/// If the interpolated point is not strictly interior and `fallback_enabled`
/// is set, the midpoint is substituted and the step is marked
/// Side::FallbackBisect. Returns std::nullopt when no strictly interior
/// point exists at all (the bracket is at floating-point resolution), or
/// when fallback is disabled and the interpolated point is not interior.
///
/// Throws NonFiniteEvaluationError if f(x) is NaN or infinite.
std::optional<StepOutcome> rf_step(const Bracket& b, const Evaluator& f,
                                   bool fallback_enabled = true);

/// Run false position on [a, b] until a policy criterion fires.
///
/// If f vanishes at a or b the endpoint is returned immediately with
/// Termination::EndpointRoot and an empty trace. Otherwise f(a) and f(b)
/// must have opposite signs (NoSignChangeError if not) and every step is
/// recorded. The trace also stores the n = 0 convention point: x_0 = b when
/// sign(f(x_1)) equals sign(f(a)), else x_0 = a.
///
/// An iterate with f(x_n) == 0 halts the run at once; iterating further
/// would only repeat the same point.
SolveResult solve(const Evaluator& f, double a, double b,
                  const SolvePolicy& policy = {});

namespace detail {

/// Produces the next step outcome for a given bracket, or nullopt when the
/// bracket cannot be refined further.
using Stepper = std::function<std::optional<StepOutcome>(const Bracket&, const Evaluator&)>;

/// Sign-test bookkeeping shared by every step kind: exact zero, replaced
/// side, successor bracket. Throws NonFiniteEvaluationError on NaN/inf fx.
StepOutcome classify_point(const Bracket& b, double x, double fx, bool fallback);

/// Shared driver: endpoint-zero short circuit, sign check, per-step
/// recording, x_0 convention, stopping policy. All bracketing methods
/// funnel through here so their traces are directly comparable.
SolveResult run_bracketing(MethodId method, const Evaluator& f, double a, double b,
                           const SolvePolicy& policy, const Stepper& step);

} // namespace detail

} // namespace regula
