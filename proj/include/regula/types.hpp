// regula: bracketing root finders with convergence diagnostics
// Copyright 2026 The regula Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "regula/errors.hpp"

namespace regula {

/// One-dimensional function under study. Must be pure and reentrant;
/// solves never share mutable state, so concurrent runs are safe.
using Evaluator = std::function<double(double)>;

/// Sign as -1, 0, +1. Used instead of products like f(x)*f(u), which can
/// underflow to zero or overflow.
inline int sign_of(double v) noexcept { return (v > 0.0) - (v < 0.0); }

/// What happened to the bracket in one iteration.
enum class Side : std::uint8_t {
    ReplacedLower,  ///< new point became the lower endpoint
    ReplacedUpper,  ///< new point became the upper endpoint
    ExactRoot,      ///< f vanished exactly at the new point
    FallbackBisect, ///< interpolated point left the interval, midpoint used
};

inline char side_letter(Side s) noexcept {
    switch (s) {
    case Side::ReplacedLower: return 'L';
    case Side::ReplacedUpper: return 'U';
    case Side::ExactRoot: return 'Z';
    case Side::FallbackBisect: return 'B';
    }
    return '?';
}

inline std::optional<Side> side_from_letter(char c) noexcept {
    switch (c) {
    case 'L': return Side::ReplacedLower;
    case 'U': return Side::ReplacedUpper;
    case 'Z': return Side::ExactRoot;
    case 'B': return Side::FallbackBisect;
    }
    return std::nullopt;
}

/// Why a solve stopped.
enum class Termination : std::uint8_t {
    ResidualMet,  ///< |f(x_n)| <= tol_residual
    StepMet,      ///< |x_n - x_{n-1}| <= tol_step * (1 + |x_n|)
    WidthMet,     ///< bracket width <= tol_width, or width at float resolution
    ExactRoot,    ///< f(x_n) == 0
    MaxIter,      ///< iteration cap reached
    EndpointRoot, ///< f vanished at a or b before any iteration
};

std::string to_string(Termination t);
std::optional<Termination> termination_from_string(const std::string& s);

/// Bracketing method selector.
enum class MethodId : std::uint8_t {
    RegulaFalsi,
    Bisection,
    Illinois,
    AndersonBjorck,
};

std::string to_string(MethodId m);
std::optional<MethodId> method_from_string(const std::string& s);

/// A sign-changing interval with cached endpoint values.
///
/// Invariants are enforced at construction: u < v, both values finite,
/// and sign(fu) * sign(fv) == -1. An exact zero at an endpoint must be
/// resolved by the caller before a Bracket exists.
struct Bracket {
    double u;
    double v;
    double fu;
    double fv;

    Bracket(double u_, double v_, double fu_, double fv_)
        : u(u_), v(v_), fu(fu_), fv(fv_) {
        if (!(u < v))
            throw std::invalid_argument("bracket endpoints must satisfy u < v");
        if (!std::isfinite(fu) || !std::isfinite(fv))
            throw std::invalid_argument("bracket endpoint values must be finite");
        if (sign_of(fu) * sign_of(fv) != -1)
            throw std::invalid_argument("bracket endpoint values must have opposite signs");
    }

    double width() const noexcept { return v - u; }
};

/// Result of one bracketing step.
///
/// `next` is empty exactly when side == ExactRoot. `fallback` is set when
/// the midpoint substitution fired; it can accompany ExactRoot if f happens
/// to vanish at the midpoint.
struct StepOutcome {
    double x;
    double fx;
    Side side;
    std::optional<Bracket> next;
    bool fallback = false;
};

/// Stopping policy. The method itself never needs one; everything here is
/// layered on top of the iteration.
///
/// Width-based stopping is disabled by default: the bracket width need not
/// shrink to zero even though the iterates converge, and a width criterion
/// would spin until the cap on such runs.
struct SolvePolicy {
    double tol_residual = 1e-12; ///< stop when |f(x_n)| <= tol_residual
    double tol_step = 1e-14;     ///< stop when |x_n - x_{n-1}| <= tol_step * (1 + |x_n|)
    double tol_width = 0.0;      ///< stop when v - u <= tol_width; 0 disables
    int max_iter = 10000;
    bool fallback_enabled = true;

    void validate() const {
        if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
        if (tol_residual < 0 || tol_step < 0 || tol_width < 0)
            throw std::invalid_argument("tolerances must be non-negative");
    }
};

/// Everything observable about one iteration. `u,v,fu,fv` describe the
/// incoming bracket; `x,fx` the new point; `r_emp` the width ratio realised
/// by the update (empty when the step produced no successor bracket) and
/// `r_closed` its closed form in endpoint values (genuine false-position
/// steps only).
struct IterationRecord {
    int n = 0;
    double u = 0, v = 0, fu = 0, fv = 0;
    double x = 0, fx = 0;
    Side side = Side::ReplacedLower;
    std::optional<double> r_emp;
    std::optional<double> r_closed;
    double width = 0; ///< v - u of the incoming bracket
    bool fallback = false;
};

/// The n = 0 convention point: the initial endpoint that survives the first
/// update. Kept for completeness; it is an endpoint, not an iterate, and
/// diagnostics skip it.
struct ConventionPoint {
    double x = 0;
    double fx = 0;
};

/// Full history of one solve.
struct Trace {
    MethodId method = MethodId::RegulaFalsi;
    double a = 0, b = 0;
    double fa = 0, fb = 0;
    std::optional<ConventionPoint> x0;
    std::vector<IterationRecord> steps; ///< n = 1 .. iterations
    Termination termination = Termination::MaxIter;
};

struct SolveResult {
    double root = 0;
    double f_root = 0;
    int iterations = 0;
    Termination termination = Termination::MaxIter;
    Trace trace;
};

/// The bracket a recorded step produced, reconstructed from the row alone.
/// Empty for exact-root steps.
std::optional<std::pair<double, double>> next_interval(const IterationRecord& rec);

} // namespace regula
