// regula: bracketing root finders with convergence diagnostics
// Copyright 2026 The regula Authors.
// SPDX-License-Identifier: Apache-2.0

#include "regula/solver.hpp"

#include <cmath>
#include <numeric>

namespace regula {

std::string to_string(Termination t) {
    switch (t) {
    case Termination::ResidualMet: return "residual";
    case Termination::StepMet: return "step";
    case Termination::WidthMet: return "width";
    case Termination::ExactRoot: return "exact-root";
    case Termination::MaxIter: return "max-iter";
    case Termination::EndpointRoot: return "endpoint-root";
    }
    return "?";
}

std::optional<Termination> termination_from_string(const std::string& s) {
    if (s == "residual") return Termination::ResidualMet;
    if (s == "step") return Termination::StepMet;
    if (s == "width") return Termination::WidthMet;
    if (s == "exact-root") return Termination::ExactRoot;
    if (s == "max-iter") return Termination::MaxIter;
    if (s == "endpoint-root") return Termination::EndpointRoot;
    return std::nullopt;
}

std::string to_string(MethodId m) {
    switch (m) {
    case MethodId::RegulaFalsi: return "regula-falsi";
    case MethodId::Bisection: return "bisection";
    case MethodId::Illinois: return "illinois";
    case MethodId::AndersonBjorck: return "anderson-bjorck";
    }
    return "?";
}

std::optional<MethodId> method_from_string(const std::string& s) {
    if (s == "regula-falsi") return MethodId::RegulaFalsi;
    if (s == "bisection") return MethodId::Bisection;
    if (s == "illinois") return MethodId::Illinois;
    if (s == "anderson-bjorck") return MethodId::AndersonBjorck;
    return std::nullopt;
}

std::optional<std::pair<double, double>> next_interval(const IterationRecord& rec) {
    switch (rec.side) {
    case Side::ReplacedLower: return std::pair{rec.x, rec.v};
    case Side::ReplacedUpper: return std::pair{rec.u, rec.x};
    case Side::ExactRoot: return std::nullopt;
    case Side::FallbackBisect:
        // A fallback step still updates one side; the sign test decides which.
        return sign_of(rec.fx) == sign_of(rec.fu) ? std::pair{rec.x, rec.v}
                                                  : std::pair{rec.u, rec.x};
    }
    return std::nullopt;
}

double rf_point(const Bracket& b) {
    return (b.u * b.fv - b.v * b.fu) / (b.fv - b.fu);
}

std::optional<StepOutcome> rf_step(const Bracket& b, const Evaluator& f,
                                   bool fallback_enabled) {
    double x = rf_point(b);
    bool fallback = false;
    if (!(b.u < x && x < b.v)) {
        if (!fallback_enabled) return std::nullopt;
        x = std::midpoint(b.u, b.v);
        if (!(b.u < x && x < b.v)) return std::nullopt; // adjacent doubles
        fallback = true;
    }
    return detail::classify_point(b, x, f(x), fallback);
}

namespace detail {

StepOutcome classify_point(const Bracket& b, double x, double fx, bool fallback) {
    if (!std::isfinite(fx)) throw NonFiniteEvaluationError(x);
    StepOutcome out{x, fx, Side::ExactRoot, std::nullopt, fallback};
    if (fx == 0.0) return out;
    if (sign_of(fx) == sign_of(b.fu)) {
        out.side = fallback ? Side::FallbackBisect : Side::ReplacedLower;
        out.next = Bracket(x, b.v, fx, b.fv);
    } else {
        out.side = fallback ? Side::FallbackBisect : Side::ReplacedUpper;
        out.next = Bracket(b.u, x, b.fu, fx);
    }
    return out;
}

SolveResult run_bracketing(MethodId method, const Evaluator& f, double a, double b,
                           const SolvePolicy& policy, const Stepper& step) {
    policy.validate();
    if (!(a < b)) throw std::invalid_argument("solve requires a < b");

    const double fa = f(a);
    const double fb = f(b);
    if (!std::isfinite(fa)) throw NonFiniteEvaluationError(a);
    if (!std::isfinite(fb)) throw NonFiniteEvaluationError(b);

    SolveResult result;
    result.trace.method = method;
    result.trace.a = a;
    result.trace.b = b;
    result.trace.fa = fa;
    result.trace.fb = fb;

    if (fa == 0.0 || fb == 0.0) {
        result.root = fa == 0.0 ? a : b;
        result.f_root = 0.0;
        result.iterations = 0;
        result.termination = Termination::EndpointRoot;
        result.trace.termination = result.termination;
        return result;
    }
    if (sign_of(fa) == sign_of(fb)) throw NoSignChangeError(fa, fb);

    Bracket bracket(a, b, fa, fb);
    Termination why = Termination::MaxIter;
    double prev_x = 0;

    for (int n = 1; n <= policy.max_iter; ++n) {
        auto outcome = step(bracket, f);
        if (!outcome) {
            // No strictly interior point representable; the bracket has hit
            // floating-point resolution and cannot shrink further.
            // Report the endpoint with the smaller residual; one of the two
            // is the last iterate, so this never loses ground.
            const bool lower = std::abs(bracket.fu) <= std::abs(bracket.fv);
            result.root = lower ? bracket.u : bracket.v;
            result.f_root = lower ? bracket.fu : bracket.fv;
            why = Termination::WidthMet;
            break;
        }

        IterationRecord rec;
        rec.n = n;
        rec.u = bracket.u;
        rec.v = bracket.v;
        rec.fu = bracket.fu;
        rec.fv = bracket.fv;
        rec.x = outcome->x;
        rec.fx = outcome->fx;
        rec.side = outcome->side;
        rec.width = bracket.width();
        rec.fallback = outcome->fallback;
        if (outcome->next)
            rec.r_emp = outcome->next->width() / bracket.width();
        if (method == MethodId::RegulaFalsi && !outcome->fallback) {
            if (outcome->side == Side::ReplacedLower)
                rec.r_closed = 1.0 / (1.0 + std::abs(bracket.fu / bracket.fv));
            else if (outcome->side == Side::ReplacedUpper)
                rec.r_closed = 1.0 / (1.0 + std::abs(bracket.fv / bracket.fu));
        }
        result.trace.steps.push_back(rec);

        if (n == 1) {
            // The surviving initial endpoint, recorded as the n = 0 point.
            if (sign_of(rec.fx) == sign_of(fa))
                result.trace.x0 = ConventionPoint{b, fb};
            else
                result.trace.x0 = ConventionPoint{a, fa};
        }

        result.root = rec.x;
        result.f_root = rec.fx;
        result.iterations = n;

        if (outcome->side == Side::ExactRoot) {
            why = Termination::ExactRoot;
            break;
        }
        if (std::abs(rec.fx) <= policy.tol_residual) {
            why = Termination::ResidualMet;
            break;
        }
        if (n >= 2 && std::abs(rec.x - prev_x) <= policy.tol_step * (1.0 + std::abs(rec.x))) {
            why = Termination::StepMet;
            break;
        }
        if (policy.tol_width > 0 && outcome->next->width() <= policy.tol_width) {
            why = Termination::WidthMet;
            break;
        }
        prev_x = rec.x;
        bracket = *outcome->next;
    }

    result.termination = why;
    result.trace.termination = why;
    return result;
}

} // namespace detail

SolveResult solve(const Evaluator& f, double a, double b, const SolvePolicy& policy) {
    return detail::run_bracketing(
        MethodId::RegulaFalsi, f, a, b, policy,
        [&policy](const Bracket& br, const Evaluator& fn) {
            return rf_step(br, fn, policy.fallback_enabled);
        });
}

} // namespace regula
