// regula: bracketing root finders with convergence diagnostics
// Copyright 2026 The regula Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace regula {

/// f(a) and f(b) have the same sign, so no bracket exists.
class NoSignChangeError : public std::runtime_error {
public:
    NoSignChangeError(double fa, double fb)
        : std::runtime_error("no sign change: f(a)=" + std::to_string(fa) +
                             ", f(b)=" + std::to_string(fb)),
          fa_(fa), fb_(fb) {}
    double fa() const noexcept { return fa_; }
    double fb() const noexcept { return fb_; }

private:
    double fa_;
    double fb_;
};

/// The evaluator returned NaN or an infinity.
class NonFiniteEvaluationError : public std::runtime_error {
public:
    explicit NonFiniteEvaluationError(double x)
        : std::runtime_error("non-finite function value at x=" + std::to_string(x)),
          x_(x) {}
    double where() const noexcept { return x_; }

private:
    double x_;
};

/// Expression could not be parsed. Carries the byte offset of the failure.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error("parse error at offset " + std::to_string(offset) +
                             ": " + what),
          offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An identifier that is neither a variable, a constant, nor a known function.
class UnknownIdentifierError : public ParseError {
public:
    UnknownIdentifierError(std::size_t offset, const std::string& name)
        : ParseError(offset, "unknown identifier '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// A trace file does not conform to the documented format.
class TraceFormatError : public std::runtime_error {
public:
    explicit TraceFormatError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "trace file, line " + std::to_string(line) + ": " + what
                                  : "trace file: " + what),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Records passed to a pairwise diagnostic are not consecutive.
class NonConsecutiveError : public std::logic_error {
public:
    NonConsecutiveError(int prev, int next)
        : std::logic_error("records not consecutive: n=" + std::to_string(prev) +
                           " followed by n=" + std::to_string(next)) {}
};

/// The requested per-step quantity is undefined for this step kind.
class InapplicableSideError : public std::logic_error {
public:
    explicit InapplicableSideError(const std::string& what) : std::logic_error(what) {}
};

} // namespace regula
