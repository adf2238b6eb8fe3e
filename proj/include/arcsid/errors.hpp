#pragma once

#include <stdexcept>
#include <string>

namespace arcsid {

class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Exact-arithmetic violations: division by zero, pi^2-degree overflow,
// fractional exponents.
class arith_error : public error {
public:
    using error::error;
};

// Truncated-series contract violations: bad construction, out-of-range
// coefficient access, shifting past a nonzero coefficient, bad leading
// coefficient for inverse/sqrt.
class series_error : public error {
public:
    using error::error;
};

// Violation of an internal invariant that holds whenever the engine itself is
// correct (pi^2 cancellation in a trigamma bracket, Catalan integrality).
// Distinct from an identity being refuted.
class consistency_error : public error {
public:
    using error::error;
};

struct source_pos {
    int line = 1;
    int col = 1;
};

// Lexical or syntax error in the identity language.
class parse_error : public error {
public:
    parse_error(const std::string& what, source_pos pos)
        : error(what + " at line " + std::to_string(pos.line) + ", column " +
                std::to_string(pos.col)),
          pos_(pos) {}

    source_pos pos() const { return pos_; }

private:
    source_pos pos_;
};

// Evaluation error in the identity language, naming the offending
// subexpression.
class eval_error : public error {
public:
    eval_error(const std::string& what, std::string subexpr, source_pos pos)
        : error(what + " in `" + subexpr + "` at line " + std::to_string(pos.line) +
                ", column " + std::to_string(pos.col)),
          subexpr_(std::move(subexpr)),
          pos_(pos) {}

    const std::string& subexpr() const { return subexpr_; }
    source_pos pos() const { return pos_; }

private:
    std::string subexpr_;
    source_pos pos_;
};

}  // namespace arcsid
