#pragma once

#include <stdexcept>
#include <string>

#include "klr/polyrep.hpp"
#include "klr/thin.hpp"

namespace klr {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

/// Canonical text form: terms joined with +/-, each
///   [coef *] psi[top .. bottom] x[a1,...,ak] e(i1 i2 ...)
/// Unit coefficients, empty words and zero dot vectors are omitted;
/// the zero element prints as "0". Round trips bit-exactly.
std::string printElement(const ThinElement& e);

/// Parse a linear combination of diagram products. Factors compose left to
/// right from top to bottom; positions and colors are 1-based.
RawCombo parseCombo(const std::string& text);

/// Parse and reduce.
ThinElement parseElement(const std::string& text);

/// One basis term in the same grammar (no coefficient).
std::string printTerm(const Term& t, const ColorSeq& bottom);

}  // namespace klr
