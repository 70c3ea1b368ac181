#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "crystden/errors.hpp"

namespace crystden {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Parse "p/q" or "p" with optional leading '-'. Rejects anything else:
/// no whitespace, no floats, no empty numerator, q > 0 after sign pull-up.
Rat parse_rational(const std::string& text);

/// Canonical text form: "p/q" in lowest terms, or "p" when q == 1.
std::string format_rational(const Rat& value);

/// Append the decimal form of v, avoiding big-int string conversion for
/// machine-word values. Hot path for census keys.
void append_int_text(std::string& out, const Int& v);

double to_double(const Rat& value);

/// Parse every entry of a "p/q" list.
std::vector<Rat> parse_rational_list(const std::vector<std::string>& texts);

}  // namespace crystden
