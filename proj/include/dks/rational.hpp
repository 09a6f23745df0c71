#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace dks {

// Exact rational scalar. All linear algebra in this project is over Q;
// nothing is ever rounded.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

/// Formats as "p/q" with q > 0, e.g. "-3/1", "5/6".
std::string to_fraction_string(const Rat& r);

/// Parses "p/q" or a bare integer "p". Decimal strings are rejected.
std::optional<Rat> parse_fraction(const std::string& s);

} // namespace dks
