#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "polyjac/system.hpp"

namespace polyjac {

// Line-oriented text format, lossless for doubles:
//
//   # comment lines and blank lines are ignored
//   n m k d
//   re im pos1 exp1 ... posk expk     (one line per monomial, S_m order)
//
// Variable positions are written 1-based and strictly ascending; exponents
// lie in [1, d]. Malformed input is reported with its line number.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PolynomialSystem read_system(std::istream& in, const std::string& name = "<stream>");
PolynomialSystem read_system(const std::string& path);

void write_system(const PolynomialSystem& sys, std::ostream& out);
void write_system(const PolynomialSystem& sys, const std::string& path);

}  // namespace polyjac
