#ifndef DIRA_RATIONAL_HPP
#define DIRA_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dira {

// Exact rational arithmetic. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as they are produced by arithmetic
// or by rat_from_string below.
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Parses "a", "-a" or "a/b" with arbitrary-precision parts. Throws Error
// on malformed input or zero denominator.
Rational rat_from_string(const std::string& text);

// Renders canonically: integers without denominator, otherwise "a/b".
std::string rat_to_string(const Rational& value);

inline int rat_sign(const Rational& value) { return sgn(value); }

}  // namespace dira

#endif
