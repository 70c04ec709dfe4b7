#ifndef DIRA_LINEAR_HPP
#define DIRA_LINEAR_HPP

#include <map>
#include <string>
#include <vector>

#include "dira/rational.hpp"

namespace dira {

// Sum of coefficient*variable plus a constant.
struct AffineExpr {
  std::map<std::string, Rational> terms;
  Rational constant = 0;

  void add_term(const std::string& var, const Rational& coeff);
  bool operator==(const AffineExpr&) const = default;
};

enum class Relation { LessEq, Equal };

// terms . x  rel  bound, with no zero coefficients stored.
struct LinearConstraint {
  std::map<std::string, Rational> terms;
  Relation rel = Relation::LessEq;
  Rational bound = 0;

  LinearConstraint() = default;
  LinearConstraint(std::map<std::string, Rational> t, Relation r, Rational b);

  Rational coeff(const std::string& var) const;
  bool mentions(const std::string& var) const { return terms.count(var) != 0; }
  bool is_constant() const { return terms.empty(); }
  // For a constant constraint: true iff it holds.
  bool constant_holds() const;
  // Evaluates terms at a point (missing vars read as zero).
  Rational eval(const std::map<std::string, Rational>& point) const;
  bool satisfied_by(const std::map<std::string, Rational>& point) const;

  bool operator==(const LinearConstraint&) const = default;
  bool operator<(const LinearConstraint& other) const;
};

using ConstraintSet = std::vector<LinearConstraint>;

// expr rel bound constructors that drop zero coefficients.
LinearConstraint make_le(const AffineExpr& lhs, const AffineExpr& rhs);
LinearConstraint make_eq(const AffineExpr& lhs, const AffineExpr& rhs);

// Splits an equality into two inequalities; returns a LessEq unchanged.
std::vector<LinearConstraint> split_equality(const LinearConstraint& c);

std::string expr_to_string(const std::map<std::string, Rational>& terms,
                           const Rational& constant);
std::string constraint_to_string(const LinearConstraint& c);

}  // namespace dira

#endif
