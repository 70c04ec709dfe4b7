#include "dira/linear.hpp"

#include <sstream>

namespace dira {

void AffineExpr::add_term(const std::string& var, const Rational& coeff) {
  Rational& slot = terms[var];
  slot += coeff;
  if (slot == 0) terms.erase(var);
}

LinearConstraint::LinearConstraint(std::map<std::string, Rational> t,
                                   Relation r, Rational b)
    : terms(std::move(t)), rel(r), bound(std::move(b)) {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->second == 0)
      it = terms.erase(it);
    else
      ++it;
  }
}

Rational LinearConstraint::coeff(const std::string& var) const {
  auto it = terms.find(var);
  return it == terms.end() ? Rational(0) : it->second;
}

bool LinearConstraint::constant_holds() const {
  if (rel == Relation::Equal) return bound == 0;
  return bound >= 0;
}

Rational LinearConstraint::eval(
    const std::map<std::string, Rational>& point) const {
  Rational sum = 0;
  for (const auto& [var, c] : terms) {
    auto it = point.find(var);
    if (it != point.end()) sum += c * it->second;
  }
  return sum;
}

bool LinearConstraint::satisfied_by(
    const std::map<std::string, Rational>& point) const {
  Rational lhs = eval(point);
  return rel == Relation::Equal ? lhs == bound : lhs <= bound;
}

bool LinearConstraint::operator<(const LinearConstraint& other) const {
  if (rel != other.rel) return rel < other.rel;
  auto lhs = terms.begin();
  auto rhs = other.terms.begin();
  for (; lhs != terms.end() && rhs != other.terms.end(); ++lhs, ++rhs) {
    if (lhs->first != rhs->first) return lhs->first < rhs->first;
    if (lhs->second != rhs->second) return lhs->second < rhs->second;
  }
  if (lhs != terms.end()) return false;
  if (rhs != other.terms.end()) return true;
  return bound < other.bound;
}

static LinearConstraint make_rel(const AffineExpr& lhs, const AffineExpr& rhs,
                                 Relation rel) {
  std::map<std::string, Rational> terms = lhs.terms;
  for (const auto& [var, c] : rhs.terms) {
    Rational& slot = terms[var];
    slot -= c;
    if (slot == 0) terms.erase(var);
  }
  return LinearConstraint(std::move(terms), rel, rhs.constant - lhs.constant);
}

LinearConstraint make_le(const AffineExpr& lhs, const AffineExpr& rhs) {
  return make_rel(lhs, rhs, Relation::LessEq);
}

LinearConstraint make_eq(const AffineExpr& lhs, const AffineExpr& rhs) {
  return make_rel(lhs, rhs, Relation::Equal);
}

std::vector<LinearConstraint> split_equality(const LinearConstraint& c) {
  if (c.rel == Relation::LessEq) return {c};
  LinearConstraint le(c.terms, Relation::LessEq, c.bound);
  std::map<std::string, Rational> neg;
  for (const auto& [var, coeff] : c.terms) neg.emplace(var, -coeff);
  LinearConstraint ge(std::move(neg), Relation::LessEq, -c.bound);
  return {le, ge};
}

std::string expr_to_string(const std::map<std::string, Rational>& terms,
                           const Rational& constant) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [var, c] : terms) {
    if (first) {
      if (c == -1)
        out << "-";
      else if (c != 1)
        out << rat_to_string(c) << "*";
    } else {
      out << (c > 0 ? " + " : " - ");
      Rational mag = abs(c);
      if (mag != 1) out << rat_to_string(mag) << "*";
    }
    out << var;
    first = false;
  }
  if (first) {
    out << rat_to_string(constant);
  } else if (constant != 0) {
    out << (constant > 0 ? " + " : " - ") << rat_to_string(abs(constant));
  }
  return out.str();
}

std::string constraint_to_string(const LinearConstraint& c) {
  std::ostringstream out;
  out << expr_to_string(c.terms, 0)
      << (c.rel == Relation::Equal ? " = " : " <= ") << rat_to_string(c.bound);
  return out.str();
}

}  // namespace dira
