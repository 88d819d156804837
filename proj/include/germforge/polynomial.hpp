#pragma once

#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "germforge/monomial.hpp"

namespace germforge {

using Rational = mpq_class;
using Integer = mpz_class;

/// Ambient ring descriptor: Q[x_1..x_n] with named variables.
class Ring {
 public:
  explicit Ring(std::vector<std::string> names);

  static std::shared_ptr<const Ring> make(std::vector<std::string> names) {
    return std::make_shared<const Ring>(std::move(names));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(const std::string& name) const;

  bool operator==(const Ring& other) const noexcept { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const Ring>;

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

struct PolyTerm {
  Monomial mon;
  Rational coef;
};

/// Exact multivariate polynomial over Q. Terms are unique per monomial, never
/// zero, and kept in descending degrevlex order regardless of the order used
/// for computation, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial mon, const Rational& c = 1);
  /// Combines duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<PolyTerm> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_ ? ring_->size() : 0; }
  const std::vector<PolyTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Largest total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  /// Smallest total degree of a term (the m-adic order); -1 for zero.
  int order() const noexcept;
  /// Largest term under `order`. Requires a nonzero polynomial.
  const PolyTerm& leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& other) const;
  bool operator!=(const Polynomial& other) const { return !(*this == other); }

  /// Formal partial derivative with respect to variable `i` (0-based).
  Polynomial derive(std::size_t i) const;
  /// Drops all terms of total degree > n.
  Polynomial truncate(int n) const;
  /// Ring homomorphism x_i -> images[i]; images live in a common target ring.
  Polynomial substitute(std::span<const Polynomial> images) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// f(x + p): moves the point p to the origin.
  Polynomial translate(std::span<const Rational> point) const;
  /// Same terms, reinterpreted in a ring whose first nvars() variables agree.
  Polynomial embed(RingPtr larger) const;
  /// Divides by the leading coefficient under the canonical order.
  Polynomial monic() const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<PolyTerm> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Monomial in the ring's variable names, "1" for the empty product.
std::string monomial_to_string(const Monomial& m, const Ring& ring);
std::string rational_to_string(const Rational& q);

/// Descending degrevlex with identity priority: the storage order of terms.
const MonomialOrder& canonical_order();

}  // namespace germforge
