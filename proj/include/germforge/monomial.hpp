#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace germforge {

/// Exponent vector x^a = x_1^{a_1} ... x_n^{a_n}. The length is the ambient
/// variable count; the total degree is cached.
class Monomial {
 public:
  using Exponent = std::uint16_t;
  using Storage = boost::container::small_vector<Exponent, 12>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::span<const int> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, int power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  int degree() const noexcept { return degree_; }
  int operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, int e);
  bool is_one() const noexcept { return degree_ == 0; }

  Monomial operator*(const Monomial& other) const;
  Monomial& operator*=(const Monomial& other);
  /// Requires `other.divides(*this)`.
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const noexcept;

  std::vector<int> exponents() const { return {exps_.begin(), exps_.end()}; }

  bool operator==(const Monomial& other) const noexcept {
    return degree_ == other.degree_ && exps_ == other.exps_;
  }
  bool operator!=(const Monomial& other) const noexcept { return !(*this == other); }

  std::size_t hash() const noexcept;

 private:
  Storage exps_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

/// Degree reverse lexicographic order (GLOBAL, 1 smallest) or its negative
/// degree variant (LOCAL, 1 largest). `priority[0]` is the largest variable.
class MonomialOrder {
 public:
  enum class Kind { GlobalDegRevLex, LocalNegDegRevLex };

  MonomialOrder() = default;
  explicit MonomialOrder(Kind kind) : kind_(kind) {}
  MonomialOrder(Kind kind, std::vector<int> priority);

  static MonomialOrder global() { return MonomialOrder(Kind::GlobalDegRevLex); }
  static MonomialOrder local() { return MonomialOrder(Kind::LocalNegDegRevLex); }

  Kind kind() const noexcept { return kind_; }
  bool is_global() const noexcept { return kind_ == Kind::GlobalDegRevLex; }
  bool is_local() const noexcept { return kind_ == Kind::LocalNegDegRevLex; }
  const std::vector<int>& priority() const noexcept { return priority_; }

  /// Throws DimensionMismatch when the monomials live in different rings.
  Ordering compare(const Monomial& a, const Monomial& b) const;
  /// Unchecked three-way comparison used in inner loops.
  int cmp(const Monomial& a, const Monomial& b) const noexcept;

  bool operator==(const MonomialOrder& o) const noexcept {
    return kind_ == o.kind_ && priority_ == o.priority_;
  }

 private:
  Kind kind_ = Kind::LocalNegDegRevLex;
  std::vector<int> priority_;  // empty means identity
};

/// All monomials in `nvars` variables of exactly the given total degree,
/// listed in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

}  // namespace germforge
