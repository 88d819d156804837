#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "germforge/engine.hpp"
#include "germforge/polynomial.hpp"

namespace germforge {

/// Element of the free module Q[x]^r, one polynomial per component.
using FreeVector = std::vector<Polynomial>;

/// Finitely generated submodule of Q[x]^r (or of its localization at the
/// origin when the order is LOCAL). The standard basis is computed on first
/// use and shared between copies; generators never change after
/// construction.
class Submodule {
 public:
  Submodule(RingPtr ring, std::size_t rank, std::vector<FreeVector> generators,
            MonomialOrder order = MonomialOrder::local());

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  const MonomialOrder& order() const noexcept { return order_.ring; }
  const sb::ModuleOrder& module_order() const noexcept { return order_; }
  const std::vector<FreeVector>& generators() const noexcept { return gens_; }

  const std::vector<sb::Vec>& standard_basis() const;
  std::vector<FreeVector> standard_basis_vectors() const;

  bool contains(const FreeVector& v) const;
  bool contains(const Submodule& other) const;
  bool equals(const Submodule& other) const { return contains(other) && other.contains(*this); }
  FreeVector normal_form(const FreeVector& v) const;
  bool is_zero() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<sb::Vec> basis;
  };

  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<FreeVector> gens_;
  sb::ModuleOrder order_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Ideal given by generators, with a lazily computed interreduced standard
/// basis under its monomial order. Zero generators are dropped.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> generators, MonomialOrder order = MonomialOrder::local());

  static Ideal unit(RingPtr ring, MonomialOrder order = MonomialOrder::local());
  static Ideal zero(RingPtr ring, MonomialOrder order = MonomialOrder::local());
  /// m^k, generated by all monomials of degree k.
  static Ideal maximal_power(RingPtr ring, int k, MonomialOrder order = MonomialOrder::local());

  const RingPtr& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_->size(); }
  const MonomialOrder& order() const noexcept { return order_.ring; }
  const sb::ModuleOrder& module_order() const noexcept { return order_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }

  const std::vector<sb::Vec>& standard_basis() const;
  std::vector<Polynomial> standard_basis_polys() const;
  std::vector<Monomial> leading_monomials() const;

  /// Weak normal form (see sb::normal_form).
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const { return contains(other) && other.contains(*this); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const;

  Ideal with_order(MonomialOrder order) const;
  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

  std::string to_string() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<sb::Vec> basis;
  };

  RingPtr ring_;
  std::vector<Polynomial> gens_;
  sb::ModuleOrder order_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

}  // namespace germforge
