#include "germforge/ideal.hpp"

#include "germforge/error.hpp"

namespace germforge {

Submodule::Submodule(RingPtr ring, std::size_t rank, std::vector<FreeVector> generators, MonomialOrder order)
    : ring_(std::move(ring)), rank_(rank), order_{std::move(order)}, cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.size() != rank_) throw Error(ErrorCode::DimensionMismatch, "generator length differs from module rank");
    bool zero = true;
    for (const auto& c : g) {
      if (!c.is_zero()) zero = false;
      if (c.ring() && !same_ring(c.ring(), ring_))
        throw Error(ErrorCode::DimensionMismatch, "generator from another ring");
    }
    if (!zero) gens_.push_back(std::move(g));
  }
}

const std::vector<sb::Vec>& Submodule::standard_basis() const {
  std::call_once(cache_->once, [&] {
    std::vector<sb::Vec> vs;
    vs.reserve(gens_.size());
    for (const auto& g : gens_) vs.push_back(sb::to_vec(g, order_));
    cache_->basis = sb::standard_basis(std::move(vs), order_);
  });
  return cache_->basis;
}

std::vector<FreeVector> Submodule::standard_basis_vectors() const {
  std::vector<FreeVector> out;
  for (const auto& v : standard_basis()) out.push_back(sb::from_vec(v, rank_, ring_));
  return out;
}

bool Submodule::contains(const FreeVector& v) const {
  if (v.size() != rank_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from module rank");
  return sb::normal_form(sb::to_vec(v, order_), standard_basis(), order_).is_zero();
}

bool Submodule::contains(const Submodule& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

FreeVector Submodule::normal_form(const FreeVector& v) const {
  return sb::from_vec(sb::normal_form(sb::to_vec(v, order_), standard_basis(), order_), rank_, ring_);
}

bool Submodule::is_zero() const { return gens_.empty(); }

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators, MonomialOrder order)
    : ring_(std::move(ring)), order_{std::move(order)}, cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (!same_ring(g.ring(), ring_)) throw Error(ErrorCode::DimensionMismatch, "generator from another ring");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring, MonomialOrder order) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one}, std::move(order));
}

Ideal Ideal::zero(RingPtr ring, MonomialOrder order) { return Ideal(std::move(ring), {}, std::move(order)); }

Ideal Ideal::maximal_power(RingPtr ring, int k, MonomialOrder order) {
  std::vector<Polynomial> gens;
  for (auto& m : monomials_of_degree(ring->size(), k)) gens.push_back(Polynomial::monomial(ring, m));
  return Ideal(std::move(ring), std::move(gens), std::move(order));
}

const std::vector<sb::Vec>& Ideal::standard_basis() const {
  std::call_once(cache_->once, [&] {
    std::vector<sb::Vec> vs;
    vs.reserve(gens_.size());
    for (const auto& g : gens_) vs.push_back(sb::to_vec(g, order_));
    cache_->basis = sb::standard_basis(std::move(vs), order_);
  });
  return cache_->basis;
}

std::vector<Polynomial> Ideal::standard_basis_polys() const {
  std::vector<Polynomial> out;
  for (const auto& v : standard_basis()) out.push_back(sb::component(v, 0, ring_));
  return out;
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& v : standard_basis()) out.push_back(v.lead().mon);
  return out;
}

Polynomial Ideal::normal_form(const Polynomial& p) const {
  return sb::component(sb::normal_form(sb::to_vec(p, order_), standard_basis(), order_), 0, ring_);
}

bool Ideal::contains(const Polynomial& p) const {
  if (p.is_zero()) return true;
  return sb::normal_form(sb::to_vec(p, order_), standard_basis(), order_).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  for (const auto& v : standard_basis())
    if (v.lead().mon.is_one()) return true;
  return false;
}

Ideal Ideal::with_order(MonomialOrder order) const { return Ideal(ring_, gens_, std::move(order)); }

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> gens = gens_;
  gens.insert(gens.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(gens), order_.ring);
}

Ideal Ideal::operator*(const Ideal& other) const {
  std::vector<Polynomial> gens;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) gens.push_back(a * b);
  return Ideal(ring_, std::move(gens), order_.ring);
}

std::string Ideal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

}  // namespace germforge
