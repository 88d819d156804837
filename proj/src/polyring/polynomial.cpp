#include "germforge/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "germforge/error.hpp"

namespace germforge {

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

const MonomialOrder& canonical_order() {
  static const MonomialOrder order = MonomialOrder::global();
  return order;
}

namespace {

bool canon_greater(const Monomial& a, const Monomial& b) { return canonical_order().cmp(a, b) > 0; }

void check_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring()))
    throw Error(ErrorCode::DimensionMismatch, "polynomials from different rings");
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->size()), c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->size()) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::variable(ring->size(), index), 1});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial mon, const Rational& c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({std::move(mon), c});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<PolyTerm> terms) {
  Polynomial p(std::move(ring));
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return canon_greater(a.mon, b.mon); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mon == t.mon) {
      p.terms_.back().coef += t.coef;
      if (p.terms_.back().coef == 0) p.terms_.pop_back();
    } else if (t.coef != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mon.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mon.is_one()) return terms_.back().coef;
  return 0;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const PolyTerm& t, const Monomial& x) { return canon_greater(t.mon, x); });
  if (it != terms_.end() && it->mon == m) return it->coef;
  return 0;
}

int Polynomial::degree() const noexcept { return terms_.empty() ? -1 : terms_.front().mon.degree(); }

int Polynomial::order() const noexcept { return terms_.empty() ? -1 : terms_.back().mon.degree(); }

const PolyTerm& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw Error(ErrorCode::PreconditionViolated, "leading term of zero polynomial");
  const PolyTerm* best = &terms_[0];
  for (const auto& t : terms_)
    if (order.cmp(t.mon, best->mon) > 0) best = &t;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  if (other.is_zero()) return *this;
  if (is_zero()) return other;
  check_ring(*this, other);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = other.terms_.begin(), be = other.terms_.end();
  while (a != ae && b != be) {
    int c = canonical_order().cmp(a->mon, b->mon);
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      Rational s = a->coef + b->coef;
      if (s != 0) r.terms_.push_back({a->mon, std::move(s)});
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, ae);
  r.terms_.insert(r.terms_.end(), b, be);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const { return *this + (-other); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (is_zero() || other.is_zero()) return Polynomial(ring_ ? ring_ : other.ring_);
  check_ring(*this, other);
  std::vector<PolyTerm> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : other.terms_) prod.push_back({s.mon * t.mon, s.coef * t.coef});
  return from_terms(ring_, std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves any monomial order.
  for (const auto& t : terms_) r.terms_.push_back({t.mon * m, t.coef * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mon != other.terms_[i].mon || terms_[i].coef != other.terms_[i].coef) return false;
  return true;
}

Polynomial Polynomial::derive(std::size_t i) const {
  if (i >= nvars()) throw Error(ErrorCode::IndexOutOfRange, "derivative index out of range");
  std::vector<PolyTerm> out;
  for (const auto& t : terms_) {
    int e = t.mon[i];
    if (e == 0) continue;
    Monomial m = t.mon;
    m.set(i, e - 1);
    out.push_back({std::move(m), t.coef * e});
  }
  return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::truncate(int n) const {
  Polynomial r(ring_);
  for (const auto& t : terms_)
    if (t.mon.degree() <= n) r.terms_.push_back(t);
  return r;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
  if (images.size() != nvars())
    throw Error(ErrorCode::DimensionMismatch, "substitution needs one image per variable");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  for (const auto& img : images)
    if (img.ring() && !same_ring(img.ring(), target))
      throw Error(ErrorCode::DimensionMismatch, "substitution images from different rings");
  // Cache powers of each image.
  std::vector<std::vector<Polynomial>> powers(nvars());
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coef);
    for (std::size_t i = 0; i < nvars(); ++i)
      if (t.mon[i]) term = term * power(i, t.mon[i]);
    result += term;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw Error(ErrorCode::DimensionMismatch, "evaluation point dimension");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < nvars(); ++i)
      for (int e = 0; e < t.mon[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

Polynomial Polynomial::translate(std::span<const Rational> point) const {
  if (point.size() != nvars()) throw Error(ErrorCode::DimensionMismatch, "translation dimension");
  std::vector<Polynomial> images;
  images.reserve(nvars());
  for (std::size_t i = 0; i < nvars(); ++i)
    images.push_back(variable(ring_, i) + constant(ring_, point[i]));
  return substitute(images);
}

Polynomial Polynomial::embed(RingPtr larger) const {
  if (larger->size() < nvars()) throw Error(ErrorCode::DimensionMismatch, "embedding into smaller ring");
  std::vector<PolyTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(larger->size());
    for (std::size_t i = 0; i < nvars(); ++i) m.set(i, t.mon[i]);
    out.push_back({std::move(m), t.coef});
  }
  return from_terms(std::move(larger), std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational lc = terms_.front().coef;
  return *this * Rational(1 / lc);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mon.is_one()) {
      out += rational_to_string(c);
    } else {
      if (c != 1) out += rational_to_string(c) + "*";
      out += monomial_to_string(t.mon, *ring_);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

}  // namespace germforge
