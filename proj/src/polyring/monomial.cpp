#include "germforge/monomial.hpp"

#include <algorithm>
#include <functional>

#include "germforge/error.hpp"

namespace germforge {

Monomial::Monomial(std::initializer_list<int> exps) {
  exps_.reserve(exps.size());
  for (int e : exps) {
    exps_.push_back(static_cast<Exponent>(e));
    degree_ += e;
  }
}

Monomial::Monomial(std::span<const int> exps) {
  exps_.reserve(exps.size());
  for (int e : exps) {
    exps_.push_back(static_cast<Exponent>(e));
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, int power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  degree_ += e - exps_[i];
  exps_[i] = static_cast<Exponent>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r *= other;
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  r.degree_ -= other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.set(i, std::max(exps_[i], other.exps_[i]));
  return r;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<int> priority)
    : kind_(kind), priority_(std::move(priority)) {
  bool identity = true;
  for (std::size_t i = 0; i < priority_.size(); ++i)
    if (priority_[i] != static_cast<int>(i)) identity = false;
  if (identity) priority_.clear();
}

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const noexcept {
  if (a.degree() != b.degree()) {
    int d = a.degree() > b.degree() ? 1 : -1;
    return is_global() ? d : -d;
  }
  // Reverse lexicographic tie break: the last variable with differing
  // exponent decides, the smaller exponent being the larger monomial.
  const std::size_t n = a.size();
  for (std::size_t k = n; k-- > 0;) {
    std::size_t i = priority_.empty() ? k : static_cast<std::size_t>(priority_[k]);
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

Ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "monomials from rings of different dimension");
  if (!priority_.empty() && priority_.size() != a.size())
    throw Error(ErrorCode::DimensionMismatch, "order priority does not match ring dimension");
  return static_cast<Ordering>(cmp(a, b));
}

namespace {

void fill_degree(std::size_t nvars, std::size_t var, int remaining, Monomial& cur,
                 std::vector<Monomial>& out) {
  if (var + 1 == nvars) {
    cur.set(var, remaining);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.set(var, e);
    fill_degree(nvars, var + 1, remaining - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  fill_degree(nvars, 0, degree, cur, out);
  MonomialOrder dp = MonomialOrder::global();
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return dp.cmp(a, b) > 0; });
  return out;
}

}  // namespace germforge
