#include "germforge/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "germforge/error.hpp"
#include "germforge/linalg.hpp"

namespace germforge {

Unfolding::Unfolding(RingPtr total, std::vector<std::size_t> parameters, Polynomial F)
    : total_(std::move(total)), params_(std::move(parameters)), F_(std::move(F)) {
  std::set<std::size_t> seen;
  for (auto p : params_) {
    if (p >= total_->size()) throw Error(ErrorCode::IndexOutOfRange, "parameter index out of range");
    if (!seen.insert(p).second) throw Error(ErrorCode::PreconditionViolated, "repeated parameter");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < total_->size(); ++i)
    if (!seen.count(i)) {
      base_index_.push_back(i);
      names.push_back(total_->name(i));
    }
  base_ = Ring::make(std::move(names));
  if (!F_.ring()) F_ = Polynomial(total_);
  if (!same_ring(F_.ring(), total_)) throw Error(ErrorCode::DimensionMismatch, "unfolding polynomial in another ring");
}

Unfolding Unfolding::linear(const Polynomial& f, const std::vector<Polynomial>& directions) {
  std::vector<std::string> names = f.ring()->names();
  std::vector<std::size_t> params;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    std::string name = "s" + std::to_string(i + 1);
    while (std::find(names.begin(), names.end(), name) != names.end()) name = "s" + name;
    params.push_back(names.size());
    names.push_back(name);
  }
  auto total = Ring::make(std::move(names));
  Polynomial F = f.embed(total);
  for (std::size_t i = 0; i < directions.size(); ++i)
    F += Polynomial::variable(total, params[i]) * directions[i].embed(total);
  return Unfolding(total, std::move(params), std::move(F));
}

Polynomial Unfolding::to_base(const Polynomial& p) const {
  std::vector<PolyTerm> out;
  for (const auto& t : p.terms()) {
    for (auto s : params_)
      if (t.mon[s] != 0) throw std::logic_error("parameter left in a base polynomial");
    Monomial m(base_->size());
    for (std::size_t i = 0; i < base_index_.size(); ++i) m.set(i, t.mon[base_index_[i]]);
    out.push_back({std::move(m), t.coef});
  }
  return Polynomial::from_terms(base_, std::move(out));
}

namespace {
Polynomial drop_parameters(const Polynomial& p, const std::vector<std::size_t>& params) {
  std::vector<PolyTerm> out;
  for (const auto& t : p.terms()) {
    bool has = std::any_of(params.begin(), params.end(), [&](std::size_t s) { return t.mon[s] != 0; });
    if (!has) out.push_back(t);
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}
}  // namespace

Polynomial Unfolding::base_germ() const { return to_base(drop_parameters(F_, params_)); }

Polynomial Unfolding::parameter_derivative(std::size_t i) const {
  if (i >= params_.size()) throw Error(ErrorCode::IndexOutOfRange, "parameter index out of range");
  return to_base(drop_parameters(F_.derive(params_[i]), params_));
}

Polynomial Unfolding::specialize(const std::vector<Rational>& values) const {
  if (values.size() != params_.size()) throw Error(ErrorCode::DimensionMismatch, "one value per parameter");
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < total_->size(); ++i) images.push_back(Polynomial::variable(total_, i));
  for (std::size_t k = 0; k < params_.size(); ++k) images[params_[k]] = Polynomial::constant(total_, values[k]);
  return to_base(F_.substitute(images));
}

std::vector<Polynomial> Unfolding::parameter_coefficients() const {
  std::map<std::vector<int>, std::vector<PolyTerm>> groups;
  for (const auto& t : F_.terms()) {
    std::vector<int> key;
    bool has = false;
    for (auto s : params_) {
      key.push_back(t.mon[s]);
      has = has || t.mon[s] != 0;
    }
    if (!has) continue;
    Monomial m(base_->size());
    for (std::size_t i = 0; i < base_index_.size(); ++i) m.set(i, t.mon[base_index_[i]]);
    groups[key].push_back({std::move(m), t.coef});
  }
  std::vector<Polynomial> out;
  for (auto& [key, terms] : groups) out.push_back(Polynomial::from_terms(base_, std::move(terms)));
  return out;
}

namespace {

void require_member(const Polynomial& f, const Ideal& I) {
  if (!same_ring(f.ring(), I.ring())) throw Error(ErrorCode::DimensionMismatch, "germ and ideal rings differ");
  if (!I.contains(f))
    throw Error(ErrorCode::FNotInIdeal, "f = " + f.to_string() + " is not in " + I.to_string() +
                                            " (normal form " + I.normal_form(f).to_string() + ")");
}

}  // namespace

CodimResult extended_codim(const Polynomial& f, const Ideal& I) {
  require_member(f, I);
  auto theta = theta_preserving(I);
  Ideal tau = tangent_ideal(f, theta);
  auto value = relative_quotient_dimension(I, tau);
  return {std::move(value), std::move(tau), std::move(theta)};
}

CodimResult plain_codim(const Polynomial& f, const Ideal& I) {
  require_member(f, I);
  auto theta = theta_vanishing(I);
  Ideal tau = tangent_ideal(f, theta);
  auto value = relative_quotient_dimension(I, tau);
  return {std::move(value), std::move(tau), std::move(theta)};
}

QuotientDim extended_codim_at(const Polynomial& f, const Ideal& I, const std::vector<Rational>& point) {
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.translate(point));
  Ideal moved(I.ring(), std::move(gens), MonomialOrder::local());
  return extended_codim(f.translate(point), moved).value;
}

QuotientDim milnor_number(const Polynomial& f) {
  std::vector<Polynomial> J;
  for (std::size_t i = 0; i < f.nvars(); ++i) J.push_back(f.derive(i));
  return quotient_dimension(Ideal(f.ring(), std::move(J), MonomialOrder::local()));
}

int determinacy_bound(const Polynomial& f, const Ideal& I) {
  auto c = extended_codim(f, I);
  if (!c.value.finite) throw Error(ErrorCode::NotFiniteCodim, "extended codimension is infinite");
  const auto& ring = I.ring();
  for (int m = 0;; ++m) {
    bool ok = true;
    for (const auto& mono : monomials_of_degree(ring->size(), m)) {
      for (const auto& g : I.generators())
        if (!c.tau.contains(g.mul_term(mono, 1))) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return m;
    if (m > static_cast<int>(c.value.value)) throw std::logic_error("determinacy bound exceeds the codimension");
  }
}

bool versality_check(const Unfolding& F, const Ideal& I) {
  if (!(*F.base_ring() == *I.ring())) throw Error(ErrorCode::DimensionMismatch, "unfolding base ring differs from the ideal's");
  Polynomial f = F.base_germ().embed(I.ring());
  require_member(f, I);
  for (const auto& h : F.parameter_coefficients())
    if (!I.contains(h.embed(I.ring())))
      throw Error(ErrorCode::FNotUnfolding, "F - f has a parameter coefficient outside I: " + h.to_string());
  auto c = extended_codim(f, I);
  if (!c.value.finite) return false;
  if (c.value.value == 0) return true;
  auto QS = QuotientSpace::of_ideals(I, c.tau);
  linalg::Matrix M;
  for (std::size_t i = 0; i < F.parameter_count(); ++i)
    M.push_back(QS.coordinates({F.parameter_derivative(i).embed(I.ring())}));
  return linalg::rank(std::move(M), c.value.value) == c.value.value;
}

Unfolding build_versal_unfolding(const Polynomial& f, const Ideal& I) {
  auto c = extended_codim(f, I);
  if (!c.value.finite) throw Error(ErrorCode::NotFiniteCodim, "extended codimension is infinite");
  std::vector<Polynomial> dirs;
  if (c.value.value > 0) {
    auto QS = QuotientSpace::of_ideals(I, c.tau);
    for (std::size_t i = 0; i < QS.basis().size(); ++i) dirs.push_back(QS.basis_element(i)[0]);
  }
  Unfolding F = Unfolding::linear(f, dirs);
  Unfolding check(F.total_ring(), F.parameters(), F.polynomial());
  if (!versality_check(check, I)) throw std::logic_error("constructed unfolding failed the versality check");
  return F;
}

Ideal positive_codim_locus(const Polynomial& f, const Ideal& I) {
  require_member(f, I);
  if (f.is_zero()) return Ideal::zero(I.ring(), MonomialOrder::global());
  Ideal global = I.with_order(MonomialOrder::global());
  Ideal tau = tangent_ideal(f, theta_preserving(global));
  return ideal_quotient(tau, global);
}

const char* verdict_name(DdkVerdict v) {
  switch (v) {
    case DdkVerdict::IsDdk: return "IS_Ddk";
    case DdkVerdict::NotDdk: return "NOT_Ddk";
    case DdkVerdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

namespace {

// Element of Q[x]/(x)^2: constant plus linear part.
struct Lin {
  Rational c;
  std::vector<Rational> l;

  bool unit() const { return c != 0; }
  Lin operator+(const Lin& o) const {
    Lin r{c + o.c, l};
    for (std::size_t i = 0; i < l.size(); ++i) r.l[i] += o.l[i];
    return r;
  }
  Lin operator-(const Lin& o) const {
    Lin r{c - o.c, l};
    for (std::size_t i = 0; i < l.size(); ++i) r.l[i] -= o.l[i];
    return r;
  }
  Lin operator*(const Lin& o) const {
    Lin r{c * o.c, std::vector<Rational>(l.size())};
    for (std::size_t i = 0; i < l.size(); ++i) r.l[i] = c * o.l[i] + o.c * l[i];
    return r;
  }
  Lin inverse() const {
    Lin r{1 / c, l};
    Rational s = -1 / (c * c);
    for (auto& v : r.l) v *= s;
    return r;
  }
};

}  // namespace

DdkClass classify_Ddk(const Polynomial& f, const Ideal& J) {
  auto vars = variable_generators(J);
  if (!vars) throw Error(ErrorCode::NonAdaptedCoordinates, "J must be generated by variables");
  const auto& ring = J.ring();
  std::vector<std::size_t> ys = *vars;
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<std::size_t> xs;
  for (std::size_t i = 0; i < ring->size(); ++i)
    if (!std::binary_search(ys.begin(), ys.end(), i)) xs.push_back(i);
  DdkClass out;
  out.d = static_cast<int>(xs.size());
  if (ys.empty()) return out;
  if (!(J * J).contains(f)) throw Error(ErrorCode::FNotInJSquared, "f is not in the square of J");

  const std::size_t m = ys.size(), d = xs.size();
  std::vector<std::vector<Lin>> H(m, std::vector<Lin>(m, Lin{0, std::vector<Rational>(d, 0)}));
  for (const auto& t : f.terms()) {
    bool placed = false;
    for (std::size_t i = 0; i < m && !placed; ++i)
      for (std::size_t j = i; j < m && !placed; ++j) {
        Monomial q = t.mon;
        int ei = q[ys[i]], ej = q[ys[j]];
        if (i == j ? ei < 2 : (ei < 1 || ej < 1)) continue;
        q.set(ys[i], q[ys[i]] - 1);
        q.set(ys[j], q[ys[j]] - 1);
        placed = true;
        // Reduce the quotient modulo J and m^2.
        bool has_y = std::any_of(ys.begin(), ys.end(), [&](std::size_t y) { return q[y] != 0; });
        if (has_y || q.degree() > 1) continue;
        Lin v{0, std::vector<Rational>(d, 0)};
        if (q.degree() == 0) {
          v.c = t.coef;
        } else {
          for (std::size_t a = 0; a < d; ++a)
            if (q[xs[a]] == 1) v.l[a] = t.coef;
        }
        if (i == j) {
          H[i][i] = H[i][i] + v;
        } else {
          Lin half{v.c / 2, v.l};
          for (auto& x : half.l) x /= 2;
          H[i][j] = H[i][j] + half;
          H[j][i] = H[j][i] + half;
        }
      }
    if (!placed) throw Error(ErrorCode::FNotInJSquared, "term outside the square of J");
  }

  std::vector<std::size_t> active(m);
  for (std::size_t i = 0; i < m; ++i) active[i] = i;
  for (;;) {
    std::optional<std::size_t> pivot;
    for (auto i : active)
      if (H[i][i].unit()) {
        pivot = i;
        break;
      }
    if (!pivot) {
      // y_i -> y_i + y_j turns a unit off-diagonal entry into a unit on
      // the diagonal at j.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t a = 0; a < active.size() && !off; ++a)
        for (std::size_t b = a + 1; b < active.size() && !off; ++b)
          if (H[active[a]][active[b]].unit()) off = {active[a], active[b]};
      if (!off) break;
      auto [i, j] = *off;
      for (auto a : active) H[j][a] = H[j][a] + H[i][a];
      for (auto a : active) H[a][j] = H[a][j] + H[a][i];
      pivot = j;
    }
    std::size_t p = *pivot;
    Lin inv = H[p][p].inverse();
    std::erase(active, p);
    for (auto a : active)
      for (auto b : active) H[a][b] = H[a][b] - H[a][p] * H[p][b] * inv;
  }

  out.k = static_cast<int>(active.size());
  linalg::Matrix forms;
  for (std::size_t a = 0; a < active.size(); ++a)
    for (std::size_t b = a; b < active.size(); ++b) {
      const Lin& e = H[active[a]][active[b]];
      forms.push_back(e.l);
      std::vector<PolyTerm> terms;
      for (std::size_t i = 0; i < d; ++i)
        if (e.l[i] != 0) terms.push_back({Monomial::variable(ring->size(), xs[i]), e.l[i]});
      out.forms.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
  std::size_t need = forms.size();
  out.verdict = (need == 0 || linalg::rank(std::move(forms), d) == need) ? DdkVerdict::IsDdk : DdkVerdict::NotDdk;
  return out;
}

}  // namespace germforge
