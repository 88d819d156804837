#include "germforge/engine.hpp"

#include <algorithm>
#include <deque>

#include "germforge/error.hpp"

namespace germforge::sb {

int Vec::max_degree() const noexcept {
  int d = 0;
  for (const auto& t : terms) d = std::max(d, t.mon.degree());
  return d;
}

Vec to_vec(const std::vector<Polynomial>& components, const ModuleOrder& order) {
  Vec v;
  for (std::uint32_t c = 0; c < components.size(); ++c)
    for (const auto& t : components[c].terms()) v.terms.push_back({t.mon, c, t.coef});
  std::sort(v.terms.begin(), v.terms.end(), [&](const Term& a, const Term& b) {
    return order.cmp(a.mon, a.comp, b.mon, b.comp) > 0;
  });
  return v;
}

Vec to_vec(const Polynomial& p, const ModuleOrder& order, std::uint32_t comp) {
  Vec v;
  for (const auto& t : p.terms()) v.terms.push_back({t.mon, comp, t.coef});
  std::sort(v.terms.begin(), v.terms.end(),
            [&](const Term& a, const Term& b) { return order.ring.cmp(a.mon, b.mon) > 0; });
  return v;
}

std::vector<Polynomial> from_vec(const Vec& v, std::size_t rank, const RingPtr& ring) {
  std::vector<std::vector<PolyTerm>> parts(rank);
  for (const auto& t : v.terms) {
    if (t.comp >= rank) throw Error(ErrorCode::DimensionMismatch, "module element exceeds rank");
    parts[t.comp].push_back({t.mon, t.coef});
  }
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& p : parts) out.push_back(Polynomial::from_terms(ring, std::move(p)));
  return out;
}

Polynomial component(const Vec& v, std::uint32_t comp, const RingPtr& ring) {
  std::vector<PolyTerm> part;
  for (const auto& t : v.terms)
    if (t.comp == comp) part.push_back({t.mon, t.coef});
  return Polynomial::from_terms(ring, std::move(part));
}

Vec sub_mul(const Vec& h, const Rational& c, const Monomial& m, const Vec& g, const ModuleOrder& order) {
  Vec r;
  r.terms.reserve(h.terms.size() + g.terms.size());
  auto a = h.terms.begin(), ae = h.terms.end();
  auto b = g.terms.begin(), be = g.terms.end();
  while (a != ae && b != be) {
    Monomial bm = b->mon * m;
    int cmp = order.cmp(a->mon, a->comp, bm, b->comp);
    if (cmp > 0) {
      r.terms.push_back(*a++);
    } else if (cmp < 0) {
      r.terms.push_back({std::move(bm), b->comp, -(c * b->coef)});
      ++b;
    } else {
      Rational s = a->coef - c * b->coef;
      if (s != 0) r.terms.push_back({a->mon, a->comp, std::move(s)});
      ++a;
      ++b;
    }
  }
  for (; a != ae; ++a) r.terms.push_back(*a);
  for (; b != be; ++b) r.terms.push_back({b->mon * m, b->comp, -(c * b->coef)});
  return r;
}

Vec scale(const Vec& v, const Rational& c) {
  Vec r = v;
  for (auto& t : r.terms) t.coef *= c;
  return r;
}

Vec make_monic(Vec v) {
  if (v.is_zero() || v.lead().coef == 1) return v;
  Rational inv = 1 / v.lead().coef;
  for (auto& t : v.terms) t.coef *= inv;
  return v;
}

namespace {

struct Reducer {
  const Vec* vec;
  int ecart;
};

const Reducer* find_reducer(const std::vector<Reducer>& set, const Term& lead, bool min_ecart) {
  const Reducer* best = nullptr;
  for (const auto& r : set) {
    const Term& l = r.vec->lead();
    if (l.comp != lead.comp || !l.mon.divides(lead.mon)) continue;
    if (!min_ecart) return &r;
    if (!best || r.ecart < best->ecart ||
        (r.ecart == best->ecart && r.vec->terms.size() < best->vec->terms.size()))
      best = &r;
    if (best->ecart == 0) break;
  }
  return best;
}

Vec reduce_step(const Vec& h, const Vec& g, const ModuleOrder& order) {
  const Term& lh = h.lead();
  const Term& lg = g.lead();
  return sub_mul(h, lh.coef / lg.coef, lh.mon / lg.mon, g, order);
}

// Highest corners. In a local degree order, if the leading terms of a
// module M cover m^D e_c for every component c' >= c, then M contains
// m^D e_c, so such terms can be discarded during reduction. bound[c] < 0
// means no truncation for component c.
std::vector<int> corner_bounds(const std::vector<const Vec*>& basis, std::uint32_t ncomps) {
  std::vector<int> own(ncomps, -1);
  if (basis.empty()) return own;
  const std::size_t nvars = basis.front()->lead().mon.size();
  std::vector<std::vector<int>> pure(ncomps, std::vector<int>(nvars, -1));
  std::vector<bool> has_one(ncomps, false);
  for (const Vec* b : basis) {
    const Term& l = b->lead();
    if (l.comp >= ncomps) continue;
    if (l.mon.is_one()) {
      has_one[l.comp] = true;
      continue;
    }
    for (std::size_t v = 0; v < nvars; ++v) {
      if (l.mon[v] != l.mon.degree()) continue;
      int& cur = pure[l.comp][v];
      if (cur < 0 || l.mon[v] < cur) cur = l.mon[v];
    }
  }
  for (std::uint32_t c = 0; c < ncomps; ++c) {
    if (has_one[c]) {
      own[c] = 0;
      continue;
    }
    if (nvars == 0) continue;
    int sum = 1;
    bool covered = true;
    for (std::size_t v = 0; v < nvars && covered; ++v) {
      if (pure[c][v] < 0) covered = false;
      sum += pure[c][v] - 1;
    }
    if (covered) own[c] = sum;
  }
  std::vector<int> eff(ncomps, -1);
  int running = 0;
  for (std::uint32_t c = ncomps; c-- > 0;) {
    if (own[c] < 0) break;
    running = std::max(running, own[c]);
    eff[c] = running;
  }
  return eff;
}

void drop_corner(Vec& h, const std::vector<int>& bounds) {
  if (bounds.empty()) return;
  std::erase_if(h.terms, [&](const Term& t) {
    return t.comp < bounds.size() && bounds[t.comp] >= 0 && t.mon.degree() >= bounds[t.comp];
  });
}

std::uint32_t component_count(const Vec& h, const std::vector<Reducer>& set) {
  std::uint32_t n = 0;
  for (const auto& t : h.terms) n = std::max(n, t.comp + 1);
  for (const auto& r : set)
    for (const auto& t : r.vec->terms) n = std::max(n, t.comp + 1);
  return n;
}

Vec nf_impl(Vec h, std::vector<Reducer> set, const ModuleOrder& order, const NormalFormOptions& opts,
            const std::vector<int>* corners = nullptr) {
  const bool local = !order.is_global();
  std::vector<int> own_corners;
  if (local && !corners) {
    std::vector<const Vec*> vs;
    for (const auto& r : set) vs.push_back(r.vec);
    own_corners = corner_bounds(vs, component_count(h, set));
    corners = &own_corners;
  }
  std::deque<Vec> extras;
  if (local) drop_corner(h, *corners);
  while (!h.is_zero()) {
    if (opts.stop_component && h.lead().comp >= *opts.stop_component) break;
    const Reducer* r = find_reducer(set, h.lead(), local);
    if (!r) break;
    const Vec* g = r->vec;
    if (local) {
      int eh = h.ecart();
      if (r->ecart > eh) {
        extras.push_back(h);
        set.push_back({&extras.back(), eh});
        // `r` may be invalidated by the push_back; g stays valid.
      }
    }
    h = reduce_step(h, *g, order);
    if (local) drop_corner(h, *corners);
  }
  return h;
}

std::vector<Reducer> make_reducers(const std::vector<Vec>& basis) {
  std::vector<Reducer> set;
  set.reserve(basis.size());
  for (const auto& b : basis)
    if (!b.is_zero()) set.push_back({&b, b.ecart()});
  return set;
}

}  // namespace

Vec normal_form(Vec f, const std::vector<Vec>& basis, const ModuleOrder& order, const NormalFormOptions& opts) {
  return nf_impl(std::move(f), make_reducers(basis), order, opts);
}

Vec reduce_fully(Vec h, const std::vector<Vec>& basis, const ModuleOrder& order, std::optional<int> truncate_at) {
  if (!order.is_global() && !truncate_at)
    throw Error(ErrorCode::PreconditionViolated, "full reduction in a local order needs a truncation degree");
  auto set = make_reducers(basis);
  Vec result;
  auto drop_high = [&](Vec& v) {
    if (!truncate_at) return;
    std::erase_if(v.terms, [&](const Term& t) { return t.mon.degree() >= *truncate_at; });
  };
  drop_high(h);
  while (!h.is_zero()) {
    const Reducer* r = find_reducer(set, h.lead(), false);
    if (r) {
      h = reduce_step(h, *r->vec, order);
      drop_high(h);
    } else {
      result.terms.push_back(h.terms.front());
      h.terms.erase(h.terms.begin());
    }
  }
  return result;
}

std::vector<LeadingTerm> leading_terms(const std::vector<Vec>& basis) {
  std::vector<LeadingTerm> out;
  for (const auto& b : basis)
    if (!b.is_zero()) out.push_back({b.lead().comp, b.lead().mon});
  return out;
}

namespace {

struct Pair {
  int i;  // index into basis, or generator index when j < 0
  int j;
  Monomial lcm;
  int sugar;
};

struct BasisBuilder {
  const ModuleOrder& order;
  bool ideal_case;
  std::vector<Vec> basis;
  std::vector<int> sugar;
  std::vector<int> ecarts;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  void add(Vec h, int h_sugar) {
    const int t = static_cast<int>(basis.size());
    const Term& lt = h.lead();
    const Monomial& mt = lt.mon;

    // Old pairs made redundant by the new leading term (chain criterion).
    std::erase_if(pairs, [&](const Pair& p) {
      if (p.j < 0) return false;
      if (basis[p.i].lead().comp != lt.comp) return false;
      if (!mt.divides(p.lcm)) return false;
      Monomial li = basis[p.i].lead().mon.lcm(mt);
      Monomial lj = basis[p.j].lead().mon.lcm(mt);
      return li != p.lcm && lj != p.lcm;
    });

    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
      if (!active[i]) continue;
      const Term& li = basis[i].lead();
      if (li.comp != lt.comp) continue;
      cands.push_back({i, li.mon.lcm(mt), ideal_case && li.mon.coprime(mt)});
    }
    // M: drop pairs whose lcm is a proper multiple of another new lcm.
    for (auto& a : cands)
      for (const auto& b : cands)
        if (&a != &b && b.lcm.divides(a.lcm) && b.lcm != a.lcm) {
          a.keep = false;
          break;
        }
    // F and product criterion: one pair per lcm class, none if the class
    // contains a coprime pair.
    for (std::size_t a = 0; a < cands.size(); ++a) {
      if (!cands[a].keep) continue;
      bool any_coprime = cands[a].coprime;
      for (std::size_t b = a + 1; b < cands.size(); ++b) {
        if (cands[b].keep && cands[b].lcm == cands[a].lcm) {
          any_coprime = any_coprime || cands[b].coprime;
          cands[b].keep = false;
        }
      }
      if (any_coprime) cands[a].keep = false;
    }
    for (auto& c : cands) {
      if (!c.keep) continue;
      const Monomial& li = basis[c.i].lead().mon;
      int s = std::max(sugar[c.i] + (c.lcm.degree() - li.degree()), h_sugar + (c.lcm.degree() - mt.degree()));
      pairs.push_back({c.i, t, std::move(c.lcm), s});
    }
    // Elements whose leading term is a multiple of the new one no longer
    // need new pairs.
    for (int i = 0; i < t; ++i) {
      if (active[i] && basis[i].lead().comp == lt.comp && mt.divides(basis[i].lead().mon)) active[i] = false;
    }
    ecarts.push_back(h.ecart());
    basis.push_back(std::move(h));
    sugar.push_back(h_sugar);
    active.push_back(true);
  }
};

}  // namespace

std::vector<Vec> standard_basis(std::vector<Vec> generators, const ModuleOrder& order, BasisStats* stats) {
  std::erase_if(generators, [](const Vec& v) { return v.is_zero(); });
  bool ideal_case = true;
  for (const auto& g : generators)
    for (const auto& t : g.terms)
      if (t.comp != 0) ideal_case = false;

  std::uint32_t ncomps = 0;
  for (const auto& g : generators)
    for (const auto& t : g.terms) ncomps = std::max(ncomps, t.comp + 1);
  std::vector<int> corners;
  bool corners_stale = true;

  BasisBuilder b{order, ideal_case, {}, {}, {}, {}, {}};
  for (std::size_t g = 0; g < generators.size(); ++g)
    b.pairs.push_back({static_cast<int>(g), -1, generators[g].lead().mon, generators[g].max_degree()});

  while (!b.pairs.empty()) {
    auto best = b.pairs.begin();
    for (auto it = b.pairs.begin(); it != b.pairs.end(); ++it) {
      if (it->sugar < best->sugar ||
          (it->sugar == best->sugar && it->lcm.degree() < best->lcm.degree()))
        best = it;
    }
    Pair p = std::move(*best);
    b.pairs.erase(best);
    if (stats) ++stats->pairs_considered;

    Vec s;
    if (p.j < 0) {
      s = generators[p.i];
    } else {
      const Vec& gi = b.basis[p.i];
      const Vec& gj = b.basis[p.j];
      Vec a = sub_mul(Vec{}, -1, p.lcm / gi.lead().mon, gi, order);
      s = sub_mul(a, 1, p.lcm / gj.lead().mon, gj, order);
    }
    std::vector<Reducer> set;
    set.reserve(b.basis.size());
    for (std::size_t k = 0; k < b.basis.size(); ++k) set.push_back({&b.basis[k], b.ecarts[k]});
    if (!order.is_global() && corners_stale) {
      std::vector<const Vec*> vs;
      for (const auto& v : b.basis) vs.push_back(&v);
      corners = corner_bounds(vs, ncomps);
      corners_stale = false;
    }
    Vec h = nf_impl(std::move(s), std::move(set), order, {}, &corners);
    if (h.is_zero()) {
      if (stats) ++stats->zero_reductions;
      continue;
    }
    h = make_monic(std::move(h));
    b.add(std::move(h), std::max(p.sugar, 0));
    corners_stale = true;
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<Vec>& all = b.basis;
  std::vector<bool> keep(all.size(), true);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      const Term& li = all[i].lead();
      const Term& lj = all[j].lead();
      if (li.comp != lj.comp || !lj.mon.divides(li.mon)) continue;
      if (lj.mon != li.mon || j < i) keep[i] = false;
    }
  }
  std::vector<Vec> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) out.push_back(std::move(all[i]));

  if (order.is_global()) {
    // Tail reduction gives the reduced Groebner basis.
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::vector<Vec> others;
      for (std::size_t j = 0; j < out.size(); ++j)
        if (j != i) others.push_back(out[j]);
      Vec head;
      head.terms.push_back(out[i].terms.front());
      Vec tail = out[i];
      tail.terms.erase(tail.terms.begin());
      Vec red = reduce_fully(std::move(tail), others, order);
      head.terms.insert(head.terms.end(), red.terms.begin(), red.terms.end());
      out[i] = make_monic(std::move(head));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Vec& a, const Vec& b) {
    return order.cmp(a.lead().mon, a.lead().comp, b.lead().mon, b.lead().comp) > 0;
  });
  return out;
}

}  // namespace germforge::sb
