#include "germforge/koszul.hpp"

#include <map>
#include <string>

#include "germforge/error.hpp"

namespace germforge {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t p) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (cur.size() == p) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

void check(const KoszulInstance& inst) {
  for (const auto& p : inst.relations)
    if (!same_ring(p.ring(), inst.ring)) throw Error(ErrorCode::DimensionMismatch, "relation from another ring");
  for (const auto& p : inst.sequence)
    if (!same_ring(p.ring(), inst.ring)) throw Error(ErrorCode::DimensionMismatch, "sequence element from another ring");
}

}  // namespace

std::size_t koszul_rank(std::size_t m, std::size_t p) {
  if (p > m) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= p; ++i) r = r * (m - p + i) / i;
  return r;
}

std::vector<FreeVector> koszul_differential(const KoszulInstance& inst, std::size_t p) {
  check(inst);
  const std::size_t m = inst.sequence.size();
  if (p == 0 || p > m) throw Error(ErrorCode::IndexOutOfRange, "differential index out of range");
  auto lower = subsets(m, p - 1);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index[lower[i]] = i;
  std::vector<FreeVector> out;
  for (const auto& S : subsets(m, p)) {
    FreeVector v(lower.size(), Polynomial(inst.ring));
    for (std::size_t t = 0; t < S.size(); ++t) {
      auto T = S;
      T.erase(T.begin() + static_cast<long>(t));
      const auto& s = inst.sequence[S[t]];
      v[index.at(T)] += t % 2 ? -s : s;
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool koszul_complex_check(const KoszulInstance& inst) {
  const std::size_t m = inst.sequence.size();
  for (std::size_t p = 2; p <= m; ++p) {
    auto dp = koszul_differential(inst, p);
    auto dq = koszul_differential(inst, p - 1);
    for (const auto& col : dp) {
      FreeVector acc(dq.front().size(), Polynomial(inst.ring));
      for (std::size_t i = 0; i < col.size(); ++i)
        for (std::size_t r = 0; r < acc.size(); ++r) acc[r] += col[i] * dq[i][r];
      for (const auto& c : acc)
        if (!c.is_zero()) return false;
    }
  }
  return true;
}

std::vector<std::size_t> koszul_homology_dims(const KoszulInstance& inst, std::size_t p_max) {
  check(inst);
  const std::size_t m = inst.sequence.size();
  std::vector<std::size_t> dims;
  for (std::size_t p = 0; p <= p_max; ++p) {
    if (p > m) {
      dims.push_back(0);
      continue;
    }
    const std::size_t rank = koszul_rank(m, p);
    std::vector<FreeVector> cycles;
    if (p == 0) {
      cycles.push_back({Polynomial::constant(inst.ring, 1)});
    } else {
      auto d = koszul_differential(inst, p);
      cycles = kernel_mod(inst.ring, koszul_rank(m, p - 1), d, inst.relations, inst.order).generators();
    }
    std::vector<FreeVector> boundaries;
    if (p < m) boundaries = koszul_differential(inst, p + 1);
    for (const auto& g : inst.relations)
      for (std::size_t c = 0; c < rank; ++c) {
        FreeVector v(rank, Polynomial(inst.ring));
        v[c] = g;
        boundaries.push_back(std::move(v));
      }
    if (cycles.empty()) {
      dims.push_back(0);
      continue;
    }
    QuotientSpace H(inst.ring, rank, std::move(cycles), std::move(boundaries), inst.order);
    if (!H.dimension().finite)
      throw Error(ErrorCode::InfiniteLength, "Koszul homology H_" + std::to_string(p) + " has infinite length");
    dims.push_back(H.dimension().value);
  }
  return dims;
}

KoszulEuler koszul_euler(const KoszulInstance& inst) {
  KoszulEuler out;
  out.dims = koszul_homology_dims(inst, inst.sequence.size());
  for (std::size_t i = 0; i < out.dims.size(); ++i) {
    long v = static_cast<long>(out.dims[i]) * (i % 2 ? -1 : 1);
    out.inclusive += v;
    if (i >= 1) out.from_one += v;
  }
  return out;
}

}  // namespace germforge
