#pragma once

#include <vector>

#include "germforge/stdbasis.hpp"

namespace germforge {

/// Koszul complex of `sequence` over ring/(relations), localized at the
/// origin for LOCAL orders.
struct KoszulInstance {
  RingPtr ring;
  std::vector<Polynomial> relations;
  std::vector<Polynomial> sequence;
  MonomialOrder order = MonomialOrder::local();
};

/// Images of the basis of K_p in K_(p-1); basis elements are the
/// p-subsets of the sequence in lexicographic order.
std::vector<FreeVector> koszul_differential(const KoszulInstance& inst, std::size_t p);
std::size_t koszul_rank(std::size_t m, std::size_t p);

/// d_(p-1) ∘ d_p = 0 for every p, as exact polynomial identities.
bool koszul_complex_check(const KoszulInstance& inst);

/// dim H_0 .. dim H_pmax. INFINITE_LENGTH names the first infinite index.
std::vector<std::size_t> koszul_homology_dims(const KoszulInstance& inst, std::size_t p_max);

struct KoszulEuler {
  std::vector<std::size_t> dims;
  /// sum over i >= 0 of (-1)^i dim H_i
  long inclusive = 0;
  /// sum over i >= 1 only
  long from_one = 0;
};
KoszulEuler koszul_euler(const KoszulInstance& inst);

}  // namespace germforge
