#pragma once

#include <cstddef>

#include "qproduct/code.hpp"

namespace qproduct {

/// C1 (x) C2 with generator G1 (x) G2. Coordinate (i, j) sits at flat index i*n2 + j.
/// The claimed distance is d1*d2 when both factors carry a distance.
LinearCode product(const LinearCode& c1, const LinearCode& c2);

/// C1 (x)_p C2 for C1 over GF(p) and C2 additive over GF(p^l): GF(p)-generators
/// g_i (x) h_j, first factor outer. k_p = k1 * k_p(C2).
AdditiveCode product_additive(const LinearCode& c1, const AdditiveCode& c2);

/// Stacked generator [H1 (x) H2; A1 (x) H2; H1 (x) A2] of the dual of C1 (x) C2, where Hi
/// generates the dual of Ci under `kind` and Ai completes Hi to a basis.
/// Euclidean or Hermitian only; the symplectic version takes an additive second factor.
Matrix dual_of_product_generator(const LinearCode& c1, const LinearCode& c2, InnerProduct kind);
/// Symplectic dual of C1 (x)_p C2 as GF(p)-generators. H1, A1 live over GF(p); H2, A2 are
/// GF(p)-generators of C2's symplectic dual and of a complement in the p-ary expansion.
Matrix dual_of_product_generator(const LinearCode& c1, const AdditiveCode& c2);

/// min(d(C1 dual), d(C2 dual)): an upper bound on the dual distance of the product.
/// Uses the certified upper ends of the factor dual distances. A factor whose dual is zero
/// is skipped; if both are, the product dual is zero and n1 n2 + 1 is returned.
std::size_t dual_distance_ceiling(const LinearCode& c1, const LinearCode& c2, InnerProduct kind,
                                  const DistanceOptions& options = {});
std::size_t dual_distance_ceiling(const LinearCode& c1, const AdditiveCode& c2, const DistanceOptions& options = {});

/// Builds C (x) C_so and tests its self-orthogonality. Throws std::invalid_argument unless
/// C_so is self-orthogonal under `kind` (Euclidean or Hermitian).
bool check_selforth_transfer(const LinearCode& arbitrary, const LinearCode& self_orthogonal, InnerProduct kind);
/// Symplectic case: C_p over GF(p), C_s symplectic self-orthogonal additive code.
bool check_selforth_transfer(const LinearCode& prime_code, const AdditiveCode& self_orthogonal);

}  // namespace qproduct
