#pragma once

#include <span>
#include <string>
#include <string_view>

#include "qproduct/galois.hpp"

namespace qproduct {

/// Inner products defining the duals C^perp, C^* and C^star:
///   Euclidean   sum v_i w_i             over GF(q)
///   Hermitian   sum v_i w_i^r           over GF(r^2)
///   Symplectic  sum tr(v_i w_i^r)       values in GF(p), only GF(p)-bilinear
enum class InnerProduct { Euclidean, Hermitian, Symplectic };

std::string_view to_string(InnerProduct kind) noexcept;
InnerProduct parse_inner_product(std::string_view s);

/// Throws std::invalid_argument when `kind` needs a quadratic extension and `f` has odd degree.
void require_kind_compatible(const Field& f, InnerProduct kind);

/// Scalar value of <v, w>. Symplectic values are returned as encodings < p.
Elem inner_product(const FieldSpec& f, std::span<const Elem> v, std::span<const Elem> w, InnerProduct kind);

}  // namespace qproduct
