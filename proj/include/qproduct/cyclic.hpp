#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qproduct/code.hpp"

namespace qproduct {

/// Polynomial over GF(q), coefficients constant-first, no trailing zeros. {} is 0.
using Poly = std::vector<Elem>;

Poly poly_trim(Poly a);
Poly poly_add(const FieldSpec& f, const Poly& a, const Poly& b);
Poly poly_mul(const FieldSpec& f, const Poly& a, const Poly& b);
/// Quotient and remainder; throws std::domain_error for b = 0.
std::pair<Poly, Poly> poly_divmod(const FieldSpec& f, const Poly& a, const Poly& b);
Poly poly_monic(const FieldSpec& f, const Poly& a);
/// X^deg a(1/X).
Poly poly_reciprocal(const Poly& a);
Elem poly_eval(const FieldSpec& f, const Poly& a, Elem x);
Poly poly_from_roots(const FieldSpec& f, const std::vector<Elem>& roots);
/// X^n - 1
Poly poly_cyclotomic_modulus(const FieldSpec& f, std::uint32_t n);

/// Cyclic code of length n with gcd(n, q) = 1. When n | q-1 the zeros are tracked as
/// exponents of alpha = root_of_unity(n).
class CyclicCode {
public:
    /// g(X) = prod_{s in S} (X - alpha^s); requires n | q-1 and distinct exponents mod n.
    static CyclicCode from_roots(const Field& f, std::uint32_t n, std::vector<std::uint32_t> exponents);
    /// g must be monic and divide X^n - 1.
    static CyclicCode from_generator(const Field& f, std::uint32_t n, Poly g);

    const Field& field() const noexcept { return code_.field(); }
    std::uint32_t length() const noexcept { return n_; }
    Index dimension() const noexcept { return code_.dimension(); }
    const Poly& generator_poly() const noexcept { return g_; }
    const LinearCode& code() const noexcept { return code_; }

    bool spectral() const noexcept { return alpha_ != 0; }
    /// alpha of order n, or 0 outside the spectral regime.
    Elem alpha() const noexcept { return alpha_; }
    /// Sorted exponents s with g(alpha^s) = 0; empty outside the spectral regime.
    const std::vector<std::uint32_t>& zeros() const noexcept { return zeros_; }
    /// Complement of zeros() in [0, n).
    std::vector<std::uint32_t> free_positions() const;

private:
    CyclicCode(const Field& f, std::uint32_t n, Poly g, std::optional<std::size_t> claimed);

    std::uint32_t n_;
    Poly g_;
    Elem alpha_ = 0;
    std::vector<std::uint32_t> zeros_;
    LinearCode code_;

    friend CyclicCode rs_code(std::uint32_t q, std::uint32_t delta);
};

/// Reed-Solomon code of length q-1 with zeros alpha^0..alpha^{delta-2}; [q-1, q-delta, delta].
CyclicCode rs_code(std::uint32_t q, std::uint32_t delta);

/// Monic reciprocal of (X^n - 1)/g: generator of the Euclidean dual.
Poly dual_generator_poly(const FieldSpec& f, const Poly& g, std::uint32_t n);
/// Dual as a cyclic code (Euclidean, or Hermitian over an even-degree field).
CyclicCode dual(const CyclicCode& c, InnerProduct kind);

/// Where a zero of the dual sits, given a free position i of the code:
/// Euclidean -i mod n, Hermitian -q*i mod n (q the subfield order).
std::uint32_t dual_support_map(std::uint32_t i, std::uint32_t n, InnerProduct kind, std::uint32_t q = 0);

struct Spectrum2D {
    Field field;
    Elem alpha = 0;
    Elem beta = 0;
    Matrix values;  // values(i, j) = c(alpha^i, beta^j), n1 x n2
};

/// word(a, b) is the coefficient of X^a Y^b, i.e. product coordinate a*n2 + b.
Spectrum2D spectrum_2d(const Matrix& word, Elem alpha, Elem beta);
Matrix inverse_spectrum_2d(const Spectrum2D& s);
/// Reshapes a flat product codeword (index a*n2 + b) into an n1 x n2 grid.
Matrix as_grid(const Field& f, std::span<const Elem> word, Index n1, Index n2);

/// forced(i, j) is true when every codeword's spectrum vanishes at (i, j).
struct ZeroGrid {
    Index n1 = 0;
    Index n2 = 0;
    std::vector<bool> forced;

    bool at(Index i, Index j) const { return forced[std::size_t(i * n2 + j)]; }
};

/// Product code: zero on the stripes i in Z(g1) and j in Z(g2).
ZeroGrid forced_zero_grid(const CyclicCode& c1, const CyclicCode& c2);
/// Dual of the product: zero on the rectangle Z(h1) x Z(h2).
ZeroGrid dual_forced_zero_grid(const CyclicCode& c1, const CyclicCode& c2, InnerProduct kind);

/// Cyclically consecutive block of columns [i0, i0+width) and rows [j0, j0+height), mod n.
struct ZeroRectangle {
    Index col_start = 0;
    Index width = 0;
    Index row_start = 0;
    Index height = 0;
};

/// All-zero rectangle maximizing min(width, height), then area; first found wins ties.
ZeroRectangle largest_zero_rectangle(const ZeroGrid& grid);

/// Lower bound min(a, b) + 1 for a bicyclic code whose spectra vanish on an a x b rectangle.
std::size_t bch_rectangle_bound(std::size_t a, std::size_t b) noexcept;

struct RsProductParams {
    std::uint32_t q = 0;
    std::uint32_t delta1 = 0, delta2 = 0;
    std::uint32_t mu1 = 0, mu2 = 0;  // q - delta
    std::uint64_t length = 0;        // (q-1)^2
    std::uint64_t dimension = 0;     // (q-delta1)(q-delta2)
    std::uint64_t distance = 0;      // delta1 * delta2
    std::uint64_t dual_dimension = 0;  // q(delta1+delta2-2) - delta1 delta2 + 1
    std::uint64_t dual_distance_stated = 0;    // min(q-delta1, q-delta2)
    std::uint64_t dual_distance_expected = 0;  // 1 + min(q-delta1, q-delta2)
    bool rs1_self_orthogonal = false;  // 2 mu1 <= q - 2
    bool rs2_self_orthogonal = false;
    bool product_self_orthogonal = false;
};

RsProductParams rs_product_params(std::uint32_t q, std::uint32_t delta1, std::uint32_t delta2);

}  // namespace qproduct
