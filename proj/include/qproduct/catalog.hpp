#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qproduct/code.hpp"
#include "qproduct/cyclic.hpp"

namespace qproduct {

/// Parity-check matrix of the q-ary Hamming code of redundancy r: one column per
/// projective point, normalized so the last nonzero coordinate is 1, ordered by
/// the base-q value with coordinate t as digit t.
Matrix hamming_check_matrix(std::uint32_t r, std::uint32_t q);

/// [(q^r-1)/(q-1), n-r, 3]_q
LinearCode hamming(std::uint32_t r, std::uint32_t q);
/// Row span of the Hamming check matrix: [(q^r-1)/(q-1), r, q^{r-1}]_q.
LinearCode simplex(std::uint32_t r, std::uint32_t q);
/// Hermitian dual of hamming(2, 4), the [5,2,4]_4 code generated by conj(H).
LinearCode quaternary_hamming_dual_5();

/// A code produced by a catalog expression.
struct NamedCode {
    std::variant<LinearCode, AdditiveCode> code;
    std::string expression;  // canonical spelling
    /// Set for rs(...) and cyclic(...), the only entries with spectral structure.
    std::optional<CyclicCode> cyclic;

    bool additive() const noexcept { return std::holds_alternative<AdditiveCode>(code); }
    const LinearCode& linear() const { return std::get<LinearCode>(code); }
    const AdditiveCode& as_additive() const { return std::get<AdditiveCode>(code); }
    const Field& field() const;
    Index length() const;
};

/// Evaluates expressions such as
///   hamming_dual(3,2)   simplex(2,2)   hamming(3,2)   quaternary_hamming_dual_5
///   rs(8,3)   cyclic(8,7,0,1,2)   product(A,B)   product_additive(A,B)
///   additive(A)   dual(A,euclidean|hermitian|symplectic)   file(path[,additive])
/// Throws std::invalid_argument with the catalog listing on unknown names.
NamedCode catalog_lookup(std::string_view expression);

/// One line per catalog entry.
std::vector<std::string> catalog_listing();

}  // namespace qproduct
