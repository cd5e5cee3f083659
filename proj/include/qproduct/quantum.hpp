#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qproduct/code.hpp"

namespace qproduct {

/// QECC(n, k, d, alphabet). `distance` certifies the classical dual distance, which
/// bounds the quantum distance from below.
struct QeccParams {
    std::size_t n = 0;
    std::size_t k = 0;
    std::uint32_t alphabet = 0;
    DistanceCertificate distance;
    /// min weight of (dual \ code), when the dual was small enough to enumerate and it was asked for.
    std::optional<std::size_t> stabilizer_distance;
    std::string construction;  // css | hermitian | symplectic | rs-product
    std::vector<std::string> provenance;
};

struct QeccOptions {
    DistanceOptions distance;
    bool stabilizer_distance = false;
};

/// Euclidean self-orthogonal C = [n, k]_q -> QECC(n, n - 2k, >= d(C^perp), q).
QeccParams css_qecc(const LinearCode& c, const QeccOptions& options = {});
/// Hermitian self-orthogonal C over GF(r^2) -> QECC(n, n - 2k, >= d(C^*), r).
QeccParams hermitian_qecc(const LinearCode& c, const QeccOptions& options = {});
/// Symplectic self-orthogonal additive C over GF(p^{2m}) -> QECC(n, n - k_p/m, >= d(C^star), p^m).
/// Throws std::invalid_argument if m does not divide k_p.
QeccParams symplectic_qecc(const AdditiveCode& c, const QeccOptions& options = {});

/// rs_code(q, q - mu1) (x) rs_code(q, q - mu2) through the CSS construction, with the dual
/// distance lower bound seeded from the spectral rectangle. Requires 2 mu1 < q - 1.
QeccParams rs_prod_qecc(std::uint32_t q, std::uint32_t mu1, std::uint32_t mu2, const QeccOptions& options = {});

using Rational = boost::rational<std::int64_t>;

struct RateComparison {
    std::uint32_t q = 0, mu1 = 0, mu2 = 0;
    Rational product_rate;    // 1 - 2 mu1 mu2 / (q-1)^2
    Rational rates_product;   // (1 - 2 mu1/(q-1)) (1 - 2 mu2/(q-1))
    bool product_wins = false;    // product_rate > rates_product
    bool claim_condition = false; // mu1 == mu2 and mu < 2(q-1)/3
};

RateComparison rate_comparison(std::uint32_t q, std::uint32_t mu1, std::uint32_t mu2);

/// Minimum weight over dual \ code, by enumeration of the dual; nullopt above budget.
std::optional<std::size_t> stabilizer_distance(const LinearCode& c, InnerProduct kind, const DistanceOptions& options = {});
std::optional<std::size_t> stabilizer_distance(const AdditiveCode& c, const DistanceOptions& options = {});

}  // namespace qproduct
