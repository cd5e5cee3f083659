#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qproduct/matrix.hpp"

namespace qproduct {

/// Linear code over GF(q), stored by its rref generator.
class LinearCode {
public:
    /// Dependent rows of `generator` are dropped; k = rank.
    explicit LinearCode(const Matrix& generator, std::optional<std::size_t> claimed_distance = std::nullopt);

    static LinearCode zero(const Field& f, Index n);
    static LinearCode full(const Field& f, Index n);

    const Field& field() const noexcept { return generator_.field(); }
    Index length() const noexcept { return generator_.cols(); }
    Index dimension() const noexcept { return generator_.rows(); }
    const Matrix& generator() const noexcept { return generator_; }
    /// Distance asserted by a construction theorem, not yet certified.
    std::optional<std::size_t> claimed_distance() const noexcept { return claimed_; }
    LinearCode with_claimed_distance(std::optional<std::size_t> d) const;

    bool contains(std::span<const Elem> word) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b) { return a.generator_ == b.generator_; }

private:
    Matrix generator_;
    std::optional<std::size_t> claimed_;
};

/// GF(p)-linear code over GF(q = p^l): rows are GF(p)-independent generators and
/// the code has p^{k_p} words. Canonical form is the rref of the p-ary expansion.
class AdditiveCode {
public:
    explicit AdditiveCode(const Matrix& generators, std::optional<std::size_t> claimed_distance = std::nullopt);

    /// GF(p)-span of a linear code: rows x^s g for every generator g and s < l.
    static AdditiveCode from_linear(const LinearCode& c);
    static AdditiveCode zero(const Field& f, Index n);

    const Field& field() const noexcept { return generator_.field(); }
    Index length() const noexcept { return generator_.cols(); }
    /// k_p, the number of GF(p)-generators.
    Index prime_dimension() const noexcept { return generator_.rows(); }
    const Matrix& generator() const noexcept { return generator_; }
    std::optional<std::size_t> claimed_distance() const noexcept { return claimed_; }
    AdditiveCode with_claimed_distance(std::optional<std::size_t> d) const;

    bool contains(std::span<const Elem> word) const;

    friend bool operator==(const AdditiveCode& a, const AdditiveCode& b) { return a.generator_ == b.generator_; }

private:
    Matrix generator_;
    std::optional<std::size_t> claimed_;
};

/// Lower bound with its justification, and upper bound backed by a codeword.
struct DistanceCertificate {
    std::size_t lower = 0;
    std::string lower_method;  // exhaustive | column-independence | bch-rectangle | trivial | degenerate
    std::size_t upper = 0;
    std::string upper_method;  // exhaustive | low-weight-search | heuristic | degenerate
    Vector witness;            // weight == upper unless degenerate
    bool degenerate = false;   // zero-dimensional code, d reported as n+1
    std::optional<std::size_t> claimed;

    bool exact() const noexcept { return lower == upper; }
};

inline constexpr std::uint64_t default_enumeration_budget = std::uint64_t{1} << 24;

struct DistanceOptions {
    std::uint64_t budget = default_enumeration_budget;
    unsigned threads = 1;
    /// Externally justified lower bound (e.g. from a spectral argument).
    std::optional<std::size_t> known_lower;
    std::string known_lower_method;
    unsigned heuristic_rounds = 200;
};

LinearCode dual(const LinearCode& c, InnerProduct kind);
AdditiveCode symplectic_dual(const AdditiveCode& c);

bool is_self_orthogonal(const LinearCode& c, InnerProduct kind);
/// Additive codes only carry the symplectic form.
bool is_self_orthogonal(const AdditiveCode& c);

std::size_t hamming_weight(std::span<const Elem> v) noexcept;

DistanceCertificate min_distance(const LinearCode& c, const DistanceOptions& options = {});
DistanceCertificate min_distance(const AdditiveCode& c, const DistanceOptions& options = {});

/// True iff no nonzero codeword has weight < w. Requires w <= 4.
bool distance_at_least(const LinearCode& c, std::size_t w);
bool distance_at_least(const AdditiveCode& c, std::size_t w);

/// Smallest-weight nonzero codeword of weight <= max_weight (max_weight <= 3), if any.
std::optional<Vector> low_weight_word(const LinearCode& c, std::size_t max_weight);
std::optional<Vector> low_weight_word(const AdditiveCode& c, std::size_t max_weight);

/// counts[w] = number of codewords of weight w; throws std::length_error above budget.
std::vector<std::uint64_t> weight_enumerator(const LinearCode& c, const DistanceOptions& options = {});
std::vector<std::uint64_t> weight_enumerator(const AdditiveCode& c, const DistanceOptions& options = {});

// Exhaustive enumeration of the GF(p)-span of a basis (rows over GF(q)), in p-ary
// modular Gray-code order. Work is split into contiguous index ranges.

struct SpanEnumeration {
    std::uint64_t words = 0;
    std::size_t min_weight = 0;    // over accepted nonzero words; 0 if none
    std::uint64_t argmin = 0;      // Gray index of the first word reaching min_weight
    std::vector<std::uint64_t> counts;  // filled when requested
};

using WordFilter = std::function<bool(std::span<const Elem>)>;

/// Number of words p^K, or nullopt if it exceeds `limit`.
std::optional<std::uint64_t> span_size(const Matrix& basis, std::uint64_t limit);
SpanEnumeration enumerate_span(const Matrix& basis, unsigned threads, bool want_counts,
                               const WordFilter& accept = nullptr);
/// Codeword at a Gray-code position.
Vector span_word(const Matrix& basis, std::uint64_t gray_index);
/// GF(p)-basis of a linear code (x^s g rows).
Matrix prime_span_basis(const LinearCode& c);

}  // namespace qproduct
