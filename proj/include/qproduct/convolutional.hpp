#pragma once

#include <optional>

#include "qproduct/code.hpp"
#include "qproduct/quantum.hpp"

namespace qproduct {

/// Semi-infinite band S of copies of the block M (r x (n+m)), copy i starting at column i*n.
/// Additive blocks hold GF(p)-generators and use the symplectic form.
class ConvStabilizer {
public:
    ConvStabilizer(Matrix block, Index frame, Index overlap, InnerProduct kind);

    const Matrix& block() const noexcept { return block_; }
    const Field& field() const noexcept { return block_.field(); }
    Index rows() const noexcept { return block_.rows(); }
    Index frame() const noexcept { return frame_; }
    Index overlap() const noexcept { return overlap_; }
    InnerProduct kind() const noexcept { return kind_; }
    bool additive() const noexcept { return kind_ == InnerProduct::Symplectic; }

    /// Stabilizer generators per frame as counted by the quantum construction:
    /// 2r for CSS/Hermitian (X and Z parts), r/m for GF(p^{2m}) symplectic blocks.
    Index stabilizers_per_frame() const;
    /// n - stabilizers_per_frame().
    Index logical_per_frame() const;

    /// Set by conv_from_product: M = G1 (x) G2 with overlap t * n2.
    struct Factors {
        Matrix first;   // G1, over the block's field (embedded for additive blocks)
        Matrix second;  // G2 (GF(p)-generators for additive blocks)
        Index t = 0;
    };
    const std::optional<Factors>& factors() const noexcept { return factors_; }

private:
    Matrix block_;
    Index frame_;
    Index overlap_;
    InnerProduct kind_;
    std::optional<Factors> factors_;

    friend ConvStabilizer conv_from_product(const LinearCode&, const LinearCode&, Index, InnerProduct);
    friend ConvStabilizer conv_from_product(const LinearCode&, const AdditiveCode&, Index);
};

/// M = G1 (x) G2, frame (n1 - t) n2, overlap t n2. C2 must be self-orthogonal under `kind`
/// (Euclidean or Hermitian) and 1 <= t < n1.
ConvStabilizer conv_from_product(const LinearCode& c1, const LinearCode& c2, Index t,
                                 InnerProduct kind = InnerProduct::Euclidean);
/// C1 over GF(p), C2 symplectic self-orthogonal additive.
ConvStabilizer conv_from_product(const LinearCode& c1, const AdditiveCode& c2, Index t);

/// gram(M, M) = 0 and gram(last m columns, first m columns) = 0.
bool check_band_self_orthogonal(const ConvStabilizer& s);

/// Top-left (N r) x (N n + m) window of S.
Matrix band_window(const ConvStabilizer& s, Index blocks);
/// window(G1 band with frame n1 - t, overlap t) (x) G2 == band_window(s, N).
/// Throws std::logic_error if s did not come from conv_from_product.
bool verify_band_factorization(const ConvStabilizer& s, Index blocks);

struct TailBitingCode {
    Matrix generator;  // N r stacked rows, block i at column offset i n mod N n
    Index rank = 0;    // over GF(q), or over GF(p) for additive blocks
    bool full_rank = false;
    bool self_orthogonal = false;
    std::optional<LinearCode> linear;
    std::optional<AdditiveCode> additive;
};

/// Requires N n >= n + m.
TailBitingCode tail_biting(const ConvStabilizer& s, Index blocks);
/// CSS (Euclidean), Hermitian or symplectic construction on the tail-biting code.
QeccParams tail_biting_qecc(const ConvStabilizer& s, Index blocks, const QeccOptions& options = {});

/// Minimum weight of a nonzero word orthogonal to band_window(s, W) and supported on its
/// first W n columns; such words are finitely supported dual words of S, so this bounds
/// the free distance from above. nullopt when no such word exists.
std::optional<DistanceCertificate> free_distance_upper_bound(const ConvStabilizer& s, Index window_blocks,
                                                             const DistanceOptions& options = {});

}  // namespace qproduct
