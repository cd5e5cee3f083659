#include "qproduct/convolutional.hpp"

#include <stdexcept>
#include <string>

#include "qproduct/product.hpp"

namespace qproduct {

ConvStabilizer::ConvStabilizer(Matrix block, Index frame, Index overlap, InnerProduct kind)
    : block_(std::move(block)), frame_(frame), overlap_(overlap), kind_(kind) {
    if (frame_ < 1) throw std::invalid_argument("conv: frame size must be >= 1");
    if (overlap_ < 0 || overlap_ > frame_)
        throw std::invalid_argument("conv: overlap " + std::to_string(overlap_) + " must lie in [0, " +
                                    std::to_string(frame_) + "]");
    if (block_.cols() != frame_ + overlap_)
        throw std::invalid_argument("conv: block has " + std::to_string(block_.cols()) + " columns, expected n+m = " +
                                    std::to_string(frame_ + overlap_));
    require_kind_compatible(block_.field(), kind_);
}

Index ConvStabilizer::stabilizers_per_frame() const {
    if (!additive()) return 2 * rows();
    const Index m = Index(field()->degree() / 2);
    return rows() / m;
}

Index ConvStabilizer::logical_per_frame() const { return frame_ - stabilizers_per_frame(); }

ConvStabilizer conv_from_product(const LinearCode& c1, const LinearCode& c2, Index t, InnerProduct kind) {
    require_same_field(c1.field(), c2.field(), "conv_from_product");
    if (kind == InnerProduct::Symplectic)
        throw std::invalid_argument("conv_from_product: symplectic blocks need an additive second factor");
    if (t < 1 || t >= c1.length())
        throw std::invalid_argument("conv_from_product: t must lie in [1, " + std::to_string(c1.length() - 1) + "]");
    if (!is_self_orthogonal(c2, kind))
        throw std::invalid_argument("conv_from_product: second factor is not " + std::string(to_string(kind)) +
                                    " self-orthogonal");
    const Index n2 = c2.length();
    ConvStabilizer s(kronecker(c1.generator(), c2.generator()), (c1.length() - t) * n2, t * n2, kind);
    s.factors_ = ConvStabilizer::Factors{c1.generator(), c2.generator(), t};
    return s;
}

ConvStabilizer conv_from_product(const LinearCode& c1, const AdditiveCode& c2, Index t) {
    if (!c1.field()->is_prime_field() || c1.field()->characteristic() != c2.field()->characteristic())
        throw std::invalid_argument("conv_from_product: first factor must be over the prime field of " +
                                    c2.field()->name());
    if (t < 1 || t >= c1.length())
        throw std::invalid_argument("conv_from_product: t must lie in [1, " + std::to_string(c1.length() - 1) + "]");
    if (!is_self_orthogonal(c2))
        throw std::invalid_argument("conv_from_product: second factor is not symplectic self-orthogonal");
    const Matrix g1 = embed(c1.generator(), c2.field());
    const Index n2 = c2.length();
    ConvStabilizer s(kronecker(g1, c2.generator()), (c1.length() - t) * n2, t * n2, InnerProduct::Symplectic);
    s.factors_ = ConvStabilizer::Factors{g1, c2.generator(), t};
    return s;
}

bool check_band_self_orthogonal(const ConvStabilizer& s) {
    const Matrix& m = s.block();
    if (!gram(m, m, s.kind()).is_zero()) return false;
    if (s.overlap() == 0) return true;
    return gram(right_cols(m, s.overlap()), left_cols(m, s.overlap()), s.kind()).is_zero();
}

namespace {

Matrix window_of(const Matrix& m, Index frame, Index overlap, Index blocks) {
    if (blocks < 1) throw std::invalid_argument("band_window: need at least one block");
    Matrix w(m.field(), blocks * m.rows(), blocks * frame + overlap);
    for (Index b = 0; b < blocks; ++b)
        w.data().block(b * m.rows(), b * frame, m.rows(), m.cols()) = m.data();
    return w;
}

}  // namespace

Matrix band_window(const ConvStabilizer& s, Index blocks) {
    return window_of(s.block(), s.frame(), s.overlap(), blocks);
}

bool verify_band_factorization(const ConvStabilizer& s, Index blocks) {
    if (!s.factors()) throw std::logic_error("verify_band_factorization: block has no recorded factors");
    const auto& f = *s.factors();
    const Index n1 = f.first.cols();
    const Matrix g1_band = window_of(f.first, n1 - f.t, f.t, blocks);
    return kronecker(g1_band, f.second) == band_window(s, blocks);
}

TailBitingCode tail_biting(const ConvStabilizer& s, Index blocks) {
    const Index n = s.frame(), m = s.overlap();
    if (blocks < 1 || blocks * n < n + m)
        throw std::invalid_argument("tail_biting: N*n = " + std::to_string(blocks * n) + " must be at least n+m = " +
                                    std::to_string(n + m));
    const Index len = blocks * n;
    const Matrix& blk = s.block();
    Matrix g(s.field(), blocks * blk.rows(), len);
    for (Index b = 0; b < blocks; ++b)
        for (Index r = 0; r < blk.rows(); ++r)
            for (Index c = 0; c < blk.cols(); ++c) {
                Elem& e = g(b * blk.rows() + r, (b * n + c) % len);
                e = s.field()->add(e, blk(r, c));
            }
    TailBitingCode out;
    out.generator = g;
    if (s.additive()) {
        out.additive = AdditiveCode(g);
        out.rank = out.additive->prime_dimension();
        out.self_orthogonal = is_self_orthogonal(*out.additive);
    } else {
        out.linear = LinearCode(g);
        out.rank = out.linear->dimension();
        out.self_orthogonal = is_self_orthogonal(*out.linear, s.kind());
    }
    out.full_rank = out.rank == g.rows();
    return out;
}

QeccParams tail_biting_qecc(const ConvStabilizer& s, Index blocks, const QeccOptions& options) {
    const TailBitingCode tb = tail_biting(s, blocks);
    if (!tb.self_orthogonal)
        throw std::invalid_argument("tail_biting_qecc: tail-biting code with N = " + std::to_string(blocks) +
                                    " is not self-orthogonal");
    QeccParams q;
    switch (s.kind()) {
        case InnerProduct::Euclidean: q = css_qecc(*tb.linear, options); break;
        case InnerProduct::Hermitian: q = hermitian_qecc(*tb.linear, options); break;
        case InnerProduct::Symplectic: q = symplectic_qecc(*tb.additive, options); break;
    }
    q.provenance.insert(q.provenance.begin(), "tail-biting over N = " + std::to_string(blocks) + " frames of size " +
                                                   std::to_string(s.frame()) + ", rank " + std::to_string(tb.rank));
    return q;
}

std::optional<DistanceCertificate> free_distance_upper_bound(const ConvStabilizer& s, Index window_blocks,
                                                             const DistanceOptions& options) {
    const Matrix head = left_cols(band_window(s, window_blocks), window_blocks * s.frame());
    DistanceCertificate cert;
    if (s.additive()) {
        const AdditiveCode d = symplectic_dual(AdditiveCode(head));
        if (d.prime_dimension() == 0) return std::nullopt;
        cert = min_distance(d, options);
    } else {
        const LinearCode d = dual(LinearCode(head), s.kind());
        if (d.dimension() == 0) return std::nullopt;
        cert = min_distance(d, options);
    }
    return cert;
}

}  // namespace qproduct
