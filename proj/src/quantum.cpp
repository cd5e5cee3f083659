#include "qproduct/quantum.hpp"

#include <stdexcept>
#include <string>

#include "qproduct/cyclic.hpp"
#include "qproduct/product.hpp"

namespace qproduct {

namespace {

std::string params_string(const LinearCode& c) {
    return "[" + std::to_string(c.length()) + "," + std::to_string(c.dimension()) + "]_" +
           std::to_string(c.field()->order());
}

std::string params_string(const AdditiveCode& c) {
    return "(" + std::to_string(c.length()) + "," + std::to_string(c.field()->characteristic()) + "^" +
           std::to_string(c.prime_dimension()) + ")_" + std::to_string(c.field()->order());
}

std::string certificate_string(const DistanceCertificate& d) {
    return "dual distance in [" + std::to_string(d.lower) + "," + std::to_string(d.upper) + "] (" + d.lower_method +
           " / " + d.upper_method + ")";
}

std::uint32_t ipow(std::uint32_t b, unsigned e) {
    std::uint32_t r = 1;
    while (e--) r *= b;
    return r;
}

// membership test through a GF(p) check matrix of the expanded code
WordFilter outside(const Matrix& prime_generators, const Field& f) {
    const Matrix checks = kernel(expand_to_prime(prime_generators));
    return [checks, f](std::span<const Elem> w) {
        Matrix row(f, 1, Index(w.size()));
        for (std::size_t i = 0; i < w.size(); ++i) row(0, Index(i)) = w[i];
        const Matrix e = expand_to_prime(row);
        return !gram(e, checks, InnerProduct::Euclidean).is_zero();
    };
}

std::optional<std::size_t> enumerate_outside(const Matrix& dual_basis, const Matrix& code_basis,
                                             const DistanceOptions& options) {
    if (!span_size(dual_basis, options.budget)) return std::nullopt;
    const auto e = enumerate_span(dual_basis, options.threads, false, outside(code_basis, dual_basis.field()));
    if (e.min_weight == 0) return std::nullopt;  // dual == code
    return e.min_weight;
}

}  // namespace

std::optional<std::size_t> stabilizer_distance(const LinearCode& c, InnerProduct kind, const DistanceOptions& options) {
    const LinearCode d = dual(c, kind);
    return enumerate_outside(prime_span_basis(d), prime_span_basis(c), options);
}

std::optional<std::size_t> stabilizer_distance(const AdditiveCode& c, const DistanceOptions& options) {
    return enumerate_outside(symplectic_dual(c).generator(), c.generator(), options);
}

QeccParams css_qecc(const LinearCode& c, const QeccOptions& options) {
    if (!is_self_orthogonal(c, InnerProduct::Euclidean))
        throw std::invalid_argument("css_qecc: code " + params_string(c) + " is not Euclidean self-orthogonal");
    const LinearCode d = dual(c, InnerProduct::Euclidean);
    QeccParams q;
    q.n = std::size_t(c.length());
    q.k = std::size_t(c.length() - 2 * c.dimension());
    q.alphabet = c.field()->order();
    q.distance = min_distance(d, options.distance);
    if (options.stabilizer_distance) q.stabilizer_distance = stabilizer_distance(c, InnerProduct::Euclidean, options.distance);
    q.construction = "css";
    q.provenance = {"self-orthogonal code " + params_string(c), "euclidean dual " + params_string(d),
                    certificate_string(q.distance)};
    return q;
}

QeccParams hermitian_qecc(const LinearCode& c, const QeccOptions& options) {
    require_kind_compatible(c.field(), InnerProduct::Hermitian);
    if (!is_self_orthogonal(c, InnerProduct::Hermitian))
        throw std::invalid_argument("hermitian_qecc: code " + params_string(c) + " is not Hermitian self-orthogonal");
    const LinearCode d = dual(c, InnerProduct::Hermitian);
    QeccParams q;
    q.n = std::size_t(c.length());
    q.k = std::size_t(c.length() - 2 * c.dimension());
    q.alphabet = c.field()->subfield_order();
    q.distance = min_distance(d, options.distance);
    if (options.stabilizer_distance) q.stabilizer_distance = stabilizer_distance(c, InnerProduct::Hermitian, options.distance);
    q.construction = "hermitian";
    q.provenance = {"self-orthogonal code " + params_string(c), "hermitian dual " + params_string(d),
                    certificate_string(q.distance)};
    return q;
}

QeccParams symplectic_qecc(const AdditiveCode& c, const QeccOptions& options) {
    require_kind_compatible(c.field(), InnerProduct::Symplectic);
    if (!is_self_orthogonal(c))
        throw std::invalid_argument("symplectic_qecc: code " + params_string(c) + " is not symplectic self-orthogonal");
    const unsigned m = c.field()->degree() / 2;
    if (c.prime_dimension() % Index(m) != 0)
        throw std::invalid_argument("symplectic_qecc: k_p = " + std::to_string(c.prime_dimension()) +
                                    " is not a multiple of " + std::to_string(m));
    const AdditiveCode d = symplectic_dual(c);
    QeccParams q;
    q.n = std::size_t(c.length());
    q.k = std::size_t(c.length() - c.prime_dimension() / Index(m));
    q.alphabet = ipow(c.field()->characteristic(), m);
    q.distance = min_distance(d, options.distance);
    if (options.stabilizer_distance) q.stabilizer_distance = stabilizer_distance(c, options.distance);
    q.construction = "symplectic";
    q.provenance = {"self-orthogonal additive code " + params_string(c), "symplectic dual " + params_string(d),
                    certificate_string(q.distance)};
    return q;
}

QeccParams rs_prod_qecc(std::uint32_t q, std::uint32_t mu1, std::uint32_t mu2, const QeccOptions& options) {
    if (mu1 == 0 || 2 * mu1 + 1 >= q)
        throw std::invalid_argument("rs_prod_qecc: need 1 <= mu1 < (q-1)/2, got mu1 = " + std::to_string(mu1));
    if (mu2 == 0 || mu2 + 2 > q)
        throw std::invalid_argument("rs_prod_qecc: need 1 <= mu2 <= q-2, got mu2 = " + std::to_string(mu2));
    const CyclicCode c1 = rs_code(q, q - mu1), c2 = rs_code(q, q - mu2);
    const LinearCode prod = product(c1.code(), c2.code());
    const ZeroRectangle rect = largest_zero_rectangle(dual_forced_zero_grid(c1, c2, InnerProduct::Euclidean));
    QeccOptions o = options;
    const std::size_t bound = bch_rectangle_bound(std::size_t(rect.width), std::size_t(rect.height));
    if (!o.distance.known_lower || *o.distance.known_lower < bound) {
        o.distance.known_lower = bound;
        o.distance.known_lower_method = "bch-rectangle";
    }
    QeccParams out = css_qecc(prod, o);
    out.construction = "rs-product";
    out.provenance.insert(out.provenance.begin(),
                          "rs(" + std::to_string(q) + "," + std::to_string(q - mu1) + ") (x) rs(" + std::to_string(q) +
                              "," + std::to_string(q - mu2) + "), dual spectrum zero on a " +
                              std::to_string(rect.width) + "x" + std::to_string(rect.height) + " rectangle");
    return out;
}

RateComparison rate_comparison(std::uint32_t q, std::uint32_t mu1, std::uint32_t mu2) {
    RateComparison r;
    r.q = q;
    r.mu1 = mu1;
    r.mu2 = mu2;
    const std::int64_t n = std::int64_t(q) - 1;
    r.product_rate = Rational(1) - Rational(2 * std::int64_t(mu1) * mu2, n * n);
    r.rates_product = (Rational(1) - Rational(2 * std::int64_t(mu1), n)) * (Rational(1) - Rational(2 * std::int64_t(mu2), n));
    r.product_wins = r.product_rate > r.rates_product;
    r.claim_condition = mu1 == mu2 && 3 * std::int64_t(mu1) < 2 * n;
    return r;
}

}  // namespace qproduct
