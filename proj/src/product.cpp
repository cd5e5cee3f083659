#include "qproduct/product.hpp"

#include <algorithm>
#include <stdexcept>

namespace qproduct {

namespace {

std::optional<std::size_t> claimed_product(std::optional<std::size_t> a, std::optional<std::size_t> b) {
    if (a && b) return *a * *b;
    return std::nullopt;
}

void require_prime_factor(const LinearCode& c1, const Field& target, const char* where) {
    if (!c1.field()->is_prime_field() || c1.field()->characteristic() != target->characteristic())
        throw std::invalid_argument(std::string(where) + ": first factor must be over " +
                                    prime_subfield(target)->name() + ", got " + c1.field()->name());
}

// [H1 (x) H2; A1 (x) H2; H1 (x) A2]
Matrix stack_dual(const Matrix& h1, const Matrix& a1, const Matrix& h2, const Matrix& a2) {
    return vstack({kronecker(h1, h2), kronecker(a1, h2), kronecker(h1, a2)});
}

}  // namespace

LinearCode product(const LinearCode& c1, const LinearCode& c2) {
    require_same_field(c1.field(), c2.field(), "product");
    return LinearCode(kronecker(c1.generator(), c2.generator()),
                      claimed_product(c1.claimed_distance(), c2.claimed_distance()));
}

AdditiveCode product_additive(const LinearCode& c1, const AdditiveCode& c2) {
    require_prime_factor(c1, c2.field(), "product_additive");
    return AdditiveCode(kronecker(embed(c1.generator(), c2.field()), c2.generator()),
                        claimed_product(c1.claimed_distance(), c2.claimed_distance()));
}

Matrix dual_of_product_generator(const LinearCode& c1, const LinearCode& c2, InnerProduct kind) {
    require_same_field(c1.field(), c2.field(), "dual_of_product_generator");
    if (kind == InnerProduct::Symplectic)
        throw std::invalid_argument("dual_of_product_generator: symplectic case needs an additive second factor");
    const Matrix h1 = dual(c1, kind).generator();
    const Matrix h2 = dual(c2, kind).generator();
    return stack_dual(h1, complement_basis(h1, c1.length()), h2, complement_basis(h2, c2.length()));
}

Matrix dual_of_product_generator(const LinearCode& c1, const AdditiveCode& c2) {
    require_prime_factor(c1, c2.field(), "dual_of_product_generator");
    const Field& f = c2.field();
    const Matrix h1 = dual(c1, InnerProduct::Euclidean).generator();
    const Matrix a1 = complement_basis(h1, c1.length());
    const Matrix h2 = symplectic_dual(c2).generator();
    // complement taken in GF(p)^{l n2}, then read back as GF(q)-vectors
    const Matrix h2e = rref(expand_to_prime(h2)).reduced;
    const Matrix a2 = contract_from_prime(complement_basis(h2e, h2e.cols()), f);
    return stack_dual(embed(h1, f), embed(a1, f), h2, a2);
}

namespace {

// A zero factor dual contributes no words; both zero means the product dual is zero too.
std::size_t ceiling_of(const DistanceCertificate& d1, const DistanceCertificate& d2, std::size_t n) {
    if (d1.degenerate && d2.degenerate) return n + 1;
    if (d1.degenerate) return d2.upper;
    if (d2.degenerate) return d1.upper;
    return std::min(d1.upper, d2.upper);
}

}  // namespace

std::size_t dual_distance_ceiling(const LinearCode& c1, const LinearCode& c2, InnerProduct kind,
                                  const DistanceOptions& options) {
    return ceiling_of(min_distance(dual(c1, kind), options), min_distance(dual(c2, kind), options),
                      std::size_t(c1.length() * c2.length()));
}

std::size_t dual_distance_ceiling(const LinearCode& c1, const AdditiveCode& c2, const DistanceOptions& options) {
    require_prime_factor(c1, c2.field(), "dual_distance_ceiling");
    return ceiling_of(min_distance(dual(c1, InnerProduct::Euclidean), options), min_distance(symplectic_dual(c2), options),
                      std::size_t(c1.length() * c2.length()));
}

bool check_selforth_transfer(const LinearCode& arbitrary, const LinearCode& self_orthogonal, InnerProduct kind) {
    if (kind == InnerProduct::Symplectic)
        throw std::invalid_argument("check_selforth_transfer: symplectic case needs an additive second factor");
    if (!is_self_orthogonal(self_orthogonal, kind))
        throw std::invalid_argument("check_selforth_transfer: second factor is not " + std::string(to_string(kind)) +
                                    " self-orthogonal");
    return is_self_orthogonal(product(arbitrary, self_orthogonal), kind);
}

bool check_selforth_transfer(const LinearCode& prime_code, const AdditiveCode& self_orthogonal) {
    require_prime_factor(prime_code, self_orthogonal.field(), "check_selforth_transfer");
    if (!is_self_orthogonal(self_orthogonal))
        throw std::invalid_argument("check_selforth_transfer: second factor is not symplectic self-orthogonal");
    return is_self_orthogonal(product_additive(prime_code, self_orthogonal));
}

}  // namespace qproduct
