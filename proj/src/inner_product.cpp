#include "qproduct/inner_product.hpp"

#include <stdexcept>
#include <string>

namespace qproduct {

std::string_view to_string(InnerProduct kind) noexcept {
    switch (kind) {
        case InnerProduct::Euclidean: return "euclidean";
        case InnerProduct::Hermitian: return "hermitian";
        case InnerProduct::Symplectic: return "symplectic";
    }
    return "?";
}

InnerProduct parse_inner_product(std::string_view s) {
    if (s == "euclidean") return InnerProduct::Euclidean;
    if (s == "hermitian") return InnerProduct::Hermitian;
    if (s == "symplectic") return InnerProduct::Symplectic;
    throw std::invalid_argument("unknown inner product '" + std::string(s) + "' (euclidean|hermitian|symplectic)");
}

void require_kind_compatible(const Field& f, InnerProduct kind) {
    if (kind != InnerProduct::Euclidean && !f->has_quadratic_subfield())
        throw std::invalid_argument(std::string(to_string(kind)) + " inner product needs a field GF(r^2); got " +
                                    f->name());
}

Elem inner_product(const FieldSpec& f, std::span<const Elem> v, std::span<const Elem> w, InnerProduct kind) {
    if (v.size() != w.size())
        throw std::invalid_argument("inner product of vectors of lengths " + std::to_string(v.size()) + " and " +
                                    std::to_string(w.size()));
    Elem acc = 0;
    switch (kind) {
        case InnerProduct::Euclidean:
            for (std::size_t i = 0; i < v.size(); ++i) acc = f.add(acc, f.mul(v[i], w[i]));
            return acc;
        case InnerProduct::Hermitian:
            for (std::size_t i = 0; i < v.size(); ++i) acc = f.add(acc, f.mul(v[i], f.frobenius_q(w[i])));
            return acc;
        case InnerProduct::Symplectic:
            // tr is additive, so tr(sum) = sum tr.
            for (std::size_t i = 0; i < v.size(); ++i) acc = f.add(acc, f.mul(v[i], f.frobenius_q(w[i])));
            return f.trace_to_prime(acc);
    }
    return acc;
}

}  // namespace qproduct
