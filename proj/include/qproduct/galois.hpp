#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace qproduct {

/// Field element in digit encoding: the base-p digits of the integer are the
/// coefficients of the polynomial representative, least significant digit = x^0.
using Elem = std::uint16_t;

class FieldSpec;
using Field = std::shared_ptr<const FieldSpec>;

/// Arithmetic in GF(p^l) for q = p^l <= 2^16.
///
/// Multiplication goes through log/antilog tables relative to the designated
/// primitive element. Addition works digit-wise (XOR in characteristic 2).
/// Instances are immutable and shared; obtain them through `gf()`.
class FieldSpec {
public:
    /// Builds a field from an explicit monic modulus (coefficients constant-first,
    /// length degree+1). Throws if the modulus is reducible or q > 2^16.
    static Field make(unsigned p, unsigned degree, std::vector<Elem> modulus);

    unsigned characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return degree_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<Elem>& modulus() const noexcept { return modulus_; }
    Elem primitive() const noexcept { return primitive_; }
    bool is_prime_field() const noexcept { return degree_ == 1; }
    /// Degree is even, so the field is GF(r^2) with r = p^(degree/2).
    bool has_quadratic_subfield() const noexcept { return degree_ % 2 == 0; }
    /// r = p^(degree/2), the order of the designated index-2 subfield.
    std::uint32_t subfield_order() const;

    std::string name() const;            // "GF(4)"
    std::string modulus_string() const;  // "x^2+x+1"

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// Discrete log w.r.t. primitive(); a != 0.
    std::uint32_t log(Elem a) const;
    Elem exp(std::uint64_t e) const noexcept { return exp_[e % (q_ - 1)]; }

    /// x -> x^r with r = subfield_order(); requires even degree.
    Elem frobenius_q(Elem a) const;
    /// Absolute trace onto GF(p); always returns a value < p.
    Elem trace_to_prime(Elem a) const noexcept;
    Elem embed_prime(unsigned x) const;
    /// Element of multiplicative order exactly n; requires n | q-1.
    Elem root_of_unity(std::uint32_t n) const;
    std::uint32_t multiplicative_order(Elem a) const;

    /// Base-p digits, little-endian, length degree().
    std::vector<Elem> digits(Elem a) const;
    Elem from_digits(std::span<const Elem> digits) const;

    bool contains(Elem a) const noexcept { return a < q_; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
        return a.p_ == b.p_ && a.degree_ == b.degree_ && a.modulus_ == b.modulus_;
    }

private:
    FieldSpec(unsigned p, unsigned degree, std::vector<Elem> modulus);

    unsigned p_;
    unsigned degree_;
    std::uint32_t q_;
    std::vector<Elem> modulus_;
    Elem primitive_ = 0;
    std::vector<Elem> exp_;            // length 2(q-1)
    std::vector<std::uint32_t> log_;   // length q, log_[0] unused
    std::vector<Elem> trace_;          // length q
};

/// Field of order q with the built-in modulus (Conway polynomial where tabulated).
/// Throws std::invalid_argument if q is not a prime power in [2, 2^16].
Field gf(std::uint32_t q);
/// The prime field GF(p) underlying `f`.
Field prime_subfield(const Field& f);

bool same_field(const Field& a, const Field& b) noexcept;
/// Throws std::invalid_argument unless same_field(a, b).
void require_same_field(const Field& a, const Field& b, const char* where);

bool is_prime(std::uint32_t n) noexcept;
/// Trial-division irreducibility test for a monic polynomial over GF(p).
bool is_irreducible(unsigned p, std::span<const Elem> monic);

/// A value bound to its field. Mixed-field arithmetic throws.
class FieldElement {
public:
    FieldElement(Field f, Elem v);

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement operator-() const { return {field_, field_->neg(value_)}; }
    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return same_field(a.field_, b.field_) && a.value_ == b.value_;
    }

private:
    Field field_;
    Elem value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldElement& a);
FieldElement inv(const FieldElement& a);
FieldElement pow(const FieldElement& a, std::uint64_t e);
FieldElement frobenius_q(const FieldElement& a);
/// Result lives in the prime field GF(p).
FieldElement trace_to_prime(const FieldElement& a);
FieldElement root_of_unity(const Field& f, std::uint32_t n);
FieldElement embed_prime(unsigned x, const Field& f);

}  // namespace qproduct
