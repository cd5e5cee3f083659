#include "qproduct/galois.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace qproduct {

namespace {

struct ConwayEntry {
    unsigned p;
    unsigned degree;
    std::vector<Elem> coeffs;  // constant term first, monic
};

// Conway polynomials for the non-prime fields of order <= 512.
const std::vector<ConwayEntry>& conway_table() {
    static const std::vector<ConwayEntry> table = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 1, 0, 1}},
        {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}},
        {2, 6, {1, 1, 0, 1, 1, 0, 1}},
        {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
        {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {3, 2, {2, 2, 1}},
        {3, 3, {1, 2, 0, 1}},
        {3, 4, {2, 0, 0, 2, 1}},
        {3, 5, {1, 2, 0, 0, 0, 1}},
        {5, 2, {2, 4, 1}},
        {5, 3, {3, 3, 0, 1}},
        {7, 2, {3, 6, 1}},
        {7, 3, {4, 0, 6, 1}},
        {11, 2, {2, 7, 1}},
        {13, 2, {2, 12, 1}},
        {17, 2, {3, 16, 1}},
        {19, 2, {2, 18, 1}},
    };
    return table;
}

std::uint32_t ipow(std::uint32_t b, unsigned e) {
    std::uint32_t r = 1;
    while (e--) r *= b;
    return r;
}

// Polynomial product of digit vectors reduced by a monic modulus over GF(p).
std::vector<Elem> mulmod_digits(const std::vector<Elem>& a, const std::vector<Elem>& b,
                                const std::vector<Elem>& modulus, unsigned p) {
    const std::size_t l = modulus.size() - 1;
    std::vector<std::uint32_t> prod(2 * l, 0);
    for (std::size_t i = 0; i < l; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < l; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    for (std::size_t d = 2 * l - 1; d >= l; --d) {
        const std::uint32_t c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t k = 0; k < l; ++k)
            prod[d - l + k] = (prod[d - l + k] + (p - c) * modulus[k]) % p;
    }
    std::vector<Elem> out(l);
    for (std::size_t i = 0; i < l; ++i) out[i] = static_cast<Elem>(prod[i]);
    return out;
}

std::vector<Elem> to_digits(std::uint32_t v, unsigned p, unsigned l) {
    std::vector<Elem> d(l);
    for (unsigned i = 0; i < l; ++i) {
        d[i] = static_cast<Elem>(v % p);
        v /= p;
    }
    return d;
}

std::uint32_t from_digit_vector(const std::vector<Elem>& d, unsigned p) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
    return v;
}

// Remainder of a modulo monic b over GF(p); both constant-first.
std::vector<Elem> poly_rem(std::vector<Elem> a, std::span<const Elem> b, unsigned p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const Elem c = a.back();
        if (c != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t k = 0; k <= db; ++k)
                a[shift + k] = static_cast<Elem>((a[shift + k] + (p - c) * b[k]) % p);
        }
        a.pop_back();
    }
    return a;
}

bool x_is_primitive(unsigned p, unsigned l, const std::vector<Elem>& modulus) {
    const std::uint32_t q = ipow(p, l);
    std::vector<Elem> x(l, 0), cur(l, 0);
    x[1] = 1;
    cur[0] = 1;
    for (std::uint32_t k = 1; k < q - 1; ++k) {
        cur = mulmod_digits(cur, x, modulus, p);
        if (from_digit_vector(cur, p) == 1) return false;
    }
    return true;
}

std::vector<Elem> find_modulus(unsigned p, unsigned l) {
    if (l == 1) return {};  // x - g, filled in once g is known
    for (const auto& e : conway_table())
        if (e.p == p && e.degree == l) return e.coeffs;
    // Lexicographically first primitive polynomial by encoding of its lower coefficients.
    const std::uint32_t span = ipow(p, l);
    for (std::uint32_t low = 1; low < span; ++low) {
        auto c = to_digits(low, p, l);
        c.push_back(1);
        if (c[0] == 0) continue;
        if (is_irreducible(p, c) && x_is_primitive(p, l, c)) return c;
    }
    throw std::logic_error("no primitive polynomial found");
}

}  // namespace

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(unsigned p, std::span<const Elem> monic) {
    const std::size_t l = monic.size() - 1;
    if (l == 0) return false;
    if (l == 1) return true;
    if (monic[0] == 0) return false;
    std::vector<Elem> a(monic.begin(), monic.end());
    for (std::size_t d = 1; d <= l / 2; ++d) {
        const std::uint32_t count = ipow(p, static_cast<unsigned>(d));
        for (std::uint32_t low = 0; low < count; ++low) {
            auto b = to_digits(low, p, static_cast<unsigned>(d));
            b.push_back(1);
            const auto r = poly_rem(a, b, p);
            bool zero = true;
            for (Elem c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

FieldSpec::FieldSpec(unsigned p, unsigned degree, std::vector<Elem> modulus)
    : p_(p), degree_(degree), q_(ipow(p, degree)), modulus_(std::move(modulus)) {
    if (degree_ > 1) {
        if (modulus_.size() != degree_ + 1 || modulus_.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree " + std::to_string(degree_));
        for (Elem c : modulus_)
            if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
        if (!is_irreducible(p_, modulus_))
            throw std::invalid_argument("modulus " + modulus_string() + " is reducible over GF(" +
                                        std::to_string(p_) + ")");
    }
    const std::uint32_t n = q_ - 1;
    exp_.assign(2 * std::size_t{n}, 0);
    log_.assign(q_, 0);
    // Designated primitive element: the smallest encoding with order q-1.
    for (std::uint32_t g = 1; g < q_; ++g) {
        log_.assign(q_, 0);
        std::uint32_t cur = 1;
        std::uint32_t k = 0;
        bool ok = true;
        const auto gd = to_digits(g, p_, degree_);
        do {
            if (k > 0 && cur == 1) {
                ok = false;
                break;
            }
            exp_[k] = static_cast<Elem>(cur);
            log_[cur] = k;
            if (degree_ == 1)
                cur = static_cast<std::uint32_t>((std::uint64_t{cur} * g) % p_);
            else
                cur = from_digit_vector(mulmod_digits(to_digits(cur, p_, degree_), gd, modulus_, p_), p_);
            ++k;
        } while (k < n);
        if (ok && cur == 1) {
            primitive_ = static_cast<Elem>(g);
            break;
        }
    }
    if (primitive_ == 0) throw std::logic_error("no primitive element found");
    if (degree_ == 1) modulus_ = {neg(primitive_), 1};
    for (std::uint32_t k = 0; k < n; ++k) exp_[k + n] = exp_[k];

    trace_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        Elem t = 0;
        Elem x = static_cast<Elem>(a);
        for (unsigned i = 0; i < degree_; ++i) {
            t = add(t, x);
            x = pow(x, p_);
        }
        trace_[a] = t;
    }
}

Field FieldSpec::make(unsigned p, unsigned degree, std::vector<Elem> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime");
    if (degree == 0) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < degree; ++i) {
        q *= p;
        if (q > 65536) throw std::invalid_argument("field order exceeds 2^16");
    }
    return Field(new FieldSpec(p, degree, std::move(modulus)));
}

std::uint32_t FieldSpec::subfield_order() const {
    if (!has_quadratic_subfield())
        throw std::invalid_argument(name() + " has odd extension degree; no quadratic subfield pairing");
    return ipow(p_, degree_ / 2);
}

std::string FieldSpec::name() const { return "GF(" + std::to_string(q_) + ")"; }

std::string FieldSpec::modulus_string() const {
    std::string s;
    for (std::size_t i = modulus_.size(); i-- > 0;) {
        const Elem c = modulus_[i];
        if (c == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || c != 1) s += std::to_string(c);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
}

Elem FieldSpec::add(Elem a, Elem b) const noexcept {
    if (p_ == 2) return a ^ b;
    if (degree_ == 1) return static_cast<Elem>((a + b) % p_);
    std::uint32_t r = 0, scale = 1, x = a, y = b;
    for (unsigned i = 0; i < degree_; ++i) {
        r += ((x % p_ + y % p_) % p_) * scale;
        x /= p_;
        y /= p_;
        scale *= p_;
    }
    return static_cast<Elem>(r);
}

Elem FieldSpec::neg(Elem a) const noexcept {
    if (p_ == 2) return a;
    if (degree_ == 1) return static_cast<Elem>((p_ - a) % p_);
    std::uint32_t r = 0, scale = 1, x = a;
    for (unsigned i = 0; i < degree_; ++i) {
        r += ((p_ - x % p_) % p_) * scale;
        x /= p_;
        scale *= p_;
    }
    return static_cast<Elem>(r);
}

Elem FieldSpec::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem FieldSpec::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in " + name());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FieldSpec::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(std::uint64_t{log_[a]} * (e % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t FieldSpec::log(Elem a) const {
    if (a == 0) throw std::domain_error("logarithm of zero");
    return log_[a];
}

Elem FieldSpec::frobenius_q(Elem a) const { return pow(a, subfield_order()); }

Elem FieldSpec::trace_to_prime(Elem a) const noexcept { return trace_[a]; }

Elem FieldSpec::embed_prime(unsigned x) const {
    if (x >= p_) throw std::invalid_argument("value " + std::to_string(x) + " is not in GF(" + std::to_string(p_) + ")");
    return static_cast<Elem>(x);
}

Elem FieldSpec::root_of_unity(std::uint32_t n) const {
    if (n == 0 || (q_ - 1) % n != 0)
        throw std::invalid_argument("no root of unity of order " + std::to_string(n) + " in " + name());
    return exp_[(q_ - 1) / n];
}

std::uint32_t FieldSpec::multiplicative_order(Elem a) const {
    if (a == 0) throw std::domain_error("zero has no multiplicative order");
    const std::uint32_t n = q_ - 1;
    const std::uint32_t l = log_[a];
    std::uint32_t g = n, b = l;
    while (b != 0) std::swap(g, b), b %= g;
    return n / g;
}

std::vector<Elem> FieldSpec::digits(Elem a) const { return to_digits(a, p_, degree_); }

Elem FieldSpec::from_digits(std::span<const Elem> d) const {
    if (d.size() != degree_) throw std::invalid_argument("digit vector length mismatch");
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return static_cast<Elem>(v);
}

Field gf(std::uint32_t q) {
    static std::mutex mu;
    static std::map<std::uint32_t, Field> cache;
    std::lock_guard lock(mu);
    if (auto it = cache.find(q); it != cache.end()) return it->second;
    if (q < 2 || q > 65536) throw std::invalid_argument("field order " + std::to_string(q) + " outside [2, 2^16]");
    unsigned p = 0;
    for (std::uint32_t d = 2; d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    unsigned l = 0;
    std::uint32_t r = q;
    while (r % p == 0) r /= p, ++l;
    if (r != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    auto f = FieldSpec::make(p, l, find_modulus(p, l));
    cache.emplace(q, f);
    return f;
}

Field prime_subfield(const Field& f) { return gf(f->characteristic()); }

bool same_field(const Field& a, const Field& b) noexcept {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

void require_same_field(const Field& a, const Field& b, const char* where) {
    if (!same_field(a, b))
        throw std::invalid_argument(std::string(where) + ": mismatched fields " + (a ? a->name() : "null") + " and " +
                                    (b ? b->name() : "null"));
}

FieldElement::FieldElement(Field f, Elem v) : field_(std::move(f)), value_(v) {
    if (!field_) throw std::invalid_argument("field element without field");
    if (!field_->contains(v))
        throw std::invalid_argument("value " + std::to_string(v) + " out of range for " + field_->name());
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "add");
    return {a.field_, a.field_->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "sub");
    return {a.field_, a.field_->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "mul");
    return {a.field_, a.field_->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.field_, b.field_, "div");
    return {a.field_, a.field_->div(a.value_, b.value_)};
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement neg(const FieldElement& a) { return -a; }
FieldElement inv(const FieldElement& a) { return {a.field(), a.field()->inv(a.value())}; }
FieldElement pow(const FieldElement& a, std::uint64_t e) { return {a.field(), a.field()->pow(a.value(), e)}; }
FieldElement frobenius_q(const FieldElement& a) { return {a.field(), a.field()->frobenius_q(a.value())}; }
FieldElement trace_to_prime(const FieldElement& a) {
    return {prime_subfield(a.field()), a.field()->trace_to_prime(a.value())};
}
FieldElement root_of_unity(const Field& f, std::uint32_t n) { return {f, f->root_of_unity(n)}; }
FieldElement embed_prime(unsigned x, const Field& f) { return {f, f->embed_prime(x)}; }

}  // namespace qproduct
