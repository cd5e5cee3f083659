#include "qproduct/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qproduct {

// ----------------------------------------------------------------- polynomials

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_add(const FieldSpec& f, const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    return poly_trim(std::move(out));
}

Poly poly_mul(const FieldSpec& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    return poly_trim(std::move(out));
}

std::pair<Poly, Poly> poly_divmod(const FieldSpec& f, const Poly& a, const Poly& b) {
    const Poly d = poly_trim(b);
    if (d.empty()) throw std::domain_error("poly_divmod: division by the zero polynomial");
    Poly r = poly_trim(a);
    if (r.size() < d.size()) return {{}, r};
    Poly q(r.size() - d.size() + 1, 0);
    const Elem lead_inv = f.inv(d.back());
    for (std::size_t k = q.size(); k-- > 0;) {
        const Elem c = f.mul(r[k + d.size() - 1], lead_inv);
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) r[k + j] = f.sub(r[k + j], f.mul(c, d[j]));
    }
    return {poly_trim(std::move(q)), poly_trim(std::move(r))};
}

Poly poly_monic(const FieldSpec& f, const Poly& a) {
    Poly t = poly_trim(a);
    if (t.empty()) return t;
    const Elem s = f.inv(t.back());
    for (auto& c : t) c = f.mul(c, s);
    return t;
}

Poly poly_reciprocal(const Poly& a) {
    Poly t = poly_trim(a);
    std::reverse(t.begin(), t.end());
    return poly_trim(std::move(t));
}

Elem poly_eval(const FieldSpec& f, const Poly& a, Elem x) {
    Elem acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

Poly poly_from_roots(const FieldSpec& f, const std::vector<Elem>& roots) {
    Poly g{1};
    for (Elem r : roots) g = poly_mul(f, g, Poly{f.neg(r), 1});
    return g;
}

Poly poly_cyclotomic_modulus(const FieldSpec& f, std::uint32_t n) {
    Poly m(n + 1, 0);
    m[0] = f.neg(1);
    m[n] = 1;
    return m;
}

// ---------------------------------------------------------------- cyclic codes

namespace {

Matrix circulant_generator(const Field& f, std::uint32_t n, const Poly& g) {
    const std::size_t deg = g.size() - 1;
    const Index k = Index(n) - Index(deg);
    Matrix m(f, k, n);
    for (Index r = 0; r < k; ++r)
        for (std::size_t j = 0; j < g.size(); ++j) m(r, r + Index(j)) = g[j];
    return m;
}

}  // namespace

CyclicCode::CyclicCode(const Field& f, std::uint32_t n, Poly g, std::optional<std::size_t> claimed)
    : n_(n), g_(std::move(g)), code_(circulant_generator(f, n, g_), claimed) {
    if ((f->order() - 1) % n == 0) {
        alpha_ = f->root_of_unity(n);
        for (std::uint32_t s = 0; s < n; ++s)
            if (poly_eval(*f, g_, f->pow(alpha_, s)) == 0) zeros_.push_back(s);
    }
}

CyclicCode CyclicCode::from_roots(const Field& f, std::uint32_t n, std::vector<std::uint32_t> exponents) {
    if (n == 0 || (f->order() - 1) % n != 0)
        throw std::invalid_argument("cyclic_from_roots: length " + std::to_string(n) + " does not divide " +
                                    std::to_string(f->order() - 1));
    const Elem alpha = f->root_of_unity(n);
    std::vector<std::uint32_t> seen;
    std::vector<Elem> roots;
    for (auto s : exponents) {
        const std::uint32_t e = s % n;
        if (std::find(seen.begin(), seen.end(), e) != seen.end())
            throw std::invalid_argument("cyclic_from_roots: duplicate root exponent " + std::to_string(s));
        seen.push_back(e);
        roots.push_back(f->pow(alpha, e));
    }
    return CyclicCode(f, n, poly_from_roots(*f, roots), std::nullopt);
}

CyclicCode CyclicCode::from_generator(const Field& f, std::uint32_t n, Poly g) {
    if (n == 0 || std::gcd(n, f->characteristic()) != 1)
        throw std::invalid_argument("cyclic code: length must be coprime to the characteristic");
    g = poly_trim(std::move(g));
    if (g.empty() || g.back() != 1) throw std::invalid_argument("cyclic code: generator must be monic");
    if (!poly_divmod(*f, poly_cyclotomic_modulus(*f, n), g).second.empty())
        throw std::invalid_argument("cyclic code: generator does not divide X^n - 1");
    return CyclicCode(f, n, std::move(g), std::nullopt);
}

std::vector<std::uint32_t> CyclicCode::free_positions() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t s = 0; s < n_; ++s)
        if (!std::binary_search(zeros_.begin(), zeros_.end(), s)) out.push_back(s);
    return out;
}

CyclicCode rs_code(std::uint32_t q, std::uint32_t delta) {
    if (delta < 2 || delta > q - 1)
        throw std::invalid_argument("rs_code: delta must lie in [2, " + std::to_string(q - 1) + "], got " +
                                    std::to_string(delta));
    const Field f = gf(q);
    std::vector<std::uint32_t> s(delta - 1);
    std::iota(s.begin(), s.end(), 0u);
    CyclicCode c = CyclicCode::from_roots(f, q - 1, s);
    c.code_ = c.code_.with_claimed_distance(delta);
    return c;
}

Poly dual_generator_poly(const FieldSpec& f, const Poly& g, std::uint32_t n) {
    auto [h, rem] = poly_divmod(f, poly_cyclotomic_modulus(f, n), g);
    if (!rem.empty()) throw std::invalid_argument("dual_generator_poly: g does not divide X^n - 1");
    return poly_monic(f, poly_reciprocal(h));
}

CyclicCode dual(const CyclicCode& c, InnerProduct kind) {
    const Field& f = c.field();
    require_kind_compatible(f, kind);
    Poly h = dual_generator_poly(*f, c.generator_poly(), c.length());
    switch (kind) {
        case InnerProduct::Euclidean: break;
        case InnerProduct::Hermitian:
            for (auto& a : h) a = f->frobenius_q(a);
            break;
        case InnerProduct::Symplectic:
            throw std::invalid_argument("cyclic dual: symplectic duals are additive, not cyclic");
    }
    return CyclicCode::from_generator(f, c.length(), std::move(h));
}

std::uint32_t dual_support_map(std::uint32_t i, std::uint32_t n, InnerProduct kind, std::uint32_t q) {
    std::uint64_t m = 1;
    switch (kind) {
        case InnerProduct::Euclidean: break;
        case InnerProduct::Hermitian:
            if (q == 0) throw std::invalid_argument("dual_support_map: Hermitian map needs the subfield order");
            m = q;
            break;
        case InnerProduct::Symplectic: throw std::invalid_argument("dual_support_map: no symplectic map");
    }
    const std::uint64_t x = (m % n) * (i % n) % n;
    return std::uint32_t((n - x) % n);
}

// --------------------------------------------------------------------- spectra

namespace {

void require_order(const FieldSpec& f, Elem root, Index n, const char* which) {
    if (root == 0 || f.multiplicative_order(root) != std::uint32_t(n))
        throw std::invalid_argument(std::string("spectrum_2d: ") + which + " must have order " + std::to_string(n));
}

}  // namespace

Spectrum2D spectrum_2d(const Matrix& word, Elem alpha, Elem beta) {
    const FieldSpec& f = word.spec();
    const Index n1 = word.rows(), n2 = word.cols();
    require_order(f, alpha, n1, "alpha");
    require_order(f, beta, n2, "beta");
    // rows: partial[a][j] = sum_b c(a,b) beta^{jb}, then columns over a
    Matrix partial(word.field(), n1, n2);
    for (Index a = 0; a < n1; ++a)
        for (Index j = 0; j < n2; ++j) {
            Elem acc = 0;
            const Elem step = f.pow(beta, std::uint64_t(j));
            for (Index b = n2; b-- > 0;) acc = f.add(f.mul(acc, step), word(a, b));
            partial(a, j) = acc;
        }
    Spectrum2D s{word.field(), alpha, beta, Matrix(word.field(), n1, n2)};
    for (Index i = 0; i < n1; ++i) {
        const Elem step = f.pow(alpha, std::uint64_t(i));
        for (Index j = 0; j < n2; ++j) {
            Elem acc = 0;
            for (Index a = n1; a-- > 0;) acc = f.add(f.mul(acc, step), partial(a, j));
            s.values(i, j) = acc;
        }
    }
    return s;
}

Matrix inverse_spectrum_2d(const Spectrum2D& s) {
    const FieldSpec& f = *s.field;
    const Index n1 = s.values.rows(), n2 = s.values.cols();
    // c(a,b) = (n1 n2)^{-1} sum_{i,j} C(i,j) alpha^{-ia} beta^{-jb}
    Spectrum2D back{s.field, f.inv(s.alpha), f.inv(s.beta), s.values};
    Matrix raw = spectrum_2d(s.values, back.alpha, back.beta).values;
    const Elem scale = f.inv(f.embed_prime(unsigned((std::uint64_t(n1) * std::uint64_t(n2)) % f.characteristic())));
    for (Index a = 0; a < n1; ++a)
        for (Index b = 0; b < n2; ++b) raw(a, b) = f.mul(raw(a, b), scale);
    return raw;
}

Matrix as_grid(const Field& f, std::span<const Elem> word, Index n1, Index n2) {
    if (Index(word.size()) != n1 * n2) throw std::invalid_argument("as_grid: word length is not n1*n2");
    Matrix m(f, n1, n2);
    for (Index a = 0; a < n1; ++a)
        for (Index b = 0; b < n2; ++b) m(a, b) = word[std::size_t(a * n2 + b)];
    return m;
}

namespace {

void require_spectral(const CyclicCode& c) {
    if (!c.spectral()) throw std::invalid_argument("spectral grid needs n | q-1");
}

std::vector<bool> mask_of(const std::vector<std::uint32_t>& positions, std::uint32_t n) {
    std::vector<bool> m(n, false);
    for (auto s : positions) m[s] = true;
    return m;
}

std::vector<bool> dual_zero_mask(const CyclicCode& c, InnerProduct kind) {
    std::vector<bool> m(c.length(), false);
    const std::uint32_t r = kind == InnerProduct::Hermitian ? c.field()->subfield_order() : 0;
    for (auto s : c.free_positions()) m[dual_support_map(s, c.length(), kind, r)] = true;
    return m;
}

}  // namespace

ZeroGrid forced_zero_grid(const CyclicCode& c1, const CyclicCode& c2) {
    require_same_field(c1.field(), c2.field(), "forced_zero_grid");
    require_spectral(c1);
    require_spectral(c2);
    const auto z1 = mask_of(c1.zeros(), c1.length()), z2 = mask_of(c2.zeros(), c2.length());
    ZeroGrid g{Index(c1.length()), Index(c2.length()), {}};
    g.forced.resize(std::size_t(g.n1 * g.n2));
    for (Index i = 0; i < g.n1; ++i)
        for (Index j = 0; j < g.n2; ++j) g.forced[std::size_t(i * g.n2 + j)] = z1[std::size_t(i)] || z2[std::size_t(j)];
    return g;
}

ZeroGrid dual_forced_zero_grid(const CyclicCode& c1, const CyclicCode& c2, InnerProduct kind) {
    require_same_field(c1.field(), c2.field(), "dual_forced_zero_grid");
    require_kind_compatible(c1.field(), kind);
    require_spectral(c1);
    require_spectral(c2);
    const auto z1 = dual_zero_mask(c1, kind), z2 = dual_zero_mask(c2, kind);
    ZeroGrid g{Index(c1.length()), Index(c2.length()), {}};
    g.forced.resize(std::size_t(g.n1 * g.n2));
    for (Index i = 0; i < g.n1; ++i)
        for (Index j = 0; j < g.n2; ++j) g.forced[std::size_t(i * g.n2 + j)] = z1[std::size_t(i)] && z2[std::size_t(j)];
    return g;
}

ZeroRectangle largest_zero_rectangle(const ZeroGrid& grid) {
    ZeroRectangle best;
    const Index n1 = grid.n1, n2 = grid.n2;
    auto better = [&](Index w, Index h) {
        const Index m = std::min(w, h), bm = std::min(best.width, best.height);
        return m > bm || (m == bm && w * h > best.width * best.height);
    };
    std::vector<bool> rows(static_cast<std::size_t>(n2));
    for (Index i0 = 0; i0 < n1; ++i0) {
        std::fill(rows.begin(), rows.end(), true);
        for (Index w = 1; w <= n1; ++w) {
            const Index i = (i0 + w - 1) % n1;
            bool any = false;
            for (Index j = 0; j < n2; ++j) {
                rows[std::size_t(j)] = rows[std::size_t(j)] && grid.at(i, j);
                any = any || rows[std::size_t(j)];
            }
            if (!any) break;
            // longest cyclic run of all-zero rows
            Index run_start = 0, run_len = 0;
            if (std::all_of(rows.begin(), rows.end(), [](bool b) { return b; })) {
                run_len = n2;
            } else {
                for (Index j0 = 0; j0 < n2; ++j0) {
                    if (!rows[std::size_t(j0)] || rows[std::size_t((j0 + n2 - 1) % n2)]) continue;
                    Index len = 0;
                    while (len < n2 && rows[std::size_t((j0 + len) % n2)]) ++len;
                    if (len > run_len) {
                        run_len = len;
                        run_start = j0;
                    }
                }
            }
            if (better(w, run_len)) best = {i0, w, run_start, run_len};
        }
    }
    return best;
}

std::size_t bch_rectangle_bound(std::size_t a, std::size_t b) noexcept { return std::min(a, b) + 1; }

RsProductParams rs_product_params(std::uint32_t q, std::uint32_t delta1, std::uint32_t delta2) {
    for (auto d : {delta1, delta2})
        if (d < 2 || d > q - 1)
            throw std::invalid_argument("rs_product_params: delta must lie in [2, " + std::to_string(q - 1) + "]");
    gf(q);  // validates q
    RsProductParams p;
    p.q = q;
    p.delta1 = delta1;
    p.delta2 = delta2;
    p.mu1 = q - delta1;
    p.mu2 = q - delta2;
    p.length = std::uint64_t(q - 1) * (q - 1);
    p.dimension = std::uint64_t(p.mu1) * p.mu2;
    p.distance = std::uint64_t(delta1) * delta2;
    p.dual_dimension = std::uint64_t(q) * (delta1 + delta2 - 2) + 1 - std::uint64_t(delta1) * delta2;
    p.dual_distance_stated = std::min(p.mu1, p.mu2);
    p.dual_distance_expected = 1 + p.dual_distance_stated;
    p.rs1_self_orthogonal = 2 * p.mu1 + 2 <= q;
    p.rs2_self_orthogonal = 2 * p.mu2 + 2 <= q;
    p.product_self_orthogonal = p.rs1_self_orthogonal || p.rs2_self_orthogonal;
    return p;
}

}  // namespace qproduct
