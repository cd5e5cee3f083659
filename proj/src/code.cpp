#include "qproduct/code.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace qproduct {

// ---------------------------------------------------------------- code objects

LinearCode::LinearCode(const Matrix& generator, std::optional<std::size_t> claimed_distance)
    : generator_(rref(generator).reduced), claimed_(claimed_distance) {}

LinearCode LinearCode::zero(const Field& f, Index n) { return LinearCode(Matrix(f, 0, n)); }
LinearCode LinearCode::full(const Field& f, Index n) { return LinearCode(Matrix::identity(f, n)); }

LinearCode LinearCode::with_claimed_distance(std::optional<std::size_t> d) const {
    LinearCode c = *this;
    c.claimed_ = d;
    return c;
}

bool LinearCode::contains(std::span<const Elem> word) const {
    if (Index(word.size()) != length()) return false;
    return in_row_space(generator_, word);
}

namespace {

Matrix canonical_additive(const Matrix& generators) {
    const Matrix e = rref(expand_to_prime(generators)).reduced;
    return contract_from_prime(e, generators.field());
}

}  // namespace

AdditiveCode::AdditiveCode(const Matrix& generators, std::optional<std::size_t> claimed_distance)
    : generator_(canonical_additive(generators)), claimed_(claimed_distance) {}

AdditiveCode AdditiveCode::from_linear(const LinearCode& c) { return AdditiveCode(prime_span_basis(c), c.claimed_distance()); }

AdditiveCode AdditiveCode::zero(const Field& f, Index n) { return AdditiveCode(Matrix(f, 0, n)); }

AdditiveCode AdditiveCode::with_claimed_distance(std::optional<std::size_t> d) const {
    AdditiveCode c = *this;
    c.claimed_ = d;
    return c;
}

bool AdditiveCode::contains(std::span<const Elem> word) const {
    if (Index(word.size()) != length()) return false;
    Matrix w(field(), 1, length());
    for (Index i = 0; i < length(); ++i) w(0, i) = word[std::size_t(i)];
    const Matrix basis = expand_to_prime(generator_);
    return in_row_space(basis, expand_to_prime(w).row_span(0));
}

Matrix prime_span_basis(const LinearCode& c) {
    const FieldSpec& f = *c.field();
    const Index l = f.degree();
    Matrix out(c.field(), c.dimension() * l, c.length());
    for (Index r = 0; r < c.dimension(); ++r) {
        Elem s = 1;
        for (Index t = 0; t < l; ++t) {
            for (Index j = 0; j < c.length(); ++j) out(r * l + t, j) = f.mul(s, c.generator()(r, j));
            if (t + 1 < l) s = f.mul(s, Elem(f.characteristic()));  // next power of x (encoding p)
        }
    }
    return out;
}

// ---------------------------------------------------------------------- duals

LinearCode dual(const LinearCode& c, InnerProduct kind) {
    require_kind_compatible(c.field(), kind);
    switch (kind) {
        case InnerProduct::Euclidean: return LinearCode(kernel(c.generator()));
        case InnerProduct::Hermitian: return LinearCode(kernel(conjugate(c.generator())));
        case InnerProduct::Symplectic: break;
    }
    throw std::invalid_argument("symplectic dual is defined for additive codes; convert with AdditiveCode::from_linear");
}

AdditiveCode symplectic_dual(const AdditiveCode& c) {
    require_kind_compatible(c.field(), InnerProduct::Symplectic);
    const FieldSpec& f = *c.field();
    const Field fp = prime_subfield(c.field());
    const Index l = f.degree();
    const Index n = c.length();
    // Gram matrix of the trace form on the basis 1, x, ..., x^{l-1}.
    std::vector<Elem> basis(static_cast<std::size_t>(l));
    basis[0] = 1;
    for (Index s = 1; s < l; ++s) basis[std::size_t(s)] = f.mul(basis[std::size_t(s - 1)], Elem(f.characteristic()));
    Matrix form(fp, l, l);
    for (Index s = 0; s < l; ++s)
        for (Index t = 0; t < l; ++t)
            form(s, t) = f.trace_to_prime(f.mul(basis[std::size_t(s)], f.frobenius_q(basis[std::size_t(t)])));
    const Matrix expanded = expand_to_prime(c.generator());
    Matrix functionals(fp, expanded.rows(), n * l);
    const FieldSpec& pf = *fp;
    for (Index r = 0; r < expanded.rows(); ++r)
        for (Index i = 0; i < n; ++i)
            for (Index t = 0; t < l; ++t) {
                Elem acc = 0;
                for (Index s = 0; s < l; ++s) acc = pf.add(acc, pf.mul(expanded(r, i * l + s), form(s, t)));
                functionals(r, i * l + t) = acc;
            }
    return AdditiveCode(contract_from_prime(kernel(functionals), c.field()));
}

bool is_self_orthogonal(const LinearCode& c, InnerProduct kind) {
    require_kind_compatible(c.field(), kind);
    if (kind == InnerProduct::Symplectic) return is_self_orthogonal(AdditiveCode::from_linear(c));
    return gram(c.generator(), c.generator(), kind).is_zero();
}

bool is_self_orthogonal(const AdditiveCode& c) {
    return gram(c.generator(), c.generator(), InnerProduct::Symplectic).is_zero();
}

std::size_t hamming_weight(std::span<const Elem> v) noexcept {
    return std::size_t(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

// ------------------------------------------------------------ span enumeration

std::optional<std::uint64_t> span_size(const Matrix& basis, std::uint64_t limit) {
    const std::uint64_t p = basis.spec().characteristic();
    std::uint64_t size = 1;
    for (Index i = 0; i < basis.rows(); ++i) {
        if (size > limit / p) return std::nullopt;
        size *= p;
    }
    if (size > limit) return std::nullopt;
    return size;
}

Vector span_word(const Matrix& basis, std::uint64_t gray_index) {
    const FieldSpec& f = basis.spec();
    const std::uint64_t p = f.characteristic();
    std::vector<Elem> digits(std::size_t(basis.rows()) + 1, 0);
    for (std::size_t i = 0; i + 1 < digits.size(); ++i) {
        digits[i] = Elem(gray_index % p);
        gray_index /= p;
    }
    std::vector<Elem> coeff(std::size_t(basis.rows()));
    for (std::size_t i = 0; i < coeff.size(); ++i) coeff[i] = Elem((digits[i] + p - digits[i + 1]) % p);
    return combine_rows(basis, coeff);
}

namespace {

struct Partial {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t argmin = 0;
    std::vector<std::uint64_t> counts;
};

Partial enumerate_packed(const Matrix& basis, std::uint64_t start, std::uint64_t end, bool want_counts,
                         const WordFilter& accept) {
    const PackedRows rows(basis);
    const std::size_t nw = rows.words_per_row();
    Partial out;
    if (want_counts) out.counts.assign(std::size_t(basis.cols()) + 1, 0);
    std::vector<std::uint64_t> cw(nw, 0);
    const std::uint64_t g = start ^ (start >> 1);
    for (Index r = 0; r < basis.rows(); ++r)
        if ((g >> r) & 1)
            for (std::size_t w = 0; w < nw; ++w) cw[w] ^= rows.row(r)[w];
    for (std::uint64_t idx = start;;) {
        const std::size_t wt = rows.weight(cw.data());
        if (want_counts) ++out.counts[wt];
        if (wt != 0 && wt < out.best && (!accept || accept(rows.unpack(cw.data())))) {
            out.best = wt;
            out.argmin = idx;
        }
        if (++idx >= end) break;
        const auto t = std::countr_zero(idx);
        const std::uint64_t* row = rows.row(t);
        for (std::size_t w = 0; w < nw; ++w) cw[w] ^= row[w];
    }
    return out;
}

Partial enumerate_dense(const Matrix& basis, std::uint64_t start, std::uint64_t end, bool want_counts,
                        const WordFilter& accept) {
    const FieldSpec& f = basis.spec();
    const unsigned p = f.characteristic();
    const std::size_t k = std::size_t(basis.rows());
    const std::size_t n = std::size_t(basis.cols());
    std::vector<std::vector<std::size_t>> support(k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (basis(Index(r), Index(c)) != 0) support[r].push_back(c);

    Partial out;
    if (want_counts) out.counts.assign(n + 1, 0);
    std::vector<unsigned> digits(k, 0);
    std::uint64_t rest = start;
    for (std::size_t i = 0; i < k; ++i) {
        digits[i] = unsigned(rest % p);
        rest /= p;
    }
    Vector cw = span_word(basis, start);
    std::size_t wt = hamming_weight(cw);
    for (std::uint64_t idx = start;;) {
        if (want_counts) ++out.counts[wt];
        if (wt != 0 && wt < out.best && (!accept || accept(cw))) {
            out.best = wt;
            out.argmin = idx;
        }
        if (++idx >= end) break;
        std::size_t t = 0;
        while (digits[t] == p - 1) digits[t++] = 0;
        ++digits[t];
        for (std::size_t c : support[t]) {
            const Elem old = cw[c];
            const Elem now = f.add(old, basis(Index(t), Index(c)));
            cw[c] = now;
            wt += std::size_t(now != 0) - std::size_t(old != 0);
        }
    }
    return out;
}

}  // namespace

SpanEnumeration enumerate_span(const Matrix& basis, unsigned threads, bool want_counts, const WordFilter& accept) {
    const auto total = span_size(basis, std::numeric_limits<std::uint64_t>::max() / 2);
    if (!total) throw std::length_error("span too large to enumerate");
    const bool packed = basis.spec().characteristic() == 2;
    const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, std::max<std::uint64_t>(1, *total / 4096));
    std::vector<Partial> parts(workers);
    auto run = [&](std::uint64_t w) {
        const std::uint64_t lo = *total / workers * w;
        const std::uint64_t hi = (w + 1 == workers) ? *total : *total / workers * (w + 1);
        parts[w] = packed ? enumerate_packed(basis, lo, hi, want_counts, accept)
                          : enumerate_dense(basis, lo, hi, want_counts, accept);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    SpanEnumeration out;
    out.words = *total;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& part : parts)
        if (part.best < best) {  // ranges are ordered, so the first strict improvement is the global first
            best = part.best;
            out.argmin = part.argmin;
        }
    out.min_weight = best == std::numeric_limits<std::size_t>::max() ? 0 : best;
    if (want_counts) {
        out.counts.assign(std::size_t(basis.cols()) + 1, 0);
        for (const auto& part : parts)
            for (std::size_t i = 0; i < part.counts.size(); ++i) out.counts[i] += part.counts[i];
    }
    return out;
}

// ---------------------------------------------------------- low-weight search

namespace {

// Per-position syndromes of each nonzero symbol against the annihilator of the code:
// a word is a codeword iff the sum of its symbol syndromes vanishes.
struct SymbolSyndromes {
    Field syndrome_field;
    std::size_t n = 0;
    std::size_t checks = 0;
    std::vector<Elem> symbols;
    bool scale_invariant = false;  // GF(q)-linear: first symbol may be fixed to 1
    std::vector<Elem> table;       // [(pos * symbols + s) * checks + t]

    std::span<const Elem> at(std::size_t pos, std::size_t s) const {
        return {table.data() + (pos * symbols.size() + s) * checks, checks};
    }
};

SymbolSyndromes linear_syndromes(const LinearCode& c) {
    const Matrix h = kernel(c.generator());
    const FieldSpec& f = *c.field();
    SymbolSyndromes s;
    s.syndrome_field = c.field();
    s.n = std::size_t(c.length());
    s.checks = std::size_t(h.rows());
    for (std::uint32_t a = 1; a < f.order(); ++a) s.symbols.push_back(Elem(a));
    s.scale_invariant = true;
    s.table.resize(s.n * s.symbols.size() * s.checks);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t a = 0; a < s.symbols.size(); ++a)
            for (std::size_t t = 0; t < s.checks; ++t)
                s.table[(i * s.symbols.size() + a) * s.checks + t] = f.mul(s.symbols[a], h(Index(t), Index(i)));
    return s;
}

SymbolSyndromes additive_syndromes(const AdditiveCode& c) {
    const Matrix y = symplectic_dual(c).generator();
    const FieldSpec& f = *c.field();
    SymbolSyndromes s;
    s.syndrome_field = prime_subfield(c.field());
    s.n = std::size_t(c.length());
    s.checks = std::size_t(y.rows());
    for (std::uint32_t a = 1; a < f.order(); ++a) s.symbols.push_back(Elem(a));
    s.table.resize(s.n * s.symbols.size() * s.checks);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t a = 0; a < s.symbols.size(); ++a)
            for (std::size_t t = 0; t < s.checks; ++t)
                s.table[(i * s.symbols.size() + a) * s.checks + t] =
                    f.trace_to_prime(f.mul(s.symbols[a], f.frobenius_q(y(Index(t), Index(i)))));
    return s;
}

std::string key_of(std::span<const Elem> v) {
    return {reinterpret_cast<const char*>(v.data()), v.size() * sizeof(Elem)};
}

constexpr double max_triple_pairs = 4e8;

struct SearchOutcome {
    std::optional<Vector> word;
    std::size_t checked_up_to = 0;  // every weight <= this was searched
};

SearchOutcome search_low_weight(const SymbolSyndromes& s, std::size_t max_weight) {
    const FieldSpec& f = *s.syndrome_field;
    const std::size_t S = s.symbols.size();
    const std::size_t first_count = s.scale_invariant ? 1 : S;  // symbols[0] == 1
    auto is_zero = [](std::span<const Elem> v) {
        return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
    };
    auto make_word = [&](std::initializer_list<std::pair<std::size_t, std::size_t>> entries) {
        Vector w(s.n, 0);
        for (auto [pos, sym] : entries) w[pos] = s.symbols[sym];
        return w;
    };
    SearchOutcome out;
    if (max_weight == 0) return out;

    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t a = 0; a < first_count; ++a)
            if (is_zero(s.at(i, a))) return {make_word({{i, a}}), 1};
    out.checked_up_to = 1;
    if (max_weight < 2) return out;

    std::unordered_map<std::string, std::vector<std::pair<std::uint32_t, std::uint32_t>>> index;
    index.reserve(s.n * S);
    for (std::size_t j = 0; j < s.n; ++j)
        for (std::size_t b = 0; b < S; ++b) index[key_of(s.at(j, b))].emplace_back(std::uint32_t(j), std::uint32_t(b));

    Vector target(s.checks);
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t a = 0; a < first_count; ++a) {
            const auto si = s.at(i, a);
            for (std::size_t t = 0; t < s.checks; ++t) target[t] = f.neg(si[t]);
            if (auto it = index.find(key_of(target)); it != index.end())
                for (auto [j, b] : it->second)
                    if (j > i) return {make_word({{i, a}, {j, b}}), 2};
        }
    out.checked_up_to = 2;
    if (max_weight < 3) return out;

    const double pairs = double(s.n) * double(s.n) / 2.0 * double(first_count) * double(S);
    if (pairs > max_triple_pairs) return out;
    for (std::size_t i = 0; i < s.n; ++i)
        for (std::size_t a = 0; a < first_count; ++a) {
            const auto si = s.at(i, a);
            for (std::size_t j = i + 1; j < s.n; ++j)
                for (std::size_t b = 0; b < S; ++b) {
                    const auto sj = s.at(j, b);
                    for (std::size_t t = 0; t < s.checks; ++t) target[t] = f.neg(f.add(si[t], sj[t]));
                    if (auto it = index.find(key_of(target)); it != index.end())
                        for (auto [k, c] : it->second)
                            if (k > j) return {make_word({{i, a}, {j, b}, {k, c}}), 3};
                }
        }
    out.checked_up_to = 3;
    return out;
}

// Information-set style upper bound: random column orders, rref, then single rows and
// pairs of rows. Deterministic seed so reports are stable.
Vector heuristic_witness(const Matrix& gens, bool linear, unsigned rounds) {
    const FieldSpec& f = gens.spec();
    const Index n = gens.cols();
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    Vector best;
    std::size_t best_w = std::numeric_limits<std::size_t>::max();
    auto offer = [&](const Vector& v) {
        const std::size_t w = hamming_weight(v);
        if (w != 0 && w < best_w) {
            best_w = w;
            best = v;
        }
    };
    for (Index r = 0; r < gens.rows(); ++r) offer(gens.row(r));
    std::vector<Index> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Index(0));
    const unsigned p = f.characteristic();
    for (unsigned round = 0; round < rounds; ++round) {
        std::shuffle(perm.begin(), perm.end(), rng);
        Matrix permuted(gens.field(), gens.rows(), n);
        for (Index r = 0; r < gens.rows(); ++r)
            for (Index c = 0; c < n; ++c) permuted(r, c) = gens(r, perm[std::size_t(c)]);
        Matrix reduced = linear ? rref(permuted).reduced
                                : contract_from_prime(rref(expand_to_prime(permuted)).reduced, gens.field());
        std::vector<Vector> rows;
        for (Index r = 0; r < reduced.rows(); ++r) {
            Vector v(static_cast<std::size_t>(n));
            for (Index c = 0; c < n; ++c) v[std::size_t(perm[std::size_t(c)])] = reduced(r, c);
            offer(v);
            rows.push_back(std::move(v));
        }
        const std::uint32_t scalars = linear ? f.order() : p;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i + 1; j < rows.size(); ++j)
                for (std::uint32_t a = 1; a < scalars; ++a) {
                    Vector v(static_cast<std::size_t>(n));
                    for (std::size_t c = 0; c < v.size(); ++c) v[c] = f.add(rows[i][c], f.mul(Elem(a), rows[j][c]));
                    offer(v);
                }
    }
    return best;
}

DistanceCertificate finish(DistanceCertificate cert, const DistanceOptions& options,
                           std::optional<std::size_t> claimed) {
    if (options.known_lower && *options.known_lower > cert.lower) {
        if (*options.known_lower > cert.upper)
            throw std::logic_error("supplied lower bound " + std::to_string(*options.known_lower) +
                                   " exceeds witness weight " + std::to_string(cert.upper));
        cert.lower = *options.known_lower;
        cert.lower_method = options.known_lower_method;
    }
    cert.claimed = claimed;
    return cert;
}

DistanceCertificate degenerate_certificate(Index n) {
    DistanceCertificate cert;
    cert.lower = cert.upper = std::size_t(n) + 1;
    cert.lower_method = cert.upper_method = "degenerate";
    cert.degenerate = true;
    return cert;
}

DistanceCertificate exhaustive_certificate(const Matrix& basis, const DistanceOptions& options) {
    DistanceCertificate cert;
    const auto e = enumerate_span(basis, options.threads, false);
    cert.lower = cert.upper = e.min_weight;
    cert.lower_method = cert.upper_method = "exhaustive";
    cert.witness = span_word(basis, e.argmin);
    return cert;
}

DistanceCertificate search_certificate(const SymbolSyndromes& syndromes, const Matrix& gens, bool linear,
                                       const DistanceOptions& options) {
    DistanceCertificate cert;
    const auto found = search_low_weight(syndromes, 3);
    if (found.word) {
        cert.lower = cert.upper = hamming_weight(*found.word);
        cert.lower_method = "column-independence";
        cert.upper_method = "low-weight-search";
        cert.witness = *found.word;
        return cert;
    }
    cert.lower = found.checked_up_to + 1;
    cert.lower_method = "column-independence";
    cert.witness = heuristic_witness(gens, linear, options.heuristic_rounds);
    cert.upper = hamming_weight(cert.witness);
    cert.upper_method = "heuristic";
    return cert;
}

}  // namespace

DistanceCertificate min_distance(const LinearCode& c, const DistanceOptions& options) {
    if (c.dimension() == 0) return finish(degenerate_certificate(c.length()), {}, c.claimed_distance());
    const Matrix basis = prime_span_basis(c);
    if (span_size(basis, options.budget))
        return finish(exhaustive_certificate(basis, options), options, c.claimed_distance());
    return finish(search_certificate(linear_syndromes(c), c.generator(), true, options), options,
                  c.claimed_distance());
}

DistanceCertificate min_distance(const AdditiveCode& c, const DistanceOptions& options) {
    if (c.prime_dimension() == 0) return finish(degenerate_certificate(c.length()), {}, c.claimed_distance());
    if (span_size(c.generator(), options.budget))
        return finish(exhaustive_certificate(c.generator(), options), options, c.claimed_distance());
    return finish(search_certificate(additive_syndromes(c), c.generator(), false, options), options,
                  c.claimed_distance());
}

namespace {

void require_small_threshold(std::size_t w) {
    if (w > 4) throw std::invalid_argument("distance_at_least supports w <= 4, got " + std::to_string(w));
}

}  // namespace

bool distance_at_least(const LinearCode& c, std::size_t w) {
    require_small_threshold(w);
    if (w <= 1) return true;
    const auto s = linear_syndromes(c);
    const auto found = search_low_weight(s, w - 1);
    if (found.word) return false;
    if (found.checked_up_to < w - 1) throw std::length_error("low-weight search exceeds its size guard");
    return true;
}

bool distance_at_least(const AdditiveCode& c, std::size_t w) {
    require_small_threshold(w);
    if (w <= 1) return true;
    const auto found = search_low_weight(additive_syndromes(c), w - 1);
    if (found.word) return false;
    if (found.checked_up_to < w - 1) throw std::length_error("low-weight search exceeds its size guard");
    return true;
}

std::optional<Vector> low_weight_word(const LinearCode& c, std::size_t max_weight) {
    if (max_weight > 3) throw std::invalid_argument("low_weight_word supports weights <= 3");
    return search_low_weight(linear_syndromes(c), max_weight).word;
}

std::optional<Vector> low_weight_word(const AdditiveCode& c, std::size_t max_weight) {
    if (max_weight > 3) throw std::invalid_argument("low_weight_word supports weights <= 3");
    return search_low_weight(additive_syndromes(c), max_weight).word;
}

namespace {

std::vector<std::uint64_t> enumerate_weights(const Matrix& basis, const DistanceOptions& options) {
    if (!span_size(basis, options.budget))
        throw std::length_error("code size exceeds enumeration budget of " + std::to_string(options.budget));
    return enumerate_span(basis, options.threads, true).counts;
}

}  // namespace

std::vector<std::uint64_t> weight_enumerator(const LinearCode& c, const DistanceOptions& options) {
    return enumerate_weights(prime_span_basis(c), options);
}

std::vector<std::uint64_t> weight_enumerator(const AdditiveCode& c, const DistanceOptions& options) {
    return enumerate_weights(c.generator(), options);
}

}  // namespace qproduct
