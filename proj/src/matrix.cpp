#include "qproduct/matrix.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qproduct {

Matrix::Matrix(Field f, Index rows, Index cols) : field_(std::move(f)), data_(Storage::Zero(rows, cols)) {
    if (!field_) throw std::invalid_argument("matrix without field");
}

Matrix::Matrix(Field f, Storage data) : field_(std::move(f)), data_(std::move(data)) {
    if (!field_) throw std::invalid_argument("matrix without field");
    for (Index i = 0; i < data_.size(); ++i)
        if (!field_->contains(data_.data()[i]))
            throw std::invalid_argument("matrix entry " + std::to_string(data_.data()[i]) + " outside " +
                                        field_->name());
}

Matrix Matrix::identity(Field f, Index n) {
    Matrix m(std::move(f), n, n);
    for (Index i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<Vector>& rows, Index cols) {
    if (cols < 0) {
        if (rows.empty()) throw std::invalid_argument("from_rows: column count needed for an empty row list");
        cols = Index(rows.front().size());
    }
    Storage s(Index(rows.size()), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (Index(rows[r].size()) != cols) throw std::invalid_argument("from_rows: ragged rows");
        for (Index c = 0; c < cols; ++c) s(Index(r), c) = rows[r][std::size_t(c)];
    }
    return {std::move(f), std::move(s)};
}

Vector Matrix::row(Index r) const {
    auto s = row_span(r);
    return {s.begin(), s.end()};
}

std::vector<Vector> Matrix::row_list() const {
    std::vector<Vector> out;
    out.reserve(std::size_t(rows()));
    for (Index r = 0; r < rows(); ++r) out.push_back(row(r));
    return out;
}

bool Matrix::is_zero() const noexcept {
    for (Index i = 0; i < data_.size(); ++i)
        if (data_.data()[i] != 0) return false;
    return true;
}

RowEchelon rref(const Matrix& m) {
    const FieldSpec& f = m.spec();
    Storage a = m.data();
    const Index rows = a.rows(), cols = a.cols();
    std::vector<Index> pivots;
    Index pr = 0;
    for (Index c = 0; c < cols && pr < rows; ++c) {
        Index sel = -1;
        for (Index r = pr; r < rows; ++r)
            if (a(r, c) != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != pr) a.row(sel).swap(a.row(pr));
        const Elem s = f.inv(a(pr, c));
        for (Index k = c; k < cols; ++k) a(pr, k) = f.mul(a(pr, k), s);
        for (Index r = 0; r < rows; ++r) {
            if (r == pr || a(r, c) == 0) continue;
            const Elem factor = f.neg(a(r, c));
            for (Index k = c; k < cols; ++k)
                if (a(pr, k) != 0) a(r, k) = f.add(a(r, k), f.mul(factor, a(pr, k)));
        }
        pivots.push_back(c);
        ++pr;
    }
    Storage reduced = a.topRows(pr);
    return {Matrix(m.field(), std::move(reduced)), std::move(pivots)};
}

Index rank(const Matrix& m) { return Index(rref(m).pivots.size()); }

Matrix kernel(const Matrix& m) {
    const FieldSpec& f = m.spec();
    const auto [r, pivots] = rref(m);
    const Index n = m.cols();
    std::vector<bool> is_pivot(std::size_t(n), false);
    for (Index p : pivots) is_pivot[std::size_t(p)] = true;
    std::vector<Vector> basis;
    for (Index free = 0; free < n; ++free) {
        if (is_pivot[std::size_t(free)]) continue;
        Vector x(std::size_t(n), 0);
        x[std::size_t(free)] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[std::size_t(pivots[i])] = f.neg(r(Index(i), free));
        basis.push_back(std::move(x));
    }
    return rref(Matrix::from_rows(m.field(), basis, n)).reduced;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "kronecker");
    const FieldSpec& f = a.spec();
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) {
            const Elem s = a(i, j);
            if (s == 0) continue;
            for (Index k = 0; k < b.rows(); ++k)
                for (Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = f.mul(s, b(k, l));
        }
    return out;
}

Matrix complement_basis(const Matrix& h, Index ambient_dim) {
    if (h.cols() != ambient_dim)
        throw std::invalid_argument("complement_basis: matrix has " + std::to_string(h.cols()) +
                                    " columns, ambient dimension " + std::to_string(ambient_dim));
    const auto e = rref(h);
    if (Index(e.pivots.size()) != h.rows()) throw std::invalid_argument("complement_basis: rows are not independent");
    std::vector<bool> is_pivot(std::size_t(ambient_dim), false);
    for (Index p : e.pivots) is_pivot[std::size_t(p)] = true;
    Matrix a(h.field(), ambient_dim - h.rows(), ambient_dim);
    Index r = 0;
    for (Index c = 0; c < ambient_dim; ++c)
        if (!is_pivot[std::size_t(c)]) a(r++, c) = 1;
    return a;
}

Matrix gram(const Matrix& a, const Matrix& b, InnerProduct kind) {
    require_same_field(a.field(), b.field(), "gram");
    require_kind_compatible(a.field(), kind);
    if (a.cols() != b.cols())
        throw std::invalid_argument("gram: column counts " + std::to_string(a.cols()) + " and " +
                                    std::to_string(b.cols()) + " differ");
    const Field out_field = kind == InnerProduct::Symplectic ? prime_subfield(a.field()) : a.field();
    Matrix g(out_field, a.rows(), b.rows());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < b.rows(); ++j) g(i, j) = inner_product(a.spec(), a.row_span(i), b.row_span(j), kind);
    return g;
}

Matrix transpose(const Matrix& m) { return {m.field(), Storage(m.data().transpose())}; }

Matrix multiply(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "multiply");
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
    const FieldSpec& f = a.spec();
    Matrix out(a.field(), a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k) {
            const Elem s = a(i, k);
            if (s == 0) continue;
            for (Index j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(s, b(k, j)));
        }
    return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "add");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: shape mismatch");
    Matrix out = a;
    for (Index i = 0; i < a.data().size(); ++i)
        out.data().data()[i] = a.spec().add(a.data().data()[i], b.data().data()[i]);
    return out;
}

Matrix vstack(std::span<const Matrix> parts) {
    if (parts.empty()) throw std::invalid_argument("vstack of nothing");
    Index rows = 0;
    const Index cols = parts.front().cols();
    for (const auto& p : parts) {
        require_same_field(parts.front().field(), p.field(), "vstack");
        if (p.cols() != cols) throw std::invalid_argument("vstack: column counts differ");
        rows += p.rows();
    }
    Matrix out(parts.front().field(), rows, cols);
    Index r = 0;
    for (const auto& p : parts) {
        out.data().middleRows(r, p.rows()) = p.data();
        r += p.rows();
    }
    return out;
}

Matrix vstack(std::initializer_list<Matrix> parts) { return vstack(std::span<const Matrix>(parts.begin(), parts.size())); }

Matrix hstack(std::span<const Matrix> parts) {
    if (parts.empty()) throw std::invalid_argument("hstack of nothing");
    Index cols = 0;
    const Index rows = parts.front().rows();
    for (const auto& p : parts) {
        require_same_field(parts.front().field(), p.field(), "hstack");
        if (p.rows() != rows) throw std::invalid_argument("hstack: row counts differ");
        cols += p.cols();
    }
    Matrix out(parts.front().field(), rows, cols);
    Index c = 0;
    for (const auto& p : parts) {
        out.data().middleCols(c, p.cols()) = p.data();
        c += p.cols();
    }
    return out;
}

Matrix left_cols(const Matrix& m, Index count) { return {m.field(), Storage(m.data().leftCols(count))}; }
Matrix right_cols(const Matrix& m, Index count) { return {m.field(), Storage(m.data().rightCols(count))}; }

Matrix conjugate(const Matrix& m) {
    Matrix out = m;
    for (Index i = 0; i < out.data().size(); ++i) out.data().data()[i] = m.spec().frobenius_q(m.data().data()[i]);
    return out;
}

Matrix embed(const Matrix& m, const Field& extension) {
    if (!m.spec().is_prime_field() || extension->characteristic() != m.spec().characteristic())
        throw std::invalid_argument("embed: " + m.spec().name() + " is not the prime field of " + extension->name());
    return {extension, m.data()};
}

Matrix expand_to_prime(const Matrix& m) {
    const FieldSpec& f = m.spec();
    const Index l = f.degree();
    Matrix out(prime_subfield(m.field()), m.rows(), m.cols() * l);
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c) {
            std::uint32_t v = m(r, c);
            for (Index d = 0; d < l; ++d) {
                out(r, c * l + d) = Elem(v % f.characteristic());
                v /= f.characteristic();
            }
        }
    return out;
}

Matrix contract_from_prime(const Matrix& m, const Field& target) {
    if (!m.spec().is_prime_field() || target->characteristic() != m.spec().order())
        throw std::invalid_argument("contract_from_prime: field mismatch");
    const Index l = target->degree();
    if (m.cols() % l != 0) throw std::invalid_argument("contract_from_prime: column count not a multiple of degree");
    Matrix out(target, m.rows(), m.cols() / l);
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < out.cols(); ++c) {
            std::uint32_t v = 0;
            for (Index d = l; d-- > 0;) v = v * target->characteristic() + m(r, c * l + d);
            out(r, c) = Elem(v);
        }
    return out;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "same_row_space");
    if (a.cols() != b.cols()) return false;
    return rref(a).reduced == rref(b).reduced;
}

bool in_row_space(const Matrix& basis, std::span<const Elem> v) {
    if (Index(v.size()) != basis.cols()) throw std::invalid_argument("in_row_space: length mismatch");
    Matrix one(basis.field(), 1, basis.cols());
    for (std::size_t i = 0; i < v.size(); ++i) one(0, Index(i)) = v[i];
    const Index r = rank(basis);
    return rank(vstack({basis, one})) == r;
}

Vector combine_rows(const Matrix& m, std::span<const Elem> coefficients) {
    if (Index(coefficients.size()) != m.rows()) throw std::invalid_argument("combine_rows: length mismatch");
    const FieldSpec& f = m.spec();
    Vector out(std::size_t(m.cols()), 0);
    for (Index r = 0; r < m.rows(); ++r) {
        const Elem s = coefficients[std::size_t(r)];
        if (s == 0) continue;
        for (Index c = 0; c < m.cols(); ++c) out[std::size_t(c)] = f.add(out[std::size_t(c)], f.mul(s, m(r, c)));
    }
    return out;
}

Matrix read_matrix(std::istream& in) {
    long long q = 0, r = 0, c = 0;
    if (!(in >> q >> r >> c)) throw std::invalid_argument("matrix file: expected header 'q r c'");
    if (r < 0 || c < 0) throw std::invalid_argument("matrix file: negative dimensions");
    const Field f = gf(std::uint32_t(q));
    Storage s(r, c);
    for (long long i = 0; i < r; ++i)
        for (long long j = 0; j < c; ++j) {
            long long v = 0;
            if (!(in >> v)) throw std::invalid_argument("matrix file: truncated at row " + std::to_string(i));
            if (v < 0 || v >= q) throw std::invalid_argument("matrix file: entry " + std::to_string(v) + " outside GF(" +
                                                             std::to_string(q) + ")");
            s(i, j) = Elem(v);
        }
    return {f, std::move(s)};
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open matrix file " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.spec().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (Index r = 0; r < m.rows(); ++r) {
        for (Index c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c);
        out << '\n';
    }
}

PackedRows::PackedRows(const Matrix& m) : rows_(m.rows()), cols_(m.cols()) {
    if (m.spec().characteristic() != 2) throw std::invalid_argument("PackedRows needs characteristic 2");
    bits_per_symbol_ = m.spec().degree();
    symbols_per_word_ = 64 / bits_per_symbol_;
    words_ = std::size_t((cols_ + symbols_per_word_ - 1) / symbols_per_word_);
    if (words_ == 0) words_ = 1;
    for (unsigned s = 0; s < symbols_per_word_; ++s) low_mask_ |= std::uint64_t{1} << (s * bits_per_symbol_);
    bits_.assign(std::size_t(rows_) * words_, 0);
    for (Index r = 0; r < rows_; ++r)
        for (Index c = 0; c < cols_; ++c) {
            const std::uint64_t v = m(r, c);
            const std::size_t w = std::size_t(c) / symbols_per_word_;
            const unsigned off = unsigned(std::size_t(c) % symbols_per_word_) * bits_per_symbol_;
            bits_[std::size_t(r) * words_ + w] |= v << off;
        }
}

std::size_t PackedRows::weight(const std::uint64_t* w) const noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_; ++i) {
        std::uint64_t x = w[i];
        if (bits_per_symbol_ > 1) {
            std::uint64_t any = x;
            for (unsigned s = 1; s < bits_per_symbol_; ++s) any |= x >> s;
            x = any & low_mask_;
        }
        total += std::size_t(std::popcount(x));
    }
    return total;
}

Vector PackedRows::unpack(const std::uint64_t* w) const {
    Vector out(std::size_t(cols_), 0);
    const std::uint64_t mask = (std::uint64_t{1} << bits_per_symbol_) - 1;
    for (Index c = 0; c < cols_; ++c) {
        const std::size_t word = std::size_t(c) / symbols_per_word_;
        const unsigned off = unsigned(std::size_t(c) % symbols_per_word_) * bits_per_symbol_;
        out[std::size_t(c)] = Elem((w[word] >> off) & mask);
    }
    return out;
}

}  // namespace qproduct
