#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "qproduct/galois.hpp"
#include "qproduct/inner_product.hpp"

namespace qproduct {

using Index = Eigen::Index;
/// Dense row-major storage of digit-encoded entries. Eigen provides layout, blocks and
/// slicing only; field arithmetic never goes through Eigen's operators.
using Storage = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = std::vector<Elem>;

/// Dense matrix over a finite field.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, Index rows, Index cols);
    Matrix(Field f, Storage data);

    static Matrix identity(Field f, Index n);
    static Matrix from_rows(Field f, const std::vector<Vector>& rows, Index cols = -1);

    const Field& field() const noexcept { return field_; }
    const FieldSpec& spec() const noexcept { return *field_; }
    Index rows() const noexcept { return data_.rows(); }
    Index cols() const noexcept { return data_.cols(); }
    bool empty() const noexcept { return data_.rows() == 0; }

    Elem operator()(Index r, Index c) const { return data_(r, c); }
    Elem& operator()(Index r, Index c) { return data_(r, c); }

    const Storage& data() const noexcept { return data_; }
    Storage& data() noexcept { return data_; }

    Vector row(Index r) const;
    std::span<const Elem> row_span(Index r) const { return {data_.data() + r * data_.cols(), std::size_t(data_.cols())}; }
    std::vector<Vector> row_list() const;
    bool is_zero() const noexcept;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return same_field(a.field_, b.field_) && a.data_.rows() == b.data_.rows() &&
               a.data_.cols() == b.data_.cols() && a.data_ == b.data_;
    }

private:
    Field field_;
    Storage data_;
};

struct RowEchelon {
    Matrix reduced;  // zero rows dropped
    std::vector<Index> pivots;
};

/// Reduced row-echelon form; leftmost pivot per column, rows scanned top-down.
RowEchelon rref(const Matrix& m);
Index rank(const Matrix& m);
/// Basis (in rref) of { x : m x^T = 0 }.
Matrix kernel(const Matrix& m);
/// Block (i,j) of the result is a(i,j) * b.
Matrix kronecker(const Matrix& a, const Matrix& b);
/// Standard basis vectors at the non-pivot columns of rref(h); h must have full row rank.
Matrix complement_basis(const Matrix& h, Index ambient_dim);
/// Entry (i,j) = <row_i(a), row_j(b)>; symplectic gram matrices live over GF(p).
Matrix gram(const Matrix& a, const Matrix& b, InnerProduct kind);

Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix vstack(std::span<const Matrix> parts);
Matrix vstack(std::initializer_list<Matrix> parts);
Matrix hstack(std::span<const Matrix> parts);
Matrix left_cols(const Matrix& m, Index count);
Matrix right_cols(const Matrix& m, Index count);
/// Entry-wise x -> x^r over GF(r^2).
Matrix conjugate(const Matrix& m);
/// Re-labels a matrix over GF(p) as a matrix over an extension of characteristic p.
Matrix embed(const Matrix& m, const Field& extension);
/// Each GF(p^l) entry becomes its l base-p digits (little-endian); result over GF(p).
Matrix expand_to_prime(const Matrix& m);
/// Inverse of expand_to_prime; `target` must have characteristic equal to m's field order.
Matrix contract_from_prime(const Matrix& m, const Field& target);

bool same_row_space(const Matrix& a, const Matrix& b);
bool in_row_space(const Matrix& basis, std::span<const Elem> v);
/// v * m, v a row vector of length m.rows().
Vector combine_rows(const Matrix& m, std::span<const Elem> coefficients);

/// Text format: header "q r c", then r lines of c integers.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);

/// Bit-packed rows for characteristic-2 fields (l bits per symbol), used by the
/// distance enumerators. Symbol addition becomes XOR of words.
class PackedRows {
public:
    explicit PackedRows(const Matrix& m);

    Index rows() const noexcept { return rows_; }
    Index cols() const noexcept { return cols_; }
    std::size_t words_per_row() const noexcept { return words_; }
    const std::uint64_t* row(Index r) const noexcept { return bits_.data() + std::size_t(r) * words_; }
    unsigned bits_per_symbol() const noexcept { return bits_per_symbol_; }

    /// Number of nonzero symbols in a packed word array of length words_per_row().
    std::size_t weight(const std::uint64_t* w) const noexcept;
    Vector unpack(const std::uint64_t* w) const;

private:
    Index rows_ = 0;
    Index cols_ = 0;
    unsigned bits_per_symbol_ = 1;
    unsigned symbols_per_word_ = 64;
    std::size_t words_ = 0;
    std::uint64_t low_mask_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace qproduct
