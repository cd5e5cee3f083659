#include "qproduct/catalog.hpp"

#include <cctype>
#include <stdexcept>

#include "qproduct/product.hpp"

namespace qproduct {

Matrix hamming_check_matrix(std::uint32_t r, std::uint32_t q) {
    if (r < 1) throw std::invalid_argument("hamming: redundancy must be >= 1");
    const Field f = gf(q);
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        total *= q;
        if (total > 65536) throw std::invalid_argument("hamming: q^r too large");
    }
    std::vector<Vector> cols;
    for (std::uint64_t v = 1; v < total; ++v) {
        Vector digits(r);
        std::uint64_t x = v;
        for (std::uint32_t t = 0; t < r; ++t) {
            digits[t] = Elem(x % q);
            x /= q;
        }
        std::uint32_t top = r;
        while (top-- > 0 && digits[top] == 0) {
        }
        if (digits[top] == 1) cols.push_back(std::move(digits));
    }
    Matrix h(f, r, Index(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::uint32_t t = 0; t < r; ++t) h(t, Index(c)) = cols[c][t];
    return h;
}

LinearCode hamming(std::uint32_t r, std::uint32_t q) {
    return LinearCode(kernel(hamming_check_matrix(r, q)), r >= 2 ? std::optional<std::size_t>(3) : std::nullopt);
}

LinearCode simplex(std::uint32_t r, std::uint32_t q) {
    std::size_t d = 1;
    for (std::uint32_t i = 1; i < r; ++i) d *= q;
    return LinearCode(hamming_check_matrix(r, q), d);
}

LinearCode quaternary_hamming_dual_5() { return LinearCode(conjugate(hamming_check_matrix(2, 4)), 4); }

const Field& NamedCode::field() const {
    return additive() ? as_additive().field() : linear().field();
}

Index NamedCode::length() const {
    return additive() ? as_additive().length() : linear().length();
}

std::vector<std::string> catalog_listing() {
    return {
        "hamming(r,q)                 q-ary Hamming code",
        "hamming_dual(r,q)            Euclidean dual of hamming(r,q), same as simplex(r,q)",
        "simplex(r,q)                 row span of the Hamming check matrix",
        "quaternary_hamming_dual_5    [5,2,4]_4, Hermitian dual of hamming(2,4)",
        "rs(q,delta)                  Reed-Solomon [q-1, q-delta, delta]_q",
        "cyclic(q,n,s1,s2,...)        cyclic code with zeros alpha^s, n | q-1",
        "product(A,B)                 A (x) B",
        "product_additive(A,B)        A over GF(p), B additive (linear B is converted)",
        "additive(A)                  GF(p)-span of a linear code",
        "dual(A,kind)                 kind: euclidean | hermitian | symplectic",
        "file(path[,additive])        matrix text file 'q r c' + rows",
    };
}

namespace {

std::string listing_text() {
    std::string s = "known codes:";
    for (const auto& l : catalog_listing()) s += "\n  " + l;
    return s;
}

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    NamedCode parse() {
        NamedCode c = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return c;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("catalog: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                    std::string(s_) + "'\n" + listing_text());
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    void expect(char c) {
        if (!peek(c)) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string ident() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::uint32_t number() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        const auto v = std::stoull(std::string(s_.substr(start, pos_ - start)));
        if (v > 0xffffffffULL) fail("number out of range");
        return std::uint32_t(v);
    }

    std::string raw_argument() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
        std::string a(s_.substr(start, pos_ - start));
        while (!a.empty() && std::isspace(static_cast<unsigned char>(a.back()))) a.pop_back();
        if (a.empty()) fail("empty argument");
        return a;
    }

    static NamedCode linear(LinearCode c, std::string e) { return {std::move(c), std::move(e), std::nullopt}; }
    static NamedCode additive(AdditiveCode c, std::string e) { return {std::move(c), std::move(e), std::nullopt}; }

    static AdditiveCode to_additive(const NamedCode& c) {
        return c.additive() ? c.as_additive() : AdditiveCode::from_linear(c.linear());
    }

    NamedCode expr() {
        const std::string name = ident();
        auto args2 = [&] {
            expect('(');
            const auto a = number();
            expect(',');
            const auto b = number();
            expect(')');
            return std::pair{a, b};
        };
        auto pair_str = [](std::uint32_t a, std::uint32_t b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; };

        if (name == "hamming") {
            const auto [r, q] = args2();
            return linear(hamming(r, q), "hamming" + pair_str(r, q));
        }
        if (name == "hamming_dual" || name == "simplex") {
            const auto [r, q] = args2();
            return linear(simplex(r, q), name + pair_str(r, q));
        }
        if (name == "quaternary_hamming_dual_5") {
            if (peek('(')) {
                expect('(');
                expect(')');
            }
            return linear(quaternary_hamming_dual_5(), name);
        }
        if (name == "rs") {
            const auto [q, delta] = args2();
            CyclicCode c = rs_code(q, delta);
            return {c.code(), "rs" + pair_str(q, delta), c};
        }
        if (name == "cyclic") {
            expect('(');
            const auto q = number();
            expect(',');
            const auto n = number();
            std::vector<std::uint32_t> roots;
            std::string e = "cyclic(" + std::to_string(q) + "," + std::to_string(n);
            while (peek(',')) {
                expect(',');
                roots.push_back(number());
                e += "," + std::to_string(roots.back());
            }
            expect(')');
            CyclicCode c = CyclicCode::from_roots(gf(q), n, roots);
            return {c.code(), e + ")", c};
        }
        if (name == "product" || name == "product_additive") {
            expect('(');
            NamedCode a = expr();
            expect(',');
            NamedCode b = expr();
            expect(')');
            const std::string e = name + "(" + a.expression + "," + b.expression + ")";
            if (a.additive()) fail("first factor of " + name + " must be linear");
            if (name == "product") {
                if (b.additive()) fail("product of a linear and an additive code is product_additive");
                return linear(product(a.linear(), b.linear()), e);
            }
            return additive(product_additive(a.linear(), to_additive(b)), e);
        }
        if (name == "additive") {
            expect('(');
            NamedCode a = expr();
            expect(')');
            return additive(to_additive(a), "additive(" + a.expression + ")");
        }
        if (name == "dual") {
            expect('(');
            NamedCode a = expr();
            expect(',');
            const InnerProduct kind = parse_inner_product(ident());
            expect(')');
            const std::string e = "dual(" + a.expression + "," + std::string(to_string(kind)) + ")";
            if (kind == InnerProduct::Symplectic) return additive(symplectic_dual(to_additive(a)), e);
            if (a.additive()) fail("additive codes only have a symplectic dual");
            return linear(dual(a.linear(), kind), e);
        }
        if (name == "file") {
            expect('(');
            const std::string path = raw_argument();
            bool is_additive = false;
            if (peek(',')) {
                expect(',');
                const std::string flag = ident();
                if (flag != "additive" && flag != "linear") fail("file flag must be 'additive' or 'linear'");
                is_additive = flag == "additive";
            }
            expect(')');
            const Matrix m = read_matrix_file(path);
            const std::string e = "file(" + path + (is_additive ? ",additive)" : ")");
            if (is_additive) return additive(AdditiveCode(m), e);
            return linear(LinearCode(m), e);
        }
        fail("unknown code '" + name + "'");
    }
};

}  // namespace

NamedCode catalog_lookup(std::string_view expression) { return Parser(expression).parse(); }

}  // namespace qproduct
