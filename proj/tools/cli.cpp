#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qproduct/catalog.hpp"
#include "qproduct/convolutional.hpp"
#include "qproduct/cyclic.hpp"
#include "qproduct/product.hpp"
#include "qproduct/quantum.hpp"

#ifndef QPRODUCT_VERSION
#define QPRODUCT_VERSION "0.0.0"
#endif
#ifndef QPRODUCT_GOLDEN_DIR
#define QPRODUCT_GOLDEN_DIR "goldens"
#endif

namespace qproduct::cli {

using nlohmann::json;

namespace {

// ------------------------------------------------------------------ options

struct Options {
    // global
    std::string out;
    bool pretty = false;
    unsigned threads = 1;
    std::optional<std::uint64_t> budget;

    // code inputs
    std::string code, descriptor, matrix_file;
    bool additive = false;
    std::string a, b;
    std::string kind = "euclidean";

    std::uint32_t q = 0, mu1 = 0, mu2 = 0;
    std::optional<std::size_t> at_least;
    std::string construction;
    bool stabilizer = false;
    bool dual = false;
    Index t = 1, blocks = 2, window = 2;
    std::string goldens = QPRODUCT_GOLDEN_DIR;
    bool update = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --help / --version text, printed as-is
struct InfoRequest {
    std::string text;
};

struct Context {
    json result = json::object();
    json assertions = json::array();
    std::optional<Field> field;

    void assert_that(const std::string& name, bool holds) { assertions.push_back({{"name", name}, {"holds", holds}}); }
};

DistanceOptions distance_options(const Options& o) {
    DistanceOptions d;
    d.threads = std::max(1u, o.threads);
    if (o.budget) {
        d.budget = *o.budget;
    } else if (const char* env = std::getenv("QPRODUCT_BUDGET"); env && *env) {
        try {
            d.budget = std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("QPRODUCT_BUDGET is not an integer: ") + env);
        }
    }
    return d;
}

// --------------------------------------------------------------- json views

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

json field_json(const Field& f) {
    json j{{"q", f->order()},
           {"p", f->characteristic()},
           {"degree", f->degree()},
           {"modulus", f->modulus_string()},
           {"modulus_coefficients", f->modulus()},
           {"primitive_element", f->primitive()}};
    if (f->has_quadratic_subfield()) j["subfield_order"] = f->subfield_order();
    return j;
}

json certificate_json(const DistanceCertificate& c) {
    json j{{"lower", c.lower},     {"lower_method", c.lower_method}, {"upper", c.upper},
           {"upper_method", c.upper_method}, {"exact", c.exact()},  {"degenerate", c.degenerate},
           {"witness", c.witness}};
    // theorem claims stay separate from certified values
    if (c.claimed) j["claimed_uncertified"] = *c.claimed;
    return j;
}

json self_orthogonality_json(const LinearCode& c) {
    json j{{"euclidean", is_self_orthogonal(c, InnerProduct::Euclidean)}};
    if (c.field()->has_quadratic_subfield()) {
        j["hermitian"] = is_self_orthogonal(c, InnerProduct::Hermitian);
        j["symplectic"] = is_self_orthogonal(AdditiveCode::from_linear(c));
    }
    return j;
}

json code_json(const NamedCode& nc) {
    json j{{"expression", nc.expression}, {"field", nc.field()->name()}, {"length", nc.length()}};
    if (nc.additive()) {
        const auto& c = nc.as_additive();
        j["kind"] = "additive";
        j["prime_dimension"] = c.prime_dimension();
        j["size"] = std::to_string(c.field()->characteristic()) + "^" + std::to_string(c.prime_dimension());
        if (c.claimed_distance()) j["claimed_distance_uncertified"] = *c.claimed_distance();
        if (c.field()->has_quadratic_subfield()) j["self_orthogonal"] = {{"symplectic", is_self_orthogonal(c)}};
        j["generator"] = matrix_json(c.generator());
    } else {
        const auto& c = nc.linear();
        j["kind"] = "linear";
        j["dimension"] = c.dimension();
        if (c.claimed_distance()) j["claimed_distance_uncertified"] = *c.claimed_distance();
        j["self_orthogonal"] = self_orthogonality_json(c);
        j["generator"] = matrix_json(c.generator());
    }
    if (nc.cyclic) {
        j["cyclic"] = {{"zeros", nc.cyclic->zeros()},
                       {"generator_polynomial", nc.cyclic->generator_poly()},
                       {"alpha", nc.cyclic->alpha()}};
    }
    return j;
}

json qecc_json(const QeccParams& q) {
    const std::string d = q.distance.exact() ? std::to_string(q.distance.lower) : ">=" + std::to_string(q.distance.lower);
    json j{{"n", q.n},
           {"k", q.k},
           {"alphabet", q.alphabet},
           {"distance", certificate_json(q.distance)},
           {"notation", "QECC(" + std::to_string(q.n) + "," + std::to_string(q.k) + "," + d + "," +
                            std::to_string(q.alphabet) + ")"},
           {"construction", q.construction},
           {"provenance", q.provenance}};
    j["stabilizer_distance"] = q.stabilizer_distance ? json(*q.stabilizer_distance) : json(nullptr);
    return j;
}

std::string rational_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ------------------------------------------------------------ code resolution

NamedCode from_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open descriptor " + path);
    json d;
    try {
        in >> d;
    } catch (const json::exception& e) {
        throw std::invalid_argument("descriptor " + path + ": " + e.what());
    }
    const std::string kind = d.value("kind", "linear");
    if (kind != "linear" && kind != "additive" && kind != "cyclic")
        throw std::invalid_argument("descriptor kind must be linear, additive or cyclic");
    if (d.contains("catalog")) return catalog_lookup(d.at("catalog").get<std::string>());
    if (d.contains("matrix_file")) {
        const auto file = d.at("matrix_file").get<std::string>();
        return catalog_lookup("file(" + file + (kind == "additive" ? ",additive)" : ")"));
    }
    if (d.contains("rows")) {
        const Field f = gf(d.at("q").get<std::uint32_t>());
        const auto rows = d.at("rows").get<std::vector<std::vector<unsigned>>>();
        const Index cols = rows.empty() ? d.value("length", Index(0)) : Index(rows.front().size());
        Matrix m(f, Index(rows.size()), cols);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (Index(rows[r].size()) != cols) throw std::invalid_argument("descriptor rows have different lengths");
            for (std::size_t c = 0; c < rows[r].size(); ++c) {
                if (rows[r][c] >= f->order()) throw std::invalid_argument("descriptor entry outside " + f->name());
                m(Index(r), Index(c)) = Elem(rows[r][c]);
            }
        }
        if (kind == "additive") return {AdditiveCode(m), "inline", std::nullopt};
        return {LinearCode(m), "inline", std::nullopt};
    }
    throw std::invalid_argument("descriptor needs one of: catalog, matrix_file, rows");
}

NamedCode resolve_code(const Options& o) {
    const int given = int(!o.code.empty()) + int(!o.descriptor.empty()) + int(!o.matrix_file.empty());
    if (given != 1) throw UsageError("give exactly one of --code, --descriptor, --matrix-file");
    if (!o.descriptor.empty()) return from_descriptor(o.descriptor);
    if (!o.matrix_file.empty())
        return catalog_lookup("file(" + o.matrix_file + (o.additive ? ",additive)" : ")"));
    NamedCode c = catalog_lookup(o.code);
    if (o.additive && !c.additive())
        return {AdditiveCode::from_linear(c.linear()), "additive(" + c.expression + ")", std::nullopt};
    return c;
}

NamedCode resolve_expr(const std::string& expr, const char* flag) {
    if (expr.empty()) throw UsageError(std::string("missing ") + flag);
    return catalog_lookup(expr);
}

AdditiveCode as_additive(const NamedCode& c) {
    return c.additive() ? c.as_additive() : AdditiveCode::from_linear(c.linear());
}

// ---------------------------------------------------------------- commands

void cmd_field(const Options& o, Context& ctx) {
    if (o.q == 0) throw UsageError("field needs --q");
    const Field f = gf(o.q);
    ctx.field = f;
    ctx.result = field_json(f);
}

void cmd_build(const Options& o, Context& ctx) {
    const NamedCode c = resolve_code(o);
    ctx.field = c.field();
    ctx.result["code"] = code_json(c);
}

void cmd_dual(const Options& o, Context& ctx) {
    const NamedCode c = resolve_code(o);
    ctx.field = c.field();
    const InnerProduct kind = parse_inner_product(o.kind);
    const DistanceOptions dopt = distance_options(o);
    ctx.result["code"] = code_json(c);
    ctx.result["kind"] = std::string(to_string(kind));
    if (kind == InnerProduct::Symplectic) {
        const AdditiveCode a = as_additive(c);
        const NamedCode d{symplectic_dual(a), "dual(" + c.expression + ",symplectic)", std::nullopt};
        ctx.result["dual"] = code_json(d);
        ctx.result["dual"]["distance"] = certificate_json(min_distance(d.as_additive(), dopt));
        ctx.result["self_orthogonal"] = is_self_orthogonal(a);
        return;
    }
    if (c.additive()) throw std::invalid_argument("additive codes only have a symplectic dual");
    const NamedCode d{dual(c.linear(), kind), "dual(" + c.expression + "," + o.kind + ")", std::nullopt};
    ctx.result["dual"] = code_json(d);
    ctx.result["dual"]["distance"] = certificate_json(min_distance(d.linear(), dopt));
    ctx.result["self_orthogonal"] = is_self_orthogonal(c.linear(), kind);
}

void cmd_distance(const Options& o, Context& ctx) {
    const NamedCode c = resolve_code(o);
    ctx.field = c.field();
    const DistanceOptions dopt = distance_options(o);
    json code = code_json(c);
    code.erase("generator");
    ctx.result["code"] = code;
    const DistanceCertificate cert = c.additive() ? min_distance(c.as_additive(), dopt) : min_distance(c.linear(), dopt);
    ctx.result["distance"] = certificate_json(cert);
    if (o.at_least) {
        const bool holds = c.additive() ? distance_at_least(c.as_additive(), *o.at_least)
                                        : distance_at_least(c.linear(), *o.at_least);
        ctx.result["at_least"] = {{"w", *o.at_least}, {"holds", holds}};
        ctx.assert_that("distance >= " + std::to_string(*o.at_least), holds);
    }
}

void cmd_product(const Options& o, Context& ctx) {
    const NamedCode a = resolve_expr(o.a, "--a"), b = resolve_expr(o.b, "--b");
    if (a.additive() || b.additive()) throw std::invalid_argument("product takes linear codes; use product-additive");
    const DistanceOptions dopt = distance_options(o);
    const InnerProduct kind = parse_inner_product(o.kind);
    const LinearCode p = product(a.linear(), b.linear());
    ctx.field = p.field();
    const NamedCode np{p, "product(" + a.expression + "," + b.expression + ")", std::nullopt};
    ctx.result["first"] = code_json(a);
    ctx.result["second"] = code_json(b);
    ctx.result["product"] = code_json(np);
    ctx.result["product"]["distance"] = certificate_json(min_distance(p, dopt));
    ctx.result["kind"] = std::string(to_string(kind));
    if (kind != InnerProduct::Symplectic) {
        const Matrix h = dual_of_product_generator(a.linear(), b.linear(), kind);
        const bool agrees = same_row_space(h, dual(p, kind).generator());
        ctx.result["dual"] = {{"dimension", rank(h)},
                              {"stacked_rows", h.rows()},
                              {"ceiling", dual_distance_ceiling(a.linear(), b.linear(), kind, dopt)},
                              {"matches_kernel", agrees}};
        ctx.assert_that("product dual stack spans the kernel dual", agrees);
    }
}

void cmd_product_additive(const Options& o, Context& ctx) {
    const NamedCode a = resolve_expr(o.a, "--a"), b = resolve_expr(o.b, "--b");
    if (a.additive()) throw std::invalid_argument("first factor of product-additive must be linear over GF(p)");
    const DistanceOptions dopt = distance_options(o);
    const AdditiveCode bb = as_additive(b);
    const AdditiveCode p = product_additive(a.linear(), bb);
    ctx.field = p.field();
    const NamedCode np{p, "product_additive(" + a.expression + "," + b.expression + ")", std::nullopt};
    ctx.result["first"] = code_json(a);
    ctx.result["second"] = code_json({bb, b.additive() ? b.expression : "additive(" + b.expression + ")", std::nullopt});
    ctx.result["product"] = code_json(np);
    ctx.result["product"]["distance"] = certificate_json(min_distance(p, dopt));
    const Matrix h = dual_of_product_generator(a.linear(), bb);
    const bool agrees = AdditiveCode(h) == symplectic_dual(p);
    ctx.result["dual"] = {{"prime_dimension", AdditiveCode(h).prime_dimension()},
                          {"ceiling", dual_distance_ceiling(a.linear(), bb, dopt)},
                          {"matches_kernel", agrees}};
    ctx.assert_that("product dual stack spans the kernel dual", agrees);
}

std::vector<std::string> grid_rows(const ZeroGrid& g) {
    // row j (top-down), column i
    std::vector<std::string> rows;
    for (Index j = 0; j < g.n2; ++j) {
        std::string line;
        for (Index i = 0; i < g.n1; ++i) line += g.at(i, j) ? '0' : '*';
        rows.push_back(line);
    }
    return rows;
}

bool vanishes_on(const ZeroGrid& g, const Matrix& words, const CyclicCode& c1, const CyclicCode& c2) {
    for (Index r = 0; r < words.rows(); ++r) {
        const auto s = spectrum_2d(as_grid(c1.field(), words.row_span(r), g.n1, g.n2), c1.alpha(), c2.alpha());
        for (Index i = 0; i < g.n1; ++i)
            for (Index j = 0; j < g.n2; ++j)
                if (g.at(i, j) && s.values(i, j) != 0) return false;
    }
    return true;
}

void cmd_spectrum(const Options& o, Context& ctx) {
    const NamedCode a = resolve_expr(o.a, "--code1"), b = resolve_expr(o.b, "--code2");
    if (!a.cyclic || !b.cyclic) throw std::invalid_argument("spectrum needs rs(...) or cyclic(...) codes");
    const CyclicCode &c1 = *a.cyclic, &c2 = *b.cyclic;
    if (!c1.spectral() || !c2.spectral()) throw std::invalid_argument("spectrum needs lengths dividing q-1");
    require_same_field(c1.field(), c2.field(), "spectrum");
    ctx.field = c1.field();
    const InnerProduct kind = parse_inner_product(o.kind);
    const ZeroGrid g = o.dual ? dual_forced_zero_grid(c1, c2, kind) : forced_zero_grid(c1, c2);
    ctx.result["first"] = {{"expression", a.expression}, {"zeros", c1.zeros()}, {"alpha", c1.alpha()}};
    ctx.result["second"] = {{"expression", b.expression}, {"zeros", c2.zeros()}, {"alpha", c2.alpha()}};
    ctx.result["dual"] = o.dual;
    if (o.dual) ctx.result["kind"] = std::string(to_string(kind));
    ctx.result["legend"] = "rows j top-down, columns i; 0 = forced zero of the spectrum, * = free";
    ctx.result["grid"] = grid_rows(g);
    std::size_t zeros = 0;
    for (bool z : g.forced) zeros += z;
    ctx.result["forced_zeros"] = zeros;
    if (o.dual) {
        const ZeroRectangle r = largest_zero_rectangle(g);
        const std::size_t bound = bch_rectangle_bound(std::size_t(r.width), std::size_t(r.height));
        ctx.result["rectangle"] = {{"col_start", r.col_start}, {"width", r.width},
                                   {"row_start", r.row_start}, {"height", r.height}};
        ctx.result["distance_lower_bound"] = bound;
    }
    if (Index(g.n1) * g.n2 <= 4096) {
        const LinearCode p = product(c1.code(), c2.code());
        const Matrix words = o.dual ? dual(p, kind).generator() : p.generator();
        const bool ok = vanishes_on(g, words, c1, c2);
        ctx.result["generators_vanish_on_grid"] = ok;
        ctx.assert_that("generator spectra vanish on the forced zeros", ok);
    }
}

void cmd_qecc(const Options& o, Context& ctx) {
    QeccOptions qo;
    qo.distance = distance_options(o);
    qo.stabilizer_distance = o.stabilizer;
    if (o.construction == "rs-product") {
        if (o.q == 0 || o.mu1 == 0 || o.mu2 == 0) throw UsageError("rs-product needs --q, --mu1, --mu2");
        ctx.field = gf(o.q);
        const QeccParams q = rs_prod_qecc(o.q, o.mu1, o.mu2, qo);
        const RsProductParams p = rs_product_params(o.q, o.q - o.mu1, o.q - o.mu2);
        const RateComparison r = rate_comparison(o.q, o.mu1, o.mu2);
        ctx.result["qecc"] = qecc_json(q);
        std::string matches = "unresolved";
        if (q.distance.exact()) {
            if (q.distance.lower == p.dual_distance_expected) matches = "1+min(mu1,mu2)";
            else if (q.distance.lower == p.dual_distance_stated) matches = "min(mu1,mu2)";
            else matches = "neither";
        }
        ctx.result["rs_product"] = {{"q", p.q},
                                    {"delta1", p.delta1},
                                    {"delta2", p.delta2},
                                    {"mu1", p.mu1},
                                    {"mu2", p.mu2},
                                    {"length", p.length},
                                    {"dimension", p.dimension},
                                    {"distance_uncertified", p.distance},
                                    {"dual_dimension", p.dual_dimension},
                                    {"dual_distance_min_mu", p.dual_distance_stated},
                                    {"dual_distance_one_plus_min_mu", p.dual_distance_expected},
                                    {"certified_dual_distance_matches", matches}};
        ctx.result["rates"] = {{"product_rate", rational_string(r.product_rate)},
                               {"rates_product", rational_string(r.rates_product)},
                               {"product_wins", r.product_wins},
                               {"condition_mu_equal_below_two_thirds", r.claim_condition}};
        ctx.assert_that("k matches the predicted dual dimension", q.k == p.length - 2 * p.dimension);
        return;
    }
    const NamedCode c = resolve_code(o);
    ctx.field = c.field();
    ctx.result["code"] = code_json(c);
    QeccParams q;
    if (o.construction == "css") {
        if (c.additive()) throw std::invalid_argument("css needs a linear code");
        q = css_qecc(c.linear(), qo);
    } else if (o.construction == "hermitian") {
        if (c.additive()) throw std::invalid_argument("hermitian needs a linear code");
        q = hermitian_qecc(c.linear(), qo);
    } else if (o.construction == "symplectic") {
        q = symplectic_qecc(as_additive(c), qo);
    } else {
        throw UsageError("--construction must be css, hermitian, symplectic or rs-product");
    }
    ctx.result["qecc"] = qecc_json(q);
}

ConvStabilizer conv_stabilizer(const Options& o, json& out) {
    const NamedCode a = resolve_expr(o.a, "--a"), b = resolve_expr(o.b, "--b");
    if (a.additive()) throw std::invalid_argument("first factor must be linear");
    out["first"] = {{"expression", a.expression}, {"length", a.length()}};
    out["second"] = {{"expression", b.expression}, {"length", b.length()}};
    out["t"] = o.t;
    if (b.additive()) return conv_from_product(a.linear(), b.as_additive(), o.t);
    return conv_from_product(a.linear(), b.linear(), o.t, parse_inner_product(o.kind));
}

json stabilizer_json(const ConvStabilizer& s) {
    return {{"rows", s.rows()},
            {"frame", s.frame()},
            {"overlap", s.overlap()},
            {"block_columns", s.block().cols()},
            {"kind", std::string(to_string(s.kind()))},
            {"field", s.field()->name()},
            {"stabilizers_per_frame", s.stabilizers_per_frame()},
            {"logical_per_frame", s.logical_per_frame()},
            // (n, k, m) with n = frame, k = n - r, m = overlap
            {"frame_parameters", {{"n", s.frame()}, {"k", s.frame() - s.rows()}, {"m", s.overlap()}}}};
}

void cmd_conv_build(const Options& o, Context& ctx) {
    const ConvStabilizer s = conv_stabilizer(o, ctx.result);
    ctx.field = s.field();
    ctx.result["stabilizer"] = stabilizer_json(s);
    ctx.result["block"] = matrix_json(s.block());
}

void cmd_conv_check(const Options& o, Context& ctx) {
    const ConvStabilizer s = conv_stabilizer(o, ctx.result);
    ctx.field = s.field();
    ctx.result["stabilizer"] = stabilizer_json(s);
    const bool band = check_band_self_orthogonal(s);
    const bool fact = verify_band_factorization(s, std::max<Index>(o.blocks, 1));
    const Matrix w = band_window(s, o.window);
    ctx.result["band_self_orthogonal"] = band;
    ctx.result["factorization"] = {{"blocks", std::max<Index>(o.blocks, 1)}, {"holds", fact}};
    ctx.result["window"] = {{"blocks", o.window}, {"rows", w.rows()}, {"cols", w.cols()},
                            {"rank", s.additive() ? rank(expand_to_prime(w)) : rank(w)}};
    const auto bound = free_distance_upper_bound(s, o.window, distance_options(o));
    ctx.result["free_distance_upper_bound"] = bound ? certificate_json(*bound) : json(nullptr);
    ctx.assert_that("band self-orthogonal", band);
    ctx.assert_that("window factors as a Kronecker product", fact);
}

void cmd_conv_tailbite(const Options& o, Context& ctx) {
    const ConvStabilizer s = conv_stabilizer(o, ctx.result);
    ctx.field = s.field();
    ctx.result["stabilizer"] = stabilizer_json(s);
    ctx.result["blocks"] = o.blocks;
    const TailBitingCode tb = tail_biting(s, o.blocks);
    ctx.result["tail_biting"] = {{"length", tb.generator.cols()},
                                 {"rows", tb.generator.rows()},
                                 {"rank", tb.rank},
                                 {"full_rank", tb.full_rank},
                                 {"self_orthogonal", tb.self_orthogonal}};
    ctx.assert_that("tail-biting code self-orthogonal", tb.self_orthogonal);
    if (!tb.self_orthogonal) return;
    QeccOptions qo;
    qo.distance = distance_options(o);
    ctx.result["qecc"] = qecc_json(tail_biting_qecc(s, o.blocks, qo));
}

void cmd_reproduce(const Options& o, Context& ctx) {
    json cases = json::array();
    std::size_t diffs = 0;
    for (const auto& gc : golden_cases()) {
        json entry{{"name", gc.name}};
        const std::string path = o.goldens + "/" + gc.name + ".json";
        try {
            const json actual = report(gc.args);
            if (o.update) {
                std::ofstream f(path);
                if (!f) throw std::runtime_error("cannot write " + path);
                f << serialize(actual);
                entry["status"] = "written";
            } else {
                std::ifstream f(path);
                if (!f) {
                    entry["status"] = "missing";
                    ++diffs;
                } else {
                    json expected;
                    try {
                        f >> expected;
                    } catch (const json::exception&) {
                        expected = "unparseable golden";
                    }
                    const auto d = json_diff(expected, actual);
                    entry["status"] = d.empty() ? "match" : "diff";
                    if (!d.empty()) {
                        entry["paths"] = d;
                        ++diffs;
                    }
                }
            }
        } catch (const std::exception& e) {
            entry["status"] = "error";
            entry["message"] = e.what();
            ++diffs;
        }
        cases.push_back(std::move(entry));
    }
    ctx.result["goldens"] = o.goldens;
    ctx.result["cases"] = cases;
    ctx.result["diff_count"] = diffs;
    ctx.assert_that("all goldens match", diffs == 0);
}

// ------------------------------------------------------------------ parsing

json build_report(const std::vector<std::string>& args, Options& opts) {
    CLI::App app{"qproduct: product codes over finite fields, their duals and derived quantum codes"};
    app.name("qproduct");
    app.set_version_flag("--version", QPRODUCT_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    Options& o = opts;
    app.add_option("--out", o.out, "write the report to a file");
    app.add_flag("--pretty", o.pretty, "human-readable output");
    app.add_option("--threads", o.threads, "enumeration threads (results do not depend on it)");
    app.add_option("--budget", o.budget, "exhaustive enumeration budget in codewords (env QPRODUCT_BUDGET)");

    auto code_inputs = [&](CLI::App* s) {
        s->add_option("--code", o.code, "catalog expression");
        s->add_option("--descriptor", o.descriptor, "JSON code descriptor");
        s->add_option("--matrix-file", o.matrix_file, "matrix text file 'q r c' + rows");
        s->add_flag("--additive", o.additive, "treat the code as additive (GF(p)-span)");
    };

    std::string command;
    auto* field = app.add_subcommand("field", "field parameters");
    field->add_option("--q", o.q, "field order")->required();
    auto* build = app.add_subcommand("build", "construct a code");
    code_inputs(build);
    auto* dualc = app.add_subcommand("dual", "dual code");
    code_inputs(dualc);
    dualc->add_option("--kind", o.kind, "euclidean | hermitian | symplectic");
    auto* dist = app.add_subcommand("distance", "certified minimum distance");
    code_inputs(dist);
    dist->add_option("--at-least", o.at_least, "assert d >= w");
    auto* prod = app.add_subcommand("product", "Kronecker product of two linear codes");
    prod->add_option("--a", o.a, "first factor")->required();
    prod->add_option("--b", o.b, "second factor")->required();
    prod->add_option("--kind", o.kind, "inner product for the dual");
    auto* proda = app.add_subcommand("product-additive", "GF(p) code times an additive code");
    proda->add_option("--a", o.a, "GF(p) factor")->required();
    proda->add_option("--b", o.b, "additive factor (a linear code is converted)")->required();
    auto* spec = app.add_subcommand("spectrum", "2-D spectral zero pattern of a product of cyclic codes");
    spec->add_option("--code1", o.a, "cyclic code along i")->required();
    spec->add_option("--code2", o.b, "cyclic code along j")->required();
    spec->add_flag("--dual", o.dual, "pattern of the dual product");
    spec->add_option("--kind", o.kind, "euclidean | hermitian");
    auto* qecc = app.add_subcommand("qecc", "quantum code from a self-orthogonal code");
    code_inputs(qecc);
    qecc->add_option("--construction", o.construction, "css | hermitian | symplectic | rs-product")
        ->required()
        ->check(CLI::IsMember({"css", "hermitian", "symplectic", "rs-product"}));
    qecc->add_option("--q", o.q, "rs-product field order");
    qecc->add_option("--mu1", o.mu1, "rs-product mu1");
    qecc->add_option("--mu2", o.mu2, "rs-product mu2");
    qecc->add_flag("--stabilizer-distance", o.stabilizer, "also enumerate min weight of dual minus code");
    auto* conv = app.add_subcommand("conv", "convolutional band from a product");
    conv->require_subcommand(1);
    auto conv_inputs = [&](CLI::App* s) {
        s->add_option("--a", o.a, "first factor C1")->required();
        s->add_option("--b", o.b, "self-orthogonal second factor C2")->required();
        s->add_option("--t", o.t, "overlap in units of n2");
        s->add_option("--kind", o.kind, "euclidean | hermitian (additive C2 implies symplectic)");
    };
    auto* cbuild = conv->add_subcommand("build", "block and band parameters");
    conv_inputs(cbuild);
    auto* ccheck = conv->add_subcommand("check", "band orthogonality, factorization, free-distance bound");
    conv_inputs(ccheck);
    ccheck->add_option("--window", o.window, "window blocks for the free-distance bound");
    ccheck->add_option("--blocks", o.blocks, "window blocks for the factorization check");
    auto* ctail = conv->add_subcommand("tailbite", "tail-biting block code and its QECC");
    conv_inputs(ctail);
    ctail->add_option("--blocks", o.blocks, "number of blocks N");
    auto* repro = app.add_subcommand("reproduce-paper", "run every golden pipeline and diff");
    repro->add_option("--goldens", o.goldens, "golden report directory");
    repro->add_flag("--update", o.update, "rewrite the goldens instead of diffing");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);  // CLI11 takes reversed argv vectors
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() != 0) throw;
        std::ostringstream info, err;
        app.exit(e, info, err);
        throw InfoRequest{info.str() + err.str()};
    }

    Context ctx;
    if (field->parsed()) command = "field", cmd_field(o, ctx);
    else if (build->parsed()) command = "build", cmd_build(o, ctx);
    else if (dualc->parsed()) command = "dual", cmd_dual(o, ctx);
    else if (dist->parsed()) command = "distance", cmd_distance(o, ctx);
    else if (prod->parsed()) command = "product", cmd_product(o, ctx);
    else if (proda->parsed()) command = "product-additive", cmd_product_additive(o, ctx);
    else if (spec->parsed()) command = "spectrum", cmd_spectrum(o, ctx);
    else if (qecc->parsed()) command = "qecc", cmd_qecc(o, ctx);
    else if (cbuild->parsed()) command = "conv build", cmd_conv_build(o, ctx);
    else if (ccheck->parsed()) command = "conv check", cmd_conv_check(o, ctx);
    else if (ctail->parsed()) command = "conv tailbite", cmd_conv_tailbite(o, ctx);
    else if (repro->parsed()) command = "reproduce-paper", cmd_reproduce(o, ctx);
    else throw UsageError("no command");

    // invocation echo without output-only flags, so reports do not depend on them
    std::vector<std::string> echo;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& s = args[i];
        if (s == "--pretty") continue;
        if (s == "--out" || s == "--threads") {
            ++i;
            continue;
        }
        if (s.rfind("--out=", 0) == 0 || s.rfind("--threads=", 0) == 0) continue;
        echo.push_back(s);
    }
    bool ok = true;
    for (const auto& a : ctx.assertions) ok = ok && a.at("holds").get<bool>();
    json r{{"tool", {{"name", "qproduct"}, {"version", QPRODUCT_VERSION}}},
           {"command", command},
           {"invocation", echo},
           {"result", ctx.result},
           {"assertions", ctx.assertions},
           {"ok", ok}};
    if (ctx.field) r["field"] = field_json(*ctx.field);
    return r;
}

bool is_scalar_array(const json& j) {
    if (!j.is_array()) return false;
    for (const auto& e : j)
        if (e.is_structured()) return false;
    return true;
}

void pretty(const json& j, const std::string& indent, std::ostringstream& os) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string key = j.is_object() ? it.key() : "-";
        const json& v = *it;
        if (v.is_object() && v.contains("lower_method")) {
            os << indent << key << ": d in [" << v["lower"] << "," << v["upper"] << "] certified by "
               << v["lower_method"].get<std::string>() << " / " << v["upper_method"].get<std::string>();
            if (v.contains("claimed_uncertified")) os << "; claimed (uncertified) " << v["claimed_uncertified"];
            os << '\n';
        } else if (v.is_object()) {
            os << indent << key << ":\n";
            pretty(v, indent + "  ", os);
        } else if (v.is_array() && v.empty()) {
            os << indent << key << ": []\n";
        } else if (is_scalar_array(v)) {
            os << indent << key << ": ";
            bool strings = !v.empty() && v.front().is_string();
            if (strings) {
                os << '\n';
                for (const auto& e : v) os << indent << "  " << e.get<std::string>() << '\n';
            } else {
                for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
                os << '\n';
            }
        } else if (v.is_array() && !v.empty() && is_scalar_array(v.front())) {
            os << indent << key << ":\n";
            for (const auto& row : v) {
                os << indent << "  ";
                for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << row[i];
                os << '\n';
            }
        } else if (v.is_array()) {
            os << indent << key << ":\n";
            pretty(v, indent + "  ", os);
        } else {
            os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    }
}

void diff_into(const json& e, const json& a, const std::string& path, std::vector<std::string>& out) {
    // parsed goldens hold unsigned integers where reports hold signed ones
    if (e.is_number() && a.is_number()) {
        if (e != a) out.push_back(path);
        return;
    }
    if (e.type() != a.type()) {
        out.push_back(path);
        return;
    }
    if (e.is_object()) {
        for (auto it = e.begin(); it != e.end(); ++it) {
            if (!a.contains(it.key())) out.push_back(path + "/" + it.key());
            else diff_into(*it, a.at(it.key()), path + "/" + it.key(), out);
        }
        for (auto it = a.begin(); it != a.end(); ++it)
            if (!e.contains(it.key())) out.push_back(path + "/" + it.key());
        return;
    }
    if (e.is_array()) {
        if (e.size() != a.size()) {
            out.push_back(path);
            return;
        }
        for (std::size_t i = 0; i < e.size(); ++i) diff_into(e[i], a[i], path + "/" + std::to_string(i), out);
        return;
    }
    if (e != a) out.push_back(path);
}

}  // namespace

std::string serialize(const json& j) { return j.dump(2) + "\n"; }

std::string render_pretty(const json& j) {
    std::ostringstream os;
    pretty(j, "", os);
    return os.str();
}

std::vector<std::string> json_diff(const json& expected, const json& actual) {
    std::vector<std::string> out;
    diff_into(expected, actual, "", out);
    return out;
}

json report(const std::vector<std::string>& args) {
    Options o;
    return build_report(args, o);
}

int run(const std::vector<std::string>& args, std::ostream& out) {
    Options o;
    json r;
    int code = 0;
    try {
        r = build_report(args, o);
        code = r.at("ok").get<bool>() ? 0 : 1;
    } catch (const InfoRequest& i) {
        out << i.text;
        return 0;
    } catch (const CLI::ParseError& e) {
        r = {{"error", {{"type", "usage"}, {"message", e.what()}}}};
        code = 2;
    } catch (const UsageError& e) {
        r = {{"error", {{"type", "usage"}, {"message", e.what()}}}};
        code = 2;
    } catch (const std::invalid_argument& e) {
        r = {{"error", {{"type", "invalid_argument"}, {"message", e.what()}}}};
        code = 1;
    } catch (const std::exception& e) {
        r = {{"error", {{"type", "runtime"}, {"message", e.what()}}}};
        code = 1;
    }
    if (r.contains("error")) {
        r["tool"] = {{"name", "qproduct"}, {"version", QPRODUCT_VERSION}};
        r["invocation"] = args;
    }
    const std::string text = o.pretty ? render_pretty(r) : serialize(r);
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) {
            out << serialize(json{{"error", {{"type", "io"}, {"message", "cannot write " + o.out}}}});
            return 1;
        }
        f << text;
    } else {
        out << text;
    }
    return code;
}

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {"field-gf4", {"field", "--q", "4"}},
        {"field-gf8", {"field", "--q", "8"}},
        {"hamming-dual-7-distance", {"distance", "--code", "hamming_dual(3,2)"}},
        {"hamming-dual-7-dual", {"dual", "--code", "hamming_dual(3,2)", "--kind", "euclidean"}},
        {"qecc-7-css", {"qecc", "--construction", "css", "--code", "hamming_dual(3,2)"}},
        {"product-49", {"product", "--a", "hamming_dual(3,2)", "--b", "hamming_dual(3,2)"}},
        {"qecc-49-css", {"qecc", "--construction", "css", "--code", "product(hamming_dual(3,2),hamming_dual(3,2))"}},
        {"qecc-5-hermitian", {"qecc", "--construction", "hermitian", "--code", "quaternary_hamming_dual_5"}},
        {"qecc-25-hermitian",
         {"qecc", "--construction", "hermitian", "--code", "product(quaternary_hamming_dual_5,quaternary_hamming_dual_5)"}},
        {"additive-15", {"product-additive", "--a", "simplex(2,2)", "--b", "quaternary_hamming_dual_5"}},
        {"qecc-15-symplectic",
         {"qecc", "--construction", "symplectic", "--code", "product_additive(simplex(2,2),quaternary_hamming_dual_5)"}},
        {"rs-product-5-1-1", {"qecc", "--construction", "rs-product", "--q", "5", "--mu1", "1", "--mu2", "1"}},
        {"rs-product-8-2-2", {"qecc", "--construction", "rs-product", "--q", "8", "--mu1", "2", "--mu2", "2"}},
        {"spectrum-rs8", {"spectrum", "--code1", "rs(8,6)", "--code2", "rs(8,6)"}},
        {"spectrum-rs8-dual", {"spectrum", "--code1", "rs(8,6)", "--code2", "rs(8,6)", "--dual"}},
        {"conv-check-49-t1",
         {"conv", "check", "--a", "hamming_dual(3,2)", "--b", "hamming_dual(3,2)", "--t", "1", "--window", "2"}},
        {"conv-build-49-t2", {"conv", "build", "--a", "hamming_dual(3,2)", "--b", "hamming_dual(3,2)", "--t", "2"}},
        {"conv-tailbite-49-N2",
         {"conv", "tailbite", "--a", "hamming_dual(3,2)", "--b", "hamming_dual(3,2)", "--t", "1", "--blocks", "2"}},
        {"conv-tailbite-49-N3",
         {"conv", "tailbite", "--a", "hamming_dual(3,2)", "--b", "hamming_dual(3,2)", "--t", "1", "--blocks", "3"}},
        {"conv-check-additive-10",
         {"conv", "check", "--a", "simplex(2,2)", "--b", "additive(quaternary_hamming_dual_5)", "--t", "1"}},
    };
    return cases;
}

}  // namespace qproduct::cli
