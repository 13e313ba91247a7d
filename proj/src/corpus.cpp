#include "alg2/corpus.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include "json.hpp"

#include "alg2/error.hpp"

namespace alg2 {

using nlohmann::json;

// ---------------------------------------------------------------- construction

AlgebraPtr build_algebra(const AlgebraDescriptor& d) {
    if (d.kind == "ground") return ground_field();
    if (d.kind == "matrix") {
        if (d.n == 0) throw ShapeError("matrix algebra needs n >= 1");
        return matrix_algebra(d.n);
    }
    if (d.kind == "product") {
        if (d.factors.empty()) throw ShapeError("product needs at least one factor");
        AlgebraPtr a = build_algebra(d.factors.front());
        for (std::size_t i = 1; i < d.factors.size(); ++i) a = product(a, build_algebra(d.factors[i]));
        return a;
    }
    if (d.kind == "group_z2") return group_algebra_elementary_2(d.n);
    if (d.kind == "truncated") {
        if (d.n == 0) throw ShapeError("truncated polynomial needs n >= 1");
        return truncated_polynomial(d.n);
    }
    if (d.kind == "raw") {
        if (!d.raw) throw ShapeError("raw algebra without structure constants");
        AlgebraPtr a = from_structure_constants(*d.raw);
        if (a->semisimple()) {
            try {
                a = with_certificate(a, wedderburn(*a));
            } catch (const NotSplit&) {
            }
        }
        return a;
    }
    throw ShapeError("unknown algebra kind '" + d.kind + "'");
}

CorpusSpec default_spec() {
    CorpusSpec s;
    const AlgebraDescriptor q{"ground", 0, {}, {}};
    const AlgebraDescriptor m2{"matrix", 2, {}, {}};
    s.algebras = {q,
                  {"product", 0, {q, q}, {}},
                  m2,
                  {"product", 0, {m2, q}, {}},
                  {"group_z2", 1, {}, {}},
                  {"truncated", 2, {}, {}}};
    return s;
}

std::size_t pick(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

namespace {

Scalar small(Rng& rng, long radius) { return Scalar(static_cast<long>(pick(rng, 2 * radius + 1)) - radius); }

}  // namespace

Mat random_unimodular(std::size_t n, Rng& rng) {
    Mat l = Mat::identity(n), u = Mat::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) l(i, j) = small(rng, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) u(i, j) = small(rng, 2);
    return l * u;
}

BimodulePtr block_bimodule(const AlgebraPtr& a, std::size_t i, const AlgebraPtr& b, std::size_t j) {
    const auto& ca = a->opposite()->certificate();
    const auto& cb = b->certificate();
    if (!ca || !cb) throw NoCertificate("block_bimodule needs certified algebras");
    // a right A^op-module is a left A-module
    const auto& u = ca->blocks.at(i);
    const auto& t = cb->blocks.at(j);
    std::vector<Mat> l, r;
    for (const auto& x : u.simple_action) l.push_back(kron(x, Mat::identity(t.degree)));
    for (const auto& y : t.simple_action) r.push_back(kron(Mat::identity(u.degree), y));
    return make_bimodule(a, b, u.degree * t.degree, std::move(l), std::move(r),
                         "U" + std::to_string(i) + "T" + std::to_string(j));
}

Corpus generate_corpus(const CorpusSpec& spec) {
    Corpus c;
    c.policy = spec.bimodules;
    for (const auto& d : spec.algebras) {
        AlgebraPtr a = build_algebra(d);
        c.algebras.push_back({a->label(), d, a, a->semisimple()});
    }
    std::vector<std::size_t> ss;
    for (std::size_t i = 0; i < c.algebras.size(); ++i)
        if (c.algebras[i].semisimple && c.algebras[i].algebra->certificate()) ss.push_back(i);
    if (ss.empty() || spec.bimodules.count == 0) return c;
    if (spec.bimodules.max_dim == 0) throw ShapeError("bimodule max_dim must be positive");

    Rng rng(spec.bimodules.seed);
    for (std::size_t k = 0; k < spec.bimodules.count; ++k) {
        const std::size_t li = ss[pick(rng, ss.size())];
        const std::size_t ri = ss[pick(rng, ss.size())];
        const AlgebraPtr& a = c.algebras[li].algebra;
        const AlgebraPtr& b = c.algebras[ri].algebra;
        const auto& ba = a->certificate()->blocks;
        const auto& bb = b->certificate()->blocks;

        std::vector<std::size_t> mult(ba.size() * bb.size());
        std::size_t dim = 0;
        for (int attempt = 0; attempt < 200 && (dim == 0 || dim > spec.bimodules.max_dim); ++attempt) {
            dim = 0;
            for (std::size_t i = 0; i < ba.size(); ++i)
                for (std::size_t j = 0; j < bb.size(); ++j) {
                    mult[i * bb.size() + j] = pick(rng, spec.bimodules.max_mult + 1);
                    dim += mult[i * bb.size() + j] * ba[i].degree * bb[j].degree;
                }
        }
        if (dim == 0 || dim > spec.bimodules.max_dim) {
            // smallest single block
            std::fill(mult.begin(), mult.end(), 0);
            std::size_t best = 0;
            for (std::size_t t = 1; t < mult.size(); ++t)
                if (ba[t / bb.size()].degree * bb[t % bb.size()].degree <
                    ba[best / bb.size()].degree * bb[best % bb.size()].degree)
                    best = t;
            mult[best] = 1;
            dim = ba[best / bb.size()].degree * bb[best % bb.size()].degree;
            if (dim > spec.bimodules.max_dim)
                throw ShapeError("max_dim " + std::to_string(spec.bimodules.max_dim) + " is below every simple bimodule");
        }
        BimodulePtr m = zero_bimodule(a, b);
        for (std::size_t i = 0; i < ba.size(); ++i)
            for (std::size_t j = 0; j < bb.size(); ++j)
                for (std::size_t r = 0; r < mult[i * bb.size() + j]; ++r) m = direct_sum(m, block_bimodule(a, i, b, j));
        m = change_basis(m, random_unimodular(m->dim, rng));
        const std::string name = "B" + std::to_string(k);
        auto labelled = make_bimodule(a, b, m->dim, m->left_act, m->right_act,
                                      name + ":" + a->label() + "->" + b->label());
        c.bimodules.push_back({name, li, ri, std::move(labelled)});
    }
    return c;
}

// ---------------------------------------------------------------- JSON

namespace {

json scalar_json(const Scalar& x) { return to_string(x); }

Scalar scalar_from(const json& j) {
    if (j.is_string()) return parse_scalar(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    throw ParseError("rational entries must be \"p/q\" strings");
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(scalar_json(x));
    return a;
}

Vec vec_from(const json& j) {
    Vec v;
    for (const auto& x : j) v.push_back(scalar_from(x));
    return v;
}

json mat_json(const Mat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) r.push_back(scalar_json(m(i, k)));
        rows.push_back(std::move(r));
    }
    return rows;
}

Mat mat_from(const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParseError("matrix has wrong row count");
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParseError("matrix has wrong column count");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = scalar_from(j[i][k]);
    }
    return m;
}

json terms_json(const StructureConstants& sc) {
    json t = json::array();
    for (std::size_t i = 0; i < sc.dim; ++i)
        for (std::size_t j = 0; j < sc.dim; ++j)
            for (std::size_t k = 0; k < sc.dim; ++k)
                if (sc.c(i, j, k) != 0) t.push_back(json::array({i, j, k, scalar_json(sc.c(i, j, k))}));
    return t;
}

StructureConstants sc_from(const json& j) {
    StructureConstants sc;
    sc.label = j.value("label", std::string("raw"));
    sc.dim = j.at("dim").get<std::size_t>();
    sc.unit = vec_from(j.at("unit"));
    if (sc.unit.size() != sc.dim) throw ParseError("unit has wrong length");
    sc.mult.assign(sc.dim * sc.dim * sc.dim, Scalar(0));
    for (const auto& t : j.at("terms")) {
        const auto i = t.at(0).get<std::size_t>(), jj = t.at(1).get<std::size_t>(), k = t.at(2).get<std::size_t>();
        if (i >= sc.dim || jj >= sc.dim || k >= sc.dim) throw ParseError("structure constant index out of range");
        sc.c(i, jj, k) = scalar_from(t.at(3));
    }
    return sc;
}

json descriptor_json(const AlgebraDescriptor& d) {
    json j{{"kind", d.kind}};
    if (d.kind == "matrix" || d.kind == "group_z2" || d.kind == "truncated") j["n"] = d.n;
    if (d.kind == "product") {
        j["factors"] = json::array();
        for (const auto& f : d.factors) j["factors"].push_back(descriptor_json(f));
    }
    if (d.kind == "raw" && d.raw) {
        j["label"] = d.raw->label;
        j["dim"] = d.raw->dim;
        j["unit"] = vec_json(d.raw->unit);
        j["terms"] = terms_json(*d.raw);
    }
    return j;
}

AlgebraDescriptor descriptor_from(const json& j) {
    AlgebraDescriptor d;
    d.kind = j.at("kind").get<std::string>();
    if (j.contains("n")) d.n = j.at("n").get<std::size_t>();
    if (j.contains("factors"))
        for (const auto& f : j.at("factors")) d.factors.push_back(descriptor_from(f));
    if (d.kind == "raw") d.raw = sc_from(j);
    return d;
}

json policy_json(const BimodulePolicy& p) {
    return {{"count", p.count}, {"max_dim", p.max_dim}, {"max_mult", p.max_mult}, {"seed", p.seed}};
}

BimodulePolicy policy_from(const json& j) {
    BimodulePolicy p;
    p.count = j.value("count", p.count);
    p.max_dim = j.value("max_dim", p.max_dim);
    p.max_mult = j.value("max_mult", p.max_mult);
    p.seed = j.value("seed", p.seed);
    return p;
}

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

json corpus_json(const Corpus& c) {
    json algs = json::array();
    for (const auto& a : c.algebras) {
        const auto sc = a.algebra->structure_constants();
        algs.push_back({{"name", a.name},
                        {"descriptor", descriptor_json(a.descriptor)},
                        {"dim", sc.dim},
                        {"unit", vec_json(sc.unit)},
                        {"terms", terms_json(sc)},
                        {"semisimple", a.semisimple}});
    }
    json bims = json::array();
    for (const auto& b : c.bimodules) {
        json l = json::array(), r = json::array();
        for (const auto& m : b.module->left_act) l.push_back(mat_json(m));
        for (const auto& m : b.module->right_act) r.push_back(mat_json(m));
        bims.push_back({{"name", b.name},
                        {"label", b.module->label},
                        {"left", b.left},
                        {"right", b.right},
                        {"dim", b.module->dim},
                        {"left_act", std::move(l)},
                        {"right_act", std::move(r)}});
    }
    return {{"format", "alg2-corpus/1"}, {"policy", policy_json(c.policy)}, {"algebras", algs}, {"bimodules", bims}};
}

}  // namespace

CorpusSpec spec_from_json(const std::string& text) {
    const json j = parse(text);
    try {
        CorpusSpec s;
        if (j.contains("algebras")) {
            for (const auto& a : j.at("algebras")) s.algebras.push_back(descriptor_from(a));
        } else {
            s.algebras = default_spec().algebras;
        }
        if (j.contains("bimodules")) s.bimodules = policy_from(j.at("bimodules"));
        return s;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad corpus spec: ") + e.what());
    }
}

std::string spec_to_json(const CorpusSpec& spec) {
    json algs = json::array();
    for (const auto& d : spec.algebras) algs.push_back(descriptor_json(d));
    return json{{"algebras", algs}, {"bimodules", policy_json(spec.bimodules)}}.dump(2);
}

std::string corpus_to_json(const Corpus& c) { return corpus_json(c).dump(1); }

Corpus corpus_from_json(const std::string& text) {
    const json j = parse(text);
    Corpus c;
    try {
        if (j.value("format", std::string()) != "alg2-corpus/1") throw ParseError("unknown corpus format");
        c.policy = policy_from(j.at("policy"));
        for (const auto& a : j.at("algebras")) {
            CorpusAlgebra ca;
            ca.name = a.at("name").get<std::string>();
            ca.descriptor = descriptor_from(a.at("descriptor"));
            try {
                ca.algebra = build_algebra(ca.descriptor);
            } catch (const Error& e) {
                throw ParseError("algebra '" + ca.name + "': " + e.what());
            }
            StructureConstants stored;
            stored.dim = a.at("dim").get<std::size_t>();
            json sc_j = {{"dim", stored.dim}, {"unit", a.at("unit")}, {"terms", a.at("terms")}};
            stored = sc_from(sc_j);
            const auto built = ca.algebra->structure_constants();
            if (stored.dim != built.dim || stored.unit != built.unit || stored.mult != built.mult)
                throw ParseError("algebra '" + ca.name + "': stored structure constants disagree with its descriptor");
            ca.semisimple = ca.algebra->semisimple();
            c.algebras.push_back(std::move(ca));
        }
        for (const auto& b : j.at("bimodules")) {
            CorpusBimodule cb;
            cb.name = b.at("name").get<std::string>();
            cb.left = b.at("left").get<std::size_t>();
            cb.right = b.at("right").get<std::size_t>();
            if (cb.left >= c.algebras.size() || cb.right >= c.algebras.size())
                throw ParseError("bimodule '" + cb.name + "' refers to a missing algebra");
            const AlgebraPtr& a = c.algebras[cb.left].algebra;
            const AlgebraPtr& bb = c.algebras[cb.right].algebra;
            const auto dim = b.at("dim").get<std::size_t>();
            std::vector<Mat> l, r;
            for (const auto& m : b.at("left_act")) l.push_back(mat_from(m, dim, dim));
            for (const auto& m : b.at("right_act")) r.push_back(mat_from(m, dim, dim));
            try {
                cb.module = make_bimodule(a, bb, dim, std::move(l), std::move(r), b.value("label", cb.name));
            } catch (const Error& e) {
                throw ParseError("bimodule '" + cb.name + "': " + e.what());
            }
            c.bimodules.push_back(std::move(cb));
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed corpus: ") + e.what());
    }
    return c;
}

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("SHA-256 failed");
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", md[i]);
        hex += buf;
    }
    return hex;
}

std::string corpus_digest(const Corpus& c) { return sha256_hex(corpus_json(c).dump()); }

// ---------------------------------------------------------------- sampling

std::vector<OneCell> one_cells(const Corpus& c, bool semisimple_only) {
    std::vector<OneCell> out;
    for (const auto& b : c.bimodules) {
        if (semisimple_only && !(c.algebras[b.left].semisimple && c.algebras[b.right].semisimple)) continue;
        out.push_back({b.name, b.left, b.right, b.module});
    }
    for (std::size_t i = 0; i < c.algebras.size(); ++i) {
        if (semisimple_only && !c.algebras[i].semisimple) continue;
        out.push_back({"reg(" + c.algebras[i].name + ")", i, i, regular(c.algebras[i].algebra)});
    }
    return out;
}

std::optional<std::vector<OneCell>> random_chain(const std::vector<OneCell>& cells, std::size_t length, Rng& rng,
                                                 std::size_t max_dim) {
    std::vector<std::size_t> start;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].module->dim <= max_dim) start.push_back(i);
    if (start.empty() || length == 0) return std::nullopt;
    std::vector<OneCell> chain{cells[start[pick(rng, start.size())]]};
    while (chain.size() < length) {
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].left == chain.back().right && cells[i].module->dim <= max_dim) next.push_back(i);
        if (next.empty()) return std::nullopt;
        chain.push_back(cells[next[pick(rng, next.size())]]);
    }
    return chain;
}

Intertwiner random_endomorphism(const BimodulePtr& m, Rng& rng) {
    const Subspace s = intertwiner_space(m, m);
    Mat v(1, s.ambient_dim());
    for (std::size_t t = 0; t < s.dim(); ++t) v += s.basis().row(t) * small(rng, 3);
    return {m, m, Mat::unflatten(v.transpose(), m->dim, m->dim)};
}

std::vector<std::vector<OneCell>> sample_chains(const std::vector<OneCell>& cells, std::size_t length, std::size_t want,
                                                Rng& rng, std::size_t max_dim) {
    std::vector<std::vector<OneCell>> out;
    for (std::size_t tries = 0; out.size() < want && tries < want * 20; ++tries)
        if (auto ch = random_chain(cells, length, rng, max_dim)) out.push_back(std::move(*ch));
    return out;
}

std::string chain_names(const std::vector<OneCell>& chain) {
    std::string s;
    for (const auto& c : chain) s += (s.empty() ? "" : ",") + c.name;
    return s;
}

Intertwiner random_cell(const BimodulePtr& m, Rng& rng) {
    const Mat q = random_unimodular(m->dim, rng);
    const BimodulePtr target = change_basis(m, q);
    const Intertwiner e = random_endomorphism(m, rng);
    return {m, target, q * e.mat};
}

}  // namespace alg2
