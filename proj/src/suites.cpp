#include "alg2/suites.hpp"

#include <chrono>
#include <ctime>

#include "alg2/duality.hpp"
#include "alg2/error.hpp"
#include "alg2/kv.hpp"
#include "alg2/morita.hpp"
#include "json.hpp"

namespace alg2 {

using json = nlohmann::ordered_json;

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"bicategory", "appendixA", "duality", "rep", "morita", "dualobjects"};
    return names;
}

bool is_suite(const std::string& name) {
    if (name == "all") return true;
    for (const auto& n : suite_names())
        if (n == name) return true;
    return false;
}

std::vector<std::string> suite_cells(const std::string& suite) {
    if (suite == "bicategory") return {"associator", "left_unitor", "right_unitor"};
    if (suite == "appendixA") return {"braid", "adjoint", "psi", "tensor_hom"};
    if (suite == "duality") return {"chi", "upsilon", "zeta", "y"};
    if (suite == "rep") return {"i", "epsilon", "theta"};
    if (suite == "morita") return {"unit", "counit"};
    if (suite == "dualobjects") return {"zigzag_iso"};
    return {};
}

namespace {

constexpr std::size_t kChains = 50;
constexpr std::size_t kInstances = 100;

std::size_t dim_product(const std::vector<OneCell>& ch) {
    std::size_t p = 1;
    for (const auto& c : ch) p *= std::max<std::size_t>(1, c.module->dim);
    return p;
}

/// Chains whose Kronecker working space stays within max_dim^2.
std::vector<std::vector<OneCell>> bounded_chains(const std::vector<OneCell>& cells, std::size_t length,
                                                 std::size_t want, Rng& rng, std::size_t max_dim) {
    std::vector<std::vector<OneCell>> out;
    for (std::size_t tries = 0; out.size() < want && tries < want * 100; ++tries) {
        auto ch = random_chain(cells, length, rng, max_dim);
        if (ch && dim_product(*ch) <= max_dim * max_dim) out.push_back(std::move(*ch));
    }
    return out;
}

std::vector<Check> shortfall(const char* id, std::size_t got, std::size_t want) {
    if (got >= want) return {};
    return {Check{id, "enough random instances", "sampling", Status::Fail,
                   "only " + std::to_string(got) + " of " + std::to_string(want) + " instances found", {got}}};
}

std::vector<Check> concat(std::vector<Check> a, std::vector<Check> b) {
    a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    return a;
}

/// The map hom(M, N) -> hom(M, N') given by postcomposition with h: N -> N', in hom bases.
Mat postcompose(const HomSpace& from, const HomSpace& to, const Mat& h) {
    Mat out(to.space.dim(), from.space.dim());
    for (std::size_t t = 0; t < from.space.dim(); ++t) {
        const Mat c = to.coords(h * from.element(t));
        for (std::size_t r = 0; r < c.rows(); ++r) out(r, t) = c(r, 0);
    }
    return out;
}

// ---------------------------------------------------------------- bicategory

struct CoherenceCells {
    Tamper tamper;
    Intertwiner alpha(const BimodulePtr& m, const BimodulePtr& n, const BimodulePtr& p) const {
        return tamper.apply("associator", associator(m, n, p));
    }
    Intertwiner lambda(const BimodulePtr& m) const { return tamper.apply("left_unitor", left_unitor(m)); }
    Intertwiner rho(const BimodulePtr& m) const { return tamper.apply("right_unitor", right_unitor(m)); }
};

std::vector<Check> pentagon(const std::vector<OneCell>& ch, const CoherenceCells& k) {
    const std::string inst = chain_names(ch);
    const BimodulePtr &m = ch[0].module, &n = ch[1].module, &p = ch[2].module, &q = ch[3].module;
    const BimodulePtr mn = tensor_over(m, n).module;
    const BimodulePtr np = tensor_over(n, p).module;
    const BimodulePtr pq = tensor_over(p, q).module;
    const Intertwiner lhs = compose(k.alpha(m, n, pq), k.alpha(mn, p, q));
    const Intertwiner rhs =
        compose(hcomp2(identity(m), k.alpha(n, p, q)), compose(k.alpha(m, np, q), hcomp2(k.alpha(m, n, p), identity(q))));
    std::vector<Check> out{equality_check("pentagon", "associators satisfy the pentagon", inst, lhs.mat, rhs.mat)};
    out.push_back(iso_check("associator.iso", "associator is an invertible intertwiner", inst, k.alpha(m, n, p)));
    return out;
}

std::vector<Check> triangle(const std::vector<OneCell>& ch, const CoherenceCells& k) {
    const std::string inst = chain_names(ch);
    const BimodulePtr &m = ch[0].module, &n = ch[1].module;
    const BimodulePtr b = regular(m->right);
    const Intertwiner lhs = compose(hcomp2(identity(m), k.lambda(n)), k.alpha(m, b, n));
    const Intertwiner rhs = hcomp2(k.rho(m), identity(n));
    std::vector<Check> out{equality_check("triangle", "unitors and associator satisfy the triangle", inst, lhs.mat, rhs.mat)};
    out.push_back(iso_check("left_unitor.iso", "left unitor is an invertible intertwiner", ch[1].name, k.lambda(n)));
    out.push_back(iso_check("right_unitor.iso", "right unitor is an invertible intertwiner", ch[0].name, k.rho(m)));
    return out;
}

std::vector<Check> interchange(const std::vector<OneCell>& ch, std::uint64_t seed) {
    Rng r(seed);
    const Intertwiner f = random_cell(ch[0].module, r), g = random_cell(ch[1].module, r);
    const Intertwiner f2 = random_cell(f.target, r), g2 = random_cell(g.target, r);
    const Mat lhs = hcomp2(compose(f2, f), compose(g2, g)).mat;
    const Mat rhs = compose(hcomp2(f2, g2), hcomp2(f, g)).mat;
    return {equality_check("interchange", "horizontal and vertical composition interchange", chain_names(ch), lhs, rhs)};
}

// ---------------------------------------------------------------- canonical isomorphisms

Check braid_naturality(const Intertwiner& f, const Intertwiner& g, const Tamper& t, const std::string& inst) {
    const Intertwiner b = t.apply("braid", braid_iso(f.source, g.source));
    const Intertwiner b2 = t.apply("braid", braid_iso(f.target, g.target));
    const TensorProduct s = tensor_over(as_right_over_op(g.source), as_right_over_op(f.source));
    const TensorProduct s2 = tensor_over(as_right_over_op(g.target), as_right_over_op(f.target));
    const Mat swapped = s2.proj * kron(g.mat, f.mat) * s.sect;
    return equality_check("braid.naturality", "braiding natural in both arguments", inst,
                          b2.mat * hcomp2(f, g).mat, swapped * b.mat);
}

Check adjoint_naturality(const BimodulePtr& x, const BimodulePtr& m, const Intertwiner& h, const Tamper& t,
                         const std::string& inst) {
    const BimodulePtr &y = h.source, &y2 = h.target;
    const Intertwiner a = t.apply("adjoint", adjoint_iso(x, m, y));
    const Intertwiner a2 = t.apply("adjoint", adjoint_iso(x, m, y2));
    const BimodulePtr xm = tensor_over(x, m).module;
    const Mat p1 = postcompose(hom_right(xm, y), hom_right(xm, y2), h.mat);
    const HomSpace h1 = hom_right(m, y), h1b = hom_right(m, y2);
    const Mat inner = postcompose(h1, h1b, h.mat);
    const Mat p2 = postcompose(hom_right(x, h1.module), hom_right(x, h1b.module), inner);
    return equality_check("adjoint.naturality", "adjoint isomorphism natural in the target", inst, a2.mat * p1, p2 * a.mat);
}

Check psi_naturality(const Intertwiner& f, const Tamper& t, const std::string& inst) {
    const Intertwiner p = t.apply("psi", double_dual_iso(f.source));
    const Intertwiner p2 = t.apply("psi", double_dual_iso(f.target));
    const Intertwiner ff = intertwiner_adjoint(intertwiner_adjoint(f));
    return equality_check("psi.naturality", "double dual isomorphism natural in P", inst, p2.mat * f.mat, ff.mat * p.mat);
}

Check tensor_hom_naturality(const Intertwiner& h, const BimodulePtr& p, const Tamper& t, const std::string& inst) {
    const Intertwiner a = t.apply("tensor_hom", tensor_hom_iso(h.source, p));
    const Intertwiner a2 = t.apply("tensor_hom", tensor_hom_iso(h.target, p));
    const BimodulePtr hp = hom_right(p, regular(p->right)).module;
    const Mat lhs = a2.mat * hcomp2(h, identity(hp)).mat;
    const Mat rhs = postcompose(hom_right(p, h.source), hom_right(p, h.target), h.mat) * a.mat;
    return equality_check("tensor_hom.naturality", "tensor-hom isomorphism natural in X", inst, lhs, rhs);
}

/// A random cell from `cells` whose right algebra is `right`, within the work bound.
std::optional<OneCell> pick_with_right(const std::vector<OneCell>& cells, std::size_t right, std::size_t bound,
                                       Rng& rng) {
    std::vector<std::size_t> ok;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].right == right && cells[i].module->dim <= bound) ok.push_back(i);
    if (ok.empty()) return std::nullopt;
    return cells[ok[pick(rng, ok.size())]];
}

// ---------------------------------------------------------------- morita

std::vector<Check> morita_instance(const BimodulePtr& m, const std::string& inst, const Tamper& t,
                                   std::optional<bool> expected) {
    std::vector<Check> out;
    const EquivalenceResult eq = is_equivalence(m);
    AdjunctionData adj = *eq.witness;
    adj.unit = t.apply("unit", adj.unit);
    adj.counit = t.apply("counit", adj.counit);
    const bool unit_ok = is_intertwiner(adj.unit), counit_ok = is_intertwiner(adj.counit);
    out.push_back(bool_check("adjunction.cells", "unit and counit are intertwiners", inst, unit_ok && counit_ok,
                            "unit or counit fails to intertwine", {adj.unit.mat.rows(), adj.counit.mat.rows()}));
    const TriangleCheck tri = triangle_identities(adj);
    out.push_back(bool_check("adjunction.triangles", "unit and counit satisfy the triangle identities", inst, tri.ok(),
                             "a triangle composite is not the identity", {tri.first.rows(), tri.second.rows()}));
    const bool equiv = is_invertible(adj.unit) && is_invertible(adj.counit);
    if (expected)
        out.push_back(bool_check("equivalence.expected", "equivalence detection on a known bimodule", inst,
                                 equiv == *expected, equiv ? "unexpectedly an equivalence" : "not detected",
                                 {m->dim}));
    const RepOneCell r = rep_1(m);
    out.push_back(bool_check("equivalence.rep", "equivalences go to permutation matrices under Rep", inst,
                             equiv == is_permutation(r.functor),
                             equiv ? "equivalence without a permutation matrix" : "permutation without an equivalence",
                             {r.functor.target.rank, r.functor.source.rank}));
    if (equiv) {
        const EquivalenceResult back = is_equivalence(adj.g);
        out.push_back(bool_check("equivalence.adjoint", "the adjoint of an equivalence is an equivalence", inst,
                                 back.equivalence, "adjoint is not an equivalence", {adj.g->dim}));
    }
    return out;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

std::vector<Check> verify_bicategory(const Corpus& c, const VerifyOptions& opts) {
    const CoherenceCells k{opts.tamper};
    const auto cs = one_cells(c, false);
    Rng rng(opts.seed ^ 0x626963617447ULL);
    std::vector<Task> tasks;
    const auto quads = bounded_chains(cs, 4, kChains, rng, opts.max_dim);
    for (const auto& ch : quads)
        tasks.push_back({"pentagon", "associators satisfy the pentagon", chain_names(ch), [ch, k] { return pentagon(ch, k); }});
    const auto pairs = bounded_chains(cs, 2, kChains, rng, opts.max_dim);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto ch = pairs[i];
        const std::uint64_t seed = opts.seed * 6000011ULL + i;
        tasks.push_back({"triangle", "unitors and associator satisfy the triangle", chain_names(ch),
                         [ch, k, seed] { return concat(triangle(ch, k), interchange(ch, seed)); }});
    }
    return concat(concat(shortfall("pentagon.sampling", quads.size(), kChains),
                         shortfall("triangle.sampling", pairs.size(), kChains)),
                  run_tasks(tasks, opts.jobs));
}

std::vector<Check> verify_appendix_a(const Corpus& c, const VerifyOptions& opts) {
    const Tamper t = opts.tamper;
    const auto all = one_cells(c, false);
    const auto ss = one_cells(c, true);
    const std::size_t bound = opts.max_dim * opts.max_dim;
    Rng rng(opts.seed ^ 0x617070656e64ULL);
    std::vector<Task> tasks;

    const auto pairs = bounded_chains(all, 2, kInstances, rng, opts.max_dim);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto ch = pairs[i];
        const std::uint64_t seed = opts.seed * 7000003ULL + i;
        tasks.push_back({"braid", "braiding isomorphism", chain_names(ch), [ch, seed, t] {
                             Rng r(seed);
                             const std::string inst = chain_names(ch);
                             const BimodulePtr m = ch[0].module, n = ch[1].module;
                             std::vector<Check> out{
                                 iso_check("braid.iso", "braiding is an invertible intertwiner", inst,
                                           t.apply("braid", braid_iso(m, n)))};
                             out.push_back(braid_naturality(random_cell(m, r), random_cell(n, r), t, inst));
                             return out;
                         }});
    }

    std::size_t adjoint_count = 0;
    for (std::size_t tries = 0; adjoint_count < kInstances && tries < 100 * kInstances; ++tries) {
        auto ch = random_chain(all, 2, rng, opts.max_dim);
        if (!ch) continue;
        auto y = pick_with_right(all, (*ch)[1].right, opts.max_dim, rng);
        if (!y || dim_product(*ch) * y->module->dim > bound) continue;
        const std::string inst = chain_names(*ch) + ";" + y->name;
        const std::uint64_t seed = opts.seed * 7100003ULL + adjoint_count;
        const BimodulePtr x = (*ch)[0].module, m = (*ch)[1].module, yy = y->module;
        tasks.push_back({"adjoint", "adjoint isomorphism", inst, [x, m, yy, inst, seed, t] {
                             Rng r(seed);
                             std::vector<Check> out{iso_check("adjoint.iso", "adjoint isomorphism is invertible", inst,
                                                              t.apply("adjoint", adjoint_iso(x, m, yy)))};
                             out.push_back(adjoint_naturality(x, m, random_cell(yy, r), t, inst));
                             return out;
                         }});
        ++adjoint_count;
    }

    for (const auto& a : c.algebras) {
        if (a.semisimple) continue;
        const AlgebraPtr alg = a.algebra;
        const std::string inst = "reg(" + a.name + ")";
        tasks.push_back({"psi.iso", "double dual isomorphism needs a semisimple right algebra", inst,
                         [alg, inst, t] {
                             return std::vector<Check>{iso_check("psi.iso", "double dual isomorphism is invertible",
                                                                 inst, t.apply("psi", double_dual_iso(regular(alg))))};
                         }});
    }
    std::size_t psi_count = 0;
    for (std::size_t tries = 0; psi_count < kInstances && tries < 100 * kInstances && !ss.empty(); ++tries) {
        const OneCell p = ss[pick(rng, ss.size())];
        if (p.module->dim > opts.max_dim) continue;
        const std::uint64_t seed = opts.seed * 7200003ULL + psi_count;
        tasks.push_back({"psi", "double dual isomorphism", p.name, [p, seed, t] {
                             Rng r(seed);
                             std::vector<Check> out{iso_check("psi.iso", "double dual isomorphism is invertible", p.name,
                                                              t.apply("psi", double_dual_iso(p.module)))};
                             out.push_back(psi_naturality(random_cell(p.module, r), t, p.name));
                             return out;
                         }});
        ++psi_count;
    }

    std::size_t th_count = 0;
    for (std::size_t tries = 0; th_count < kInstances && tries < 100 * kInstances && !ss.empty(); ++tries) {
        const OneCell p = ss[pick(rng, ss.size())];
        if (p.module->dim > opts.max_dim) continue;
        auto x = pick_with_right(ss, p.right, opts.max_dim, rng);
        if (!x || x->module->dim * p.module->dim > bound) continue;
        const std::string inst = x->name + ";" + p.name;
        const std::uint64_t seed = opts.seed * 7300003ULL + th_count;
        const BimodulePtr xm = x->module, pm = p.module;
        tasks.push_back({"tensor_hom", "tensor-hom isomorphism", inst, [xm, pm, inst, seed, t] {
                             Rng r(seed);
                             std::vector<Check> out{iso_check("tensor_hom.iso", "tensor-hom isomorphism is invertible",
                                                              inst, t.apply("tensor_hom", tensor_hom_iso(xm, pm)))};
                             out.push_back(tensor_hom_naturality(random_cell(xm, r), pm, t, inst));
                             return out;
                         }});
        ++th_count;
    }

    auto head = concat(concat(shortfall("braid.sampling", pairs.size(), kInstances),
                              shortfall("adjoint.sampling", adjoint_count, kInstances)),
                       concat(shortfall("psi.sampling", psi_count, kInstances),
                              shortfall("tensor_hom.sampling", th_count, kInstances)));
    return concat(std::move(head), run_tasks(tasks, opts.jobs));
}

std::vector<Check> verify_morita(const Corpus& c, const VerifyOptions& opts) {
    const Tamper t = opts.tamper;
    std::vector<Task> tasks;
    const AlgebraPtr q = ground_field();
    for (std::size_t n : {2, 3}) {
        const std::string inst = "rows(M" + std::to_string(n) + ")";
        tasks.push_back({"morita.known", "row vectors give a Morita equivalence", inst, [n, inst, t] {
                             return morita_instance(simple_module(matrix_algebra(n), 0), inst, t, true);
                         }});
    }
    tasks.push_back({"morita.known", "a projection is not an equivalence", "proj(QxQ)", [q, t] {
                         return morita_instance(simple_module(product(q, q), 0), "proj(QxQ)", t, false);
                     }});
    for (const auto& a : c.algebras) {
        if (a.semisimple) continue;
        tasks.push_back({"morita.gate", "semisimple algebras only", "reg(" + a.name + ")",
                         [alg = a.algebra] {
                             is_equivalence(regular(alg));  // throws NotSemisimple, recorded as SKIP
                             return std::vector<Check>{};
                         }});
    }
    for (const auto& cell : one_cells(c, true)) {
        if (cell.module->dim > opts.max_dim) continue;
        tasks.push_back({"morita.corpus", "equivalence detection", cell.name,
                         [cell, t] { return morita_instance(cell.module, cell.name, t, std::nullopt); }});
    }
    return run_tasks(tasks, opts.jobs);
}

std::vector<Check> verify_dual_objects(const Corpus& c, const VerifyOptions& opts) {
    const Tamper t = opts.tamper;
    std::vector<Task> tasks;
    for (const auto& a : c.algebras) {
        const AlgebraPtr alg = a.algebra;
        const std::string inst = a.name + (a.semisimple ? "" : " (exploratory: not semisimple)");
        tasks.push_back({"zigzag", "evaluation and coevaluation satisfy the zig-zag identities", inst, [alg, inst, t] {
                             const DualObjectData d = dual_object_data(alg);
                             std::vector<Check> out;
                             auto one = [&](const char* id, const std::optional<Intertwiner>& f, std::size_t dim) {
                                 if (!f) {
                                     out.push_back(bool_check(id, "zig-zag composite is isomorphic to the identity",
                                                              inst, false, "no isomorphism found", {dim}));
                                     return;
                                 }
                                 out.push_back(iso_check(id, "zig-zag composite is isomorphic to the identity", inst,
                                                         t.apply("zigzag_iso", *f)));
                             };
                             one("zigzag.first", d.first_iso, d.zigzag_first->dim);
                             one("zigzag.second", d.second_iso, d.zigzag_second->dim);
                             return out;
                         }});
    }
    return run_tasks(tasks, opts.jobs);
}

Report run(const std::string& suite, const Corpus& c, const VerifyOptions& opts) {
    if (!is_suite(suite)) throw UsageError("unknown suite '" + suite + "'");
    Report r;
    r.corpus_digest = corpus_digest(c);
    r.seed = opts.seed;
    r.max_dim = opts.max_dim;
    r.tamper = opts.tamper.cell;
    r.started = utc_now();
    for (const auto& name : suite_names()) {
        if (suite != "all" && suite != name) continue;
        const auto t0 = std::chrono::steady_clock::now();
        SuiteResult s{name, {}, 0};
        if (name == "bicategory") s.checks = verify_bicategory(c, opts);
        else if (name == "appendixA") s.checks = verify_appendix_a(c, opts);
        else if (name == "duality") s.checks = concat(verify_pseudofunctor(c, opts), verify_involution(c, opts));
        else if (name == "rep") s.checks = verify_rep(c, opts);
        else if (name == "morita") s.checks = verify_morita(c, opts);
        else if (name == "dualobjects") s.checks = verify_dual_objects(c, opts);
        s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.suites.push_back(std::move(s));
    }
    return r;
}

std::size_t failures(const Report& r) {
    std::size_t n = 0;
    for (const auto& s : r.suites) n += count(s.checks, Status::Fail);
    return n;
}

namespace {

json body(const Report& r) {
    json j;
    j["format"] = "alg2-report/1";
    j["version"] = r.version;
    j["corpus_digest"] = r.corpus_digest;
    j["seed"] = r.seed;
    j["max_dim"] = r.max_dim;
    j["tamper"] = r.tamper;
    j["failures"] = failures(r);
    json suites = json::array();
    for (const auto& s : r.suites) {
        json js;
        js["name"] = s.name;
        js["pass"] = count(s.checks, Status::Pass);
        js["fail"] = count(s.checks, Status::Fail);
        js["skip"] = count(s.checks, Status::Skip);
        json checks = json::array();
        for (const auto& ch : s.checks)
            checks.push_back({{"id", ch.id}, {"anchor", ch.anchor}, {"instance", ch.instance},
                              {"status", to_string(ch.status)}, {"reason", ch.reason}, {"dims", ch.dims}});
        js["checks"] = std::move(checks);
        suites.push_back(std::move(js));
    }
    j["suites"] = std::move(suites);
    return j;
}

}  // namespace

std::string report_body_json(const Report& r) { return body(r).dump(); }

std::string report_digest(const Report& r) { return sha256_hex(report_body_json(r)); }

std::string report_to_json(const Report& r) {
    json j = body(r);
    j["digest"] = report_digest(r);
    json timing;
    timing["started"] = r.started;
    json per = json::object();
    for (const auto& s : r.suites) per[s.name] = s.seconds;
    timing["suite_seconds"] = std::move(per);
    j["timing"] = std::move(timing);
    return j.dump(1);
}

}  // namespace alg2
