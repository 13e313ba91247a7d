#include "alg2/duality.hpp"

#include "alg2/error.hpp"

namespace alg2 {

// ---------------------------------------------------------------- cells

Intertwiner DualityCells::chi(const BimodulePtr& m, const BimodulePtr& n) const {
    require_semisimple(m->left, "comp_cell");
    require_semisimple(m->right, "comp_cell");
    require_semisimple(n->right, "comp_cell");
    const BimodulePtr regc = regular(n->right);
    const BimodulePtr mn = tensor_over(m, n).module;
    const Intertwiner adj = adjoint_iso(m, n, regc);           // hom_C(MN, C) -> hom_B(M, hom_C(N, C))
    const BimodulePtr hn = hom_right(n, regc).module;
    const Intertwiner th = tensor_hom_iso(hn, m);              // hom_C(N, C) (x)_B hom_B(M, B) -> hom_B(M, hom_C(N, C))
    const BimodulePtr hm = hom_right(m, regular(m->right)).module;
    const Intertwiner br = braid_iso(hn, hm);
    Intertwiner out{dual_module(mn), tensor_over(dual_module(m), dual_module(n)).module,
                    br.mat * inverse(th.mat) * adj.mat};
    return tamper_.apply("chi", std::move(out));
}

Intertwiner DualityCells::upsilon(const AlgebraPtr& a) const {
    const DualModule d = dual(regular(a));
    const Mat one = Mat::column(a->unit());
    Mat out(a->dim(), d.module->dim);
    for (std::size_t t = 0; t < d.module->dim; ++t) {
        const Mat v = d.hom.element(t) * one;
        for (std::size_t r = 0; r < a->dim(); ++r) out(r, t) = v(r, 0);
    }
    return tamper_.apply("upsilon", Intertwiner{d.module, regular(a->opposite()), std::move(out)});
}

Intertwiner DualityCells::zeta(const AlgebraPtr& a) const {
    require_semisimple(a, "zeta");
    return tamper_.apply("zeta", inverse(DualityCells{}.upsilon(a)));
}

Intertwiner DualityCells::y(const BimodulePtr& m) const {
    require_semisimple(m->left, "y_cell");
    require_semisimple(m->right, "y_cell");
    const Intertwiner psi = double_dual_iso(m);
    const Intertwiner out = compose(inverse(left_unitor(psi.target)), compose(psi, right_unitor(m)));
    return tamper_.apply("y", out);
}

Intertwiner DualityCells::kappa(const BimodulePtr& m, const BimodulePtr& n) const {
    const Intertwiner outer = chi(dual_module(m), dual_module(n));
    return compose(outer, inverse(intertwiner_adjoint(chi(m, n))));
}

Intertwiner DualityCells::double_unit(const AlgebraPtr& a) const {
    return compose(upsilon(a->opposite()), intertwiner_adjoint(inverse(upsilon(a))));
}

Intertwiner comp_cell(const BimodulePtr& m, const BimodulePtr& n) { return DualityCells{}.chi(m, n); }
Intertwiner unit_cell(const AlgebraPtr& a) { return DualityCells{}.upsilon(a); }
Intertwiner zeta(const AlgebraPtr& a) { return DualityCells{}.zeta(a); }
Intertwiner y_cell(const BimodulePtr& m) { return DualityCells{}.y(m); }

ZetaCompatibility zeta_compatibility(const AlgebraPtr& a, const DualityCells& cells) {
    const BimodulePtr reg = regular(a);
    Intertwiner lhs = hcomp2(identity(reg), cells.zeta(a->opposite()));
    Intertwiner rhs = compose(hcomp2(identity(reg), intertwiner_adjoint(cells.zeta(a))), cells.y(reg));
    return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------- checks

Check check_chi_naturality(const Intertwiner& f, const Intertwiner& g, const DualityCells& cells,
                           const std::string& instance) {
    const Intertwiner lhs = compose(cells.chi(f.source, g.source), intertwiner_adjoint(hcomp2(f, g)));
    const Intertwiner rhs =
        compose(hcomp2(intertwiner_adjoint(f), intertwiner_adjoint(g)), cells.chi(f.target, g.target));
    return equality_check("chi.naturality", "comp cell natural in both slots", instance, lhs.mat, rhs.mat);
}

Check check_chi_cocycle(const BimodulePtr& m, const BimodulePtr& n, const BimodulePtr& p, const DualityCells& cells,
                        const std::string& instance) {
    const BimodulePtr mn = tensor_over(m, n).module;
    const BimodulePtr np = tensor_over(n, p).module;
    const BimodulePtr md = dual_module(m), nd = dual_module(n), pd = dual_module(p);
    const Intertwiner lhs = compose(associator(md, nd, pd), compose(hcomp2(cells.chi(m, n), identity(pd)), cells.chi(mn, p)));
    const Intertwiner rhs = compose(hcomp2(identity(md), cells.chi(n, p)),
                                    compose(cells.chi(m, np), intertwiner_adjoint(inverse(associator(m, n, p)))));
    return equality_check("chi.cocycle", "comp cell compatible with associators", instance, lhs.mat, rhs.mat);
}

std::vector<Check> check_unit_compatibility(const BimodulePtr& m, const DualityCells& cells,
                                            const std::string& instance) {
    const BimodulePtr md = dual_module(m);
    const Intertwiner left = compose(
        left_unitor(md), compose(hcomp2(cells.upsilon(m->left), identity(md)),
                                 compose(cells.chi(regular(m->left), m), intertwiner_adjoint(left_unitor(m)))));
    const Intertwiner right = compose(
        right_unitor(md), compose(hcomp2(identity(md), cells.upsilon(m->right)),
                                  compose(cells.chi(m, regular(m->right)), intertwiner_adjoint(right_unitor(m)))));
    return {equality_check("unit.left", "unit cell compatible with comp cell on (1, M)", instance, left.mat,
                           Mat::identity(md->dim)),
            equality_check("unit.right", "unit cell compatible with comp cell on (M, 1)", instance, right.mat,
                           Mat::identity(md->dim))};
}

std::vector<Check> check_functoriality(const Intertwiner& f, const Intertwiner& g, const std::string& instance) {
    const Intertwiner lhs = intertwiner_adjoint(compose(g, f));
    const Intertwiner rhs = compose(intertwiner_adjoint(f), intertwiner_adjoint(g));
    const Intertwiner id = intertwiner_adjoint(identity(f.source));
    return {equality_check("on2.composition", "(g f)° = f° g°", instance, lhs.mat, rhs.mat),
            equality_check("on2.identity", "id° = id", instance, id.mat, Mat::identity(id.mat.rows()))};
}

Check check_y_composite(const BimodulePtr& m, const BimodulePtr& n, const DualityCells& cells,
                        const std::string& instance) {
    const BimodulePtr mn = tensor_over(m, n).module;
    const BimodulePtr ra = regular(m->left), rb = regular(m->right), rc = regular(n->right);
    const Intertwiner yn = cells.y(n);
    const Intertwiner ym = cells.y(m);
    const BimodulePtr ndd = double_dual_iso(n).target;
    const BimodulePtr mdd = double_dual_iso(m).target;
    Intertwiner path = associator(m, n, rc);
    path = compose(hcomp2(identity(m), yn), path);
    path = compose(inverse(associator(m, rb, ndd)), path);
    path = compose(hcomp2(ym, identity(ndd)), path);
    path = compose(associator(ra, mdd, ndd), path);
    path = compose(hcomp2(identity(ra), inverse(cells.kappa(m, n))), path);
    return equality_check("y.composite", "y cells pseudonatural over composites", instance, cells.y(mn).mat, path.mat);
}

Check check_y_naturality(const Intertwiner& f, const DualityCells& cells, const std::string& instance) {
    const BimodulePtr ra = regular(f.source->left), rb = regular(f.source->right);
    const Intertwiner lhs = compose(cells.y(f.target), hcomp2(f, identity(rb)));
    const Intertwiner rhs = compose(hcomp2(identity(ra), intertwiner_adjoint(intertwiner_adjoint(f))), cells.y(f.source));
    return equality_check("y.naturality", "y cells natural in 2-cells", instance, lhs.mat, rhs.mat);
}

std::vector<Check> check_involution_object(const AlgebraPtr& a, const DualityCells& cells, const std::string& instance) {
    require_semisimple(a, "verify_involution");
    std::vector<Check> out;
    const BimodulePtr reg = regular(a);
    const Intertwiner ups = cells.upsilon(a);
    const Intertwiner z = cells.zeta(a);
    out.push_back(iso_check("upsilon.iso", "f -> f(1) is an invertible intertwiner", instance, ups));
    out.push_back(iso_check("zeta.iso", "zeta is an invertible intertwiner", instance, z));
    out.push_back(equality_check("zeta.inverse", "zeta after unit cell is the identity", instance, (z.mat * ups.mat),
                                 Mat::identity(ups.mat.cols())));

    // f -> f(1) is multiplicative into A^op: (f g)(1) = f(1) g(1) in A
    {
        const DualModule d = dual(reg);
        const Mat one = Mat::column(a->unit());
        bool ok = true;
        for (std::size_t s = 0; s < d.module->dim && ok; ++s)
            for (std::size_t t = 0; t < d.module->dim && ok; ++t) {
                const Mat fs = d.hom.element(s), ft = d.hom.element(t);
                const Vec lhs = (ups.mat * d.hom.coords(fs * ft)).col_vector(0);
                const Vec rhs = a->multiply((ups.mat * Mat::unit_column(d.module->dim, s)).col_vector(0),
                                            (ups.mat * Mat::unit_column(d.module->dim, t)).col_vector(0));
                ok = lhs == rhs;
            }
        out.push_back(bool_check("upsilon.algebra_map", "f -> f(1) is an algebra map onto A^op", instance, ok,
                                 "not multiplicative", {d.module->dim}));
    }

    const Intertwiner psi = double_dual_iso(reg);
    const Intertwiner du = cells.double_unit(a);
    out.push_back(equality_check("upsilon.twice", "unit cell applied twice returns to the regular bimodule", instance,
                                 (du.mat * psi.mat), Mat::identity(a->dim())));

    const Intertwiner yr = cells.y(reg);
    out.push_back(iso_check("y.iso", "y cell is an invertible intertwiner", instance, yr));
    const Intertwiner unit_law = compose(left_unitor(reg), compose(hcomp2(identity(reg), du), yr));
    out.push_back(equality_check("y.unit", "y cell on the identity 1-cell matches the unit constraints", instance,
                                 unit_law.mat, right_unitor(reg).mat));

    const EquivalenceResult eq = is_equivalence(reg);
    out.push_back(bool_check("y.adjoint_equivalence", "y_A is part of an adjoint equivalence", instance,
                             eq.equivalence && eq.witness && triangle_identities(*eq.witness).ok(),
                             "unit or counit not invertible", {a->dim()}));

    const ZetaCompatibility zc = zeta_compatibility(a, cells);
    out.push_back(iso_check("zeta.compat.lhs_iso", "id (x) zeta_{A^op} is an invertible intertwiner", instance, zc.lhs));
    out.push_back(equality_check("zeta.compat", "id (x) zeta_{A^op} equals (id (x) zeta_A°) after y_A", instance,
                                 zc.lhs.mat, zc.rhs.mat));
    return out;
}

// ---------------------------------------------------------------- suites

namespace {

constexpr std::size_t kPairs = 40;
constexpr std::size_t kTriples = 20;
constexpr std::size_t kCells = 20;

std::vector<Check> gate_skips(const Corpus& c, const char* id) {
    std::vector<Check> out;
    for (const auto& a : c.algebras)
        if (!a.semisimple)
            out.push_back({id, "semisimple algebras only", a.name, Status::Skip, "NotSemisimple", {a.algebra->dim()}});
    return out;
}

}  // namespace

std::vector<Check> verify_pseudofunctor(const Corpus& c, const VerifyOptions& opts) {
    const DualityCells cells(opts.tamper);
    const auto cs = one_cells(c);
    Rng rng(opts.seed ^ 0x70736575646fULL);
    std::vector<Task> tasks;

    auto pairs = sample_chains(cs, 2, kPairs, rng, opts.max_dim);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto ch = pairs[i];
        const std::uint64_t seed = opts.seed * 1000003ULL + i;
        tasks.push_back({"chi", "comp cell", chain_names(ch), [ch, seed, cells] {
                             Rng r(seed);
                             const BimodulePtr m = ch[0].module, n = ch[1].module;
                             const Intertwiner x = cells.chi(m, n);
                             std::vector<Check> out{iso_check("chi.iso", "comp cell is an invertible intertwiner",
                                                              chain_names(ch), x)};
                             out.push_back(bool_check("chi.dims", "dim (MN)° = dim M° N°", chain_names(ch),
                                                      x.source->dim == x.target->dim, "dimensions differ",
                                                      {x.source->dim, x.target->dim}));
                             out.push_back(check_chi_naturality(random_cell(m, r), random_cell(n, r), cells, chain_names(ch)));
                             return out;
                         }});
    }
    auto triples = sample_chains(cs, 3, kTriples, rng, opts.max_dim);
    for (const auto& ch : triples)
        tasks.push_back({"chi.cocycle", "comp cell compatible with associators", chain_names(ch), [ch, cells] {
                             return std::vector<Check>{
                                 check_chi_cocycle(ch[0].module, ch[1].module, ch[2].module, cells, chain_names(ch))};
                         }});
    for (const auto& cell : cs) {
        if (cell.module->dim > opts.max_dim) continue;
        tasks.push_back({"unit", "unit cell compatibility", cell.name,
                         [cell, cells] { return check_unit_compatibility(cell.module, cells, cell.name); }});
    }
    for (std::size_t i = 0; i < kCells && !cs.empty(); ++i) {
        const OneCell cell = cs[pick(rng, cs.size())];
        if (cell.module->dim > opts.max_dim) continue;
        const std::uint64_t seed = opts.seed * 2000003ULL + i;
        tasks.push_back({"on2", "functoriality on 2-cells", cell.name, [cell, seed] {
                             Rng r(seed);
                             const Intertwiner f = random_cell(cell.module, r);
                             const Intertwiner g = random_cell(f.target, r);
                             return check_functoriality(f, g, cell.name);
                         }});
    }
    auto out = gate_skips(c, "pseudofunctor.gate");
    auto rest = run_tasks(tasks, opts.jobs);
    out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
    return out;
}

std::vector<Check> verify_involution(const Corpus& c, const VerifyOptions& opts) {
    const DualityCells cells(opts.tamper);
    const auto cs = one_cells(c);
    Rng rng(opts.seed ^ 0x696e766f6cULL);
    std::vector<Task> tasks;
    for (const auto& a : c.algebras) {
        const AlgebraPtr alg = a.algebra;
        const std::string name = a.name;
        tasks.push_back({"involution", "involution data on an object", name,
                         [alg, name, cells] { return check_involution_object(alg, cells, name); }});
    }
    auto pairs = sample_chains(cs, 2, kPairs / 2, rng, opts.max_dim);
    for (const auto& ch : pairs)
        tasks.push_back({"y.composite", "y cells pseudonatural over composites", chain_names(ch), [ch, cells] {
                             return std::vector<Check>{check_y_composite(ch[0].module, ch[1].module, cells, chain_names(ch))};
                         }});
    for (std::size_t i = 0; i < kCells && !cs.empty(); ++i) {
        const OneCell cell = cs[pick(rng, cs.size())];
        if (cell.module->dim > opts.max_dim) continue;
        const std::uint64_t seed = opts.seed * 3000003ULL + i;
        tasks.push_back({"y.naturality", "y cells natural in 2-cells", cell.name, [cell, seed, cells] {
                             Rng r(seed);
                             return std::vector<Check>{check_y_naturality(random_cell(cell.module, r), cells, cell.name)};
                         }});
    }
    return run_tasks(tasks, opts.jobs);
}

}  // namespace alg2
