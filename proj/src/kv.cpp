#include "alg2/kv.hpp"

#include "alg2/error.hpp"

namespace alg2 {

// ---------------------------------------------------------------- skeletal KV

KVFunctor kv_identity(const KVSpace& s) {
    KVFunctor f{s, s, std::vector<std::size_t>(s.rank * s.rank, 0)};
    for (std::size_t i = 0; i < s.rank; ++i) f.mult[i * s.rank + i] = 1;
    return f;
}

KVFunctor kv_compose(const KVFunctor& f, const KVFunctor& g) {
    if (!(f.target == g.source)) throw ShapeError("kv_compose: functors are not composable");
    KVFunctor h{f.source, g.target, std::vector<std::size_t>(g.target.rank * f.source.rank, 0)};
    for (std::size_t j = 0; j < g.target.rank; ++j)
        for (std::size_t i = 0; i < f.source.rank; ++i)
            for (std::size_t k = 0; k < f.target.rank; ++k) h.mult[j * f.source.rank + i] += g.at(j, k) * f.at(k, i);
    return h;
}

KVNat kv_identity_nat(const KVFunctor& f) {
    KVNat n{f, f, {}};
    for (std::size_t t = 0; t < f.mult.size(); ++t) n.blocks.push_back(Mat::identity(f.mult[t]));
    return n;
}

KVNat kv_vcomp(const KVNat& a, const KVNat& b) {
    if (!(a.target == b.source)) throw ShapeError("kv_vcomp: 2-cells are not composable");
    KVNat n{a.source, b.target, {}};
    for (std::size_t t = 0; t < a.blocks.size(); ++t) n.blocks.push_back(b.blocks[t] * a.blocks[t]);
    return n;
}

KVNat kv_hcomp(const KVNat& a, const KVNat& b) {
    if (!(a.source.target == b.source.source)) throw ShapeError("kv_hcomp: 2-cells are not composable");
    KVNat n{kv_compose(a.source, b.source), kv_compose(a.target, b.target), {}};
    const std::size_t s = a.source.source.rank, t = a.source.target.rank, u = b.source.target.rank;
    for (std::size_t j = 0; j < u; ++j)
        for (std::size_t i = 0; i < s; ++i) {
            Mat block(n.target.at(j, i), n.source.at(j, i));
            std::size_t r0 = 0, c0 = 0;
            for (std::size_t k = 0; k < t; ++k) {
                const Mat piece = kron(b.at(j, k), a.at(k, i));
                for (std::size_t r = 0; r < piece.rows(); ++r)
                    for (std::size_t c = 0; c < piece.cols(); ++c) block(r0 + r, c0 + c) = piece(r, c);
                r0 += piece.rows();
                c0 += piece.cols();
            }
            n.blocks.push_back(std::move(block));
        }
    return n;
}

std::vector<std::string> validate(const KVNat& n) {
    const auto& f = n.source;
    const auto& g = n.target;
    if (!(f.source == g.source) || !(f.target == g.target)) return {"source and target functors are not parallel"};
    if (f.mult.size() != f.source.rank * f.target.rank || g.mult.size() != f.mult.size())
        return {"multiplicity table has wrong size"};
    if (n.blocks.size() != f.mult.size()) return {"wrong number of blocks"};
    for (std::size_t t = 0; t < n.blocks.size(); ++t)
        if (n.blocks[t].rows() != g.mult[t] || n.blocks[t].cols() != f.mult[t])
            return {"block " + std::to_string(t) + " has the wrong shape"};
    return {};
}

bool kv_is_invertible(const KVNat& n) {
    for (const auto& b : n.blocks)
        if (!b.is_square() || !is_invertible(b)) return false;
    return true;
}

KVSpace kv_op(const KVSpace& s) { return s; }
KVFunctor kv_op(const KVFunctor& f) { return f; }

KVNat kv_op(const KVNat& n) {
    KVNat o{n.target, n.source, {}};
    for (const auto& b : n.blocks) o.blocks.push_back(b.transpose());
    return o;
}

KVNat random_kv_nat(Rng& rng, std::size_t max_rank, std::size_t max_mult) {
    const KVSpace s{pick(rng, max_rank + 1)}, t{pick(rng, max_rank + 1)};
    KVFunctor f{s, t, {}}, g{s, t, {}};
    for (std::size_t k = 0; k < s.rank * t.rank; ++k) {
        f.mult.push_back(pick(rng, max_mult + 1));
        g.mult.push_back(pick(rng, max_mult + 1));
    }
    KVNat n{f, g, {}};
    for (std::size_t k = 0; k < f.mult.size(); ++k) {
        Mat b(g.mult[k], f.mult[k]);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                b(r, c) = Scalar(static_cast<long>(pick(rng, 19)) - 9) / Scalar(static_cast<long>(pick(rng, 6)) + 1);
        n.blocks.push_back(std::move(b));
    }
    return n;
}

// ---------------------------------------------------------------- Rep

namespace {

const WedderburnCertificate& certificate_of(const AlgebraPtr& a, const char* where) {
    require_semisimple(a, where);
    if (!a->certificate()) throw NoCertificate(std::string(where) + ": '" + a->label() + "' has no certificate");
    return *a->certificate();
}

void set_column(Mat& m, std::size_t col, const Mat& c) {
    for (std::size_t r = 0; r < c.rows(); ++r) m(r, col) = c(r, 0);
}

}  // namespace

RepImage rep_object(const AlgebraPtr& a) {
    const auto& cert = certificate_of(a, "rep_object");
    RepImage r{a->label(), {cert.blocks.size()}, {}};
    for (const auto& b : cert.blocks) r.simple_dims.push_back(b.degree);
    return r;
}

RepOneCell rep_1(const BimodulePtr& m) {
    const auto& ca = certificate_of(m->left, "rep_1");
    const auto& cb = certificate_of(m->right, "rep_1");
    RepOneCell r;
    r.module = m;
    r.functor = {{ca.blocks.size()}, {cb.blocks.size()}, std::vector<std::size_t>(ca.blocks.size() * cb.blocks.size())};
    std::vector<BimodulePtr> targets;
    for (std::size_t j = 0; j < cb.blocks.size(); ++j) targets.push_back(simple_module(m->right, j));
    for (std::size_t i = 0; i < ca.blocks.size(); ++i) {
        r.images.push_back(tensor_over(simple_module(m->left, i), m));
        const BimodulePtr& x = r.images.back().module;
        r.multiplicity.emplace_back();
        std::vector<Mat> cols;
        for (std::size_t j = 0; j < cb.blocks.size(); ++j) {
            r.multiplicity[i].push_back(hom_right(targets[j], x));
            const HomSpace& h = r.multiplicity[i].back();
            r.functor.mult[j * ca.blocks.size() + i] = h.space.dim();
            for (std::size_t t = 0; t < h.space.dim(); ++t) cols.push_back(h.element(t));
        }
        r.decomposition.push_back(cols.empty() ? Mat(x->dim, 0) : hstack(cols));
    }
    return r;
}

KVNat rep_2(const Intertwiner& f, const RepOneCell& source, const RepOneCell& target) {
    KVNat n{source.functor, target.functor, {}};
    n.blocks.resize(source.functor.mult.size());
    const std::size_t s = source.functor.source.rank, t = source.functor.target.rank;
    for (std::size_t i = 0; i < s; ++i) {
        const TensorProduct& a = source.images[i];
        const TensorProduct& b = target.images[i];
        const std::size_t di = a.left_factor->dim;
        const Mat fi = b.proj * kron(Mat::identity(di), f.mat) * a.sect;
        for (std::size_t j = 0; j < t; ++j) {
            const HomSpace& hs = source.multiplicity[i][j];
            const HomSpace& ht = target.multiplicity[i][j];
            Mat block(ht.space.dim(), hs.space.dim());
            for (std::size_t u = 0; u < hs.space.dim(); ++u) set_column(block, u, ht.coords(fi * hs.element(u)));
            n.blocks[j * s + i] = std::move(block);
        }
    }
    return n;
}

KVNat rep_2(const Intertwiner& f) { return rep_2(f, rep_1(f.source), rep_1(f.target)); }

KVNat rep_compositor(const RepOneCell& m, const RepOneCell& n, const RepOneCell& mn) {
    const KVFunctor composite = kv_compose(m.functor, n.functor);
    KVNat w{composite, mn.functor, {}};
    const std::size_t ra = m.functor.source.rank, rb = m.functor.target.rank, rc = n.functor.target.rank;
    w.blocks.resize(ra * rc);
    const BimodulePtr& nm = n.module;
    for (std::size_t i = 0; i < ra; ++i) {
        const TensorProduct& smt = m.images[i];
        const TensorProduct smn = tensor_over(smt.module, nm);  // (S_i M) N
        const Intertwiner assoc = associator(smt.left_factor, m.module, nm);
        for (std::size_t k = 0; k < rc; ++k) {
            const HomSpace& target = mn.multiplicity[i][k];
            Mat block(target.space.dim(), composite.at(k, i));
            std::size_t col = 0;
            for (std::size_t j = 0; j < rb; ++j) {
                const HomSpace& gs = n.multiplicity[j][k];  // hom_C(U_k, T_j N)
                const HomSpace& hs = m.multiplicity[i][j];  // hom_B(T_j, S_i M)
                const TensorProduct& tn = n.images[j];
                for (std::size_t g = 0; g < gs.space.dim(); ++g)
                    for (std::size_t h = 0; h < hs.space.dim(); ++h) {
                        const Mat hn = smn.proj * kron(hs.element(h), Mat::identity(nm->dim)) * tn.sect;
                        set_column(block, col++, target.coords(assoc.mat * hn * gs.element(g)));
                    }
            }
            w.blocks[k * ra + i] = std::move(block);
        }
    }
    return w;
}

bool is_permutation(const KVFunctor& f) {
    if (f.source.rank != f.target.rank) return false;
    const std::size_t n = f.source.rank;
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t row = 0, col = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (f.at(j, i) > 1 || f.at(i, j) > 1) return false;
            row += f.at(j, i);
            col += f.at(i, j);
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------- duality pseudofunctor data

Intertwiner RepDualityCells::i_cell(const BimodulePtr& v, const BimodulePtr& m) const {
    return tamper_.apply("i", inverse(DualityCells{}.chi(v, m)));
}

Intertwiner RepDualityCells::epsilon(const BimodulePtr& v) const {
    return tamper_.apply("epsilon", double_dual_iso(v));
}

Intertwiner RepDualityCells::theta(const BimodulePtr& v) const {
    return tamper_.apply("theta", compose(inverse(right_unitor(v)), inverse(double_dual_iso(v))));
}

IComponent i_component(const AlgebraPtr& a, const RepDualityCells& cells) {
    const auto& cert = certificate_of(a, "i_component");
    const AlgebraPtr op = a->opposite();
    const std::size_t r = cert.blocks.size();
    IComponent c;
    c.i = kv_identity({r});
    c.i_box = kv_identity({r});
    c.unit = kv_identity_nat(c.i);
    for (std::size_t b = 0; b < r; ++b) {
        const BimodulePtr s = simple_module(a, b);
        auto match = find_isomorphism(dual_module(s), simple_module(op, b));
        if (!match) throw Error("i_component: dual of simple " + std::to_string(b) + " is not the matching simple");
        c.matches.push_back(*match);
        const Intertwiner eps = cells.epsilon(s);
        c.epsilon.push_back(eps);
        // the skeleton identifies S with S°° through the echelon basis map; epsilon is a scalar multiple of it
        const Subspace ref = intertwiner_space(s, eps.target);
        if (ref.dim() != 1) throw Error("i_component: S and S°° are not related by a unique line of maps");
        const std::size_t p = ref.pivots()[0];
        const Scalar scalar = eps.mat.flatten()(p, 0) / ref.basis()(0, p);
        c.unit.blocks[b * r + b] = Mat{{scalar}};
    }
    // counit from the triangle identity counit_b * unit_b = 1, solved blockwise
    c.counit = kv_identity_nat(c.i);
    for (std::size_t b = 0; b < r; ++b) {
        const auto sol = solve(c.unit.blocks[b * r + b], Mat{{1}});
        if (!sol) throw SingularMatrix("i_component: unit is not invertible");
        c.counit.blocks[b * r + b] = *sol;
    }
    return c;
}

RepTheoremSides rep_theorem_sides(const BimodulePtr& v, const RepDualityCells& cells) {
    const AlgebraPtr& a = v->right;
    const BimodulePtr vd = dual_module(v);
    Intertwiner lhs = compose(inverse(cells.i_cell(v, regular(a))), intertwiner_adjoint(inverse(cells.theta(v))));
    Intertwiner rhs = compose(hcomp2(identity(vd), cells.duality().zeta(a)), cells.theta(vd));
    return {std::move(lhs), std::move(rhs)};
}

std::vector<Check> check_rep_theorem(const BimodulePtr& v, const RepDualityCells& cells, const std::string& instance) {
    std::vector<Check> out;
    const AlgebraPtr& a = v->right;
    const BimodulePtr vd = dual_module(v);
    const Intertwiner th = cells.theta(v);
    out.push_back(iso_check("theta.iso", "theta component is an invertible intertwiner", instance, th));
    out.push_back(equality_check("theta.definition", "theta_V is the unitor after psi_V inverse", instance, th.mat,
                                 inverse(right_unitor(v)).mat * inverse(double_dual_iso(v)).mat));
    out.push_back(bool_check("theta.dims", "dim V°° = dim V", instance, th.source->dim == v->dim, "dimensions differ",
                             {th.source->dim, v->dim}));
    out.push_back(iso_check("epsilon.iso", "epsilon component is an invertible intertwiner", instance, cells.epsilon(v)));

    const Intertwiner psi_v = double_dual_iso(v);
    const Intertwiner psi_vd = double_dual_iso(vd);
    const Intertwiner psi_v_dual = intertwiner_adjoint(psi_v);  // V°°° -> V°
    out.push_back(equality_check("psi.dual", "psi_{V°} inverts psi_V°", instance, psi_vd.mat * psi_v_dual.mat,
                                 Mat::identity(psi_vd.mat.rows())));
    out.push_back(equality_check("psi.dual.other_side", "psi_V° inverts psi_{V°}", instance,
                                 psi_v_dual.mat * psi_vd.mat, Mat::identity(vd->dim)));

    const Intertwiner one_v = inverse(right_unitor(v));
    const Intertwiner one_v_dual = intertwiner_adjoint(one_v);  // (V A)° -> V°
    const Intertwiner theta_inv_dual = intertwiner_adjoint(inverse(th));
    out.push_back(equality_check("rep.triangle", "1_V° after (theta_V inverse)° is psi_{V°} inverse", instance,
                                 (one_v_dual.mat * theta_inv_dual.mat), inverse(psi_vd.mat)));
    const Intertwiner i_reg = cells.i_cell(v, regular(a));
    out.push_back(iso_check("i.iso", "i component is an invertible intertwiner", instance, i_reg));
    const Intertwiner square =
        compose(hcomp2(identity(vd), cells.duality().zeta(a)), compose(inverse(right_unitor(vd)), one_v_dual));
    out.push_back(equality_check("rep.square", "inverse i on (V, A) factors through 1_{V°} and zeta", instance,
                                 inverse(i_reg).mat, square.mat));

    const RepTheoremSides sides = rep_theorem_sides(v, cells);
    out.push_back(equality_check("rep.theorem", "the two pasted composites V°°° -> V° (x) A° agree", instance,
                                 sides.lhs.mat, sides.rhs.mat));
    return out;
}

std::vector<Check> check_i_square(const BimodulePtr& v, const BimodulePtr& m, const BimodulePtr& n,
                                  const RepDualityCells& cells, Rng& rng, const std::string& instance) {
    std::vector<Check> out;
    const BimodulePtr vd = dual_module(v), md = dual_module(m), nd = dual_module(n);
    const Intertwiner im = cells.i_cell(v, m);
    out.push_back(iso_check("i.square.iso", "i_M component is an invertible intertwiner", instance, im));

    const Intertwiner f = random_cell(m, rng);
    const Intertwiner nat_l = compose(im, hcomp2(identity(vd), intertwiner_adjoint(f)));
    const Intertwiner nat_r = compose(intertwiner_adjoint(hcomp2(identity(v), f)), cells.i_cell(v, f.target));
    out.push_back(equality_check("i.naturality", "i_M natural in M", instance, nat_l.mat, nat_r.mat));

    const AlgebraPtr& a = v->right;
    const Intertwiner unit = compose(cells.i_cell(v, regular(a)),
                                     compose(hcomp2(identity(vd), cells.duality().zeta(a)), inverse(right_unitor(vd))));
    out.push_back(equality_check("i.unit", "i on the identity 1-cell matches the unitors", instance, unit.mat,
                                 intertwiner_adjoint(right_unitor(v)).mat));

    const BimodulePtr mn = tensor_over(m, n).module;
    const BimodulePtr vm = tensor_over(v, m).module;
    Intertwiner path = hcomp2(identity(vd), DualityCells{}.chi(m, n));
    path = compose(inverse(associator(vd, md, nd)), path);
    path = compose(hcomp2(im, identity(nd)), path);
    path = compose(cells.i_cell(vm, n), path);
    path = compose(intertwiner_adjoint(inverse(associator(v, m, n))), path);
    out.push_back(equality_check("i.composite", "i over a composite is the pasting of the factors", instance,
                                 cells.i_cell(v, mn).mat, path.mat));

    // theta against the double-dual square of M
    const Intertwiner phi = compose(inverse(intertwiner_adjoint(im)), cells.i_cell(vd, md));
    const Intertwiner lhs = compose(cells.theta(vm), phi);
    const Intertwiner rhs = compose(inverse(right_unitor(vm)),
                                    compose(hcomp2(right_unitor(v), identity(m)),
                                            hcomp2(cells.theta(v), inverse(double_dual_iso(m)))));
    out.push_back(equality_check("theta.modification", "theta compatible with the i squares", instance, lhs.mat,
                                 rhs.mat));
    return out;
}

// ---------------------------------------------------------------- suites

std::vector<Check> check_kv_strictness(std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::size_t bad = 0, invalid = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const KVNat n = random_kv_nat(rng);
        if (!validate(n).empty()) ++invalid;
        const KVNat twice = kv_op(kv_op(n));
        bool same = twice == n;
        for (std::size_t b = 0; same && b < n.blocks.size(); ++b) same = twice.blocks[b].str() == n.blocks[b].str();
        bad += !same;
    }
    return {bool_check("kv.strict", "the KV involution applied twice is the identity", std::to_string(count) + " cells",
                       bad == 0 && invalid == 0,
                       std::to_string(bad) + " cells changed, " + std::to_string(invalid) + " invalid", {count})};
}

namespace {

constexpr std::size_t kSquares = 20;
constexpr std::size_t kPairs = 20;

}  // namespace

std::vector<Check> verify_rep(const Corpus& c, const VerifyOptions& opts) {
    const RepDualityCells cells(opts.tamper);
    std::vector<Task> tasks;
    std::vector<Check> gate;
    for (const auto& ca : c.algebras) {
        if (!ca.semisimple) {
            gate.push_back({"rep.gate", "semisimple algebras only", ca.name, Status::Skip, "NotSemisimple",
                            {ca.algebra->dim()}});
            continue;
        }
        const AlgebraPtr a = ca.algebra;
        const std::string name = ca.name;
        tasks.push_back({"rep.object", "Rep of an algebra", name, [a, name, cells] {
                             std::vector<Check> out;
                             const RepImage img = rep_object(a);
                             std::size_t sq = 0;
                             for (auto d : img.simple_dims) sq += d * d;
                             out.push_back(bool_check("rep.object", "sum of squared simple dims is dim A", name,
                                                      sq == a->dim(), "dimension count fails", {img.kv.rank, sq}));
                             const IComponent ic = i_component(a, cells);
                             bool ok = kv_is_invertible(ic.unit) && validate(ic.unit).empty();
                             for (const auto& e : ic.epsilon) ok = ok && is_intertwiner(e) && is_invertible(e);
                             for (const auto& mm : ic.matches) ok = ok && is_intertwiner(mm) && is_invertible(mm);
                             out.push_back(bool_check("i.component", "i_A, its inverse and epsilon are equivalences",
                                                      name, ok, "a component is not invertible", {img.kv.rank}));
                             const KVNat tri = kv_vcomp(ic.unit, ic.counit);
                             out.push_back(bool_check("i.triangle", "counit after unit is the identity", name,
                                                      tri.blocks == kv_identity_nat(ic.i).blocks, "triangle fails",
                                                      {img.kv.rank}));
                             return out;
                         }});
        const std::size_t blocks = a->certificate() ? a->certificate()->blocks.size() : 0;
        for (std::size_t b = 0; b < blocks; ++b) {
            const std::string inst = name + "/S" + std::to_string(b);
            tasks.push_back({"rep.theorem", "duality pseudofunctor equation", inst,
                             [a, b, inst, cells] { return check_rep_theorem(simple_module(a, b), cells, inst); }});
        }
    }

    const auto cs = one_cells(c);
    Rng rng(opts.seed ^ 0x726570ULL);
    for (std::size_t k = 0, tries = 0; k < kSquares && tries < 20 * kSquares; ++tries) {
        auto ch = random_chain(cs, 2, rng, opts.max_dim);
        if (!ch) continue;
        const AlgebraPtr a = c.algebras[(*ch)[0].left].algebra;
        if (!a->certificate()) continue;
        const std::size_t b = pick(rng, a->certificate()->blocks.size());
        const std::uint64_t seed = opts.seed * 4000037ULL + k;
        const std::string inst = "S" + std::to_string(b) + "," + (*ch)[0].name + "," + (*ch)[1].name;
        const auto chain = *ch;
        tasks.push_back({"i.square", "i pseudonatural", inst, [a, b, chain, seed, inst, cells] {
                             Rng r(seed);
                             return check_i_square(simple_module(a, b), chain[0].module, chain[1].module, cells, r,
                                                   inst);
                         }});
        ++k;
    }

    for (std::size_t k = 0; k < c.bimodules.size(); ++k) {
        const auto& cb = c.bimodules[k];
        if (!c.algebras[cb.left].semisimple || !c.algebras[cb.right].semisimple) continue;
        if (cb.module->dim > opts.max_dim) continue;
        const BimodulePtr m = cb.module;
        const std::string inst = cb.name;
        const std::uint64_t seed = opts.seed * 5000011ULL + k;
        tasks.push_back({"rep.functor", "Rep on 1- and 2-cells", inst, [m, inst, seed] {
                             Rng r(seed);
                             std::vector<Check> out;
                             const RepOneCell rm = rep_1(m);
                             bool dec = true;
                             for (const auto& d : rm.decomposition) dec = dec && d.is_square() && is_invertible(d);
                             out.push_back(bool_check("rep1.decomposition", "S_i M is a sum of simples", inst, dec,
                                                      "decomposition map not invertible", {m->dim}));
                             const Intertwiner f = random_cell(m, r);
                             const Intertwiner g = random_cell(f.target, r);
                             const RepOneCell rf = rep_1(f.target), rg = rep_1(g.target);
                             const KVNat lhs = rep_2(compose(g, f), rm, rg);
                             const KVNat rhs = kv_vcomp(rep_2(f, rm, rf), rep_2(g, rf, rg));
                             out.push_back(bool_check("rep2.composition", "Rep preserves vertical composition", inst,
                                                      lhs.blocks == rhs.blocks, "blocks differ", {m->dim}));
                             const KVNat id = rep_2(identity(m), rm, rm);
                             out.push_back(bool_check("rep2.identity", "Rep preserves identities", inst,
                                                      id.blocks == kv_identity_nat(rm.functor).blocks, "blocks differ",
                                                      {m->dim}));
                             const KVNat zero = rep_2(zero_map(m, m), rm, rm);
                             bool z = true;
                             for (const auto& b : zero.blocks) z = z && b.is_zero();
                             out.push_back(bool_check("rep2.zero", "Rep sends 0 to 0", inst, z, "nonzero block"));
                             return out;
                         }});
    }

    for (std::size_t k = 0, tries = 0; k < kPairs && tries < 20 * kPairs; ++tries) {
        auto ch = random_chain(cs, 2, rng, opts.max_dim);
        if (!ch) continue;
        const auto chain = *ch;
        const std::string inst = chain[0].name + "," + chain[1].name;
        tasks.push_back({"rep.compositor", "Rep of a composite", inst, [chain, inst] {
                             const RepOneCell rm = rep_1(chain[0].module), rn = rep_1(chain[1].module);
                             const RepOneCell rmn = rep_1(tensor_over(chain[0].module, chain[1].module).module);
                             const KVFunctor prod = kv_compose(rm.functor, rn.functor);
                             std::vector<Check> out{bool_check("rep1.multiplicative",
                                                               "mult of a composite is the product", inst,
                                                               prod.mult == rmn.functor.mult, "multiplicities differ")};
                             const KVNat w = rep_compositor(rm, rn, rmn);
                             out.push_back(bool_check("rep1.compositor", "compositor is invertible", inst,
                                                      validate(w).empty() && kv_is_invertible(w),
                                                      "compositor not invertible"));
                             return out;
                         }});
        ++k;
    }

    auto out = std::move(gate);
    auto rest = run_tasks(tasks, opts.jobs);
    out.insert(out.end(), std::make_move_iterator(rest.begin()), std::make_move_iterator(rest.end()));
    auto strict = check_kv_strictness(1000, opts.seed);
    out.insert(out.end(), strict.begin(), strict.end());
    return out;
}

}  // namespace alg2
