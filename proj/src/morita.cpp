#include "alg2/morita.hpp"

#include <random>

#include "alg2/error.hpp"

namespace alg2 {

TensorProduct compose1(const BimodulePtr& m, const BimodulePtr& n) { return tensor_over(m, n); }

Intertwiner hcomp2(const Intertwiner& f, const Intertwiner& g) {
    const TensorProduct s = tensor_over(f.source, g.source);
    const TensorProduct t = tensor_over(f.target, g.target);
    const Mat lifted = kron_apply_left(f.mat, g.target->dim, kron_apply_right(f.source->dim, g.mat, s.sect));
    return {s.module, t.module, t.proj * lifted};
}

Intertwiner vcomp2(const Intertwiner& f, const Intertwiner& g) { return compose(g, f); }

Intertwiner associator(const BimodulePtr& m, const BimodulePtr& n, const BimodulePtr& p) {
    const TensorProduct mn = tensor_over(m, n);
    const TensorProduct np = tensor_over(n, p);
    const TensorProduct l = tensor_over(mn.module, p);
    const TensorProduct r = tensor_over(m, np.module);
    const Mat lift = kron_apply_left(mn.sect, p->dim, l.sect);
    return {l.module, r.module, r.proj * kron_apply_right(m->dim, np.proj, lift)};
}

Intertwiner left_unitor(const BimodulePtr& m) {
    const TensorProduct t = tensor_over(regular(m->left), m);
    const std::size_t n = m->left->dim(), d = m->dim;
    Mat u(d, n * d);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t x = 0; x < d; ++x)
            for (std::size_t r = 0; r < d; ++r) u(r, a * d + x) = m->left_act[a](r, x);
    return {t.module, m, u * t.sect};
}

Intertwiner right_unitor(const BimodulePtr& m) {
    const TensorProduct t = tensor_over(m, regular(m->right));
    const std::size_t n = m->right->dim(), d = m->dim;
    Mat u(d, d * n);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t r = 0; r < d; ++r) u(r, x * n + b) = m->right_act[b](r, x);
    return {t.module, m, u * t.sect};
}

PentagonSides pentagon_sides(const BimodulePtr& m, const BimodulePtr& n, const BimodulePtr& p, const BimodulePtr& q) {
    const BimodulePtr mn = tensor_over(m, n).module;
    const BimodulePtr np = tensor_over(n, p).module;
    const BimodulePtr pq = tensor_over(p, q).module;
    const Intertwiner lhs = compose(associator(m, n, pq), associator(mn, p, q));
    const Intertwiner rhs =
        compose(hcomp2(identity(m), associator(n, p, q)), compose(associator(m, np, q), hcomp2(associator(m, n, p), identity(q))));
    return {lhs, rhs};
}

TriangleSides triangle_sides(const BimodulePtr& m, const BimodulePtr& n) {
    const BimodulePtr b = regular(m->right);
    const Intertwiner lhs = compose(hcomp2(identity(m), left_unitor(n)), associator(m, b, n));
    const Intertwiner rhs = hcomp2(right_unitor(m), identity(n));
    return {lhs, rhs};
}

bool TriangleCheck::ok() const {
    return first == Mat::identity(first.rows()) && second == Mat::identity(second.rows());
}

TriangleCheck triangle_identities(const AdjunctionData& adj) {
    const BimodulePtr& m = adj.f;
    const BimodulePtr& g = adj.g;
    // M = A M -> (M g) M -> M (g M) -> M B = M
    const Intertwiner first = compose(
        right_unitor(m),
        compose(hcomp2(identity(m), adj.counit),
                compose(associator(m, g, m), compose(hcomp2(adj.unit, identity(m)), inverse(left_unitor(m))))));
    // g = g A -> g (M g) -> (g M) g -> B g = g
    const Intertwiner second = compose(
        left_unitor(g),
        compose(hcomp2(adj.counit, identity(g)),
                compose(inverse(associator(g, m, g)), compose(hcomp2(identity(g), adj.unit), inverse(right_unitor(g))))));
    return {first.mat, second.mat};
}

AdjunctionData right_adjoint(const BimodulePtr& m) {
    require_semisimple(m->right, "right_adjoint");
    const AlgebraPtr& a = m->left;
    const AlgebraPtr& b = m->right;
    const HomSpace h = hom_right(m, regular(b));
    const BimodulePtr g = h.module;
    const std::size_t dm = m->dim, dg = g->dim;

    // counit g (x)_A M -> B, g (x) x -> g(x)
    const TensorProduct gm = tensor_over(g, m);
    Mat ev(b->dim(), dg * dm);
    for (std::size_t t = 0; t < dg; ++t) {
        const Mat gt = h.element(t);
        for (std::size_t s = 0; s < dm; ++s)
            for (std::size_t k = 0; k < b->dim(); ++k) ev(k, t * dm + s) = gt(k, s);
    }
    const Intertwiner counit{gm.module, regular(b), ev * gm.sect};

    // unit: a dual basis sum_{s,u} t_{s,u} e_s (x) g_u with sum t_{s,u} e_s . g_u(x) = x
    const TensorProduct mg = tensor_over(m, g);
    Mat sys(dm * dm, dm * dg);
    Mat rhs(dm * dm, 1);
    for (std::size_t u = 0; u < dg; ++u) {
        const Mat gu = h.element(u);
        for (std::size_t k = 0; k < dm; ++k) {
            const Mat act = m->right_action(gu.col_vector(k));
            for (std::size_t s = 0; s < dm; ++s)
                for (std::size_t r = 0; r < dm; ++r) sys(k * dm + r, s * dg + u) = act(r, s);
        }
    }
    for (std::size_t k = 0; k < dm; ++k) rhs(k * dm + k, 0) = 1;
    const auto sol = solve(sys, rhs);
    if (!sol) throw DualBasisNotFound("no dual basis for '" + m->label + "'");
    const Mat one = mg.proj * *sol;
    Mat eta(mg.module->dim, a->dim());
    for (std::size_t j = 0; j < a->dim(); ++j) {
        const Mat c = mg.module->left_act[j] * one;
        for (std::size_t r = 0; r < c.rows(); ++r) eta(r, j) = c(r, 0);
    }
    AdjunctionData adj{m, g, {regular(a), mg.module, std::move(eta)}, counit};
    if (!triangle_identities(adj).ok()) throw Error("right_adjoint: triangle identities fail for '" + m->label + "'");
    return adj;
}

EquivalenceResult is_equivalence(const BimodulePtr& m) {
    require_semisimple(m->left, "is_equivalence");
    require_semisimple(m->right, "is_equivalence");
    EquivalenceResult r;
    r.witness = right_adjoint(m);
    r.equivalence = is_invertible(r.witness->unit) && is_invertible(r.witness->counit);
    return r;
}

std::optional<Intertwiner> find_isomorphism(const BimodulePtr& x, const BimodulePtr& y, std::uint64_t seed,
                                            std::size_t tries) {
    if (x->dim != y->dim) return std::nullopt;
    const Subspace s = intertwiner_space(x, y);
    if (s.dim() == 0) return x->dim == 0 ? std::optional<Intertwiner>(Intertwiner{x, y, Mat(0, 0)}) : std::nullopt;
    auto as_map = [&](const Mat& flat_row) { return Mat::unflatten(flat_row.transpose(), y->dim, x->dim); };
    for (std::size_t t = 0; t < s.dim(); ++t) {
        const Mat f = as_map(s.basis().row(t));
        if (is_invertible(f)) return Intertwiner{x, y, f};
    }
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < tries; ++k) {
        Mat v(1, s.ambient_dim());
        for (std::size_t t = 0; t < s.dim(); ++t) v += s.basis().row(t) * Scalar(static_cast<long>(rng() % 7) - 3);
        const Mat f = as_map(v);
        if (is_invertible(f)) return Intertwiner{x, y, f};
    }
    return std::nullopt;
}

namespace {

/// e_i (x) 1 (x) 1, 1 (x) e_j (x) 1, 1 (x) 1 (x) e_k for a threefold tensor algebra.
std::vector<Vec> triple_generators(const AlgebraPtr& x, const AlgebraPtr& y, const AlgebraPtr& z) {
    auto kv = [](const Vec& a, const Vec& b) {
        Vec out(a.size() * b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
        return out;
    };
    std::vector<Vec> g;
    for (std::size_t i = 0; i < x->dim(); ++i) g.push_back(kv(kv(x->basis_vector(i), y->unit()), z->unit()));
    for (std::size_t j = 0; j < y->dim(); ++j) g.push_back(kv(kv(x->unit(), y->basis_vector(j)), z->unit()));
    for (std::size_t k = 0; k < z->dim(); ++k) g.push_back(kv(kv(x->unit(), y->unit()), z->basis_vector(k)));
    return g;
}

}  // namespace

DualObjectData dual_object_data(const AlgebraPtr& a) {
    DualObjectData d;
    d.op = a->opposite();
    const std::size_t n = a->dim();
    std::vector<Mat> lr;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) lr.push_back(a->left_mult(i) * a->right_mult(j));
    const AlgebraPtr q = ground_field();
    d.ev = make_bimodule_unchecked(algebra_tensor(a, d.op), q, n, lr, {Mat::identity(n)}, "ev(" + a->label() + ")");
    d.coev = make_bimodule_unchecked(q, algebra_tensor(d.op, a), n, {Mat::identity(n)}, lr, "coev(" + a->label() + ")");

    const BimodulePtr reg = regular(a);
    const BimodulePtr reg_op = regular(d.op);
    const auto g1 = triple_generators(a, d.op, a);
    d.zigzag_first = tensor_over(external_tensor(reg, d.coev), external_tensor(d.ev, reg), g1).module;
    const auto g2 = triple_generators(d.op, a, d.op);
    d.zigzag_second = tensor_over(external_tensor(d.coev, reg_op), external_tensor(reg_op, d.ev), g2).module;

    // re-seat the outer algebras on A and A^op; the constants agree with those of A (x) Q and Q (x) A
    auto reseat = [](const BimodulePtr& z, const AlgebraPtr& alg) {
        if (!z->left->same_as(*alg) || !z->right->same_as(*alg)) throw ShapeError("zig-zag composite has unexpected algebras");
        return make_bimodule_unchecked(alg, alg, z->dim, z->left_act, z->right_act, z->label);
    };
    d.zigzag_first = reseat(d.zigzag_first, a);
    d.zigzag_second = reseat(d.zigzag_second, d.op);
    d.first_iso = find_isomorphism(d.zigzag_first, reg);
    d.second_iso = find_isomorphism(d.zigzag_second, reg_op);
    d.zigzag_ok = d.first_iso && d.second_iso && is_intertwiner(*d.first_iso) && is_intertwiner(*d.second_iso);
    return d;
}

}  // namespace alg2
