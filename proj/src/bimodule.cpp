#include "alg2/bimodule.hpp"

#include <algorithm>

#include "alg2/error.hpp"

namespace alg2 {

namespace {

Mat combine(const std::vector<Mat>& mats, const Vec& coeffs, std::size_t dim) {
    Mat out(dim, dim);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) out += mats[i] * coeffs[i];
    return out;
}

using Row = RowReducer::Row;

Row finish(Row r) {
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Row out;
    for (auto& e : r) {
        if (!out.empty() && out.back().first == e.first)
            out.back().second += e.second;
        else
            out.push_back(std::move(e));
    }
    std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
    return out;
}

/// Rows of F -> F x - y F on row-major flattened n x m matrices F (x is m x m, y is n x n).
void add_commutation(RowReducer& acc, const Mat& x, const Mat& y) {
    const std::size_t m = x.rows(), n = y.rows();
    for (std::size_t r = 0; r < n && !acc.full(); ++r)
        for (std::size_t col = 0; col < m; ++col) {
            Row row;
            for (std::size_t s = 0; s < m; ++s)
                if (sgn(x(s, col)) != 0) row.emplace_back(r * m + s, x(s, col));
            for (std::size_t s = 0; s < n; ++s)
                if (sgn(y(r, s)) != 0) row.emplace_back(s * m + col, -y(r, s));
            row = finish(std::move(row));
            if (!row.empty()) acc.add(std::move(row));
        }
}

/// Relations x b (x) y - x (x) b y for all basis pairs (x, y), given rho = x -> x b and lam = y -> b y.
void add_balancing(RowReducer& acc, const Mat& rho, const Mat& lam) {
    const std::size_t dm = rho.rows(), dn = lam.rows();
    for (std::size_t x = 0; x < dm && !acc.full(); ++x)
        for (std::size_t y = 0; y < dn; ++y) {
            Row row;
            for (std::size_t r = 0; r < dm; ++r)
                if (sgn(rho(r, x)) != 0) row.emplace_back(r * dn + y, rho(r, x));
            for (std::size_t s = 0; s < dn; ++s)
                if (sgn(lam(s, y)) != 0) row.emplace_back(x * dn + s, -lam(s, y));
            row = finish(std::move(row));
            if (!row.empty()) acc.add(std::move(row));
        }
}

bool same_actions(const Bimodule& a, const Bimodule& b) {
    return a.dim == b.dim && same_algebra(a.left, b.left) && same_algebra(a.right, b.right) &&
           a.left_act == b.left_act && a.right_act == b.right_act;
}

Mat swap_permutation(std::size_t m, std::size_t n) {
    // x (x) y at x*n + y goes to y (x) x at y*m + x
    Mat p(m * n, m * n);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < n; ++y) p(y * m + x, x * n + y) = 1;
    return p;
}

}  // namespace

Mat Bimodule::left_action(const Vec& a) const { return combine(left_act, a, dim); }
Mat Bimodule::right_action(const Vec& b) const { return combine(right_act, b, dim); }

void require_semisimple(const AlgebraPtr& a, const char* where) {
    if (!a->semisimple())
        throw NotSemisimple(std::string(where) + ": algebra '" + a->label() + "' is not semisimple");
}

std::vector<std::string> validate(const Bimodule& m) {
    std::vector<std::string> d;
    if (!m.left || !m.right) return {"missing algebra"};
    const std::size_t n = m.dim;
    if (m.left_act.size() != m.left->dim()) d.push_back("left action has wrong number of matrices");
    if (m.right_act.size() != m.right->dim()) d.push_back("right action has wrong number of matrices");
    for (const auto* fam : {&m.left_act, &m.right_act})
        for (const auto& x : *fam)
            if (x.rows() != n || x.cols() != n) d.push_back("action matrix has wrong shape");
    if (!d.empty()) return d;

    const Mat id = Mat::identity(n);
    if (m.left_action(m.left->unit()) != id) d.push_back("unit of the left algebra does not act as identity");
    if (m.right_action(m.right->unit()) != id) d.push_back("unit of the right algebra does not act as identity");

    auto check_mult = [&](const Algebra& a, const std::vector<Mat>& act, bool left_side) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            std::vector<Mat> expected(a.dim(), Mat(n, n));
            for (const auto& t : a.terms(i)) expected[t.j] += act[t.k] * t.v;
            for (std::size_t j = 0; j < a.dim(); ++j) {
                const Mat got = left_side ? act[i] * act[j] : act[j] * act[i];
                if (got != expected[j]) {
                    d.push_back(std::string(left_side ? "left" : "right") + " action is not multiplicative at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
                    return;
                }
            }
        }
    };
    check_mult(*m.left, m.left_act, true);
    check_mult(*m.right, m.right_act, false);
    for (std::size_t i = 0; i < m.left_act.size(); ++i)
        for (std::size_t j = 0; j < m.right_act.size(); ++j)
            if (m.left_act[i] * m.right_act[j] != m.right_act[j] * m.left_act[i]) {
                d.push_back("actions do not commute at (" + std::to_string(i) + "," + std::to_string(j) + ")");
                return d;
            }
    return d;
}

BimodulePtr make_bimodule_unchecked(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_act,
                                    std::vector<Mat> right_act, std::string label) {
    auto m = std::make_shared<Bimodule>();
    m->left = std::move(left);
    m->right = std::move(right);
    m->dim = dim;
    m->left_act = std::move(left_act);
    m->right_act = std::move(right_act);
    m->label = std::move(label);
    return m;
}

BimodulePtr make_bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_act,
                          std::vector<Mat> right_act, std::string label) {
    auto m = make_bimodule_unchecked(std::move(left), std::move(right), dim, std::move(left_act), std::move(right_act),
                                     std::move(label));
    const auto d = validate(*m);
    if (!d.empty()) throw InvalidBimodule("invalid bimodule '" + m->label + "': " + d.front());
    return m;
}

BimodulePtr regular(const AlgebraPtr& a) {
    std::vector<Mat> l, r;
    for (std::size_t i = 0; i < a->dim(); ++i) {
        l.push_back(a->left_mult(i));
        r.push_back(a->right_mult(i));
    }
    return make_bimodule_unchecked(a, a, a->dim(), std::move(l), std::move(r), a->label());
}

BimodulePtr right_module(const AlgebraPtr& a, std::size_t dim, std::vector<Mat> right_act, std::string label) {
    return make_bimodule(ground_field(), a, dim, {Mat::identity(dim)}, std::move(right_act), std::move(label));
}

BimodulePtr simple_module(const AlgebraPtr& a, std::size_t block) {
    const auto& cert = a->certificate();
    if (!cert) throw NoCertificate("algebra '" + a->label() + "' has no Wedderburn certificate");
    if (block >= cert->blocks.size()) throw ShapeError("simple_module: block index out of range");
    const auto& b = cert->blocks[block];
    return make_bimodule_unchecked(ground_field(), a, b.degree, {Mat::identity(b.degree)}, b.simple_action,
                                   "S" + std::to_string(block) + "(" + a->label() + ")");
}

BimodulePtr zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right) {
    return make_bimodule_unchecked(left, right, 0, std::vector<Mat>(left->dim()), std::vector<Mat>(right->dim()), "0");
}

BimodulePtr external_tensor(const BimodulePtr& m, const BimodulePtr& n) {
    std::vector<Mat> l, r;
    for (const auto& a : m->left_act)
        for (const auto& b : n->left_act) l.push_back(kron(a, b));
    for (const auto& a : m->right_act)
        for (const auto& b : n->right_act) r.push_back(kron(a, b));
    return make_bimodule_unchecked(algebra_tensor(m->left, n->left), algebra_tensor(m->right, n->right), m->dim * n->dim,
                                   std::move(l), std::move(r), m->label + "[x]" + n->label);
}

BimodulePtr change_basis(const BimodulePtr& m, const Mat& q) {
    const Mat qi = inverse(q);
    std::vector<Mat> l, r;
    for (const auto& x : m->left_act) l.push_back(q * x * qi);
    for (const auto& x : m->right_act) r.push_back(q * x * qi);
    return make_bimodule_unchecked(m->left, m->right, m->dim, std::move(l), std::move(r), m->label);
}

BimodulePtr direct_sum(const BimodulePtr& m, const BimodulePtr& n) {
    if (!same_algebra(m->left, n->left) || !same_algebra(m->right, n->right))
        throw ShapeError("direct_sum: algebras differ");
    std::vector<Mat> l, r;
    for (std::size_t i = 0; i < m->left_act.size(); ++i) l.push_back(alg2::direct_sum(m->left_act[i], n->left_act[i]));
    for (std::size_t i = 0; i < m->right_act.size(); ++i)
        r.push_back(alg2::direct_sum(m->right_act[i], n->right_act[i]));
    return make_bimodule_unchecked(m->left, m->right, m->dim + n->dim, std::move(l), std::move(r),
                                   m->label + "+" + n->label);
}

// ---------------------------------------------------------------- intertwiners

bool parallel(const Bimodule& a, const Bimodule& b) {
    return a.dim == b.dim && same_algebra(a.left, b.left) && same_algebra(a.right, b.right);
}

std::vector<std::string> validate(const Intertwiner& f) {
    std::vector<std::string> d;
    const auto& s = *f.source;
    const auto& t = *f.target;
    if (!same_algebra(s.left, t.left) || !same_algebra(s.right, t.right)) return {"source and target algebras differ"};
    if (f.mat.rows() != t.dim || f.mat.cols() != s.dim) return {"matrix shape does not match source and target"};
    for (std::size_t i = 0; i < s.left_act.size(); ++i)
        if (f.mat * s.left_act[i] != t.left_act[i] * f.mat) {
            d.push_back("fails to commute with left action of basis element " + std::to_string(i));
            break;
        }
    for (std::size_t j = 0; j < s.right_act.size(); ++j)
        if (f.mat * s.right_act[j] != t.right_act[j] * f.mat) {
            d.push_back("fails to commute with right action of basis element " + std::to_string(j));
            break;
        }
    return d;
}

bool is_intertwiner(const Intertwiner& f) { return validate(f).empty(); }

Intertwiner identity(const BimodulePtr& m) { return {m, m, Mat::identity(m->dim)}; }

Intertwiner zero_map(const BimodulePtr& source, const BimodulePtr& target) {
    return {source, target, Mat(target->dim, source->dim)};
}

Intertwiner compose(const Intertwiner& g, const Intertwiner& f) {
    if (f.target != g.source && !same_actions(*f.target, *g.source))
        throw ShapeError("compose: target of the first cell is not the source of the second");
    return {f.source, g.target, g.mat * f.mat};
}

bool is_invertible(const Intertwiner& f) { return is_invertible(f.mat); }

Intertwiner inverse(const Intertwiner& f) { return {f.target, f.source, inverse(f.mat)}; }

// ---------------------------------------------------------------- tensor and hom

TensorProduct tensor_over(const BimodulePtr& m, const BimodulePtr& n, std::span<const Vec> generators) {
    if (!same_algebra(m->right, n->left))
        throw ShapeError("tensor_over: middle algebras differ ('" + m->right->label() + "' vs '" + n->left->label() + "')");
    const std::size_t dm = m->dim, dn = n->dim;
    RowReducer acc(dm * dn);
    if (generators.empty()) {
        for (std::size_t b = 0; b < m->right_act.size() && !acc.full(); ++b)
            add_balancing(acc, m->right_act[b], n->left_act[b]);
    } else {
        for (std::size_t g = 0; g < generators.size() && !acc.full(); ++g)
            add_balancing(acc, m->right_action(generators[g]), n->left_action(generators[g]));
    }
    const Cokernel q = quotient(acc.subspace());

    TensorProduct t;
    t.left_factor = m;
    t.right_factor = n;
    t.proj = q.proj;
    t.sect = q.sect;
    std::vector<Mat> l, r;
    for (const auto& a : m->left_act) l.push_back(q.proj * kron_apply_left(a, dn, q.sect));
    for (const auto& c : n->right_act) r.push_back(q.proj * kron_apply_right(dm, c, q.sect));
    t.module = make_bimodule_unchecked(m->left, n->right, q.dim(), std::move(l), std::move(r),
                                       "(" + m->label + "*" + n->label + ")");
    return t;
}

Mat HomSpace::element(std::size_t t) const {
    return Mat::unflatten(space.basis().row(t).transpose(), target->dim, source->dim);
}

Mat HomSpace::to_matrix(const Mat& c) const {
    return Mat::unflatten(space.basis_columns() * c, target->dim, source->dim);
}

Mat HomSpace::coords(const Mat& map) const {
    const Mat v = map.flatten();
    Mat c(space.dim(), 1);
    for (std::size_t k = 0; k < space.dim(); ++k) c(k, 0) = v(space.pivots()[k], 0);
    return c;
}

HomSpace hom_right(const BimodulePtr& m, const BimodulePtr& n) {
    if (!same_algebra(m->right, n->right))
        throw ShapeError("hom_right: right algebras differ ('" + m->right->label() + "' vs '" + n->right->label() + "')");
    const std::size_t dm = m->dim, dn = n->dim;
    RowReducer acc(dm * dn);
    for (std::size_t b = 0; b < m->right_act.size() && !acc.full(); ++b)
        add_commutation(acc, m->right_act[b], n->right_act[b]);
    HomSpace h;
    h.source = m;
    h.target = n;
    h.space = kernel_basis(acc.subspace().basis());

    // (c f) = lambda_N(c) f and (f a) = f lambda_M(a) on flattened matrices
    const Mat k = h.space.basis_columns();
    std::vector<Mat> l, r;
    for (const auto& c : n->left_act) l.push_back(h.space.coordinates(kron_apply_left(c, dm, k)));
    for (const auto& a : m->left_act) r.push_back(h.space.coordinates(kron_apply_right(dn, a.transpose(), k)));
    h.module = make_bimodule_unchecked(n->left, m->left, h.space.dim(), std::move(l), std::move(r),
                                       "hom(" + m->label + "," + n->label + ")");
    return h;
}

BimodulePtr as_right_over_op(const BimodulePtr& m) {
    return make_bimodule_unchecked(m->right->opposite(), m->left->opposite(), m->dim, m->right_act, m->left_act,
                                   m->label + "'");
}

DualModule dual(const BimodulePtr& m, const AlgebraPtr& left_op, const AlgebraPtr& right_op) {
    HomSpace h = hom_right(m, regular(m->right));
    auto mod = make_bimodule_unchecked(left_op, right_op, h.module->dim, h.module->right_act, h.module->left_act,
                                       m->label + "°");
    return {std::move(mod), std::move(h)};
}

DualModule dual(const BimodulePtr& m) { return dual(m, m->left->opposite(), m->right->opposite()); }

Intertwiner intertwiner_adjoint(const Intertwiner& f) {
    const DualModule ds = dual(f.source);
    const DualModule dt = dual(f.target);
    Mat out(ds.module->dim, dt.module->dim);
    for (std::size_t t = 0; t < dt.module->dim; ++t) {
        const Mat c = ds.hom.coords(dt.hom.element(t) * f.mat);
        for (std::size_t s = 0; s < c.rows(); ++s) out(s, t) = c(s, 0);
    }
    return {dt.module, ds.module, std::move(out)};
}

// ---------------------------------------------------------------- canonical isomorphisms

Intertwiner braid_iso(const BimodulePtr& m, const BimodulePtr& n) {
    const TensorProduct t1 = tensor_over(m, n);
    const TensorProduct t2 = tensor_over(as_right_over_op(n), as_right_over_op(m));
    BimodulePtr target = as_right_over_op(t2.module);
    return {t1.module, std::move(target), t2.proj * swap_permutation(m->dim, n->dim) * t1.sect};
}

Intertwiner adjoint_iso(const BimodulePtr& x, const BimodulePtr& m, const BimodulePtr& y) {
    const TensorProduct t = tensor_over(x, m);
    const HomSpace s = hom_right(t.module, y);
    const HomSpace h1 = hom_right(m, y);
    const HomSpace s2 = hom_right(x, h1.module);
    const std::size_t dx = x->dim, dm = m->dim;
    std::vector<Mat> slices;  // proj * kron(e_x, I_M)
    for (std::size_t e = 0; e < dx; ++e) slices.push_back(t.proj * kron(Mat::unit_column(dx, e), Mat::identity(dm)));
    Mat out(s2.space.dim(), s.space.dim());
    for (std::size_t g = 0; g < s.space.dim(); ++g) {
        const Mat gm = s.element(g);
        Mat f2(h1.space.dim(), dx);
        for (std::size_t e = 0; e < dx; ++e) {
            const Mat c = h1.coords(gm * slices[e]);
            for (std::size_t r = 0; r < c.rows(); ++r) f2(r, e) = c(r, 0);
        }
        const Mat c2 = s2.coords(f2);
        for (std::size_t r = 0; r < c2.rows(); ++r) out(r, g) = c2(r, 0);
    }
    return {s.module, s2.module, std::move(out)};
}

Intertwiner double_dual_iso(const BimodulePtr& p) {
    require_semisimple(p->right, "double_dual_iso");
    const DualModule d1 = dual(p);
    const DualModule d2 = dual(d1.module);
    const std::size_t h = d1.module->dim;
    Mat out(d2.module->dim, p->dim);
    for (std::size_t s = 0; s < p->dim; ++s) {
        Mat ev(p->right->dim(), h);  // column t is g_t(e_s)
        for (std::size_t t = 0; t < h; ++t) {
            const Mat col = d1.hom.element(t).col(s);
            for (std::size_t k = 0; k < col.rows(); ++k) ev(k, t) = col(k, 0);
        }
        const Mat c = d2.hom.coords(ev);
        for (std::size_t r = 0; r < c.rows(); ++r) out(r, s) = c(r, 0);
    }
    return {p, d2.module, std::move(out)};
}

Intertwiner tensor_hom_iso(const BimodulePtr& x, const BimodulePtr& p) {
    require_semisimple(p->right, "tensor_hom_iso");
    const AlgebraPtr& a = p->right;
    const HomSpace g = hom_right(p, regular(a));
    const TensorProduct t = tensor_over(x, g.module);
    const HomSpace target = hom_right(p, x);
    const std::size_t dx = x->dim, dg = g.space.dim();
    Mat phi(target.space.dim(), dx * dg);
    for (std::size_t k = 0; k < dx; ++k) {
        Mat xa(dx, a->dim());  // column i is e_k . e_i
        for (std::size_t i = 0; i < a->dim(); ++i) {
            const Mat col = x->right_act[i].col(k);
            for (std::size_t r = 0; r < dx; ++r) xa(r, i) = col(r, 0);
        }
        for (std::size_t u = 0; u < dg; ++u) {
            const Mat c = target.coords(xa * g.element(u));
            for (std::size_t r = 0; r < c.rows(); ++r) phi(r, k * dg + u) = c(r, 0);
        }
    }
    return {t.module, target.module, phi * t.sect};
}

Subspace intertwiner_space(const BimodulePtr& m, const BimodulePtr& n) {
    if (!same_algebra(m->left, n->left) || !same_algebra(m->right, n->right))
        throw ShapeError("intertwiner_space: algebras differ");
    RowReducer acc(m->dim * n->dim);
    for (std::size_t a = 0; a < m->left_act.size(); ++a) add_commutation(acc, m->left_act[a], n->left_act[a]);
    for (std::size_t b = 0; b < m->right_act.size(); ++b) add_commutation(acc, m->right_act[b], n->right_act[b]);
    return kernel_basis(acc.subspace().basis());
}

}  // namespace alg2
