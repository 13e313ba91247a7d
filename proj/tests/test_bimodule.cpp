#include "doctest.h"

#include "alg2/bimodule.hpp"
#include "alg2/error.hpp"

using namespace alg2;

namespace {

/// Row vectors Q^2 as a (Q, M2(Q))-bimodule.
BimodulePtr rows(const AlgebraPtr& m2) { return simple_module(m2, 0); }

/// Column vectors Q^2 as an (M2(Q), Q)-bimodule: E_ij e_k = delta_jk e_i.
BimodulePtr columns(const AlgebraPtr& m2) {
    std::vector<Mat> l;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Mat m(2, 2);
            m(i, j) = 1;
            l.push_back(m);
        }
    return make_bimodule(m2, ground_field(), 2, l, {Mat::identity(2)}, "cols");
}

BimodulePtr free_q(std::size_t n) {
    return make_bimodule(ground_field(), ground_field(), n, {Mat::identity(n)}, {Mat::identity(n)}, "Q^" + std::to_string(n));
}

}  // namespace

TEST_CASE("as_right_over_op") {
    const auto m2 = matrix_algebra(2);
    const auto reg = regular(m2);
    const auto op = as_right_over_op(reg);
    CHECK(op->left == m2->opposite());
    CHECK(validate(*op).empty());
    const auto back = as_right_over_op(op);
    CHECK(back->left_act == reg->left_act);
    CHECK(back->right_act == reg->right_act);
    CHECK(back->left == m2);
}

TEST_CASE("tensor_over") {
    const auto t = tensor_over(free_q(2), free_q(3));
    CHECK(t.module->dim == 6);
    CHECK(t.proj == Mat::identity(6));

    const auto m2 = matrix_algebra(2);
    const auto rc = tensor_over(rows(m2), columns(m2));
    CHECK(rc.module->dim == 1);
    CHECK(rc.proj * rc.sect == Mat::identity(1));

    const auto s = simple_module(product(m2, ground_field()), 0);
    const auto reg = regular(s->right);
    const auto u = tensor_over(s, reg);
    CHECK(u.module->dim == s->dim);
    CHECK(validate(*u.module).empty());
    CHECK(tensor_over(regular(m2), columns(m2)).module->dim == 2);

    CHECK_THROWS_AS(tensor_over(columns(m2), columns(m2)), ShapeError);
}

TEST_CASE("hom_right") {
    const auto m2 = matrix_algebra(2);
    const HomSpace h = hom_right(regular(m2), regular(m2));
    CHECK(h.module->dim == 4);
    CHECK(validate(*h.module).empty());
    CHECK(hom_right(free_q(2), free_q(3)).module->dim == 6);
    CHECK(hom_right(rows(m2), regular(m2)).module->dim == 2);
}

TEST_CASE("dual_module") {
    const auto m2 = matrix_algebra(2);
    const auto d = dual_module(regular(m2));
    CHECK(d->dim == 4);
    CHECK(d->left == m2->opposite());
    CHECK(validate(*d).empty());
    const auto z = zero_bimodule(m2, m2);
    CHECK(dual_module(z)->dim == 0);
    const auto s = simple_module(product(m2, ground_field()), 1);
    CHECK(dual_module(s)->dim == s->dim);
}

TEST_CASE("intertwiner_adjoint") {
    const auto m2 = matrix_algebra(2);
    const auto reg = regular(m2);
    const Intertwiner id = identity(reg);
    CHECK(intertwiner_adjoint(id).mat == Mat::identity(4));
    CHECK(intertwiner_adjoint(zero_map(reg, reg)).mat.is_zero());
    // right multiplication by an element is a map of right modules only; use left-module maps of Q^n instead
    const Intertwiner f{free_q(2), free_q(3), Mat{{1, 2}, {0, 1}, {3, 0}}};
    const Intertwiner g{free_q(3), free_q(2), Mat{{1, 0, 1}, {2, 1, 0}}};
    CHECK(intertwiner_adjoint(compose(g, f)).mat ==
          compose(intertwiner_adjoint(f), intertwiner_adjoint(g)).mat);
}

TEST_CASE("braid_iso") {
    const Intertwiner b = braid_iso(free_q(2), free_q(3));
    Mat swap(6, 6);
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 3; ++y) swap(y * 2 + x, x * 3 + y) = 1;
    CHECK(b.mat == swap);
    const Intertwiner back = braid_iso(free_q(3), free_q(2));
    CHECK(back.mat * b.mat == Mat::identity(6));

    const auto m2 = matrix_algebra(2);
    const Intertwiner rc = braid_iso(rows(m2), columns(m2));
    CHECK(is_invertible(rc));
    CHECK(is_intertwiner(rc));
}

TEST_CASE("adjoint_iso") {
    const Intertwiner a = adjoint_iso(free_q(2), free_q(3), free_q(5));
    CHECK(a.source->dim == 30);
    CHECK(a.target->dim == 30);
    CHECK(is_invertible(a));
    const auto p = product(matrix_algebra(2), ground_field());
    const auto s = simple_module(p, 0);
    const Intertwiner b = adjoint_iso(s, regular(p), regular(p));
    CHECK(is_invertible(b));
    CHECK(is_intertwiner(b));
}

TEST_CASE("double_dual_iso") {
    const Intertwiner one = double_dual_iso(regular(ground_field()));
    CHECK(one.mat == Mat::identity(1));
    const auto p = product(matrix_algebra(2), ground_field());
    const Intertwiner psi = double_dual_iso(regular(p));
    CHECK(is_invertible(psi));
    CHECK(is_intertwiner(psi));
    CHECK_THROWS_AS(double_dual_iso(regular(truncated_polynomial(2))), NotSemisimple);
}

TEST_CASE("tensor_hom_iso") {
    const Intertwiner t = tensor_hom_iso(free_q(2), free_q(3));
    CHECK(t.source->dim == 6);
    CHECK(is_invertible(t));
    const auto p = product(matrix_algebra(2), ground_field());
    const Intertwiner u = tensor_hom_iso(simple_module(p, 0), regular(p));
    CHECK(is_invertible(u));
    CHECK(is_intertwiner(u));
}
