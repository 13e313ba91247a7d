#include "doctest.h"

#include <chrono>

#include "alg2/error.hpp"
#include "alg2/morita.hpp"
#include "support.hpp"

using namespace alg2;
using namespace testsupport;

TEST_CASE("compose1") {
    const auto m2 = matrix_algebra(2);
    const auto cols = columns(m2, 2);
    const Intertwiner l = left_unitor(cols);
    CHECK(l.source->dim == cols->dim);
    CHECK(is_invertible(l));
    CHECK(is_intertwiner(l));
    CHECK(compose1(rows(m2), cols).module->dim == 1);
    CHECK(compose1(free_q(2), free_q(3)).module->dim == 6);
}

TEST_CASE("hcomp2 and vcomp2") {
    const auto p = product(matrix_algebra(2), ground_field());
    const auto s = simple_module(p, 0);
    const auto reg = regular(p);
    const Intertwiner h = hcomp2(identity(s), identity(reg));
    CHECK(h.mat == Mat::identity(h.source->dim));
    CHECK(vcomp2(identity(reg), zero_map(reg, reg)).mat.is_zero());

    const Intertwiner f{free_q(2), free_q(2), Mat{{1, 2}, {3, 4}}};
    const Intertwiner f2{free_q(2), free_q(2), Mat{{0, 1}, {1, 1}}};
    const Intertwiner g{free_q(3), free_q(3), Mat{{1, 0, 2}, {0, 1, 0}, {1, 1, 1}}};
    const Intertwiner g2{free_q(3), free_q(3), Mat{{2, 0, 0}, {0, 1, 3}, {0, 0, 1}}};
    CHECK(hcomp2(vcomp2(f, f2), vcomp2(g, g2)).mat == vcomp2(hcomp2(f, g), hcomp2(f2, g2)).mat);
}

TEST_CASE("associator and unitors over Q are identities") {
    const auto a = associator(free_q(2), free_q(3), free_q(2));
    CHECK(a.mat == Mat::identity(12));
    CHECK(left_unitor(free_q(3)).mat == Mat::identity(3));
    CHECK(right_unitor(free_q(3)).mat == Mat::identity(3));
}

TEST_CASE("pentagon and triangle") {
    const auto m2 = matrix_algebra(2);
    const auto p = product(m2, ground_field());
    const auto reg = regular(p);
    const auto s = simple_module(p, 0);
    const auto sum = direct_sum(reg, reg);
    const PentagonSides ps = pentagon_sides(s, reg, sum, reg);
    CHECK(ps.lhs.mat == ps.rhs.mat);
    CHECK(is_intertwiner(ps.lhs));
    const TriangleSides ts = triangle_sides(s, sum);
    CHECK(ts.lhs.mat == ts.rhs.mat);
}

TEST_CASE("right_adjoint") {
    const auto p = product(matrix_algebra(2), ground_field());
    const AdjunctionData self = right_adjoint(regular(p));
    CHECK(self.g->dim == p->dim());
    CHECK(is_invertible(self.unit));
    CHECK(is_invertible(self.counit));

    const auto m2 = matrix_algebra(2);
    const AdjunctionData r = right_adjoint(rows(m2));
    CHECK(r.g->dim == 2);
    CHECK(r.counit.source->dim == 4);
    CHECK(is_invertible(r.counit));
    CHECK(r.unit.target->dim == 1);
    CHECK(is_invertible(r.unit));
    CHECK(triangle_identities(r).ok());
    CHECK(is_intertwiner(r.unit));
    CHECK(is_intertwiner(r.counit));

    CHECK_THROWS_AS(right_adjoint(regular(truncated_polynomial(2))), NotSemisimple);
}

TEST_CASE("is_equivalence") {
    for (std::size_t n : {2u, 3u}) CHECK(is_equivalence(rows(matrix_algebra(n))).equivalence);
    const auto qq = product(ground_field(), ground_field());
    const auto proj = right_module(qq, 1, {Mat{{1}}, Mat{{0}}}, "pr1");
    CHECK_FALSE(is_equivalence(proj).equivalence);
    CHECK(is_equivalence(regular(qq)).equivalence);
}

TEST_CASE("dual objects") {
    const auto q = dual_object_data(ground_field());
    CHECK(q.zigzag_ok);
    CHECK(q.ev->dim == 1);
    const auto m2 = dual_object_data(matrix_algebra(2));
    CHECK(m2.zigzag_ok);
    CHECK(m2.zigzag_first->dim == 4);
    CHECK(dual_object_data(truncated_polynomial(2)).zigzag_ok);
}

TEST_CASE("dual objects for a product algebra stay fast") {
    const auto t0 = std::chrono::steady_clock::now();
    CHECK(dual_object_data(product(matrix_algebra(2), ground_field())).zigzag_ok);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    MESSAGE("product zig-zag took " << secs << " s");
    CHECK(secs < 30.0);
}
