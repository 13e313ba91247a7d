#include "doctest.h"

#include "alg2/duality.hpp"
#include "alg2/error.hpp"
#include "support.hpp"

using namespace alg2;
using namespace testsupport;

namespace {

std::vector<AlgebraPtr> small_algebras() {
    return {ground_field(), product(ground_field(), ground_field()), matrix_algebra(2),
            product(matrix_algebra(2), ground_field()), group_algebra_elementary_2(1)};
}

}  // namespace

TEST_CASE("comp_cell") {
    const auto q = ground_field();
    const Intertwiner x = comp_cell(regular(q), regular(q));
    CHECK(x.mat == Mat{{1}});

    const auto m2 = matrix_algebra(2);
    const auto p = product(m2, q);
    for (const auto& [m, n] : std::vector<std::pair<BimodulePtr, BimodulePtr>>{
             {rows(m2), columns(m2, 2)}, {columns(m2, 2), rows(m2)}, {simple_module(p, 0), regular(p)},
             {free_q(2), rows(m2)}}) {
        const Intertwiner c = comp_cell(m, n);
        CHECK(is_intertwiner(c));
        CHECK(is_invertible(c));
        CHECK(c.source->dim == c.target->dim);
    }
    CHECK_THROWS_AS(comp_cell(regular(truncated_polynomial(2)), regular(truncated_polynomial(2))), NotSemisimple);
}

TEST_CASE("chi naturality, cocycle and unit compatibility") {
    const auto m2 = matrix_algebra(2);
    const auto p = product(m2, ground_field());
    const DualityCells cells;
    Rng rng(5);
    const BimodulePtr m = columns(m2, 2), n = rows(m2), s = simple_module(p, 0);
    CHECK(check_chi_naturality(random_cell(m, rng), random_cell(n, rng), cells, "cols,rows").status == Status::Pass);
    CHECK(check_chi_cocycle(m, n, columns(m2, 2), cells, "cols,rows,cols").status == Status::Pass);
    CHECK(check_chi_cocycle(s, regular(p), regular(p), cells, "s,p,p").status == Status::Pass);
    for (const auto& b : {m, n, s, regular(p)})
        for (const auto& c : check_unit_compatibility(b, cells, b->label)) CHECK(c.status == Status::Pass);
    const Intertwiner f = random_cell(s, rng);
    for (const auto& c : check_functoriality(f, random_cell(f.target, rng), "s")) CHECK(c.status == Status::Pass);
}

TEST_CASE("corrupting chi breaks naturality or unit compatibility") {
    const auto m2 = matrix_algebra(2);
    const DualityCells bad(Tamper{"chi"});
    Rng rng(1);
    const BimodulePtr m = columns(m2, 2), n = rows(m2);
    const bool nat = check_chi_naturality(random_cell(m, rng), random_cell(n, rng), bad, "x").status == Status::Fail;
    bool unit = false;
    for (const auto& c : check_unit_compatibility(n, bad, "n")) unit = unit || c.status == Status::Fail;
    CHECK((nat || unit));
}

TEST_CASE("unit_cell") {
    CHECK(unit_cell(ground_field()).mat == Mat{{1}});
    const auto m2 = matrix_algebra(2);
    const Intertwiner u = unit_cell(m2);
    CHECK(u.mat.rows() == 4);
    CHECK(u.mat.cols() == 4);
    CHECK(is_invertible(u));
    CHECK(is_intertwiner(u));
    // the identity map goes to the unit
    const DualModule d = dual(regular(m2));
    CHECK(u.mat * d.hom.coords(Mat::identity(4)) == Mat::column(m2->unit()));
    // twice: (reg A)°° -> A inverts psi
    const DualityCells cells;
    const Intertwiner back = compose(cells.double_unit(m2), double_dual_iso(regular(m2)));
    CHECK(back.mat == Mat::identity(4));
}

TEST_CASE("zeta") {
    CHECK(zeta(ground_field()).mat == Mat{{1}});
    for (const auto& a : small_algebras()) {
        const Intertwiner z = zeta(a);
        CHECK(is_intertwiner(z));
        CHECK(z.mat * unit_cell(a).mat == Mat::identity(a->dim()));
    }
    CHECK_THROWS_AS(zeta(truncated_polynomial(2)), NotSemisimple);
}

TEST_CASE("y_cell") {
    const auto q = ground_field();
    CHECK(y_cell(regular(q)).mat == Mat{{1}});
    const auto m2 = matrix_algebra(2);
    const DualityCells cells;
    for (const auto& m : {regular(m2), rows(m2), columns(m2, 2)}) {
        const Intertwiner y = y_cell(m);
        CHECK(is_intertwiner(y));
        CHECK(is_invertible(y));
    }
    // on the regular bimodule y is psi conjugated by unitors
    const BimodulePtr reg = regular(m2);
    const Intertwiner psi = double_dual_iso(reg);
    CHECK(y_cell(reg).mat == inverse(left_unitor(psi.target)).mat * psi.mat * right_unitor(reg).mat);
    CHECK(check_y_composite(columns(m2, 2), rows(m2), cells, "cols,rows").status == Status::Pass);
    CHECK(check_y_composite(rows(m2), columns(m2, 2), cells, "rows,cols").status == Status::Pass);
    Rng rng(3);
    CHECK(check_y_naturality(random_cell(columns(m2, 2), rng), cells, "cols").status == Status::Pass);
}

TEST_CASE("zeta compatibility holds for the small algebras") {
    for (const auto& a : small_algebras()) {
        CAPTURE(a->label());
        const ZetaCompatibility z = zeta_compatibility(a);
        CHECK(z.lhs.mat == z.rhs.mat);
        CHECK(z.lhs.mat.rows() == a->dim());
        for (const auto& c : check_involution_object(a, DualityCells{}, a->label())) {
            CAPTURE(c.id);
            CAPTURE(c.reason);
            CHECK(c.status == Status::Pass);
        }
    }
    const auto z = zeta_compatibility(ground_field());
    CHECK(z.lhs.mat == Mat{{1}});
}

TEST_CASE("corrupting y breaks the zeta compatibility") {
    const auto a = matrix_algebra(2);
    const ZetaCompatibility z = zeta_compatibility(a, DualityCells(Tamper{"y"}));
    CHECK(z.lhs.mat != z.rhs.mat);
}

TEST_CASE("double dual sanity") {
    const auto m2 = matrix_algebra(2);
    for (const auto& m : {rows(m2), columns(m2, 2), regular(product(m2, ground_field()))}) {
        CHECK(dual_module(m)->dim == m->dim);
        CHECK(is_invertible(double_dual_iso(m)));
    }
    CHECK(m2->opposite()->opposite() == m2);
}
