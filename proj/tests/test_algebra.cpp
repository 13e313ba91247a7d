#include "doctest.h"

#include "alg2/algebra.hpp"
#include "alg2/error.hpp"

using namespace alg2;

namespace {
std::vector<std::size_t> degrees(const WedderburnCertificate& c) {
    std::vector<std::size_t> d;
    for (const auto& b : c.blocks) d.push_back(b.degree);
    return d;
}
}  // namespace

TEST_CASE("validate") {
    CHECK(validate(*matrix_algebra(2)).ok());
    StructureConstants sc = matrix_algebra(2)->structure_constants();
    sc.c(0, 0, 0) += 1;
    const AlgebraDefects d = validate(sc);
    CHECK_FALSE(d.ok());
    bool assoc = false;
    for (const auto& s : d.defects) assoc = assoc || s.find("associativity") != std::string::npos;
    CHECK(assoc);
    CHECK_THROWS_AS(from_structure_constants(sc), InvalidAlgebra);

    StructureConstants one{"k", 1, {Scalar(1)}, {Scalar(1)}};
    CHECK(validate(one).ok());
}

TEST_CASE("constructors carry certificates") {
    const auto m2 = matrix_algebra(2);
    CHECK(m2->dim() == 4);
    REQUIRE(m2->certificate());
    CHECK(degrees(*m2->certificate()) == std::vector<std::size_t>{2});
    CHECK(validate_certificate(*m2, *m2->certificate()).ok());

    const auto p = product(matrix_algebra(2), matrix_algebra(1));
    CHECK(p->dim() == 5);
    CHECK(degrees(*p->certificate()) == std::vector<std::size_t>{2, 1});
    CHECK(validate_certificate(*p, *p->certificate()).ok());

    const auto g = group_algebra_elementary_2(1);
    CHECK(g->dim() == 2);
    const auto& blocks = g->certificate()->blocks;
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].idempotent == Vec{Scalar(1, 2), Scalar(1, 2)});
    CHECK(blocks[1].idempotent == Vec{Scalar(1, 2), Scalar(-1, 2)});
    CHECK(validate_certificate(*g, *g->certificate()).ok());
    CHECK(validate_certificate(*group_algebra_elementary_2(3), *group_algebra_elementary_2(3)->certificate()).ok());

    CHECK_FALSE(from_structure_constants(m2->structure_constants())->certificate());
}

TEST_CASE("opposite") {
    const auto m2 = matrix_algebra(2);
    const auto op = m2->opposite();
    CHECK(validate(*op).ok());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k) CHECK(op->coeff(i, j, k) == m2->coeff(j, i, k));
    CHECK(op->opposite() == m2);
    CHECK(op->opposite()->same_as(*m2));
    const auto fresh = opposite(opposite(from_structure_constants(m2->structure_constants())));
    CHECK(fresh->same_as(*m2));

    const auto g = group_algebra_elementary_2(2);
    CHECK(g->opposite()->same_as(*g));

    REQUIRE(op->certificate());
    CHECK(validate_certificate(*op, *op->certificate()).ok());
    const auto pop = product(matrix_algebra(2), ground_field())->opposite();
    CHECK(validate_certificate(*pop, *pop->certificate()).ok());
}

TEST_CASE("semisimplicity via the trace form") {
    for (std::size_t n = 1; n <= 3; ++n) CHECK(is_semisimple(*matrix_algebra(n)).semisimple);
    const auto dual_numbers = truncated_polynomial(2);
    const SemisimplicityResult r = is_semisimple(*dual_numbers);
    CHECK_FALSE(r.semisimple);
    REQUIRE(r.radical.dim() == 1);
    CHECK(r.radical.basis() == Mat{{0, 1}});
    CHECK(is_semisimple(*product(matrix_algebra(2), group_algebra_elementary_2(1))).semisimple);
    CHECK(is_semisimple(*dual_numbers->opposite()).semisimple == false);
}

TEST_CASE("wedderburn from scratch") {
    const auto stripped = without_certificate(product(matrix_algebra(2), matrix_algebra(1)));
    const WedderburnCertificate c = wedderburn(*stripped, {7, 32});
    CHECK(degrees(c) == std::vector<std::size_t>{2, 1});
    CHECK(c.blocks[0].idempotent == Vec{1, 0, 0, 1, 0});
    CHECK(c.blocks[1].idempotent == Vec{0, 0, 0, 0, 1});
    CHECK(validate_certificate(*stripped, c).ok());

    const WedderburnCertificate g = wedderburn(*without_certificate(group_algebra_elementary_2(1)));
    REQUIRE(g.blocks.size() == 2);
    CHECK(g.blocks[0].idempotent == Vec{Scalar(1, 2), Scalar(1, 2)});
    CHECK(g.blocks[1].idempotent == Vec{Scalar(1, 2), Scalar(-1, 2)});

    CHECK_THROWS_AS(wedderburn(*truncated_polynomial(2)), NotSemisimple);

    const auto m3 = without_certificate(matrix_algebra(3));
    CHECK(degrees(wedderburn(*m3, {1, 32})) == std::vector<std::size_t>{3});
    CHECK(wedderburn(*stripped, {7, 32}).blocks[0].simple_action == c.blocks[0].simple_action);
}

TEST_CASE("wedderburn rejects non-split algebras") {
    // Q(sqrt 2) = Q[x]/(x^2 - 2)
    StructureConstants sc{"Q(sqrt2)", 2, std::vector<Scalar>(8), {1, 0}};
    sc.c(0, 0, 0) = 1;
    sc.c(0, 1, 1) = 1;
    sc.c(1, 0, 1) = 1;
    sc.c(1, 1, 0) = 2;
    CHECK_THROWS_AS(wedderburn(*from_structure_constants(sc)), NotSplit);
}

TEST_CASE("algebra tensor") {
    const auto t = algebra_tensor(matrix_algebra(2), matrix_algebra(3));
    CHECK(t->dim() == 36);
    CHECK(degrees(*t->certificate()) == std::vector<std::size_t>{6});
    CHECK(validate(*t).ok());
    CHECK(validate_certificate(*t, *t->certificate()).ok());
    const auto a = product(matrix_algebra(2), ground_field());
    CHECK(algebra_tensor(a, ground_field())->same_as(*a));
}

TEST_CASE("center") {
    CHECK(center(*matrix_algebra(2)).dim() == 1);
    CHECK(center(*product(matrix_algebra(2), ground_field())).dim() == 2);
    CHECK(center(*group_algebra_elementary_2(2)).dim() == 4);
}
