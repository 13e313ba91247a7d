#include "doctest.h"

#include "alg2/error.hpp"
#include "alg2/kv.hpp"
#include "support.hpp"

using namespace alg2;
using namespace testsupport;

namespace {

bool all_pass(const std::vector<Check>& cs) {
    bool ok = true;
    for (const auto& c : cs) {
        if (c.status != Status::Pass) MESSAGE(c.id << " on " << c.instance << ": " << c.reason);
        ok = ok && c.status == Status::Pass;
    }
    return ok;
}

}  // namespace

TEST_CASE("rep_object") {
    const auto r = rep_object(product(matrix_algebra(2), ground_field()));
    CHECK(r.kv.rank == 2);
    CHECK(r.simple_dims == std::vector<std::size_t>{2, 1});
    CHECK(rep_object(ground_field()).simple_dims == std::vector<std::size_t>{1});
    const auto z2 = rep_object(group_algebra_elementary_2(1));
    CHECK(z2.kv.rank == 2);
    CHECK(z2.simple_dims == std::vector<std::size_t>{1, 1});
    CHECK_THROWS_AS(rep_object(truncated_polynomial(2)), NotSemisimple);
}

TEST_CASE("rep_1") {
    const auto m2 = matrix_algebra(2);
    const auto p = product(m2, ground_field());
    CHECK(rep_1(regular(p)).functor.mult == std::vector<std::size_t>{1, 0, 0, 1});
    const RepOneCell r = rep_1(rows(m2));
    CHECK(r.functor.mult == std::vector<std::size_t>{1});
    CHECK(is_permutation(r.functor));
    for (const auto& d : r.decomposition) CHECK(is_invertible(d));
    // projection Q x Q -> Q is not a permutation
    const auto qq = product(ground_field(), ground_field());
    CHECK_FALSE(is_permutation(rep_1(simple_module(qq, 0)).functor));
    // multiplicative up to the compositor
    const RepOneCell a = rep_1(columns(m2, 2)), b = rep_1(rows(m2));
    const RepOneCell ab = rep_1(tensor_over(columns(m2, 2), rows(m2)).module);
    CHECK(kv_compose(a.functor, b.functor).mult == ab.functor.mult);
    const KVNat w = rep_compositor(a, b, ab);
    CHECK(validate(w).empty());
    CHECK(kv_is_invertible(w));
}

TEST_CASE("rep_2") {
    const auto p = product(matrix_algebra(2), ground_field());
    const BimodulePtr m = direct_sum(regular(p), regular(p));
    const RepOneCell rm = rep_1(m);
    CHECK(rep_2(identity(m), rm, rm).blocks == kv_identity_nat(rm.functor).blocks);
    for (const auto& b : rep_2(zero_map(m, m), rm, rm).blocks) CHECK(b.is_zero());
    Rng rng(11);
    const Intertwiner f = random_cell(m, rng);
    const Intertwiner g = random_cell(f.target, rng);
    const RepOneCell rf = rep_1(f.target), rg = rep_1(g.target);
    CHECK(rep_2(compose(g, f), rm, rg).blocks == kv_vcomp(rep_2(f, rm, rf), rep_2(g, rf, rg)).blocks);
}

TEST_CASE("kv strict involution") {
    Rng rng(2);
    for (int k = 0; k < 50; ++k) {
        const KVNat n = random_kv_nat(rng);
        CHECK(validate(n).empty());
        CHECK(kv_op(kv_op(n)) == n);
        CHECK(validate(kv_op(n)).empty());
    }
    // contravariance on 2-cells
    const KVFunctor f{{1}, {1}, {2}};
    const KVNat a{f, f, {Mat{{1, 2}, {3, 4}}}}, b{f, f, {Mat{{0, 1}, {1, 1}}}};
    CHECK(kv_op(kv_vcomp(a, b)) == kv_vcomp(kv_op(b), kv_op(a)));
    CHECK(check_kv_strictness(1000, 7).front().status == Status::Pass);
}

TEST_CASE("kv hcomp of identities is an identity") {
    const KVFunctor f{{2}, {1}, {1, 2}};
    const KVFunctor g{{1}, {2}, {3, 1}};
    const KVNat h = kv_hcomp(kv_identity_nat(f), kv_identity_nat(g));
    CHECK(h.source.mult == kv_compose(f, g).mult);
    CHECK(h.blocks == kv_identity_nat(kv_compose(f, g)).blocks);
}

TEST_CASE("i_component") {
    const IComponent q = i_component(ground_field());
    CHECK(q.unit.blocks == std::vector<Mat>{Mat{{1}}});
    CHECK(q.epsilon.front().mat == Mat{{1}});
    const auto m2 = matrix_algebra(2);
    const IComponent c = i_component(m2);
    CHECK(dual_module(simple_module(m2, 0))->dim == 2);
    CHECK(kv_is_invertible(c.unit));
    CHECK(kv_vcomp(c.unit, c.counit).blocks == kv_identity_nat(c.i).blocks);
    for (const auto& e : c.epsilon) CHECK(is_invertible(e));
}

TEST_CASE("theta") {
    const RepDualityCells cells;
    CHECK(cells.theta(simple_module(ground_field(), 0)).mat == Mat{{1}});
    const auto m2 = matrix_algebra(2);
    const Intertwiner t = cells.theta(simple_module(m2, 0));
    CHECK(is_invertible(t));
    CHECK(t.source->dim == 2);
}

TEST_CASE("duality pseudofunctor equation per simple") {
    const RepDualityCells cells;
    const auto q = ground_field();
    const RepTheoremSides s = rep_theorem_sides(simple_module(q, 0));
    CHECK(s.lhs.mat == Mat{{1}});
    CHECK(s.rhs.mat == Mat{{1}});
    for (const auto& a : {matrix_algebra(2), product(q, q), product(matrix_algebra(2), q), group_algebra_elementary_2(1)})
        for (std::size_t b = 0; b < a->certificate()->blocks.size(); ++b) {
            CAPTURE(a->label());
            CAPTURE(b);
            CHECK(all_pass(check_rep_theorem(simple_module(a, b), cells, "t")));
        }
}

TEST_CASE("corrupting theta breaks the equation") {
    const RepDualityCells bad(Tamper{"theta"});
    const auto cs = check_rep_theorem(simple_module(matrix_algebra(2), 0), bad, "t");
    CHECK_FALSE(all_pass(cs));
}

TEST_CASE("i squares") {
    const auto q = ground_field();
    const auto m2 = matrix_algebra(2);
    const RepDualityCells cells;
    Rng rng(4);
    CHECK(cells.i_cell(simple_module(q, 0), regular(q)).mat == Mat{{1}});
    CHECK(all_pass(check_i_square(simple_module(q, 0), free_q(2), rows(m2), cells, rng, "q")));
    CHECK(all_pass(check_i_square(simple_module(m2, 0), columns(m2, 2), free_q(3), cells, rng, "m2")));
    const auto p = product(m2, q);
    CHECK(all_pass(check_i_square(simple_module(p, 1), regular(p), direct_sum(regular(p), regular(p)), cells, rng, "p")));
}
