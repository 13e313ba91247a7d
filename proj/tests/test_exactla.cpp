#include "doctest.h"

#include "alg2/error.hpp"
#include "alg2/matrix.hpp"

using namespace alg2;

TEST_CASE("scalar parsing is canonical") {
    CHECK(parse_scalar("6/4") == Scalar(3, 2));
    CHECK(to_string(parse_scalar("-6/4")) == "-3/2");
    CHECK(to_string(parse_scalar("7")) == "7");
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("0.5"), ParseError);
}

TEST_CASE("rref") {
    const Rref id = rref(Mat::identity(3));
    CHECK(id.reduced == Mat::identity(3));
    CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});

    const Rref r = rref(Mat{{1, 2}, {2, 4}});
    CHECK(r.reduced == Mat{{1, 2}, {0, 0}});
    CHECK(r.pivots == std::vector<std::size_t>{0});

    const Rref z = rref(Mat(2, 3));
    CHECK(z.reduced == Mat(2, 3));
    CHECK(z.pivots.empty());
}

TEST_CASE("kernel_basis") {
    CHECK(kernel_basis(Mat::identity(4)).dim() == 0);
    const Subspace k = kernel_basis(Mat{{1, 2}, {2, 4}});
    REQUIRE(k.dim() == 1);
    // echelon normalization of (-2, 1)
    CHECK(k.basis() == Mat{{1, Scalar(-1, 2)}});
    CHECK(Mat{{1, 2}, {2, 4}} * k.basis_columns() == Mat(2, 1));
    CHECK(kernel_basis(Mat(2, 3)).dim() == 3);
}

TEST_CASE("solve") {
    const Mat rhs{{3}, {-1}};
    CHECK(solve(Mat::identity(2), rhs) == rhs);
    const Mat m{{1, 2}, {2, 4}};
    const auto x = solve(m, Mat{{1}, {2}});
    REQUIRE(x);
    CHECK(m * *x == Mat{{1}, {2}});
    CHECK(*x == Mat{{1}, {0}});
    CHECK_FALSE(solve(m, Mat{{1}, {0}}));
}

TEST_CASE("cokernel") {
    const Cokernel c0 = cokernel(Mat(3, 2));
    CHECK(c0.dim() == 3);
    CHECK(c0.proj == Mat::identity(3));

    CHECK(cokernel(Mat::identity(3)).dim() == 0);

    const Mat span{{1}, {1}};
    const Cokernel c = cokernel(span);
    CHECK(c.dim() == 1);
    CHECK(c.proj * c.sect == Mat::identity(1));
    CHECK((c.proj * span).is_zero());
}

TEST_CASE("kron") {
    const Mat a{{1, 2}, {3, 4}};
    CHECK(kron(a, Mat::identity(1)) == a);
    CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
    CHECK(kron(Mat{{2}}, Mat{{3}}) == Mat{{6}});
    const Mat b{{0, 1}, {1, 0}}, c{{1, 1}, {0, 1}}, d{{2, 0}, {1, 1}};
    CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
}

TEST_CASE("rank-nullity and inverse") {
    const Mat m{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
    CHECK(rank(m) + kernel_basis(m).dim() == 3);
    CHECK_THROWS_AS(inverse(m), SingularMatrix);
    const Mat g{{2, 1}, {1, 1}};
    CHECK(inverse(g) * g == Mat::identity(2));
    CHECK(direct_sum(g, Mat{{5}}) == Mat{{2, 1, 0}, {1, 1, 0}, {0, 0, 5}});
}

TEST_CASE("stacked row space matches one-shot reduction") {
    const Mat a{{1, 2, 0}, {0, 0, 1}};
    const Mat b{{1, 2, 1}, {3, 6, 0}};
    const std::vector<Mat> blocks{a, b};
    CHECK(stacked_row_space(blocks, 3).basis() == Subspace::row_space(vstack(a, b)).basis());
}
