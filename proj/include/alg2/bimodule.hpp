#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "alg2/algebra.hpp"
#include "alg2/matrix.hpp"

namespace alg2 {

/// Finite-dimensional (A, B)-bimodule given by action matrices on a fixed basis.
///
/// left_act[i] is the matrix of m -> e_i . m and right_act[j] the matrix of m -> m . e_j,
/// both acting on column vectors. With this convention right_act(b b') = right_act(b') *
/// right_act(b), and the two families commute.
struct Bimodule {
    AlgebraPtr left;
    AlgebraPtr right;
    std::size_t dim = 0;
    std::vector<Mat> left_act;
    std::vector<Mat> right_act;
    std::string label;

    Mat left_action(const Vec& a) const;
    Mat right_action(const Vec& b) const;
};

using BimodulePtr = std::shared_ptr<const Bimodule>;

/// Validates and wraps. Throws InvalidBimodule.
BimodulePtr make_bimodule(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_act,
                          std::vector<Mat> right_act, std::string label = {});
/// For internal constructions whose axioms hold by construction.
BimodulePtr make_bimodule_unchecked(AlgebraPtr left, AlgebraPtr right, std::size_t dim, std::vector<Mat> left_act,
                                    std::vector<Mat> right_act, std::string label = {});

std::vector<std::string> validate(const Bimodule& m);

/// _A A_A with left and right multiplication.
BimodulePtr regular(const AlgebraPtr& a);
/// A right A-module, packaged as a (Q, A)-bimodule.
BimodulePtr right_module(const AlgebraPtr& a, std::size_t dim, std::vector<Mat> right_act, std::string label = {});
/// Simple right module of block i of a certified algebra.
BimodulePtr simple_module(const AlgebraPtr& a, std::size_t block);
BimodulePtr zero_bimodule(const AlgebraPtr& left, const AlgebraPtr& right);
/// (A (x) A', B (x) B')-bimodule M (x)_Q N with Kronecker actions.
BimodulePtr external_tensor(const BimodulePtr& m, const BimodulePtr& n);
/// Conjugate all actions by an invertible base change q: new basis vectors are the columns of q^{-1}.
BimodulePtr change_basis(const BimodulePtr& m, const Mat& q);
BimodulePtr direct_sum(const BimodulePtr& m, const BimodulePtr& n);

/// Linear map between bimodules over the same pair of algebras; a 2-cell.
struct Intertwiner {
    BimodulePtr source;
    BimodulePtr target;
    Mat mat;
};

/// Algebras agree, shapes agree, and mat commutes with both actions.
std::vector<std::string> validate(const Intertwiner& f);
bool is_intertwiner(const Intertwiner& f);

Intertwiner identity(const BimodulePtr& m);
Intertwiner zero_map(const BimodulePtr& source, const BimodulePtr& target);
/// g after f. Throws ShapeError when f.target and g.source differ.
Intertwiner compose(const Intertwiner& g, const Intertwiner& f);
bool is_invertible(const Intertwiner& f);
Intertwiner inverse(const Intertwiner& f);
/// Same dims and algebras; the action matrices are not compared.
bool parallel(const Bimodule& a, const Bimodule& b);

/// M (x)_B N as the cokernel of the relations xb (x) y - x (x) by inside the Kronecker space.
struct TensorProduct {
    BimodulePtr module;
    BimodulePtr left_factor;
    BimodulePtr right_factor;
    Mat proj;  ///< dim(M) dim(N) -> dim(T)
    Mat sect;  ///< dim(T) -> dim(M) dim(N), proj * sect = 1
};

/// Relations are imposed for every basis element of the middle algebra unless a
/// generating set of that algebra is supplied.
TensorProduct tensor_over(const BimodulePtr& m, const BimodulePtr& n, std::span<const Vec> generators = {});

/// hom_B(M, N) for M an (A, B)- and N a (C, B)-bimodule, as a (C, A)-bimodule via
/// (c f)(x) = c f(x) and (f a)(x) = f(a x). Elements are row-major flattened
/// dim(N) x dim(M) matrices; the module basis is the echelon basis of the solution space.
struct HomSpace {
    BimodulePtr module;
    BimodulePtr source;
    BimodulePtr target;
    Subspace space;

    Mat element(std::size_t t) const;
    /// Coordinates (dim x 1) to a dim(N) x dim(M) matrix.
    Mat to_matrix(const Mat& coords) const;
    /// Matrix to coordinates; the matrix must lie in the space.
    Mat coords(const Mat& map) const;
};

HomSpace hom_right(const BimodulePtr& m, const BimodulePtr& n);

/// An (A, B)-bimodule read as a (B^op, A^op)-bimodule on the same space.
BimodulePtr as_right_over_op(const BimodulePtr& m);

/// M° = hom_B(M, B) read as an (A^op, B^op)-bimodule, together with the hom embedding.
struct DualModule {
    BimodulePtr module;
    HomSpace hom;
};

DualModule dual(const BimodulePtr& m);
/// Same, with the opposite algebras supplied by the caller.
DualModule dual(const BimodulePtr& m, const AlgebraPtr& left_op, const AlgebraPtr& right_op);
inline BimodulePtr dual_module(const BimodulePtr& m) { return dual(m).module; }

/// f° = precomposition with f, from target° to source°.
Intertwiner intertwiner_adjoint(const Intertwiner& f);

/// M (x)_A N -> N (x)_{A^op} M induced by x (x) y -> y (x) x. For M an (X, A)- and N an
/// (A, Y)-bimodule the target is the swap of N' (x) M' back to an (X, Y)-bimodule.
Intertwiner braid_iso(const BimodulePtr& m, const BimodulePtr& n);

/// hom_B(X (x)_A M, Y) -> hom_A(X, hom_B(M, Y)), g -> (x -> (m -> g(x (x) m))).
Intertwiner adjoint_iso(const BimodulePtr& x, const BimodulePtr& m, const BimodulePtr& y);

/// psi_P : P -> P°°, p -> (g -> g(p)). Requires the right algebra of P to be semisimple.
Intertwiner double_dual_iso(const BimodulePtr& p);

/// X (x)_A hom_A(P, A) -> hom_A(P, X), x (x) g -> (p -> x g(p)). Requires the right
/// algebra of P (and X) to be semisimple.
Intertwiner tensor_hom_iso(const BimodulePtr& x, const BimodulePtr& p);

/// Bimodule maps M -> N as flattened dim(N) x dim(M) matrices.
Subspace intertwiner_space(const BimodulePtr& m, const BimodulePtr& n);

/// Throws NotSemisimple naming the algebra.
void require_semisimple(const AlgebraPtr& a, const char* where);

}  // namespace alg2
