#pragma once

#include <cstdint>
#include <vector>

#include "alg2/corpus.hpp"
#include "alg2/duality.hpp"
#include "alg2/report.hpp"

namespace alg2 {

// ---------------------------------------------------------------- skeletal KV

/// Vect^rank.
struct KVSpace {
    std::size_t rank = 0;
    friend bool operator==(const KVSpace&, const KVSpace&) = default;
};

/// Exact functor Vect^s -> Vect^t: mult(j, i) is the dimension of the multiplicity
/// space of the j-th target simple in the image of the i-th source simple.
struct KVFunctor {
    KVSpace source;
    KVSpace target;
    std::vector<std::size_t> mult;  ///< row-major target.rank x source.rank

    std::size_t at(std::size_t j, std::size_t i) const { return mult[j * source.rank + i]; }
    friend bool operator==(const KVFunctor&, const KVFunctor&) = default;
};

/// Natural transformation between parallel functors: one linear map per (j, i) between
/// multiplicity spaces, shape target.at(j, i) x source.at(j, i).
struct KVNat {
    KVFunctor source;
    KVFunctor target;
    std::vector<Mat> blocks;  ///< row-major like mult

    const Mat& at(std::size_t j, std::size_t i) const { return blocks[j * source.source.rank + i]; }
    friend bool operator==(const KVNat&, const KVNat&) = default;
};

KVFunctor kv_identity(const KVSpace& s);
/// g after f; multiplicities multiply as matrices.
KVFunctor kv_compose(const KVFunctor& f, const KVFunctor& g);
KVNat kv_identity_nat(const KVFunctor& f);
/// Vertical composite: a first, then b (blockwise b * a).
KVNat kv_vcomp(const KVNat& a, const KVNat& b);
/// Horizontal composite of a: F => F' (s -> t) and b: G => G' (t -> u), a block of
/// (G F) being the direct sum over k of kron(G_{jk}, F_{ki}).
KVNat kv_hcomp(const KVNat& a, const KVNat& b);
/// Shape invariants. Empty when valid.
std::vector<std::string> validate(const KVNat& n);
bool kv_is_invertible(const KVNat& n);

/// The strict involution on skeletal KV: identity on objects and functors; a 2-cell
/// F => G becomes G => F with every block transposed.
KVSpace kv_op(const KVSpace& s);
KVFunctor kv_op(const KVFunctor& f);
KVNat kv_op(const KVNat& n);

/// A random valid 2-cell with ranks <= max_rank and multiplicities <= max_mult.
KVNat random_kv_nat(Rng& rng, std::size_t max_rank = 4, std::size_t max_mult = 3);

// ---------------------------------------------------------------- Rep

struct RepImage {
    std::string label;
    KVSpace kv;
    std::vector<std::size_t> simple_dims;
};

/// Throws NotSemisimple or NoCertificate.
RepImage rep_object(const AlgebraPtr& a);

/// Rep of an (A, B)-bimodule with the data exhibiting S_i (x)_A M as a sum of the T_j.
struct RepOneCell {
    BimodulePtr module;
    KVFunctor functor;
    std::vector<TensorProduct> images;                ///< S_i (x)_A M per source simple i
    std::vector<std::vector<HomSpace>> multiplicity;  ///< [i][j] = hom_B(T_j, S_i (x)_A M)
    /// Per i, the evaluation map sum_j T_j (x) hom(T_j, S_i M) -> S_i M; must be invertible.
    std::vector<Mat> decomposition;
};

RepOneCell rep_1(const BimodulePtr& m);
/// Postcomposition with id (x) f on each multiplicity space.
KVNat rep_2(const Intertwiner& f, const RepOneCell& source, const RepOneCell& target);
KVNat rep_2(const Intertwiner& f);

/// Witness Rep(N) Rep(M) => Rep(M (x) N): (g, h) -> associator after (h (x) id_N) after g.
KVNat rep_compositor(const RepOneCell& m, const RepOneCell& n, const RepOneCell& mn);

bool is_permutation(const KVFunctor& f);

// ---------------------------------------------------------------- duality pseudofunctor data

/// Cells of (i, i^box, epsilon, theta). A Tamper corrupts "i", "epsilon" or "theta".
class RepDualityCells {
public:
    RepDualityCells() = default;
    /// The inner duality cells stay uncorrupted: a mutation only reaches the cells this class owns.
    explicit RepDualityCells(Tamper t) : tamper_(std::move(t)) {}

    /// (i_M)_V: V° (x)_{A^op} M° -> (V (x)_A M)°.
    Intertwiner i_cell(const BimodulePtr& v, const BimodulePtr& m) const;
    /// (epsilon_A)_V = psi_V: V -> V°°.
    Intertwiner epsilon(const BimodulePtr& v) const;
    /// (theta_A)_V: V°° -> V (x)_A A, psi_V inverse then the inverse right unitor.
    Intertwiner theta(const BimodulePtr& v) const;
    const DualityCells& duality() const { return duality_; }

private:
    Tamper tamper_;
    DualityCells duality_;
};

/// i_A on the skeleton, its pseudo-inverse and the unit, with per-simple module data.
struct IComponent {
    KVFunctor i;                       ///< Rep(A)^op -> Rep(A^op)
    KVFunctor i_box;                   ///< Rep(A^op)^op -> Rep(A)
    KVNat unit;                        ///< id => i_box i, 1x1 blocks
    KVNat counit;                      ///< i i_box => id, from the triangle identity
    std::vector<Intertwiner> matches;  ///< S_i° -> i-th simple of A^op
    std::vector<Intertwiner> epsilon;  ///< psi at each simple
};

IComponent i_component(const AlgebraPtr& a, const RepDualityCells& cells = {});

/// The two composites of the Rep duality equation, as maps V°°° -> V° (x)_{A^op} (reg A)°.
struct RepTheoremSides {
    Intertwiner lhs;
    Intertwiner rhs;
};
RepTheoremSides rep_theorem_sides(const BimodulePtr& v, const RepDualityCells& cells = {});

/// All checks for one simple V of A: both composites equal, psi_{V°} = (psi_V°)^{-1},
/// the triangle through 1_V°, the square through zeta, invertibility, dims.
std::vector<Check> check_rep_theorem(const BimodulePtr& v, const RepDualityCells& cells, const std::string& instance);
/// i_M at V: invertibility, naturality in f: M -> M', unit law on reg A, compatibility with
/// composition M then N, and the theta modification square.
std::vector<Check> check_i_square(const BimodulePtr& v, const BimodulePtr& m, const BimodulePtr& n,
                                  const RepDualityCells& cells, Rng& rng, const std::string& instance);

// ---------------------------------------------------------------- suites

/// Rep suite: rep_object, i_component, the theorem per simple, i squares, rep_1 and rep_2
/// functoriality, and strictness of the KV involution.
std::vector<Check> verify_rep(const Corpus& c, const VerifyOptions& opts);
/// kv_strict_involution twice on `count` random cells; bitwise comparison.
std::vector<Check> check_kv_strictness(std::size_t count, std::uint64_t seed);

}  // namespace alg2
