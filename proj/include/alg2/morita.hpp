#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "alg2/bimodule.hpp"

namespace alg2 {

/// N after M, i.e. M (x)_B N for M: A -> B and N: B -> C.
TensorProduct compose1(const BimodulePtr& m, const BimodulePtr& n);

/// f (x) g on quotients: for f: M -> M', g: N -> N' the map M (x) N -> M' (x) N' induced by kron(f, g).
Intertwiner hcomp2(const Intertwiner& f, const Intertwiner& g);
/// Vertical composite: f first, then g.
Intertwiner vcomp2(const Intertwiner& f, const Intertwiner& g);

/// (M (x) N) (x) P -> M (x) (N (x) P).
Intertwiner associator(const BimodulePtr& m, const BimodulePtr& n, const BimodulePtr& p);
/// A (x)_A M -> M, a (x) x -> a x.
Intertwiner left_unitor(const BimodulePtr& m);
/// M (x)_B B -> M, x (x) b -> x b.
Intertwiner right_unitor(const BimodulePtr& m);

/// Both sides of the pentagon for a composable chain, as maps ((MN)P)Q -> M(N(PQ)).
struct PentagonSides {
    Intertwiner lhs;
    Intertwiner rhs;
};
PentagonSides pentagon_sides(const BimodulePtr& m, const BimodulePtr& n, const BimodulePtr& p, const BimodulePtr& q);

/// Both sides of the triangle for M: A -> B, N: B -> C, as maps (M B) N -> M N.
struct TriangleSides {
    Intertwiner lhs;
    Intertwiner rhs;
};
TriangleSides triangle_sides(const BimodulePtr& m, const BimodulePtr& n);

/// M: A -> B with right adjoint g = hom_B(M, B): B -> A.
struct AdjunctionData {
    BimodulePtr f;
    BimodulePtr g;
    Intertwiner unit;    ///< A -> M (x)_B g
    Intertwiner counit;  ///< g (x)_A M -> B
};

/// The two triangle composites; each must be an identity.
struct TriangleCheck {
    Mat first;   ///< M -> M
    Mat second;  ///< g -> g
    bool ok() const;
};
TriangleCheck triangle_identities(const AdjunctionData& adj);

/// Throws NotSemisimple (right algebra), DualBasisNotFound, or Error when a triangle identity fails.
AdjunctionData right_adjoint(const BimodulePtr& m);

struct EquivalenceResult {
    bool equivalence = false;
    std::optional<AdjunctionData> witness;
};
EquivalenceResult is_equivalence(const BimodulePtr& m);

/// Some invertible intertwiner x -> y, searched among basis elements of the intertwiner space and
/// then seeded random combinations.
std::optional<Intertwiner> find_isomorphism(const BimodulePtr& x, const BimodulePtr& y, std::uint64_t seed = 0,
                                            std::size_t tries = 32);

struct DualObjectData {
    AlgebraPtr op;
    BimodulePtr ev;    ///< A as an (A (x) A^op, Q)-bimodule
    BimodulePtr coev;  ///< A as a (Q, A^op (x) A)-bimodule
    BimodulePtr zigzag_first;   ///< (A (x) coev) followed by (ev (x) A)
    BimodulePtr zigzag_second;  ///< (coev (x) A^op) followed by (A^op (x) ev)
    std::optional<Intertwiner> first_iso;   ///< zigzag_first -> A
    std::optional<Intertwiner> second_iso;  ///< zigzag_second -> A^op
    bool zigzag_ok = false;
};
DualObjectData dual_object_data(const AlgebraPtr& a);

}  // namespace alg2
