#pragma once

#include <vector>

#include "alg2/corpus.hpp"
#include "alg2/morita.hpp"
#include "alg2/report.hpp"

namespace alg2 {

/// Coherence cells of the involution (-)°: A -> A^op, M -> hom_B(M, B), f -> f°.
///
/// All cells are built from canonical isomorphisms; a Tamper corrupts the named cell
/// ("chi", "upsilon", "zeta", "y") wherever it is produced.
class DualityCells {
public:
    DualityCells() = default;
    explicit DualityCells(Tamper t) : tamper_(std::move(t)) {}

    /// chi_{M,N}: (M (x)_B N)° -> M° (x)_{B^op} N°, via
    /// hom_C(MN, C) = hom_B(M, hom_C(N, C)) = hom_C(N, C) (x)_B hom_B(M, B) and the swap.
    Intertwiner chi(const BimodulePtr& m, const BimodulePtr& n) const;
    /// upsilon_A: (reg A)° = hom_A(A, A) -> reg(A^op), f -> f(1).
    Intertwiner upsilon(const AlgebraPtr& a) const;
    /// zeta_A: reg(A^op) -> (reg A)°, the inverse of upsilon_A.
    Intertwiner zeta(const AlgebraPtr& a) const;
    /// y_M: M (x)_B B -> A (x)_A M°°, unitor then psi_M then inverse unitor.
    Intertwiner y(const BimodulePtr& m) const;
    /// Compositor of the double dual: (MN)°° -> M°° N°°, chi_{M°,N°} after (chi_{M,N}°)^{-1}.
    Intertwiner kappa(const BimodulePtr& m, const BimodulePtr& n) const;
    /// Unit constraint of the double dual: (reg A)°° -> reg A, upsilon_{A^op} after (upsilon_A^{-1})°.
    Intertwiner double_unit(const AlgebraPtr& a) const;

private:
    Tamper tamper_;
};

/// Untampered conveniences.
Intertwiner comp_cell(const BimodulePtr& m, const BimodulePtr& n);
Intertwiner unit_cell(const AlgebraPtr& a);
Intertwiner zeta(const AlgebraPtr& a);
Intertwiner y_cell(const BimodulePtr& m);
/// The 1-cell y_A, the regular bimodule.
inline BimodulePtr y_obj(const AlgebraPtr& a) { return regular(a); }

/// Both pasted 2-cells A (x)_A A -> A (x)_A (reg A^op)° of the zeta compatibility:
/// lhs = id (x) zeta_{A^op}, rhs = (id (x) zeta_A°) after y_{reg A}.
struct ZetaCompatibility {
    Intertwiner lhs;
    Intertwiner rhs;
};
ZetaCompatibility zeta_compatibility(const AlgebraPtr& a, const DualityCells& cells = {});

// ---------------------------------------------------------------- per-instance checks

/// chi_{M,N} after (f (x) g)° equals (f° (x) g°) after chi_{M',N'}.
Check check_chi_naturality(const Intertwiner& f, const Intertwiner& g, const DualityCells& cells,
                           const std::string& instance);
/// alpha° route and chi route from ((MN)P)° to M°(N°P°) agree.
Check check_chi_cocycle(const BimodulePtr& m, const BimodulePtr& n, const BimodulePtr& p, const DualityCells& cells,
                        const std::string& instance);
/// lambda_{M°} (upsilon (x) 1) chi_{A,M} lambda_M° = id and the right-hand analogue.
std::vector<Check> check_unit_compatibility(const BimodulePtr& m, const DualityCells& cells,
                                            const std::string& instance);
/// (g f)° = f° g° and id° = id.
std::vector<Check> check_functoriality(const Intertwiner& f, const Intertwiner& g, const std::string& instance);
/// y_{MN} equals the pasting of y_M and y_N through associators, unitors and kappa.
Check check_y_composite(const BimodulePtr& m, const BimodulePtr& n, const DualityCells& cells,
                        const std::string& instance);
/// y_{M'} (f (x) 1) = (1 (x) f°°) y_M.
Check check_y_naturality(const Intertwiner& f, const DualityCells& cells, const std::string& instance);
/// Per-algebra checks: cells are invertible intertwiners, zeta upsilon = id, upsilon is
/// multiplicative, the double unit inverts psi, the y unit law, the adjoint equivalence
/// completion of y_A, and the zeta compatibility equality.
std::vector<Check> check_involution_object(const AlgebraPtr& a, const DualityCells& cells, const std::string& instance);

// ---------------------------------------------------------------- suites

/// Pseudofunctor axioms of (-)° over the corpus: naturality, cocycle, unit compatibility,
/// functoriality on 2-cells, and that every chi is an invertible intertwiner.
std::vector<Check> verify_pseudofunctor(const Corpus& c, const VerifyOptions& opts);
/// Involution data over the corpus: per-algebra checks and y pseudonaturality.
/// Non-semisimple algebras are reported as SKIP.
std::vector<Check> verify_involution(const Corpus& c, const VerifyOptions& opts);

}  // namespace alg2
