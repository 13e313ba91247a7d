#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "alg2/matrix.hpp"
#include "alg2/scalar.hpp"

namespace alg2 {

using Vec = std::vector<Scalar>;

/// Raw, unvalidated structure constants: e_i e_j = sum_k mult[(i*dim + j)*dim + k] e_k.
struct StructureConstants {
    std::string label;
    std::size_t dim = 0;
    std::vector<Scalar> mult;
    Vec unit;

    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const { return mult[(i * dim + j) * dim + k]; }
    Scalar& c(std::size_t i, std::size_t j, std::size_t k) { return mult[(i * dim + j) * dim + k]; }
};

/// One simple block of a split semisimple algebra: its central primitive idempotent, the
/// degree d (block ~ M_d(Q)), and a simple right module of dimension d given by its
/// right-action matrices, one d x d matrix per basis element of the algebra (matrix of m -> m.e_j).
struct WedderburnBlock {
    Vec idempotent;
    std::size_t degree = 0;
    std::vector<Mat> simple_action;
};

struct WedderburnCertificate {
    std::vector<WedderburnBlock> blocks;
};

/// One nonzero structure constant: e_i e_j has coefficient v on e_k.
struct AlgebraTerm {
    std::size_t i = 0, j = 0, k = 0;
    Scalar v;
};

class Algebra;
using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Finite-dimensional unital associative algebra over Q. Immutable once built; the only
/// way to get one is through the validating factories below.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    const std::string& label() const { return label_; }
    std::size_t dim() const { return dim_; }
    const Vec& unit() const { return unit_; }
    Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const;
    /// Nonzero structure constants with first index i.
    const std::vector<AlgebraTerm>& terms(std::size_t i) const { return terms_[i]; }

    /// Matrix of x -> e_i x. Built on first use.
    const Mat& left_mult(std::size_t i) const;
    /// Matrix of x -> x e_j. Built on first use.
    const Mat& right_mult(std::size_t j) const;
    Mat left_mult(const Vec& a) const;
    Mat right_mult(const Vec& a) const;
    Vec multiply(const Vec& x, const Vec& y) const;
    Vec basis_vector(std::size_t i) const;

    const std::optional<WedderburnCertificate>& certificate() const { return certificate_; }
    StructureConstants structure_constants() const;

    /// Opposite algebra, built once and shared. Same unit; c'[i][j][k] = c[j][i][k]. A
    /// certificate is carried over with every simple replaced by its dual module.
    /// opposite() of the result is this object again while it is alive.
    AlgebraPtr opposite() const;

    /// Structural equality: dimension, unit, and structure constants. Labels and
    /// certificates are ignored.
    bool same_as(const Algebra& other) const;

    /// Trace-form semisimplicity, computed once.
    bool semisimple() const;

    /// Trusted factories for internal constructors: only shapes are checked.
    static AlgebraPtr make(StructureConstants sc, std::optional<WedderburnCertificate> cert);
    static AlgebraPtr make_sparse(std::string label, std::size_t dim, Vec unit, std::vector<AlgebraTerm> terms,
                                  std::optional<WedderburnCertificate> cert);

private:
    Algebra() = default;

    std::string label_;
    std::size_t dim_ = 0;
    Vec unit_;
    std::vector<std::vector<AlgebraTerm>> terms_;   // indexed by i, sorted by (j, k)
    std::vector<std::vector<AlgebraTerm>> by_right_;  // indexed by j
    std::optional<WedderburnCertificate> certificate_;

    mutable std::unique_ptr<std::once_flag[]> left_once_;
    mutable std::unique_ptr<std::once_flag[]> right_once_;
    mutable std::vector<Mat> left_;
    mutable std::vector<Mat> right_;

    mutable std::once_flag opposite_once_;
    mutable AlgebraPtr opposite_;
    std::weak_ptr<const Algebra> opposite_of_;
    mutable std::once_flag semisimple_once_;
    mutable bool semisimple_ = false;
};

inline bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) { return a == b || a->same_as(*b); }

struct AlgebraDefects {
    std::vector<std::string> defects;
    bool ok() const { return defects.empty(); }
};

/// Exact associativity and unit-law check; every failing (i, j, k) triple is listed.
AlgebraDefects validate(const StructureConstants& sc);
AlgebraDefects validate(const Algebra& a);

/// Idempotent laws, centrality, sum to unit, sum of d^2 = dim, and each simple is a
/// right module of dimension d on which only its own idempotent acts nontrivially and
/// whose endomorphism ring is Q.
AlgebraDefects validate_certificate(const Algebra& a, const WedderburnCertificate& cert);

/// Rejects invalid data with InvalidAlgebra. No certificate is attached.
AlgebraPtr from_structure_constants(StructureConstants sc);
/// Attaches a certificate after checking it; throws InvalidAlgebra if the check fails.
AlgebraPtr with_certificate(const AlgebraPtr& a, WedderburnCertificate cert);
AlgebraPtr without_certificate(const AlgebraPtr& a);

/// M_d(Q) in the matrix-unit basis E_ij at index i*d + j; the simple module is Q^d as row vectors.
AlgebraPtr matrix_algebra(std::size_t d);
AlgebraPtr ground_field();
AlgebraPtr product(const AlgebraPtr& a, const AlgebraPtr& b);
/// Q[(Z/2)^k], basis indexed by bitmasks g with e_g e_h = e_{g xor h}.
AlgebraPtr group_algebra_elementary_2(std::size_t k);
/// Q[x]/(x^n) in the monomial basis; not semisimple for n >= 2.
AlgebraPtr truncated_polynomial(std::size_t n);
inline AlgebraPtr opposite(const AlgebraPtr& a) { return a->opposite(); }
/// A (x) B with Kronecker-ordered structure constants.
AlgebraPtr algebra_tensor(const AlgebraPtr& a, const AlgebraPtr& b);

struct SemisimplicityResult {
    bool semisimple = false;
    Subspace radical;
};

/// Radical of the trace form (x, y) -> tr(L_x L_y); equals the Jacobson radical in characteristic 0.
SemisimplicityResult is_semisimple(const Algebra& a);

/// Center {z : az = za for all a} as a subspace of A.
Subspace center(const Algebra& a);

struct WedderburnOptions {
    std::uint64_t seed = 0;
    std::size_t retries = 32;
};

/// Returns the attached certificate if present; otherwise computes one for a Q-split
/// semisimple algebra. Throws NotSemisimple, or NotSplit when the retry budget runs out.
WedderburnCertificate wedderburn(const Algebra& a, const WedderburnOptions& opts = {});

}  // namespace alg2
