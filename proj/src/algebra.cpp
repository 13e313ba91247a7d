#include "alg2/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "alg2/bimodule.hpp"
#include "alg2/error.hpp"

namespace alg2 {

namespace {

std::vector<std::vector<AlgebraTerm>> group_terms(std::size_t n, std::vector<AlgebraTerm> terms) {
    std::sort(terms.begin(), terms.end(), [](const AlgebraTerm& a, const AlgebraTerm& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
    std::vector<std::vector<AlgebraTerm>> out(n);
    for (auto& t : terms) {
        if (t.i >= n || t.j >= n || t.k >= n) throw InvalidAlgebra("structure constant index out of range");
        auto& row = out[t.i];
        if (!row.empty() && row.back().j == t.j && row.back().k == t.k)
            row.back().v += t.v;
        else
            row.push_back(std::move(t));
    }
    for (auto& row : out)
        std::erase_if(row, [](const AlgebraTerm& t) { return t.v == 0; });
    return out;
}

Vec product_of(std::size_t n, const std::vector<std::vector<AlgebraTerm>>& terms, const Vec& x, const Vec& y) {
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0) continue;
        for (const auto& t : terms[i])
            if (y[t.j] != 0) out[t.k] += x[i] * y[t.j] * t.v;
    }
    return out;
}

Vec basis_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = 1;
    return v;
}

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

std::vector<std::string> check_terms(std::size_t n, const std::vector<std::vector<AlgebraTerm>>& terms, const Vec& unit) {
    std::vector<std::string> defects;
    if (unit.size() != n) {
        defects.push_back("unit has length " + std::to_string(unit.size()) + ", expected " + std::to_string(n));
        return defects;
    }
    std::vector<Vec> prod(n * n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& t : terms[i]) prod[i * n + t.j][t.k] = t.v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                // (e_i e_j) e_k against e_i (e_j e_k)
                Vec lhs(n), rhs(n);
                const Vec& ij = prod[i * n + j];
                const Vec& jk = prod[j * n + k];
                for (std::size_t p = 0; p < n; ++p) {
                    if (ij[p] != 0)
                        for (std::size_t q = 0; q < n; ++q) lhs[q] += ij[p] * prod[p * n + k][q];
                    if (jk[p] != 0)
                        for (std::size_t q = 0; q < n; ++q) rhs[q] += jk[p] * prod[i * n + p][q];
                }
                if (lhs != rhs) defects.push_back("associativity fails at " + triple(i, j, k));
            }
    for (std::size_t j = 0; j < n; ++j) {
        const Vec ej = basis_vec(n, j);
        if (product_of(n, terms, unit, ej) != ej) defects.push_back("left unit law fails at " + std::to_string(j));
        if (product_of(n, terms, ej, unit) != ej) defects.push_back("right unit law fails at " + std::to_string(j));
    }
    return defects;
}

std::vector<AlgebraTerm> flatten_terms(const std::vector<std::vector<AlgebraTerm>>& grouped) {
    std::vector<AlgebraTerm> out;
    for (const auto& row : grouped) out.insert(out.end(), row.begin(), row.end());
    return out;
}

}  // namespace

// ---------------------------------------------------------------- Algebra

AlgebraPtr Algebra::make_sparse(std::string label, std::size_t dim, Vec unit, std::vector<AlgebraTerm> terms,
                                std::optional<WedderburnCertificate> cert) {
    if (unit.size() != dim) throw InvalidAlgebra("unit length does not match dimension");
    std::shared_ptr<Algebra> a(new Algebra);
    a->label_ = std::move(label);
    a->dim_ = dim;
    a->unit_ = std::move(unit);
    a->terms_ = group_terms(dim, std::move(terms));
    a->by_right_.resize(dim);
    for (const auto& row : a->terms_)
        for (const auto& t : row) a->by_right_[t.j].push_back(t);
    a->certificate_ = std::move(cert);
    a->left_once_ = std::make_unique<std::once_flag[]>(dim);
    a->right_once_ = std::make_unique<std::once_flag[]>(dim);
    a->left_.resize(dim);
    a->right_.resize(dim);
    return a;
}

AlgebraPtr Algebra::make(StructureConstants sc, std::optional<WedderburnCertificate> cert) {
    const std::size_t n = sc.dim;
    if (sc.mult.size() != n * n * n) throw InvalidAlgebra("structure constant tensor has wrong size");
    std::vector<AlgebraTerm> terms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sc.c(i, j, k) != 0) terms.push_back({i, j, k, sc.c(i, j, k)});
    return make_sparse(std::move(sc.label), n, std::move(sc.unit), std::move(terms), std::move(cert));
}

Scalar Algebra::coeff(std::size_t i, std::size_t j, std::size_t k) const {
    for (const auto& t : terms_[i])
        if (t.j == j && t.k == k) return t.v;
    return Scalar(0);
}

const Mat& Algebra::left_mult(std::size_t i) const {
    std::call_once(left_once_[i], [&] {
        Mat m(dim_, dim_);
        for (const auto& t : terms_[i]) m(t.k, t.j) = t.v;
        left_[i] = std::move(m);
    });
    return left_[i];
}

const Mat& Algebra::right_mult(std::size_t j) const {
    std::call_once(right_once_[j], [&] {
        Mat m(dim_, dim_);
        for (const auto& t : by_right_[j]) m(t.k, t.i) = t.v;
        right_[j] = std::move(m);
    });
    return right_[j];
}

Mat Algebra::left_mult(const Vec& a) const {
    Mat m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0) continue;
        for (const auto& t : terms_[i]) m(t.k, t.j) += a[i] * t.v;
    }
    return m;
}

Mat Algebra::right_mult(const Vec& a) const {
    Mat m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (const auto& t : terms_[i])
            if (a[t.j] != 0) m(t.k, i) += a[t.j] * t.v;
    return m;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const { return product_of(dim_, terms_, x, y); }

Vec Algebra::basis_vector(std::size_t i) const { return basis_vec(dim_, i); }

StructureConstants Algebra::structure_constants() const {
    StructureConstants sc;
    sc.label = label_;
    sc.dim = dim_;
    sc.unit = unit_;
    sc.mult.assign(dim_ * dim_ * dim_, Scalar(0));
    for (const auto& row : terms_)
        for (const auto& t : row) sc.c(t.i, t.j, t.k) = t.v;
    return sc;
}

bool Algebra::same_as(const Algebra& other) const {
    if (this == &other) return true;
    if (dim_ != other.dim_ || unit_ != other.unit_) return false;
    for (std::size_t i = 0; i < dim_; ++i) {
        const auto& a = terms_[i];
        const auto& b = other.terms_[i];
        if (a.size() != b.size()) return false;
        for (std::size_t p = 0; p < a.size(); ++p)
            if (a[p].j != b[p].j || a[p].k != b[p].k || a[p].v != b[p].v) return false;
    }
    return true;
}

bool Algebra::semisimple() const {
    std::call_once(semisimple_once_, [&] { semisimple_ = is_semisimple(*this).semisimple; });
    return semisimple_;
}

AlgebraPtr Algebra::opposite() const {
    if (auto back = opposite_of_.lock()) return back;
    std::call_once(opposite_once_, [&] {
        std::vector<AlgebraTerm> swapped;
        for (const auto& row : terms_)
            for (const auto& t : row) swapped.push_back({t.j, t.i, t.k, t.v});
        auto op = std::const_pointer_cast<Algebra>(make_sparse(label_ + "^op", dim_, unit_, std::move(swapped), std::nullopt));
        op->opposite_of_ = weak_from_this();
        if (certificate_) {
            const AlgebraPtr self = shared_from_this();
            const AlgebraPtr q = ground_field();
            WedderburnCertificate cert;
            for (std::size_t b = 0; b < certificate_->blocks.size(); ++b) {
                const DualModule d = dual(simple_module(self, b), q, op);
                cert.blocks.push_back({certificate_->blocks[b].idempotent, d.module->dim, d.module->right_act});
            }
            op->certificate_ = std::move(cert);
        }
        opposite_ = op;
    });
    return opposite_;
}

// ---------------------------------------------------------------- validation

AlgebraDefects validate(const StructureConstants& sc) {
    AlgebraDefects out;
    const std::size_t n = sc.dim;
    if (sc.mult.size() != n * n * n) {
        out.defects.push_back("structure constant tensor has " + std::to_string(sc.mult.size()) + " entries, expected " +
                              std::to_string(n * n * n));
        return out;
    }
    std::vector<AlgebraTerm> terms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sc.c(i, j, k) != 0) terms.push_back({i, j, k, sc.c(i, j, k)});
    out.defects = check_terms(n, group_terms(n, std::move(terms)), sc.unit);
    return out;
}

AlgebraDefects validate(const Algebra& a) {
    std::vector<std::vector<AlgebraTerm>> grouped(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) grouped[i] = a.terms(i);
    return {check_terms(a.dim(), grouped, a.unit())};
}

AlgebraDefects validate_certificate(const Algebra& a, const WedderburnCertificate& cert) {
    AlgebraDefects out;
    auto& d = out.defects;
    const std::size_t n = a.dim();
    Vec sum(n);
    std::size_t total = 0;
    for (std::size_t b = 0; b < cert.blocks.size(); ++b) {
        const auto& blk = cert.blocks[b];
        const std::string tag = "block " + std::to_string(b) + ": ";
        if (blk.idempotent.size() != n || blk.simple_action.size() != n || blk.degree == 0) {
            d.push_back(tag + "malformed");
            continue;
        }
        for (std::size_t i = 0; i < n; ++i) sum[i] += blk.idempotent[i];
        total += blk.degree * blk.degree;
        for (std::size_t c = 0; c < cert.blocks.size(); ++c) {
            const auto& other = cert.blocks[c].idempotent;
            if (other.size() != n) continue;
            const Vec p = a.multiply(blk.idempotent, other);
            if (p != (b == c ? blk.idempotent : Vec(n)))
                d.push_back(tag + "idempotent law fails against block " + std::to_string(c));
        }
        if (a.left_mult(blk.idempotent) != a.right_mult(blk.idempotent)) d.push_back(tag + "idempotent is not central");

        const std::size_t deg = blk.degree;
        bool shapes = true;
        for (const auto& m : blk.simple_action)
            if (m.rows() != deg || m.cols() != deg) shapes = false;
        if (!shapes) {
            d.push_back(tag + "simple action has wrong shape");
            continue;
        }
        auto act = [&](const Vec& x) {
            Mat m(deg, deg);
            for (std::size_t i = 0; i < n; ++i)
                if (x[i] != 0) m += blk.simple_action[i] * x[i];
            return m;
        };
        if (act(a.unit()) != Mat::identity(deg)) d.push_back(tag + "unit does not act as identity");
        if (act(blk.idempotent) != Mat::identity(deg)) d.push_back(tag + "own idempotent does not act as identity");
        for (std::size_t c = 0; c < cert.blocks.size(); ++c)
            if (c != b && cert.blocks[c].idempotent.size() == n && !act(cert.blocks[c].idempotent).is_zero())
                d.push_back(tag + "idempotent of block " + std::to_string(c) + " acts nontrivially");
        bool module_ok = true;
        for (std::size_t i = 0; i < n && module_ok; ++i)
            for (std::size_t j = 0; j < n && module_ok; ++j)
                if (act(a.multiply(a.basis_vector(i), a.basis_vector(j))) != blk.simple_action[j] * blk.simple_action[i])
                    module_ok = false;
        if (!module_ok) d.push_back(tag + "simple action is not a right module");
        Mat span(n, deg * deg);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t e = 0; e < deg * deg; ++e) span(i, e) = blk.simple_action[i].entries()[e];
        if (rank(span) != deg * deg) d.push_back(tag + "simple action is not absolutely irreducible");
    }
    if (sum != a.unit()) d.push_back("idempotents do not sum to the unit");
    if (total != n) d.push_back("sum of squared degrees is " + std::to_string(total) + ", expected " + std::to_string(n));
    return out;
}

// ---------------------------------------------------------------- factories

AlgebraPtr from_structure_constants(StructureConstants sc) {
    const AlgebraDefects d = validate(sc);
    if (!d.ok()) throw InvalidAlgebra("invalid structure constants: " + d.defects.front());
    return Algebra::make(std::move(sc), std::nullopt);
}

AlgebraPtr with_certificate(const AlgebraPtr& a, WedderburnCertificate cert) {
    const AlgebraDefects d = validate_certificate(*a, cert);
    if (!d.ok()) throw InvalidAlgebra("invalid certificate: " + d.defects.front());
    std::vector<std::vector<AlgebraTerm>> grouped(a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) grouped[i] = a->terms(i);
    return Algebra::make_sparse(a->label(), a->dim(), a->unit(), flatten_terms(grouped), std::move(cert));
}

AlgebraPtr without_certificate(const AlgebraPtr& a) {
    std::vector<std::vector<AlgebraTerm>> grouped(a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) grouped[i] = a->terms(i);
    return Algebra::make_sparse(a->label(), a->dim(), a->unit(), flatten_terms(grouped), std::nullopt);
}

AlgebraPtr matrix_algebra(std::size_t d) {
    if (d == 0) throw InvalidAlgebra("matrix algebra needs d >= 1");
    const std::size_t n = d * d;
    std::vector<AlgebraTerm> terms;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l) terms.push_back({i * d + j, j * d + l, i * d + l, Scalar(1)});
    Vec unit(n);
    for (std::size_t i = 0; i < d; ++i) unit[i * d + i] = 1;
    WedderburnBlock blk{unit, d, {}};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat m(d, d);
            m(j, i) = 1;  // row vector e_i times E_ij is e_j
            blk.simple_action.push_back(std::move(m));
        }
    const std::string label = d == 1 ? "Q" : "M" + std::to_string(d) + "(Q)";
    return Algebra::make_sparse(label, n, unit, std::move(terms), WedderburnCertificate{{std::move(blk)}});
}

AlgebraPtr ground_field() {
    static const AlgebraPtr q = matrix_algebra(1);
    return q;
}

AlgebraPtr product(const AlgebraPtr& a, const AlgebraPtr& b) {
    const std::size_t n = a->dim(), m = b->dim();
    std::vector<AlgebraTerm> terms;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& t : a->terms(i)) terms.push_back(t);
    for (std::size_t i = 0; i < m; ++i)
        for (const auto& t : b->terms(i)) terms.push_back({t.i + n, t.j + n, t.k + n, t.v});
    Vec unit = a->unit();
    unit.insert(unit.end(), b->unit().begin(), b->unit().end());
    std::optional<WedderburnCertificate> cert;
    if (a->certificate() && b->certificate()) {
        cert.emplace();
        for (const auto& blk : a->certificate()->blocks) {
            WedderburnBlock nb{blk.idempotent, blk.degree, blk.simple_action};
            nb.idempotent.resize(n + m);
            nb.simple_action.resize(n + m, Mat(blk.degree, blk.degree));
            cert->blocks.push_back(std::move(nb));
        }
        for (const auto& blk : b->certificate()->blocks) {
            WedderburnBlock nb{Vec(n), blk.degree, std::vector<Mat>(n, Mat(blk.degree, blk.degree))};
            nb.idempotent.insert(nb.idempotent.end(), blk.idempotent.begin(), blk.idempotent.end());
            nb.simple_action.insert(nb.simple_action.end(), blk.simple_action.begin(), blk.simple_action.end());
            cert->blocks.push_back(std::move(nb));
        }
    }
    return Algebra::make_sparse(a->label() + "x" + b->label(), n + m, std::move(unit), std::move(terms), std::move(cert));
}

AlgebraPtr group_algebra_elementary_2(std::size_t k) {
    if (k > 16) throw InvalidAlgebra("group algebra rank too large");
    const std::size_t n = std::size_t{1} << k;
    std::vector<AlgebraTerm> terms;
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) terms.push_back({g, h, g ^ h, Scalar(1)});
    Vec unit(n);
    unit[0] = 1;
    WedderburnCertificate cert;
    for (std::size_t s = 0; s < n; ++s) {
        WedderburnBlock blk{Vec(n), 1, {}};
        for (std::size_t g = 0; g < n; ++g) {
            const int sign = std::popcount(g & s) % 2 == 0 ? 1 : -1;
            blk.idempotent[g] = Scalar(sign, static_cast<unsigned long>(n));
            blk.simple_action.push_back(Mat{{Scalar(sign)}});
        }
        cert.blocks.push_back(std::move(blk));
    }
    std::string label = k == 0 ? "Q" : k == 1 ? "Q[Z2]" : "Q[Z2^" + std::to_string(k) + "]";
    return Algebra::make_sparse(std::move(label), n, std::move(unit), std::move(terms), std::move(cert));
}

AlgebraPtr truncated_polynomial(std::size_t n) {
    if (n == 0) throw InvalidAlgebra("truncated polynomial ring needs n >= 1");
    if (n == 1) return ground_field();
    std::vector<AlgebraTerm> terms;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) terms.push_back({i, j, i + j, Scalar(1)});
    Vec unit(n);
    unit[0] = 1;
    return Algebra::make_sparse("Q[x]/(x^" + std::to_string(n) + ")", n, std::move(unit), std::move(terms), std::nullopt);
}

AlgebraPtr algebra_tensor(const AlgebraPtr& a, const AlgebraPtr& b) {
    const std::size_t n = a->dim(), m = b->dim();
    std::vector<AlgebraTerm> terms;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& s : a->terms(i))
            for (std::size_t i2 = 0; i2 < m; ++i2)
                for (const auto& t : b->terms(i2))
                    terms.push_back({s.i * m + t.i, s.j * m + t.j, s.k * m + t.k, s.v * t.v});
    Vec unit(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) unit[i * m + j] = a->unit()[i] * b->unit()[j];
    std::optional<WedderburnCertificate> cert;
    if (a->certificate() && b->certificate()) {
        cert.emplace();
        for (const auto& p : a->certificate()->blocks)
            for (const auto& q : b->certificate()->blocks) {
                WedderburnBlock blk{Vec(n * m), p.degree * q.degree, {}};
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < m; ++j) {
                        blk.idempotent[i * m + j] = p.idempotent[i] * q.idempotent[j];
                        blk.simple_action.push_back(kron(p.simple_action[i], q.simple_action[j]));
                    }
                cert->blocks.push_back(std::move(blk));
            }
    }
    return Algebra::make_sparse(a->label() + "(x)" + b->label(), n * m, std::move(unit), std::move(terms), std::move(cert));
}

// ---------------------------------------------------------------- structure theory

SemisimplicityResult is_semisimple(const Algebra& a) {
    const std::size_t n = a.dim();
    Mat gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            // tr(L_i L_j) = sum over e_i e_p = v e_k of v * [e_k coefficient... ] via L_j(p, k)
            Scalar tr;
            const Mat& lj = a.left_mult(j);
            for (const auto& t : a.terms(i)) tr += t.v * lj(t.j, t.k);
            gram(i, j) = tr;
            gram(j, i) = tr;
        }
    SemisimplicityResult r;
    r.radical = kernel_basis(gram);
    r.semisimple = r.radical.dim() == 0;
    return r;
}

Subspace center(const Algebra& a) {
    const std::size_t n = a.dim();
    std::vector<Mat> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(a.left_mult(i) - a.right_mult(i));
    return kernel_basis(vstack(rows));
}

namespace {

using Poly = std::vector<Scalar>;  // ascending coefficients

/// Minimal polynomial of x in the unital subalgebra with unit e (x assumed to lie in e A e).
Poly minimal_polynomial(const Algebra& a, const Vec& e, const Vec& x) {
    std::vector<Mat> cols{Mat::column(e)};
    Vec power = e;
    for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
        power = a.multiply(x, power);
        const Mat basis = hstack(cols);
        const Mat target = Mat::column(power);
        if (auto sol = solve(basis, target)) {
            Poly p(k + 1);
            for (std::size_t i = 0; i < k; ++i) p[i] = -(*sol)(i, 0);
            p[k] = 1;
            return p;
        }
        cols.push_back(target);
    }
    throw Error("minimal polynomial search did not terminate");
}

Scalar eval(const Poly& p, const Scalar& t) {
    Scalar acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * t + p[i];
    return acc;
}

std::vector<mpz_class> divisors(mpz_class v) {
    v = abs(v);
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= v; ++d)
        if (v % d == 0) {
            small.push_back(d);
            if (d * d != v) large.push_back(v / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Rational roots in increasing order, or nullopt if the coefficients are too large to search.
std::optional<std::vector<Scalar>> rational_roots(Poly p) {
    std::vector<Scalar> roots;
    while (p.size() > 1 && p.front() == 0) {
        roots.push_back(Scalar(0));
        p.erase(p.begin());
    }
    if (p.size() > 1) {
        mpz_class l = 1;
        for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        const mpz_class a0 = mpz_class(p.front() * l);
        const mpz_class an = mpz_class(p.back() * l);
        static const mpz_class limit("1000000000000");
        if (abs(a0) > limit || abs(an) > limit) return std::nullopt;
        for (const auto& num : divisors(a0))
            for (const auto& den : divisors(an))
                for (int sign : {1, -1}) {
                    Scalar r(num * sign, den);
                    r.canonicalize();
                    if (eval(p, r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
                }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

Vec axpy(const Vec& x, const Scalar& s, const Vec& y) {  // x + s y
    Vec out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * y[i];
    return out;
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}
    Scalar small() { return Scalar(static_cast<long>(rng_() % 7) - 3); }
    Vec combination(const Mat& basis_rows) {
        Vec v(basis_rows.cols());
        for (std::size_t r = 0; r < basis_rows.rows(); ++r) {
            const Scalar s = small();
            if (s == 0) continue;
            for (std::size_t c = 0; c < v.size(); ++c) v[c] += s * basis_rows(r, c);
        }
        return v;
    }

private:
    std::mt19937_64 rng_;
};

Vec row_of(const Mat& m, std::size_t r) {
    return Vec(m.entries().begin() + static_cast<std::ptrdiff_t>(r * m.cols()),
               m.entries().begin() + static_cast<std::ptrdiff_t>((r + 1) * m.cols()));
}

Mat rows_of(const std::vector<Vec>& vs, std::size_t n) {
    Mat m(vs.size(), n);
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = vs[r][c];
    return m;
}

/// Splits e into central primitive idempotents.
std::vector<Vec> central_idempotents(const Algebra& a, const Subspace& z, Sampler& rng, std::size_t retries) {
    std::vector<Vec> done, work{a.unit()};
    std::size_t failures = 0;
    while (!work.empty()) {
        Vec e = work.back();
        work.pop_back();
        std::vector<Vec> ez;
        for (std::size_t r = 0; r < z.dim(); ++r) ez.push_back(a.multiply(e, row_of(z.basis(), r)));
        const Mat ezm = rows_of(ez, a.dim());
        if (rank(ezm) <= 1) {
            done.push_back(e);
            continue;
        }
        bool split = false;
        while (!split) {
            if (failures >= retries) throw NotSplit("no rational splitting element found for the center");
            const Vec x = rng.combination(ezm);
            const Poly mp = minimal_polynomial(a, e, x);
            const auto roots = rational_roots(mp);
            const std::size_t degree = mp.size() - 1;
            if (!roots || roots->size() < 2 || roots->size() != degree) {
                ++failures;
                continue;
            }
            for (const auto& lambda : *roots) {
                Vec idem = e;
                for (const auto& mu : *roots) {
                    if (mu == lambda) continue;
                    Vec factor = axpy(x, -mu, e);
                    const Scalar inv = 1 / (lambda - mu);
                    for (auto& c : factor) c *= inv;
                    idem = a.multiply(idem, factor);
                }
                work.push_back(idem);
            }
            split = true;
        }
    }
    std::sort(done.begin(), done.end(), [](const Vec& u, const Vec& v) { return u > v; });
    return done;
}

std::size_t right_ideal_dim(const Algebra& a, const Vec& x) { return rank(a.left_mult(x)); }

/// A primitive idempotent inside the block with central idempotent e and degree d.
Vec primitive_idempotent(const Algebra& a, const Vec& e, std::size_t d, Sampler& rng, std::size_t retries) {
    Vec g = e;
    std::size_t r = d;
    std::size_t failures = 0;
    while (r > 1) {
        // corner g A g
        std::vector<Vec> corner;
        for (std::size_t i = 0; i < a.dim(); ++i) corner.push_back(a.multiply(a.multiply(g, a.basis_vector(i)), g));
        const Subspace cs = Subspace::row_space(rows_of(corner, a.dim()));
        const Mat cb = cs.basis();
        std::size_t next_basis = 0;
        bool reduced = false;
        while (!reduced) {
            Vec x;
            if (next_basis < cb.rows()) {
                x = row_of(cb, next_basis++);
            } else {
                if (failures >= retries) throw NotSplit("no rational zero divisor found in a simple block");
                ++failures;
                x = rng.combination(cb);
            }
            const Poly mp = minimal_polynomial(a, g, x);
            if (mp.size() <= 2) continue;
            const auto roots = rational_roots(mp);
            if (!roots || roots->empty()) continue;
            const Vec y = axpy(x, -roots->front(), g);
            // solve y c y = y for c in the corner
            Mat sys(a.dim(), cb.rows());
            for (std::size_t t = 0; t < cb.rows(); ++t) {
                const Vec yc = a.multiply(a.multiply(y, row_of(cb, t)), y);
                for (std::size_t k = 0; k < a.dim(); ++k) sys(k, t) = yc[k];
            }
            const auto sol = solve(sys, Mat::column(y));
            if (!sol) continue;
            const Vec c = (cs.basis_columns() * *sol).col_vector(0);
            Vec h = a.multiply(y, c);
            const std::size_t rh = right_ideal_dim(a, h) / d;
            if (rh == 0 || rh >= r) continue;
            if (2 * rh > r) {
                h = axpy(g, Scalar(-1), h);
                g = h;
                r = r - rh;
            } else {
                g = h;
                r = rh;
            }
            reduced = true;
        }
    }
    return g;
}

}  // namespace

WedderburnCertificate wedderburn(const Algebra& a, const WedderburnOptions& opts) {
    if (a.certificate()) return *a.certificate();
    if (!a.semisimple()) throw NotSemisimple("algebra '" + a.label() + "' is not semisimple");
    Sampler rng(opts.seed);
    const Subspace z = center(a);
    WedderburnCertificate cert;
    for (const Vec& e : central_idempotents(a, z, rng, opts.retries)) {
        const std::size_t block_dim = right_ideal_dim(a, e);
        std::size_t d = 1;
        while (d * d < block_dim) ++d;
        if (d * d != block_dim) throw NotSplit("block of dimension " + std::to_string(block_dim) + " is not a full matrix algebra");
        const Vec f = primitive_idempotent(a, e, d, rng, opts.retries);
        const Subspace s = Subspace::row_space(a.left_mult(f).transpose());
        if (s.dim() != d) throw NotSplit("simple module has unexpected dimension");
        const Mat coords = s.coordinate_map();
        const Mat cols = s.basis_columns();
        WedderburnBlock blk{e, d, {}};
        for (std::size_t j = 0; j < a.dim(); ++j) blk.simple_action.push_back(coords * a.right_mult(j) * cols);
        cert.blocks.push_back(std::move(blk));
    }
    const AlgebraDefects check = validate_certificate(a, cert);
    if (!check.ok()) throw NotSplit("computed certificate failed validation: " + check.defects.front());
    return cert;
}

}  // namespace alg2
