#pragma once

#include <string>
#include <vector>

#include "alg2/corpus.hpp"
#include "alg2/report.hpp"

namespace alg2 {

inline constexpr const char* kToolVersion = "0.1.0";

/// Suite names in report order; "all" runs every one of them.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Pentagon and triangle on random chains, unitor and associator invertibility.
/// Tamper cells: "associator", "left_unitor", "right_unitor".
std::vector<Check> verify_bicategory(const Corpus& c, const VerifyOptions& opts);
/// braid, adjoint, double dual and tensor-hom isomorphisms: invertible and natural.
/// Tamper cells: "braid", "adjoint", "psi", "tensor_hom".
std::vector<Check> verify_appendix_a(const Corpus& c, const VerifyOptions& opts);
/// Adjunctions, equivalence detection and its image under Rep.
/// Tamper cells: "unit", "counit".
std::vector<Check> verify_morita(const Corpus& c, const VerifyOptions& opts);
/// Evaluation/coevaluation zig-zags for every algebra. Tamper cell: "zigzag_iso".
std::vector<Check> verify_dual_objects(const Corpus& c, const VerifyOptions& opts);

/// The tamper cells each suite owns.
std::vector<std::string> suite_cells(const std::string& suite);

struct SuiteResult {
    std::string name;
    std::vector<Check> checks;
    double seconds = 0;
};

struct Report {
    std::string version = kToolVersion;
    std::string corpus_digest;
    std::uint64_t seed = 0;
    std::size_t max_dim = 0;
    std::string tamper;
    std::vector<SuiteResult> suites;
    std::string started;  ///< UTC timestamp; lives in the timing field only
};

/// Runs one suite or "all". Throws UsageError on an unknown name.
Report run(const std::string& suite, const Corpus& c, const VerifyOptions& opts);
std::size_t failures(const Report& r);

/// Canonical JSON without the timing field; the digest is its SHA-256.
std::string report_body_json(const Report& r);
std::string report_digest(const Report& r);
/// Full report: body, "digest", and a "timing" object holding every non-deterministic value.
std::string report_to_json(const Report& r);

}  // namespace alg2
