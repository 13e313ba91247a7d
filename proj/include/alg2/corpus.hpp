#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "alg2/bimodule.hpp"

namespace alg2 {

/// How to build an algebra: kind is one of ground, matrix (n), product (factors),
/// group_z2 (n = rank k), truncated (n), raw (structure constants).
struct AlgebraDescriptor {
    std::string kind;
    std::size_t n = 0;
    std::vector<AlgebraDescriptor> factors;
    std::optional<StructureConstants> raw;
};

AlgebraPtr build_algebra(const AlgebraDescriptor& d);

struct BimodulePolicy {
    std::size_t count = 30;
    std::size_t max_dim = 8;   ///< upper bound on generated bimodule dimension
    std::size_t max_mult = 2;  ///< upper bound on each block multiplicity
    std::uint64_t seed = 7;
};

struct CorpusSpec {
    std::vector<AlgebraDescriptor> algebras;
    BimodulePolicy bimodules;
};

/// Q, Q x Q, M2(Q), M2(Q) x Q, Q[Z2], Q[x]/(x^2); 30 bimodules, seed 7.
CorpusSpec default_spec();

struct CorpusAlgebra {
    std::string name;
    AlgebraDescriptor descriptor;
    AlgebraPtr algebra;
    bool semisimple = false;
};

struct CorpusBimodule {
    std::string name;
    std::size_t left = 0;   ///< index into Corpus::algebras
    std::size_t right = 0;
    BimodulePtr module;
};

struct Corpus {
    std::vector<CorpusAlgebra> algebras;
    std::vector<CorpusBimodule> bimodules;
    BimodulePolicy policy;
};

/// Random bimodules join semisimple algebras only; each is a direct sum of blocks
/// U_i (x) T_j (U_i simple left, T_j simple right) conjugated by a unimodular matrix.
/// Throws InvalidAlgebra / ShapeError on bad specs.
Corpus generate_corpus(const CorpusSpec& spec);

/// The simple (A, B)-bimodule U_i (x) T_j for certified A and B.
BimodulePtr block_bimodule(const AlgebraPtr& a, std::size_t i, const AlgebraPtr& b, std::size_t j);

// ---------------------------------------------------------------- JSON

CorpusSpec spec_from_json(const std::string& text);
std::string spec_to_json(const CorpusSpec& spec);
/// Rationals are written as "p/q" strings (integers as "p").
std::string corpus_to_json(const Corpus& c);
/// Rebuilds algebras from descriptors, checks the stored constants, and validates every
/// bimodule. Throws ParseError on malformed or inconsistent input.
Corpus corpus_from_json(const std::string& text);
/// SHA-256 hex of the canonical corpus JSON.
std::string corpus_digest(const Corpus& c);
std::string sha256_hex(const std::string& data);

// ---------------------------------------------------------------- sampling

/// A 1-cell available to the suites: a corpus bimodule or a regular bimodule.
struct OneCell {
    std::string name;
    std::size_t left = 0;
    std::size_t right = 0;
    BimodulePtr module;
};

/// Corpus bimodules followed by the regular bimodule of every algebra.
std::vector<OneCell> one_cells(const Corpus& c, bool semisimple_only = true);

using Rng = std::mt19937_64;

/// Uniform in [0, n) via modulo, so results do not depend on the standard library.
std::size_t pick(Rng& rng, std::size_t n);

/// A composable chain of `length` cells starting anywhere, or nullopt if the random walk
/// hits a dead end or exceeds max_dim.
std::optional<std::vector<OneCell>> random_chain(const std::vector<OneCell>& cells, std::size_t length, Rng& rng,
                                                 std::size_t max_dim);

/// Up to `want` chains from random_chain, giving up after 20 * want attempts.
std::vector<std::vector<OneCell>> sample_chains(const std::vector<OneCell>& cells, std::size_t length, std::size_t want,
                                                Rng& rng, std::size_t max_dim);
/// "B1,reg(Q),B7"
std::string chain_names(const std::vector<OneCell>& chain);

/// A random intertwiner out of m: a random endomorphism followed by a random unimodular
/// base change onto a conjugate copy of m.
Intertwiner random_cell(const BimodulePtr& m, Rng& rng);
/// A random endomorphism of m (random combination of an intertwiner-space basis).
Intertwiner random_endomorphism(const BimodulePtr& m, Rng& rng);
/// Unit lower times unit upper triangular, entries in [-2, 2].
Mat random_unimodular(std::size_t n, Rng& rng);

}  // namespace alg2
