#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "alg2/corpus.hpp"
#include "alg2/duality.hpp"
#include "alg2/error.hpp"
#include "alg2/kv.hpp"
#include "alg2/morita.hpp"
#include "alg2/suites.hpp"

namespace py = pybind11;
using namespace alg2;

namespace {

// rationals cross the boundary as "p/q" strings; the Python side turns them into Fractions
std::vector<std::vector<std::string>> entries(const Mat& m) {
    std::vector<std::vector<std::string>> out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = to_string(m(i, j));
    return out;
}

// pybind11 holders cannot point to const; thin handles keep the library types immutable
struct PyAlgebra {
    AlgebraPtr p;
};
struct PyBimodule {
    BimodulePtr p;
};

Corpus load(const std::string& corpus) {
    return corpus == "default" ? generate_corpus(default_spec()) : corpus_from_json(corpus);
}

}  // namespace

PYBIND11_MODULE(_alg2, m) {
    m.doc() = "Exact Morita bicategory over Q: algebras, bimodules, duality cells and verification suites";
    m.attr("__version__") = kToolVersion;

    // later registrations are tried first, so the base class goes first
    auto base = py::register_exception<Error>(m, "Alg2Error");
    py::register_exception<NotSemisimple>(m, "NotSemisimple", base);
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<UsageError>(m, "UsageError", base);

    py::class_<PyAlgebra>(m, "Algebra")
        .def_property_readonly("label", [](const PyAlgebra& a) { return a.p->label(); })
        .def_property_readonly("dim", [](const PyAlgebra& a) { return a.p->dim(); })
        .def("is_semisimple", [](const PyAlgebra& a) { return a.p->semisimple(); })
        .def("opposite", [](const PyAlgebra& a) { return PyAlgebra{a.p->opposite()}; })
        .def("simple_dims", [](const PyAlgebra& a) { return rep_object(a.p).simple_dims; })
        .def("__repr__", [](const PyAlgebra& a) {
            return "<Algebra " + a.p->label() + " dim " + std::to_string(a.p->dim()) + ">";
        });

    m.def("ground_field", [] { return PyAlgebra{ground_field()}; });
    m.def("matrix_algebra", [](std::size_t n) { return PyAlgebra{matrix_algebra(n)}; }, py::arg("n"));
    m.def("product", [](const PyAlgebra& a, const PyAlgebra& b) { return PyAlgebra{product(a.p, b.p)}; });
    m.def("group_algebra_z2", [](std::size_t k) { return PyAlgebra{group_algebra_elementary_2(k)}; }, py::arg("k"));
    m.def("truncated_polynomial", [](std::size_t n) { return PyAlgebra{truncated_polynomial(n)}; }, py::arg("n"));

    py::class_<PyBimodule>(m, "Bimodule")
        .def_property_readonly("dim", [](const PyBimodule& b) { return b.p->dim; })
        .def_property_readonly("label", [](const PyBimodule& b) { return b.p->label; })
        .def_property_readonly("left", [](const PyBimodule& b) { return PyAlgebra{b.p->left}; })
        .def_property_readonly("right", [](const PyBimodule& b) { return PyAlgebra{b.p->right}; })
        .def("__repr__", [](const PyBimodule& b) {
            return "<Bimodule " + b.p->label + " dim " + std::to_string(b.p->dim) + ">";
        });

    m.def("regular", [](const PyAlgebra& a) { return PyBimodule{regular(a.p)}; });
    m.def("simple_module", [](const PyAlgebra& a, std::size_t i) { return PyBimodule{simple_module(a.p, i)}; },
          py::arg("a"), py::arg("block"));
    m.def("dual_module", [](const PyBimodule& b) { return PyBimodule{dual_module(b.p)}; });
    m.def("tensor_over", [](const PyBimodule& a, const PyBimodule& b) { return PyBimodule{tensor_over(a.p, b.p).module}; });

    m.def("pentagon_holds", [](const PyBimodule& a, const PyBimodule& b, const PyBimodule& c, const PyBimodule& d) {
        const auto s = pentagon_sides(a.p, b.p, c.p, d.p);
        return s.lhs.mat == s.rhs.mat;
    });
    m.def("is_equivalence", [](const PyBimodule& b) { return is_equivalence(b.p).equivalence; });
    m.def("rep_1", [](const PyBimodule& b) {
        const KVFunctor f = rep_1(b.p).functor;
        std::vector<std::vector<std::size_t>> out(f.target.rank, std::vector<std::size_t>(f.source.rank));
        for (std::size_t j = 0; j < f.target.rank; ++j)
            for (std::size_t i = 0; i < f.source.rank; ++i) out[j][i] = f.at(j, i);
        return out;
    }, "Multiplicity matrix, rows indexed by target simples.");
    m.def("zigzag_ok", [](const PyAlgebra& a) { return dual_object_data(a.p).zigzag_ok; });
    m.def("double_dual_iso", [](const PyBimodule& b) { return entries(double_dual_iso(b.p).mat); });

    m.def("zeta_compatibility", [](const PyAlgebra& a) {
        const auto z = zeta_compatibility(a.p);
        return py::make_tuple(entries(z.lhs.mat), entries(z.rhs.mat));
    }, "Both sides of the zeta equality as matrices of rational strings.");
    m.def("rep_theorem_sides", [](const PyBimodule& v) {
        const auto s = rep_theorem_sides(v.p);
        return py::make_tuple(entries(s.lhs.mat), entries(s.rhs.mat));
    });

    m.def("suite_names", &suite_names);
    m.def("default_corpus_json", [] { return corpus_to_json(generate_corpus(default_spec())); });
    m.def("generate_corpus_json", [](const std::string& spec) { return corpus_to_json(generate_corpus(spec_from_json(spec))); });
    m.def("corpus_digest", [](const std::string& corpus) { return corpus_digest(load(corpus)); });
    m.def(
        "verify",
        [](const std::string& suite, const std::string& corpus, std::uint64_t seed, std::size_t max_dim,
           std::size_t jobs, const std::string& mutate) {
            Corpus c = load(corpus);
            VerifyOptions opts;
            opts.seed = seed;
            opts.max_dim = max_dim;
            opts.jobs = jobs;
            opts.tamper.cell = mutate;
            Report r;
            {
                py::gil_scoped_release release;
                r = run(suite, c, opts);
            }
            return report_to_json(r);
        },
        py::arg("suite"), py::arg("corpus") = "default", py::arg("seed") = 7, py::arg("max_dim") = 16,
        py::arg("jobs") = 1, py::arg("mutate") = "",
        "Run a suite on a corpus (JSON text or 'default'); returns the report JSON.");
}
