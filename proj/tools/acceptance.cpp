// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.
#include <algorithm>
#include <functional>
#include <iostream>
#include <set>

#include "alg2/corpus.hpp"
#include "alg2/error.hpp"
#include "alg2/kv.hpp"
#include "alg2/suites.hpp"

using namespace alg2;

namespace {

const SuiteResult& suite(const Report& r, const std::string& name) {
    for (const auto& s : r.suites)
        if (s.name == name) return s;
    throw Error("suite missing from report: " + name);
}

std::size_t count_id(const SuiteResult& s, const std::string& id, Status st) {
    return std::count_if(s.checks.begin(), s.checks.end(),
                         [&](const Check& c) { return c.id == id && c.status == st; });
}

bool passes(const SuiteResult& s, const std::string& id, const std::string& instance) {
    return std::any_of(s.checks.begin(), s.checks.end(), [&](const Check& c) {
        return c.id == id && c.instance == instance && c.status == Status::Pass;
    });
}

std::size_t fails(const SuiteResult& s) { return count(s.checks, Status::Fail); }

struct Outcome {
    bool ok = true;
    std::string detail;
    void need(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int report_line(int n, const std::string& title, const std::function<Outcome()>& f) {
    Outcome o;
    try {
        o = f();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("error: ") + e.what();
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title;
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
    return o.ok ? 0 : 1;
}

}  // namespace

int main() {
    const Corpus corpus = generate_corpus(default_spec());
    VerifyOptions opts;
    opts.seed = 7;
    opts.jobs = 4;
    const Report base = run("all", corpus, opts);

    std::vector<std::string> semisimple;
    std::size_t simples = 0;
    for (const auto& a : corpus.algebras)
        if (a.semisimple) {
            semisimple.push_back(a.name);
            simples += a.algebra->certificate()->blocks.size();
        }

    int bad = 0;
    bad += report_line(1, "pentagon and triangle hold exactly on >= 50 chains in < 60 s", [&] {
        Outcome o;
        const auto& s = suite(base, "bicategory");
        o.need(count_id(s, "pentagon", Status::Pass) >= 50, "fewer than 50 pentagons");
        o.need(count_id(s, "triangle", Status::Pass) >= 50, "fewer than 50 triangles");
        o.need(fails(s) == 0, std::to_string(fails(s)) + " failures");
        o.need(s.seconds < 60, std::to_string(s.seconds) + " s");
        return o;
    });
    bad += report_line(2, "braid, adjoint, psi, tensor-hom invertible and natural on >= 100 instances; psi skipped off the gate",
                       [&] {
                           Outcome o;
                           const auto& s = suite(base, "appendixA");
                           for (const char* iso : {"braid", "adjoint", "psi", "tensor_hom"}) {
                               const std::string b = iso;
                               o.need(count_id(s, b + ".iso", Status::Pass) >= 100, b + " invertibility < 100");
                               o.need(count_id(s, b + ".naturality", Status::Pass) >= 100, b + " naturality < 100");
                           }
                           for (const auto& a : corpus.algebras)
                               if (!a.semisimple) {
                                   const bool skipped = std::any_of(s.checks.begin(), s.checks.end(), [&](const Check& c) {
                                       return c.id == "psi.iso" && c.instance == "reg(" + a.name + ")" &&
                                              c.status == Status::Skip;
                                   });
                                   o.need(skipped, "psi not skipped on " + a.name);
                               }
                           o.need(fails(s) == 0, std::to_string(fails(s)) + " failures");
                           return o;
                       });
    bad += report_line(3, "involution theorem and the zeta equality hold on Q, QxQ, M2, M2xQ, Q[Z2]", [&] {
        Outcome o;
        const auto& s = suite(base, "duality");
        o.need(semisimple.size() == 5, "expected five semisimple algebras");
        for (const auto& n : semisimple) {
            o.need(passes(s, "zeta.compat", n), "zeta equality on " + n);
            o.need(passes(s, "y.adjoint_equivalence", n), "y adjoint equivalence on " + n);
        }
        o.need(count_id(s, "chi.cocycle", Status::Pass) > 0 && count_id(s, "y.composite", Status::Pass) > 0,
               "no composite checks ran");
        o.need(fails(s) == 0, std::to_string(fails(s)) + " failures");
        return o;
    });
    bad += report_line(4, "Rep duality equation holds for every simple; psi of the dual inverts the dual of psi", [&] {
        Outcome o;
        const auto& s = suite(base, "rep");
        o.need(count_id(s, "rep.theorem", Status::Pass) == simples, "equation not checked on every simple");
        o.need(count_id(s, "psi.dual", Status::Pass) == simples, "psi identity not checked on every simple");
        o.need(fails(s) == 0, std::to_string(fails(s)) + " failures");
        return o;
    });
    bad += report_line(5, "equivalence detection: rows of M2, M3 yes, projection no; equivalences are permutations", [&] {
        Outcome o;
        const auto& s = suite(base, "morita");
        for (const char* inst : {"rows(M2)", "rows(M3)", "proj(QxQ)"})
            o.need(passes(s, "equivalence.expected", inst), std::string("detection on ") + inst);
        o.need(count_id(s, "equivalence.rep", Status::Fail) == 0, "an equivalence is not a permutation");
        o.need(count_id(s, "equivalence.rep", Status::Pass) >= 3, "too few Rep comparisons");
        o.need(fails(s) == 0, std::to_string(fails(s)) + " failures");
        return o;
    });
    bad += report_line(6, "zig-zag identities for every corpus algebra", [&] {
        Outcome o;
        const auto& s = suite(base, "dualobjects");
        o.need(count_id(s, "zigzag.first", Status::Pass) == corpus.algebras.size(), "first zig-zag");
        o.need(count_id(s, "zigzag.second", Status::Pass) == corpus.algebras.size(), "second zig-zag");
        o.need(fails(s) == 0, std::to_string(fails(s)) + " failures");
        return o;
    });
    bad += report_line(7, "KV involution twice is the identity on 1000 random cells", [&] {
        Outcome o;
        const auto cs = check_kv_strictness(1000, opts.seed);
        o.need(cs.size() == 1 && cs.front().status == Status::Pass, cs.empty() ? "no check" : cs.front().reason);
        return o;
    });
    bad += report_line(8, "identical corpus and seed give identical report digests", [&] {
        Outcome o;
        const Corpus again = generate_corpus(default_spec());
        o.need(corpus_digest(again) == corpus_digest(corpus), "corpus digest differs");
        const Corpus reread = corpus_from_json(corpus_to_json(corpus));
        o.need(corpus_digest(reread) == corpus_digest(corpus), "corpus JSON round trip differs");
        VerifyOptions serial = opts;
        serial.jobs = 1;
        const Report second = run("all", reread, serial);
        o.need(report_digest(second) == report_digest(base), "report digest differs");
        return o;
    });
    bad += report_line(9, "a +1 in any single coherence cell fails exactly its own suite", [&] {
        Outcome o;
        CorpusSpec spec = default_spec();
        spec.bimodules.count = 10;
        spec.bimodules.max_dim = 4;
        const Corpus small = generate_corpus(spec);
        VerifyOptions m = opts;
        m.max_dim = 6;
        const Report clean = run("all", small, m);
        o.need(failures(clean) == 0, "unmutated run fails");
        for (const auto& owner : suite_names())
            for (const auto& cell : suite_cells(owner)) {
                m.tamper.cell = cell;
                const Report r = run("all", small, m);
                std::set<std::string> failing;
                for (const auto& s : r.suites)
                    if (fails(s) > 0) failing.insert(s.name);
                o.need(failing == std::set<std::string>{owner}, cell + " did not fail exactly " + owner);
            }
        return o;
    });
    return bad == 0 ? 0 : 1;
}
