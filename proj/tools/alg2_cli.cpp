// alg2 verify / gen-corpus
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "alg2/corpus.hpp"
#include "alg2/error.hpp"
#include "alg2/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw alg2::UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text << '\n')) throw alg2::UsageError("cannot write '" + path + "'");
}

std::size_t default_jobs() {
    if (const char* env = std::getenv("ALG2_JOBS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring ALG2_JOBS='" << env << "'\n";
    }
    return 1;
}

alg2::Corpus load_corpus(const std::string& path) {
    if (path == "default") return alg2::generate_corpus(alg2::default_spec());
    return alg2::corpus_from_json(read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of coherence data for the Morita bicategory over Q"};
    app.require_subcommand(1);
    app.set_version_flag("--version", alg2::kToolVersion);

    auto* verify = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
    std::string suite, corpus_path, report_path, mutate;
    std::uint64_t seed = 7;
    std::size_t max_dim = 16;
    std::size_t jobs = default_jobs();
    verify->add_option("--suite", suite, "bicategory, appendixA, duality, rep, morita, dualobjects or all")->required();
    verify->add_option("--corpus", corpus_path, "corpus JSON, or 'default' for the built-in corpus")->required();
    verify->add_option("--seed", seed, "seed for instance sampling")->capture_default_str();
    verify->add_option("--max-dim", max_dim, "skip working bimodules above this dimension")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--report", report_path, "where to write the report")->required();
    verify->add_option("--jobs", jobs, "worker threads (default from ALG2_JOBS, else 1)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--mutate", mutate, "add 1 to entry (0,0) of the named coherence cell (mutation testing)");

    auto* gen = app.add_subcommand("gen-corpus", "Generate a corpus from a spec");
    std::string spec_path, out_path;
    gen->add_option("--spec", spec_path, "spec JSON, or 'default'")->required();
    gen->add_option("--out", out_path, "corpus JSON output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const alg2::CorpusSpec spec =
                spec_path == "default" ? alg2::default_spec() : alg2::spec_from_json(read_file(spec_path));
            const alg2::Corpus c = alg2::generate_corpus(spec);
            write_file(out_path, alg2::corpus_to_json(c));
            std::cout << "corpus " << alg2::corpus_digest(c) << ": " << c.algebras.size() << " algebras, "
                      << c.bimodules.size() << " bimodules\n";
            return kExitPass;
        }

        if (!alg2::is_suite(suite)) throw alg2::UsageError("unknown suite '" + suite + "'");
        if (!mutate.empty()) {
            bool known = false;
            for (const auto& s : alg2::suite_names())
                for (const auto& cell : alg2::suite_cells(s)) known = known || cell == mutate;
            if (!known) throw alg2::UsageError("unknown cell '" + mutate + "'");
        }
        const alg2::Corpus c = load_corpus(corpus_path);
        alg2::VerifyOptions opts;
        opts.seed = seed;
        opts.max_dim = max_dim;
        opts.jobs = jobs;
        opts.tamper.cell = mutate;
        const alg2::Report r = alg2::run(suite, c, opts);
        write_file(report_path, alg2::report_to_json(r));
        for (const auto& s : r.suites) {
            std::cout << s.name << ": " << alg2::count(s.checks, alg2::Status::Pass) << " pass, "
                      << alg2::count(s.checks, alg2::Status::Fail) << " fail, "
                      << alg2::count(s.checks, alg2::Status::Skip) << " skip\n";
            for (const auto& ch : s.checks)
                if (ch.status == alg2::Status::Fail)
                    std::cout << "  FAIL " << ch.id << " [" << ch.instance << "] " << ch.reason << '\n';
        }
        std::cout << "digest " << alg2::report_digest(r) << '\n';
        return alg2::failures(r) == 0 ? kExitPass : kExitFail;
    } catch (const alg2::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const alg2::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const alg2::Error& e) {
        // bad spec bounds, inconsistent algebras
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
