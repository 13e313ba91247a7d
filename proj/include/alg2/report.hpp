#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "alg2/bimodule.hpp"

namespace alg2 {

enum class Status { Pass, Fail, Skip };

const char* to_string(Status s);

/// One verified equation or property on one instance.
struct Check {
    std::string id;        ///< e.g. "chi.naturality"
    std::string anchor;    ///< the statement being checked, in words
    std::string instance;  ///< which corpus items
    Status status = Status::Pass;
    std::string reason;
    std::vector<std::size_t> dims;  ///< witness dimensions
};

/// Deliberate corruption of one named coherence cell: entry (0,0) of every produced
/// instance of that cell gets +1. Empty name means no corruption.
struct Tamper {
    std::string cell;
    bool hits(const char* name) const { return !cell.empty() && cell == name; }
    Intertwiner apply(const char* name, Intertwiner f) const;
    Mat apply(const char* name, Mat m) const;
};

struct VerifyOptions {
    std::uint64_t seed = 7;
    std::size_t jobs = 1;
    std::size_t max_dim = 16;  ///< instances whose working bimodules exceed this are skipped
    Tamper tamper;
};

/// A unit of work producing checks. Exceptions become one record with the task's id:
/// NotSemisimple is a SKIP, anything else a FAIL.
struct Task {
    std::string id;
    std::string anchor;
    std::string instance;
    std::function<std::vector<Check>()> run;
};

/// Runs tasks on a pool of `jobs` threads and concatenates results in task order.
std::vector<Check> run_tasks(const std::vector<Task>& tasks, std::size_t jobs);

/// PASS iff lhs == rhs exactly (shape included).
Check equality_check(std::string id, std::string anchor, std::string instance, const Mat& lhs, const Mat& rhs);
/// PASS iff f validates as an intertwiner and is invertible.
Check iso_check(std::string id, std::string anchor, std::string instance, const Intertwiner& f);
Check bool_check(std::string id, std::string anchor, std::string instance, bool ok, std::string reason_if_not,
                 std::vector<std::size_t> dims = {});

std::size_t count(const std::vector<Check>& checks, Status s);

}  // namespace alg2
