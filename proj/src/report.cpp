#include "alg2/report.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "alg2/error.hpp"

namespace alg2 {

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Skip: return "SKIP";
    }
    return "?";
}

Mat Tamper::apply(const char* name, Mat m) const {
    if (hits(name) && m.rows() > 0 && m.cols() > 0) m(0, 0) += 1;
    return m;
}

Intertwiner Tamper::apply(const char* name, Intertwiner f) const {
    f.mat = apply(name, std::move(f.mat));
    return f;
}

namespace {

std::vector<Check> run_one(const Task& t) {
    try {
        return t.run();
    } catch (const NotSemisimple& e) {
        return {Check{t.id, t.anchor, t.instance, Status::Skip, std::string("NotSemisimple: ") + e.what(), {}}};
    } catch (const std::exception& e) {
        return {Check{t.id, t.anchor, t.instance, Status::Fail, std::string("error: ") + e.what(), {}}};
    }
}

}  // namespace

std::vector<Check> run_tasks(const std::vector<Task>& tasks, std::size_t jobs) {
    std::vector<std::vector<Check>> results(tasks.size());
    jobs = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = run_one(tasks[i]);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_one(tasks[i]);
            });
    }
    std::vector<Check> out;
    for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
    return out;
}

Check equality_check(std::string id, std::string anchor, std::string instance, const Mat& lhs, const Mat& rhs) {
    Check c{std::move(id), std::move(anchor), std::move(instance), Status::Pass, {}, {lhs.rows(), lhs.cols()}};
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
        c.status = Status::Fail;
        c.reason = "shapes differ";
    } else if (lhs != rhs) {
        c.status = Status::Fail;
        std::size_t bad = 0;
        for (std::size_t i = 0; i < lhs.rows(); ++i)
            for (std::size_t j = 0; j < lhs.cols(); ++j) bad += lhs(i, j) != rhs(i, j);
        c.reason = std::to_string(bad) + " entries differ";
    }
    return c;
}

Check iso_check(std::string id, std::string anchor, std::string instance, const Intertwiner& f) {
    Check c{std::move(id), std::move(anchor), std::move(instance), Status::Pass, {}, {f.mat.rows(), f.mat.cols()}};
    const auto defects = validate(f);
    if (!defects.empty()) {
        c.status = Status::Fail;
        c.reason = defects.front();
    } else if (!is_invertible(f)) {
        c.status = Status::Fail;
        c.reason = "not invertible";
    }
    return c;
}

Check bool_check(std::string id, std::string anchor, std::string instance, bool ok, std::string reason_if_not,
                 std::vector<std::size_t> dims) {
    return {std::move(id), std::move(anchor), std::move(instance), ok ? Status::Pass : Status::Fail,
            ok ? std::string() : std::move(reason_if_not), std::move(dims)};
}

std::size_t count(const std::vector<Check>& checks, Status s) {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const Check& c) { return c.status == s; }));
}

}  // namespace alg2
