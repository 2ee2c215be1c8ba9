// Runs every verification suite, maps them onto the thirteen acceptance
// criteria and prints one PASS/FAIL line per criterion.  Exit status is
// nonzero when any criterion fails.
#include <chrono>
#include <cstdio>
#include <map>

#include "gcw/suites.hpp"

using namespace gcw;

namespace {

struct Criterion {
    int id;
    const char* title;
    const char* suite;  // nullptr: determinism
};

const Criterion kCriteria[] = {
    {1, "exactness of differentials", "d-squared"},
    {2, "Maurer-Cartan anchors", "mc-gamma0"},
    {3, "K4 class", "k4-class"},
    {4, "Willwacher chain map", "willwacher-chain"},
    {5, "splitting morphism", "splitting-lie"},
    {6, "no-go witness", "nogo-witness"},
    {7, "whitening", "whitening"},
    {8, "representation morphism", "rep-morphism"},
    {9, "Poisson twist", "ainf-twist"},
    {10, "weight anchor", "weights-anchor"},
    {11, "exotic MC residual", "exotic-mc-residual"},
    {12, "gauge consistency", "gauge-consistency"},
    {13, "determinism", nullptr},
};

std::string failing(const SuiteReport& r) {
    std::string s;
    for (auto& c : r.checks)
        if (!c.ok) s += (s.empty() ? "" : "; ") + c.name;
    return s;
}

}  // namespace

int main() {
    const SuiteOptions opt;
    std::map<std::string, SuiteReport> first;
    std::map<std::string, std::string> bytes;
    for (auto& id : suite_ids()) {
        auto r = run_suite(id, opt);
        std::fprintf(stderr, "[%s: %s, %.1f s]\n", id.c_str(), r.ok() ? "pass" : "fail", r.seconds);
        bytes[id] = r.to_json().dump();
        first.emplace(id, std::move(r));
    }
    // second pass with identical options
    std::vector<std::string> differ;
    for (auto& id : suite_ids()) {
        auto r = run_suite(id, opt);
        if (r.to_json().dump() != bytes[id]) differ.push_back(id);
    }

    int failed = 0;
    for (auto& c : kCriteria) {
        bool ok;
        std::string note;
        if (c.suite) {
            const auto& r = first.at(c.suite);
            ok = r.ok();
            note = ok ? std::to_string(r.checks.size()) + " checks" : "failing: " + failing(r);
        } else {
            ok = differ.empty();
            note = std::to_string(bytes.size()) + " suites rerun";
            for (auto& d : differ) note += (d == differ.front() ? "; differ: " : ", ") + d;
        }
        failed += !ok;
        std::printf("criterion %2d %-28s %s  (%s%s%s)\n", c.id, c.title, ok ? "PASS" : "FAIL", c.suite ? c.suite : "",
                    c.suite ? ": " : "", note.c_str());
    }
    // suites that back several criteria at once
    for (auto& [id, r] : first) {
        bool mapped = false;
        for (auto& c : kCriteria) mapped = mapped || (c.suite && id == c.suite);
        if (!mapped) std::printf("supplementary %-25s %s\n", id.c_str(), r.ok() ? "PASS" : "FAIL");
    }
    std::printf("%d of 13 criteria passed\n", 13 - failed);
    return failed ? 1 : 0;
}
