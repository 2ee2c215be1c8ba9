#pragma once

#include "gcw/cohomology.hpp"
#include "gcw/polyvector.hpp"
#include "gcw/weights.hpp"

namespace gcw {

struct SuiteOptions {
    Limits lim;
    int hbar_order = 3;
    long long samples = 1000000;
    uint64_t seed = 1;
};

struct SuiteCheck {
    std::string name;
    bool ok = false;
    nlohmann::json detail;  // counts, values, witnesses
};

struct SuiteReport {
    std::string suite;
    nlohmann::json caps;
    std::vector<SuiteCheck> checks;
    nlohmann::json info;  // recorded observations that are not pass/fail
    double seconds = 0;  // not serialized: outputs stay reproducible
    bool ok() const;
    nlohmann::json to_json() const;
};

std::vector<std::string> suite_ids();
SuiteReport run_suite(const std::string& id, const SuiteOptions& opt = {});

// The so(3) Lie-Poisson bivector x3 p1 p2 + x1 p2 p3 + x2 p3 p1 in three variables.
Polyvector lie_poisson_so3();

// Labelled one-colour graphs with 1..max_vertices vertices, one edge order per edge set.
std::vector<Graph> labelled_graphs(int max_vertices);

}  // namespace gcw
