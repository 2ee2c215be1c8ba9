#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "gcw/complexes.hpp"

namespace gcw {

class WeightError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// How the affine group R+ x R is fixed.
//   FirstTwo   white 1 at 0, white 2 at 1 (m >= 2)
//   FirstLast  white 1 at 0, the last white at 1 (m >= 2)
// With one white, the first black sits on the unit circle in both cases.
enum class Gauge { FirstTwo, FirstLast };
Gauge gauge_from_name(const std::string& s);
std::string gauge_name(Gauge g);

struct WeightOptions {
    long long samples = 1000000;
    uint64_t seed = 1;
    Gauge gauge = Gauge::FirstTwo;
    long long batch = 1 << 14;
    double max_std_error = 0.05;  // larger errors raise the non-convergence flag
};

struct WeightEstimate {
    Graph graph;
    double value = 0;
    double std_error = 0;
    long long samples = 0;
    uint64_t seed = 0;
    Gauge gauge = Gauge::FirstTwo;
    bool converged = true;
    nlohmann::json to_json() const;
};

int config_dimension(int m, int n);  // 2n + m - 2

// A gauge-fixed point of the configuration space with the proposal density
// of having drawn it (with respect to the free coordinates).
struct Configuration {
    std::vector<std::complex<double>> z;  // whites first (real), then blacks
    std::vector<double> coords;           // free coordinates
    double density = 1;
};
Configuration sample_configuration(int m, int n, Gauge gauge, std::mt19937_64& rng);

// The top form of the graph in the free coordinates at a configuration, in the
// orientation induced from (w_1..w_m, x_1, y_1, ..., x_n, y_n) modulo the group.
double form_density(const Graph& g, const Configuration& c, Gauge gauge);

WeightEstimate weight(const Graph& g, const WeightOptions& opt = {});

// The three whites joined to one black.
Graph three_graph();

// The element sum over keys of weight * key / n! assembled from every
// degree-one Def graph with m + n <= max_total, together with the coefficients
// of its Maurer-Cartan residual in the bigrades that truncation fully covers.
struct ResidualCoefficient {
    Graph key;
    double value = 0;
    double std_error = 0;
    bool within(double k = 3) const;
};
struct ExoticResidual {
    std::vector<WeightEstimate> weights;
    std::vector<ResidualCoefficient> coefficients;
    int max_total = 4;
    bool ok() const;
    nlohmann::json to_json() const;
};
ExoticResidual exotic_mc_residual(int max_total, const WeightOptions& opt);

}  // namespace gcw
