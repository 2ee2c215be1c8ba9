#include "gcw/weights.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace gcw {

namespace {

constexpr double kPi = std::numbers::pi;
using C = std::complex<double>;

C black_center(int m) { return m >= 2 ? C(0.5, 0) : C(0, 0); }

double cauchy_density(C z, C c) {
    double r2 = std::norm(z - c);
    return 1 / (2 * kPi * std::pow(1 + r2, 1.5));
}

// Radius r = U^(1/alpha) within the unit disc around a point: planar density
// alpha r^(alpha-2) / 2pi.  The form is as singular as 1/(r1 r2) near a pair of
// close points; alpha < 1 keeps the importance ratio square integrable there.
constexpr double kAlpha = 0.25;

double near_density(C z, C a) {
    double r = std::abs(z - a);
    return r < 1 ? kAlpha * std::pow(r, kAlpha - 2) / (2 * kPi) : 0;
}

}  // namespace

Gauge gauge_from_name(const std::string& s) {
    if (s == "first-two") return Gauge::FirstTwo;
    if (s == "first-last") return Gauge::FirstLast;
    throw WeightError("unknown gauge: " + s);
}

std::string gauge_name(Gauge g) { return g == Gauge::FirstTwo ? "first-two" : "first-last"; }

int config_dimension(int m, int n) { return 2 * n + m - 2; }

nlohmann::json WeightEstimate::to_json() const {
    return {{"graph", to_key(graph)}, {"value", value},          {"std_error", std_error},
            {"samples", samples},     {"seed", seed},            {"gauge", gauge_name(gauge)},
            {"converged", converged}};
}

Configuration sample_configuration(int m, int n, Gauge gauge, std::mt19937_64& rng) {
    if (m < 1) throw WeightError("no gauge section without white vertices");
    std::uniform_real_distribution<double> U(0, 1);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Configuration c;
        c.z.assign(m + n, C(0, 0));
        c.density = 1;
        int first_free_black = 0;
        if (m == 1) {
            if (n == 0) throw WeightError("configuration space of one white vertex is empty");
            double th = 2 * kPi * U(rng);
            c.z[1] = std::polar(1.0, th);
            c.coords.push_back(th);
            c.density *= 1 / (2 * kPi);
            first_free_black = 1;
        } else if (gauge == Gauge::FirstTwo) {
            c.z[1] = 1;
            for (int k = 2; k < m; ++k) {
                // gap with density (1+s)^(-3/2) / 2: heavier than the form's tail
                double u = 1 - U(rng);
                double s = 1 / (u * u) - 1;
                c.z[k] = c.z[k - 1] + s;
                c.coords.push_back(s);
                c.density *= 0.5 / std::pow(1 + s, 1.5);
            }
        } else {
            c.z[m - 1] = 1;
            std::vector<double> t(m - 2);
            for (auto& v : t) v = U(rng);
            std::sort(t.begin(), t.end());
            for (int k = 1; k < m - 1; ++k) {
                c.z[k] = t[k - 1];
                c.coords.push_back(t[k - 1]);
                c.density *= k;  // (m-2)! overall
            }
        }
        const C c0 = black_center(m);
        for (int j = first_free_black; j < n; ++j) {
            const int v = m + j;
            C z;
            if (U(rng) < 0.5) {
                double u = U(rng);
                double r = std::sqrt(1 / ((1 - u) * (1 - u)) - 1);
                z = c0 + std::polar(r, 2 * kPi * U(rng));
            } else {
                int a = std::min(int(U(rng) * v), v - 1);
                z = c.z[a] + std::polar(std::pow(U(rng), 1 / kAlpha), 2 * kPi * U(rng));
            }
            c.z[v] = z;
            double q = cauchy_density(z, c0);
            double near = 0;
            for (int a = 0; a < v; ++a) near += near_density(z, c.z[a]);
            c.density *= 0.5 * q + 0.5 * near / v;
            c.coords.push_back(z.real());
            c.coords.push_back(z.imag());
        }
        bool ok = true;
        for (int a = 0; a < m + n && ok; ++a)
            for (int b = a + 1; b < m + n && ok; ++b)
                if (std::abs(c.z[a] - c.z[b]) < 1e-12) ok = false;
        if (ok && std::isfinite(c.density) && c.density > 0) return c;
    }
    throw WeightError("collision resampling exhausted");
}

double form_density(const Graph& g, const Configuration& c, Gauge gauge) {
    const int m = g.m, n = g.n, D = int(c.coords.size());
    if (g.ne() != D) throw WeightError("form degree differs from the dimension");
    // derivative of every point along every free coordinate
    std::vector<std::vector<C>> dz(m + n, std::vector<C>(D, C(0, 0)));
    int col = 0;
    double orient = 1;
    if (m == 1) {
        dz[1][0] = C(0, 1) * c.z[1];
        col = 1;
    } else if (gauge == Gauge::FirstTwo) {
        for (int k = 2; k < m; ++k, ++col)
            for (int w = k; w < m; ++w) dz[w][col] = 1;
    } else {
        for (int k = 1; k < m - 1; ++k, ++col) dz[k][col] = 1;
        if (m % 2) orient = -1;
    }
    for (int v = (m == 1 ? m + 1 : m); v < m + n; ++v) {
        dz[v][col++] = 1;
        dz[v][col++] = C(0, 1);
    }
    if (D == 0) return orient;
    Eigen::MatrixXd J(D, D);
    for (int e = 0; e < D; ++e) {
        int a = g.edges[e].a, b = g.edges[e].b;
        C u = c.z[a] - c.z[b];
        for (int k = 0; k < D; ++k) J(e, k) = ((dz[a][k] - dz[b][k]) / u).imag();
    }
    return orient * J.determinant() / std::pow(2 * kPi, D);
}

Graph three_graph() { return make_graph(Kind::TwoOrdered, 3, 1, {{0, 3}, {1, 3}, {2, 3}}); }

WeightEstimate weight(const Graph& g, const WeightOptions& opt) {
    if (!two_colour(g.kind)) throw WeightError("weights are defined for two-colour graphs");
    if (g.m < 1) throw WeightError("no gauge section without white vertices");
    for (auto& e : g.edges)
        if (e.a == e.b) throw WeightError("tadpole");
    WeightEstimate w;
    w.graph = g;
    w.seed = opt.seed;
    w.gauge = opt.gauge;
    if (g.ne() != config_dimension(g.m, g.n)) return w;
    for (int i = 0; i < g.ne(); ++i)
        for (int j = i + 1; j < g.ne(); ++j) {
            auto a = g.edges[i], b = g.edges[j];
            if ((a.a == b.a && a.b == b.b) || (a.a == b.b && a.b == b.a)) return w;
        }
    if (g.ne() == 0) {
        // a single point
        Configuration c;
        c.z = {0, 1};
        w.value = form_density(g, c, opt.gauge);
        return w;
    }
    if (opt.samples < 2) throw WeightError("need at least two samples");
    double sum = 0, sum2 = 0;
    long long done = 0;
    for (long long b = 0; done < opt.samples; ++b) {
        std::seed_seq seq{uint32_t(opt.seed), uint32_t(opt.seed >> 32), uint32_t(b), uint32_t(b >> 32)};
        std::mt19937_64 rng(seq);
        long long k = std::min(opt.batch, opt.samples - done);
        double s = 0, s2 = 0;
        for (long long i = 0; i < k; ++i) {
            Configuration c = sample_configuration(g.m, g.n, opt.gauge, rng);
            double f = form_density(g, c, opt.gauge) / c.density;
            s += f;
            s2 += f * f;
        }
        sum += s;
        sum2 += s2;
        done += k;
    }
    const double N = double(done);
    w.samples = done;
    w.value = sum / N;
    double var = std::max(0.0, sum2 / N - w.value * w.value) * N / (N - 1);
    w.std_error = std::sqrt(var / N);
    w.converged = w.std_error <= opt.max_std_error;
    return w;
}

// ---------------------------------------------------------------- exotic element

bool ResidualCoefficient::within(double k) const { return std::abs(value) <= k * std_error + 1e-9; }

bool ExoticResidual::ok() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](auto& c) { return c.within(); });
}

nlohmann::json ExoticResidual::to_json() const {
    nlohmann::json j;
    j["max_total"] = max_total;
    j["weights"] = nlohmann::json::array();
    for (auto& w : weights) j["weights"].push_back(w.to_json());
    j["residual"] = nlohmann::json::array();
    for (auto& c : coefficients)
        j["residual"].push_back({{"graph", to_key(c.key)},
                                 {"value", c.value},
                                 {"std_error", c.std_error},
                                 {"within_3_sigma", c.within()}});
    j["ok"] = ok();
    return j;
}

ExoticResidual exotic_mc_residual(int max_total, const WeightOptions& opt) {
    ExoticResidual out;
    out.max_total = max_total;
    std::vector<GVec> pieces;  // key / n!
    for (int m = 1; m <= max_total; ++m)
        for (int n = 0; m + n <= max_total; ++n) {
            int l = config_dimension(m, n);
            if (l < 0) continue;
            for (auto& g : enumerate(Kind::TwoOrdered, m, n, l)) {
                WeightOptions o = opt;
                o.seed = opt.seed + 1000003ull * out.weights.size();
                out.weights.push_back(weight(g, o));
                Q f(1);
                for (int k = 2; k <= n; ++k) f *= k;
                pieces.push_back(GVec::single(g, 1 / f));
            }
        }
    const int P = int(pieces.size());
    auto covered = [&](const Graph& k) { return k.m + k.n <= max_total; };
    // residual = sum_a w_a L_a + sum_{a,b} w_a w_b B_ab
    const Mac e{GVec(), edge_mc()};
    std::vector<GVec> L(P);
    std::vector<std::vector<GVec>> B(P, std::vector<GVec>(P));
    std::set<Graph> keys;
    for (int a = 0; a < P; ++a) {
        Mac A{pieces[a], GVec()};
        L[a] = (mac_bracket(A, e) + mac_bracket(e, A)).def.filter(covered);
        for (auto& [k, c] : L[a]) keys.insert(k);
        for (int b = 0; b < P; ++b) {
            if (pieces[a].min_vertices() + pieces[b].min_vertices() - 1 > max_total) continue;
            B[a][b] = mac_bracket(A, Mac{pieces[b], GVec()}).def.filter(covered);
            for (auto& [k, c] : B[a][b]) keys.insert(k);
        }
    }
    auto cf = [](const GVec& v, const Graph& k) { return v.coeff(k).get_d(); };
    for (auto& k : keys) {
        ResidualCoefficient rc;
        rc.key = k;
        double var = 0;
        for (int a = 0; a < P; ++a) {
            const double wa = out.weights[a].value;
            double grad = cf(L[a], k);
            rc.value += wa * cf(L[a], k);
            for (int b = 0; b < P; ++b) {
                const double wb = out.weights[b].value;
                rc.value += wa * wb * cf(B[a][b], k);
                grad += (cf(B[a][b], k) + cf(B[b][a], k)) * wb;
            }
            var += grad * grad * out.weights[a].std_error * out.weights[a].std_error;
        }
        rc.std_error = std::sqrt(var);
        out.coefficients.push_back(rc);
    }
    return out;
}

}  // namespace gcw
