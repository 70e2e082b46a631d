// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "hyperspec/bounds.hpp"
#include "hyperspec/coloring.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/spectral.hpp"

using namespace hyperspec;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream note;

    void fail(const std::string& why)
    {
        if (pass)
            note << "first failure: " << why << "; ";
        pass = false;
    }
};

struct Criterion {
    std::string id;
    std::string title;
    double time_limit;  // seconds, 0 for none
    std::function<void(Outcome&)> body;
};

// Corpus shared by the corpus-wide checks (criteria 9 and 10).
std::vector<std::pair<std::string, OrientedHypergraph>>& shared_corpus()
{
    static std::vector<std::pair<std::string, OrientedHypergraph>> instances;
    return instances;
}

void remember(const std::string& id, const OrientedHypergraph& h)
{
    shared_corpus().emplace_back(id, h);
}

// {c^(1), (c-k)^(p-1), 0^(N-p)} with N = k + p (c - k).
std::vector<double> hyperflower_oracle(int c, int p, int k)
{
    const int n = k + p * (c - k);
    return corpus::repeated({{double(c), 1}, {double(c - k), p - 1}, {0.0, n - p}});
}

// {c^(1), 1^(k(s-1)), ((k-c)/(k-1))^(k-1)}.
std::vector<double> multipartite_oracle(int c, int s, int k)
{
    const double low = k == 1 ? 0.0 : double(k - c) / double(k - 1);
    return corpus::repeated({{double(c), 1}, {1.0, k * (s - 1)}, {low, k - 1}});
}

void ac1(Outcome& out)
{
    int count = 0;
    double worst = 0.0;
    for (int c = 2; c <= 7; ++c)
        for (int k = 1; k < c; ++k)
            for (int p = 1; p <= 5; ++p) {
                const auto h = hyperflower(c, p, k);
                const double err = corpus::multiset_distance(vertex_spectrum(h).eigenvalues, hyperflower_oracle(c, p, k));
                worst = std::max(worst, err);
                ++count;
                if (err > 1e-7)
                    out.fail("H^" + std::to_string(c) + "_{" + std::to_string(p) + "," + std::to_string(k) + "}");
                remember("hyperflower", h);
            }
    out.note << count << " instances, max error " << worst;
}

void ac2(Outcome& out)
{
    int count = 0;
    double worst = 0.0;
    for (int k = 1; k <= 6; ++k)
        for (int c = 1; c <= k; ++c)
            for (int s = 1; s <= 2; ++s) {
                if (k * s > 12)
                    continue;
                const auto h = uniform_multipartite(c, s, k);
                const double err = corpus::multiset_distance(vertex_spectrum(h).eigenvalues, multipartite_oracle(c, s, k));
                worst = std::max(worst, err);
                ++count;
                if (err > 1e-7)
                    out.fail("Gamma^" + std::to_string(c) + "(" + std::to_string(s) + "," + std::to_string(k) + ")");
                remember("multipartite", h);
            }
    out.note << count << " instances, max error " << worst;
}

void ac3(Outcome& out)
{
    const auto h = example_a0();
    remember("examplea0", h);
    const auto a = adjacency(h);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0)
                out.fail("A(" + std::to_string(i) + "," + std::to_string(j) + ") != 0");
    const double err = corpus::multiset_distance(vertex_spectrum(h).eigenvalues, corpus::repeated({{1.0, 4}}));
    if (err > 1e-9)
        out.fail("spectrum differs from {1^(4)}");
    out.note << "A = 0, spectrum error " << err;
}

void ac4(Outcome& out)
{
    int violations = 0;
    double tightest = -1e300;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        OrientedHypergraph h;
        if (seed % 2 == 0) {
            const int c = 2 + static_cast<int>(seed / 2 % 3);
            h = corpus::random_uniform(seed, c, 4, 8, 9, Orientation::RandomSigns);
        }
        else {
            h = corpus::random_mixed(seed);
        }
        remember("random-mixed", h);
        const auto spec = vertex_spectrum(h);
        const double bound = bound_general(spec.min(), spec.max());
        const int chi = brute_force_chromatic(h, Strong{});
        tightest = std::max(tightest, bound - chi);
        if (bound > chi + 1e-6) {
            ++violations;
            out.fail("seed " + std::to_string(seed));
        }
    }
    out.note << "200 instances, violations " << violations << ", max(bound - chi) " << tightest;
}

void ac5(Outcome& out)
{
    const int triples[3][3] = {{3, 1, 3}, {3, 2, 3}, {4, 1, 5}};
    for (const auto& t : triples) {
        const int c = t[0], s = t[1], k = t[2];
        const std::string id = "Gamma^" + std::to_string(c) + "(" + std::to_string(s) + "," + std::to_string(k) + ")";
        const auto h = uniform_multipartite(c, s, k);
        const auto result = chromatic(h, Strong{});
        if (!result.number || !result.witness) {
            out.fail(id + " unsolved");
            continue;
        }
        const auto spec = vertex_spectrum(h);
        const double bound = bound_general(spec.min(), spec.max());
        if (std::abs(*result.number - bound) > 1e-6)
            out.fail(id + " chi " + std::to_string(*result.number) + " vs bound " + std::to_string(bound));
        if (static_cast<int>(multiplicity(spec, spec.min())) < *result.number - 1)
            out.fail(id + " multiplicity of lambda_1 below chi - 1");
        const auto report = check_sharpness(h, *result.witness, Strong{});
        if (!report.pass())
            out.fail(id + " battery: " + report.first_failure()->name);
        out.note << id << " chi=" << *result.number << " bound=" << bound << " (" << report.conditions.size()
                 << " conditions); ";
    }
}

void ac6(Outcome& out)
{
    const auto h = hyperflower(9, 3, 2);
    remember("hyperflower", h);
    const DProper mode{3};
    const auto result = chromatic(h, mode);
    if (result.number != 3 || !result.witness) {
        out.fail("chi_3 is not 3");
        return;
    }
    const auto spec = vertex_spectrum(h);
    const double lambda1 = spec.min();
    const double bound = bound_d_proper(9, lambda1, 3);
    if (std::abs(bound - 3.0) > 1e-9)
        out.fail("bound " + std::to_string(bound));
    const auto classes = result.witness->classes();
    for (const auto& e : h.edges())
        for (const auto& cls : classes) {
            int inside = 0;
            for (auto v : cls)
                inside += e.contains(v) ? 1 : 0;
            if (inside != 3)
                out.fail("an edge meets a class in " + std::to_string(inside) + " vertices");
        }
    const double predicted = (3.0 * 3 - 9) / 2;
    if (std::abs(predicted - lambda1) > 1e-9)
        out.fail("predicted eigenvalue differs from lambda_1");
    const auto report = check_sharpness(h, *result.witness, mode);
    if (!report.pass())
        out.fail("battery: " + report.first_failure()->name);
    out.note << "chi_3=3, bound=" << bound << ", lambda_1=" << lambda1 << ", " << report.conditions.size()
             << " conditions";
}

std::vector<OrientedHypergraph> all_inputs_corpus()
{
    std::vector<OrientedHypergraph> out;
    for (std::uint64_t seed = 1; seed <= 60; ++seed)
        out.push_back(corpus::random_uniform(seed, 2 + static_cast<int>(seed % 3), 4, 8, 9, Orientation::AllInputs));
    for (int c = 3; c <= 4; ++c)
        for (int p = 1; p <= 3; ++p)
            for (int k = 1; k < c; ++k)
                out.push_back(hyperflower(c, p, k));
    out.push_back(uniform_multipartite(3, 2, 3));
    out.push_back(uniform_multipartite(3, 1, 5));
    out.push_back(uniform_multipartite(4, 1, 6));
    return out;
}

void ac7(Outcome& out)
{
    int pairs = 0, skipped = 0;
    for (const auto& h : all_inputs_corpus()) {
        remember("all-inputs", h);
        const int c = *is_uniform(h);
        const double lambda1 = vertex_spectrum(h).min();
        for (int d = 1; d <= c - 1; ++d) {
            const auto tailored = chromatic(h, QTailored{Rational(d - 1)});
            const auto proper = chromatic(h, DProper{d});
            if (!tailored.number || !proper.number) {
                ++skipped;
                continue;
            }
            ++pairs;
            if (*tailored.number > *proper.number)
                out.fail("chi^(d-1)-tailored exceeds chi_d");
            const double bq = bound_q_tailored(c, lambda1, Rational(d - 1));
            const double bd = bound_d_proper(c, lambda1, d);
            if (bq > bd + 1e-9)
                out.fail("bound_q_tailored exceeds bound_d_proper");
        }
    }
    out.note << pairs << " (instance, d) pairs, " << skipped << " unsolved";
    if (skipped > 0)
        out.fail("solver did not finish on every pair");
}

void ac8(Outcome& out)
{
    for (int n = 3; n <= 7; ++n) {
        const auto h = complete_graph(n);
        remember("complete", h);
        const double bound = bound_d_improper(vertex_spectrum(h).max(), 0, corpus::average_degree(h));
        if (std::abs(bound - n) > 1e-6)
            out.fail("K_" + std::to_string(n) + " bound " + std::to_string(bound));
        if (chromatic(h, DImproper{0}).number != n)
            out.fail("K_" + std::to_string(n) + " chi^0 != n");
    }
    int checks = 0, violations = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto h = corpus::random_uniform(seed, 2, 4, 8, 12, Orientation::Graph);
        remember("random-graph", h);
        const double lambdaN = vertex_spectrum(h).max();
        for (int d = 1; d <= 3; ++d) {
            const double bound = bound_d_improper(lambdaN, d, corpus::average_degree(h));
            const int chi = brute_force_chromatic(h, DImproper{d});
            ++checks;
            if (bound > chi + 1e-6) {
                ++violations;
                out.fail("seed " + std::to_string(seed) + " d=" + std::to_string(d));
            }
        }
    }
    out.note << "K_3..K_7 sharp at d=0; " << checks << " random checks for d>=1, violations " << violations;
}

void ac9(Outcome& out)
{
    const auto h = hyperflower(3, 4, 2);
    remember("hyperflower", h);
    const auto result = chromatic(h, EdgeStrong{});
    if (result.number != 4)
        out.fail("chi' is not 4");
    const double mu1 = edge_spectrum(h).min();
    const double bound = bound_edge(3, mu1, corpus::average_degree(h));
    if (std::abs(bound - 4.0) > 1e-9)
        out.fail("edge bound " + std::to_string(bound));

    const auto disjoint = disjoint_edges(3, 4);
    remember("disjoint", disjoint);
    const auto report = evaluate(disjoint, EdgeStrong{});
    if (!report.convention || report.value != 1.0)
        out.fail("disjoint edges do not take the conventional value 1");

    int checked = 0;
    for (const auto& [id, g] : shared_corpus()) {
        ++checked;
        const auto r = spectra_consistency(g);
        if (!r.pass())
            out.fail(id + " spectra_consistency");
    }
    out.note << "chi'=4, bound=" << bound << ", mu_1=" << mu1 << "; disjoint bound 1; consistency on " << checked
             << " instances";
}

void ac10(Outcome& out)
{
    int flips = 0, bipartite = 0, traces = 0;
    double worst_iso = 0.0, worst_trace = 0.0;
    for (const auto& [id, h] : shared_corpus()) {
        const auto l = normalized_laplacian(h);
        for (std::size_t e = 0; e < h.num_edges(); ++e) {
            const auto flipped = normalized_laplacian(corpus::flip_edge(h, e));
            ++flips;
            for (std::size_t i = 0; i < l.rows(); ++i)
                for (std::size_t j = 0; j < l.cols(); ++j)
                    if (l(i, j) != flipped(i, j))
                        out.fail(id + " L changed under an edge flip");
        }
        const auto spec = vertex_spectrum(h);
        double sum = 0.0;
        for (double x : spec.eigenvalues)
            sum += x;
        const double n = static_cast<double>(h.num_vertices());
        worst_trace = std::max(worst_trace, std::abs(sum - n) / n);
        ++traces;
        if (std::abs(sum - n) > 1e-8 * n)
            out.fail(id + " trace identity");
    }
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const auto h = corpus::random_bipartite(seed);
        if (!bipartition(h)) {
            out.fail("generated instance is not bipartite");
            continue;
        }
        ++bipartite;
        const double err =
            corpus::multiset_distance(vertex_spectrum(h).eigenvalues, vertex_spectrum(underlying(h)).eigenvalues);
        worst_iso = std::max(worst_iso, err);
        if (err > 1e-7)
            out.fail("bipartite seed " + std::to_string(seed) + " not isospectral");
    }
    out.note << flips << " edge flips, " << bipartite << " bipartite instances (max error " << worst_iso << "), "
             << traces << " trace checks (max relative error " << worst_trace << ")";
}

void ac11(Outcome& out)
{
    struct Case {
        OrientedHypergraph h;
        ColoringMode mode;
    };
    const Rational qs[] = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    std::vector<std::pair<std::string, std::vector<Case>>> groups(5);
    groups[0].first = "strong";
    groups[1].first = "d-proper";
    groups[2].first = "q-tailored";
    groups[3].first = "d-improper";
    groups[4].first = "edge";
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        groups[0].second.push_back({corpus::random_mixed(1000 + seed), Strong{}});

        const int c = 3 + static_cast<int>(seed % 2);
        const int d = 1 + static_cast<int>(seed / 2 % (c - 1));
        groups[1].second.push_back({corpus::random_uniform(2000 + seed, c, 4, 8, 9, Orientation::AllInputs), DProper{d}});

        const int cq = 2 + static_cast<int>(seed % 3);
        Rational q = qs[seed / 3 % 5];
        if (Rational(cq - 1) < q)
            q = Rational(cq - 1);
        groups[2].second.push_back({corpus::random_uniform(3000 + seed, cq, 4, 8, 9, Orientation::AllInputs), QTailored{q}});

        groups[3].second.push_back(
            {corpus::random_uniform(4000 + seed, 2, 4, 8, 12, Orientation::Graph), DImproper{static_cast<int>(seed % 3)}});

        groups[4].second.push_back({corpus::random_mixed(5000 + seed), EdgeStrong{}});
    }
    for (const auto& [name, cases] : groups) {
        int agree = 0;
        for (const auto& cs : cases) {
            const auto result = chromatic(cs.h, cs.mode);
            const int oracle = brute_force_chromatic(cs.h, cs.mode);
            if (result.number == oracle)
                ++agree;
            else
                out.fail(name + ": solver " + (result.number ? std::to_string(*result.number) : "inconclusive")
                         + " vs oracle " + std::to_string(oracle));
        }
        out.note << name << " " << agree << "/" << cases.size() << "; ";
    }
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"AC1", "hyperflower spectrum oracle", 10, ac1},
        {"AC2", "multipartite spectrum oracle", 10, ac2},
        {"AC3", "A = 0 example", 0, ac3},
        {"AC4", "general bound soundness sweep", 60, ac4},
        {"AC5", "sharp multipartite instances", 0, ac5},
        {"AC6", "d-proper bound on H^9_{3,2}", 0, ac6},
        {"AC7", "tailored versus d-proper consistency", 0, ac7},
        {"AC8", "d-improper bound", 0, ac8},
        {"AC9", "edge bound and spectra consistency", 0, ac9},
        {"AC10", "invariance suite", 0, ac10},
        {"AC11", "solver and oracle agreement", 300, ac11},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        Outcome out;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(out);
        }
        catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0 && seconds > c.time_limit)
            out.fail("runtime over " + std::to_string(c.time_limit) + " s");
        failures += out.pass ? 0 : 1;
        std::printf("%s %s: %s [%s] (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                    out.note.str().c_str(), seconds);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
