#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/coloring.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/rational.hpp"
#include "hyperspec/spectral.hpp"
#include "hyperspec/tolerances.hpp"

namespace hyperspec {

// chi >= (lambda_N - lambda_1) / min{lambda_N - 1, 1 - lambda_1}; 1 when lambda_1 = lambda_N = 1.
// Throws DomainError if lambda_1 > lambda_N or the denominator vanishes outside that case.
double bound_general(double lambda1, double lambdaN);

// Strong bound on c-uniform all-inputs input: (c - lambda_1) / (1 - lambda_1). Needs lambda_1 < 1.
double bound_uniform_strong(int c, double lambda1);

// chi_d >= (c - lambda_1) / (d - lambda_1). Needs 1 <= d <= c - 1 and lambda_1 < d.
double bound_d_proper(int c, double lambda1, int d);

// chi^{q-t} >= (c - lambda_1) / (q + 1 - lambda_1). Needs 0 <= q <= c - 1 and lambda_1 < q + 1.
double bound_q_tailored(int c, double lambda1, const Rational& q);

// chi^d >= lambda_N / (lambda_N - 1 + d / avg deg) on graphs. Needs a positive denominator.
double bound_d_improper(double lambdaN, int d, double average_degree);

// chi' >= (c - mu_1) / (c / avg deg - mu_1); 1 when mu_1 = c / avg deg.
double bound_edge(int c, double mu1, double average_degree);

// lambda_1 = lambda_N = 1 within tol::kConvention.
bool general_convention(double lambda1, double lambdaN);
// mu_1 = c / avg deg within tol::kConvention * max(1, c / avg deg).
bool edge_convention(int c, double mu1, double average_degree);

enum class BoundKind { General, DProper, QTailored, DImproper, Edge };

std::string to_string(BoundKind kind);

// The bound that applies to a coloring mode.
BoundKind bound_kind_of(const ColoringMode& mode);

struct BoundInputs {
    std::optional<double> lambda1;
    std::optional<double> lambdaN;
    std::optional<double> mu1;
    std::optional<int> c;
    std::optional<int> d;
    std::optional<Rational> q;
    std::optional<double> average_degree;
};

struct BoundReport {
    BoundKind kind = BoundKind::General;
    ColoringMode mode;
    BoundInputs inputs;
    double value = 0.0;
    bool convention = false;

    SolveStatus status = SolveStatus::Inconclusive;
    std::optional<int> exact;  // coloring number, when solved
    int lower_bound = 0;
    int upper_bound = 0;
    std::optional<Coloring> witness;

    std::optional<double> gap;   // exact - value
    std::optional<bool> sharp;   // |exact - value| <= sharp tolerance; absent when inconclusive

    // False only when an exact value is known and lies below the bound by more than tol.
    bool sound(double tol = tol::kSharp) const;
};

struct EvaluateOptions {
    SolverOptions solver;
    double sharp_tol = tol::kSharp;
    // Skip the solver and use this coloring number (e.g. from the brute-force oracle).
    std::optional<int> known_chromatic;
};

// Spectra, exact coloring number and bound for one mode. Throws ModeMismatch when the
// bound's scope excludes h: d-proper and edge bounds need c-uniform all-inputs input and
// the d-proper bound needs 1 <= d <= c - 1.
BoundReport evaluate(const OrientedHypergraph& h, const ColoringMode& mode, const EvaluateOptions& options = {});

// sum_{v in V_i, w in V_j} A_{v,w} f(v) f(w), classes numbered from 1.
// Throws DomainError for a class index outside 1..k or a function of the wrong dimension.
double s_quantity(const OrientedHypergraph& h, std::span<const double> f, const Coloring& coloring, int i, int j);

// +1 on class i, -1 on class j, 0 elsewhere (vertex or edge function per the coloring's target).
// Throws DomainError for i == j or indices outside 1..k.
std::vector<double> indicator(const Coloring& coloring, int i, int j);

// |{e : v in e and e meets vertex_class}|.
std::size_t class_edge_count(const OrientedHypergraph& h, std::size_t v, std::span<const std::size_t> vertex_class);

struct Condition {
    std::string name;
    bool pass = false;
    double observed = 0.0;
    double expected = 0.0;
    std::string detail;
};

struct SharpnessReport {
    BoundKind kind = BoundKind::General;
    int colors = 0;
    double bound = 0.0;
    std::vector<Condition> conditions;

    bool pass() const;
    // First failing condition, if any.
    const Condition* first_failure() const;
};

// Necessary conditions for equality in the bound of the coloring's mode, evaluated for
// this coloring. The battery always contains the equality |k - bound| <= tol itself, so a
// coloring that does not attain the bound fails at least that condition.
// Throws ModeMismatch if the coloring is invalid for the mode or the bound does not apply.
SharpnessReport check_sharpness(const OrientedHypergraph& h, const Coloring& coloring, const ColoringMode& mode,
                                double sharp_tol = tol::kSharp);

} // namespace hyperspec
