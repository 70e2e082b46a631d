#include <algorithm>
#include <cmath>
#include <sstream>

#include "bound_scope.hpp"
#include "hyperspec/bounds.hpp"
#include "hyperspec/error.hpp"

namespace hyperspec {

namespace {

std::string format(double x)
{
    std::ostringstream out;
    out.precision(12);
    out << x;
    return out.str();
}

double sup_norm(const std::vector<double>& f)
{
    double m = 0.0;
    for (double x : f)
        m = std::max(m, std::abs(x));
    return m;
}

// Eigenvectors whose eigenvalue lies in the cluster of lambda.
std::vector<const std::vector<double>*> eigenspace(const SpectralResult& spec, double lambda)
{
    std::vector<const std::vector<double>*> out;
    const double width = tol::kCluster * std::max(1.0, std::abs(lambda));
    for (std::size_t i = 0; i < spec.dimension(); ++i)
        if (std::abs(spec.eigenvalues[i] - lambda) <= width)
            out.push_back(&spec.eigenvectors[i]);
    return out;
}

class Battery {
public:
    Battery(SharpnessReport& report) : report_(report) {}

    void add(std::string name, bool pass, double observed, double expected, std::string detail = {})
    {
        report_.conditions.push_back({std::move(name), pass, observed, expected, std::move(detail)});
    }

    void equality(double tol)
    {
        const double diff = std::abs(report_.colors - report_.bound);
        add("bound equality |k - bound| <= " + format(tol), diff <= tol, report_.colors, report_.bound,
            "k = " + std::to_string(report_.colors) + ", bound = " + format(report_.bound));
    }

    void predicted(const std::string& what, double actual, double formula, double tol)
    {
        add(what, std::abs(actual - formula) <= tol, actual, formula,
            "difference " + format(std::abs(actual - formula)));
    }

    void multiplicity_at_least(const std::string& what, std::size_t m, int k)
    {
        add(what, static_cast<int>(m) >= k - 1, static_cast<double>(m), k - 1);
    }

private:
    SharpnessReport& report_;
};

// Largest ||L g_ij - lambda g_ij||_inf / max(1, ||g_ij||_inf) over pairs i < j, where
// g_ij = f on V_i, -f on V_j, 0 elsewhere; the pair attaining it is written to worst.
double pair_residual(const OrientedHypergraph& h, const Coloring& coloring, const std::vector<double>* f,
                     double lambda, bool edge, std::string& worst)
{
    double max_residual = 0.0;
    const int k = coloring.num_colors();
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) {
            std::vector<double> g = indicator(coloring, i, j);
            if (f != nullptr)
                for (std::size_t v = 0; v < g.size(); ++v)
                    g[v] *= (*f)[v];
            const double r = (edge ? edge_eigen_residual(h, g, lambda) : eigen_residual(h, g, lambda))
                             / std::max(1.0, sup_norm(g));
            if (r > max_residual || worst.empty()) {
                max_residual = std::max(max_residual, r);
                worst = "worst pair (" + std::to_string(i) + ", " + std::to_string(j) + ") residual " + format(r);
            }
        }
    return max_residual;
}

// Conditions attached to one extremal eigenspace (lambda_N for the lower branch,
// lambda_1 for the upper branch) of the general bound.
void general_branch(Battery& battery, const OrientedHypergraph& h, const Coloring& coloring, const SpectralResult& vs,
                    bool lower, double sharp_tol)
{
    const int k = coloring.num_colors();
    const double lambda1 = vs.min();
    const double lambdaN = vs.max();
    const double source = lower ? lambdaN : lambda1;
    const double target = lower ? lambda1 : lambdaN;
    const std::string f_name = lower ? "g" : "h";
    const std::string source_name = lower ? "lambda_N" : "lambda_1";
    const std::string target_name = lower ? "lambda_1" : "lambda_N";

    const auto space = eigenspace(vs, source);
    std::size_t missing_support = 0;
    double worst_s = lower ? -INFINITY : INFINITY;
    double worst_residual = 0.0;
    std::string residual_detail;
    for (const auto* f : space) {
        const double cutoff = tol::kZero * std::max(1.0, sup_norm(*f));
        std::vector<bool> met(static_cast<std::size_t>(k) + 1, false);
        for (std::size_t v = 0; v < f->size(); ++v)
            if (std::abs((*f)[v]) > cutoff)
                met[static_cast<std::size_t>(coloring.color(v))] = true;
        missing_support += static_cast<std::size_t>(std::count(met.begin() + 1, met.end(), false));

        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                const double s = s_quantity(h, *f, coloring, i, j);
                worst_s = lower ? std::max(worst_s, s) : std::min(worst_s, s);
            }
        std::string detail;
        const double r = pair_residual(h, coloring, f, target, false, detail);
        if (r >= worst_residual) {
            worst_residual = r;
            residual_detail = detail;
        }
    }

    battery.add("supp(" + f_name + ") meets every class for every " + source_name + "-eigenfunction",
                missing_support == 0, static_cast<double>(missing_support), 0.0,
                std::to_string(space.size()) + " eigenfunctions checked; (eigenfunction, class) misses counted");
    if (k >= 2) {
        if (lower)
            battery.add("S^g_ij < 0 for all i < j", worst_s < -tol::kZero, worst_s, 0.0, "largest S^g_ij");
        else
            battery.add("S^h_ij >= 0 for all i < j", worst_s >= -tol::kZero, worst_s, 0.0, "smallest S^h_ij");
        battery.add(f_name + "_ij are " + target_name + "-eigenfunctions", worst_residual <= tol::kBatteryResidual,
                    worst_residual, tol::kBatteryResidual, residual_detail);
        battery.predicted(target_name + " = (k - " + source_name + ") / (k - 1)", target, (k - source) / (k - 1.0),
                          sharp_tol);
    }
    battery.multiplicity_at_least("multiplicity(" + target_name + ") >= k - 1", multiplicity(vs, target), k);
}

// |{e : v in e, e meets V_i}| against the even-distribution formula
// (c/m - 1) deg v / (k - 1) off-class and deg v on-class. Returns the number of mismatches.
std::size_t distribution_mismatches(const OrientedHypergraph& h, const Coloring& coloring, int c, int m)
{
    const int k = coloring.num_colors();
    const auto classes = coloring.classes();
    std::size_t mismatches = 0;
    for (std::size_t v = 0; v < h.num_vertices(); ++v)
        for (int i = 1; i <= k; ++i) {
            const auto count = static_cast<std::int64_t>(class_edge_count(h, v, classes[static_cast<std::size_t>(i - 1)]));
            const std::int64_t deg = h.degree(v);
            const bool ok = coloring.color(v) == i ? count == deg
                                                   : count * m * (k - 1) == static_cast<std::int64_t>(c - m) * deg;
            if (!ok)
                ++mismatches;
        }
    return mismatches;
}

void strong_battery(Battery& battery, SharpnessReport& report, const OrientedHypergraph& h, const Coloring& coloring,
                    int c, double sharp_tol)
{
    const SpectralResult vs = vertex_spectrum(h);
    const double lambda1 = vs.min();
    const double lambdaN = vs.max();
    report.bound = bound_general(lambda1, lambdaN);
    battery.equality(sharp_tol);

    const IntMatrix a = adjacency(h);
    if (std::all_of(a.data().begin(), a.data().end(), [](std::int64_t x) { return x == 0; })) {
        battery.add("A = 0: the bound takes its conventional value 1, no eigenspace conditions apply",
                    general_convention(lambda1, lambdaN), lambda1, 1.0);
        return;
    }
    const double down = 1.0 - lambda1;
    const double up = lambdaN - 1.0;
    if (down <= up + sharp_tol)
        general_branch(battery, h, coloring, vs, true, sharp_tol);
    if (up <= down + sharp_tol)
        general_branch(battery, h, coloring, vs, false, sharp_tol);

    if (c > 0 && coloring.num_colors() >= 2) {
        const std::size_t bad = distribution_mismatches(h, coloring, c, 1);
        battery.add("|{e : v in e, e meets V_i}| = (c - 1) deg v / (k - 1) off-class, deg v on-class", bad == 0,
                    static_cast<double>(bad), 0.0, "(vertex, class) mismatches");
    }
}

void d_proper_battery(Battery& battery, SharpnessReport& report, const OrientedHypergraph& h,
                      const Coloring& coloring, int c, int d, double sharp_tol)
{
    const SpectralResult vs = vertex_spectrum(h);
    const double lambda1 = vs.min();
    const int k = coloring.num_colors();
    report.bound = bound_d_proper(c, lambda1, d);
    battery.equality(sharp_tol);

    std::size_t bad_edges = 0;
    for (const auto& e : h.edges()) {
        std::vector<int> count(static_cast<std::size_t>(k) + 1, 0);
        for (const auto& inc : e.members())
            ++count[static_cast<std::size_t>(coloring.color(inc.vertex))];
        for (int i = 1; i <= k; ++i)
            if (count[static_cast<std::size_t>(i)] != 0 && count[static_cast<std::size_t>(i)] != d)
                ++bad_edges;
    }
    battery.add("|e cap V_i| in {0, d} for every edge and class", bad_edges == 0, static_cast<double>(bad_edges), 0.0,
                "(edge, class) pairs outside {0, d}");

    if (k >= 2) {
        std::string detail;
        const double r = pair_residual(h, coloring, nullptr, lambda1, false, detail);
        battery.add("g_ij are lambda_1-eigenfunctions", r <= tol::kBatteryResidual, r, tol::kBatteryResidual, detail);
        battery.predicted("lambda_1 = (d k - c) / (k - 1)", lambda1, (static_cast<double>(d) * k - c) / (k - 1.0),
                          sharp_tol);
        const std::size_t bad = distribution_mismatches(h, coloring, c, d);
        battery.add("|{e : v in e, e meets V_j}| = (c/d - 1) deg v / (k - 1) off-class, deg v on-class", bad == 0,
                    static_cast<double>(bad), 0.0, "(vertex, class) mismatches");
    }
    battery.multiplicity_at_least("multiplicity(lambda_1) >= k - 1", multiplicity(vs, lambda1), k);
}

void q_tailored_battery(Battery& battery, SharpnessReport& report, const OrientedHypergraph& h,
                        const Coloring& coloring, int c, const Rational& q, double sharp_tol)
{
    const SpectralResult vs = vertex_spectrum(h);
    const double lambda1 = vs.min();
    const int k = coloring.num_colors();
    report.bound = bound_q_tailored(c, lambda1, q);
    battery.equality(sharp_tol);

    const IntMatrix a = adjacency(h);
    std::size_t bad = 0;
    for (std::size_t v = 0; v < h.num_vertices(); ++v) {
        std::int64_t same = 0;
        for (std::size_t w = 0; w < h.num_vertices(); ++w)
            if (w != v && coloring.color(w) == coloring.color(v))
                same += std::abs(a(v, w));
        if (static_cast<int128>(same) * q.den() != static_cast<int128>(q.num()) * h.degree(v))
            ++bad;
    }
    battery.add("sum_{w in own class} |A_vw| = q deg v for every vertex", bad == 0, static_cast<double>(bad), 0.0,
                "vertices where the sum differs");

    if (k >= 2) {
        std::string detail;
        const double r = pair_residual(h, coloring, nullptr, lambda1, false, detail);
        battery.add("g_ij are lambda_1-eigenfunctions", r <= tol::kBatteryResidual, r, tol::kBatteryResidual, detail);
        battery.predicted("lambda_1 = ((q + 1) k - c) / (k - 1)", lambda1,
                          ((q.to_double() + 1.0) * k - c) / (k - 1.0), sharp_tol);
    }
    battery.multiplicity_at_least("multiplicity(lambda_1) >= k - 1", multiplicity(vs, lambda1), k);
}

void d_improper_battery(Battery& battery, SharpnessReport& report, const OrientedHypergraph& h,
                        const Coloring& coloring, int d, double sharp_tol)
{
    const SpectralResult vs = vertex_spectrum(h);
    const double lambdaN = vs.max();
    const double avg = h.degrees().average();
    const int k = coloring.num_colors();
    report.bound = bound_d_improper(lambdaN, d, avg);
    battery.equality(sharp_tol);

    const std::size_t n = h.num_vertices();
    // e[v][j]: neighbours of v in class j.
    std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(static_cast<std::size_t>(k) + 1, 0));
    for (const auto& edge : h.edges()) {
        const std::size_t x = edge.members()[0].vertex;
        const std::size_t y = edge.members()[1].vertex;
        ++e[x][static_cast<std::size_t>(coloring.color(y))];
        ++e[y][static_cast<std::size_t>(coloring.color(x))];
    }

    std::size_t not_d = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (e[v][static_cast<std::size_t>(coloring.color(v))] != d)
            ++not_d;
    battery.add("every vertex has exactly d same-colored neighbours", not_d == 0, static_cast<double>(not_d), 0.0,
                "vertices with a different count");

    const std::int64_t max_deg = h.degrees().max();
    const bool regular = std::all_of(h.degrees().values.begin(), h.degrees().values.end(),
                                     [max_deg](std::int64_t x) { return x == max_deg; });
    battery.add("graph is regular", regular, static_cast<double>(max_deg), avg, "max degree against average degree");

    if (k >= 2) {
        std::string detail;
        const double r = pair_residual(h, coloring, nullptr, lambdaN, false, detail);
        battery.add("g_ij are lambda_N-eigenfunctions", r <= tol::kBatteryResidual, r, tol::kBatteryResidual, detail);
        battery.predicted("lambda_N = (1 - d / avg deg) k / (k - 1)", lambdaN, (1.0 - d / avg) * k / (k - 1.0),
                          sharp_tol);
        std::size_t bad = 0;
        for (std::size_t v = 0; v < n; ++v)
            for (int j = 1; j <= k; ++j)
                if (j != coloring.color(v) && e[v][static_cast<std::size_t>(j)] * (k - 1) != h.degree(v) - d)
                    ++bad;
        battery.add("e(v, V_j) = (deg v - d) / (k - 1) for every other class", bad == 0, static_cast<double>(bad), 0.0,
                    "(vertex, class) mismatches");
    }
}

void edge_battery(Battery& battery, SharpnessReport& report, const OrientedHypergraph& h, const Coloring& coloring,
                  int c, double sharp_tol)
{
    const SpectralResult es = edge_spectrum(h);
    const double mu1 = es.min();
    const double avg = h.degrees().average();
    const int k = coloring.num_colors();
    report.bound = bound_edge(c, mu1, avg);
    battery.equality(sharp_tol);

    if (std::abs(mu1) <= tol::kZero) {
        const std::int64_t max_deg = h.degrees().max();
        const bool regular = std::all_of(h.degrees().values.begin(), h.degrees().values.end(),
                                         [max_deg](std::int64_t x) { return x == max_deg; });
        battery.add("mu_1 = 0: hypergraph is regular", regular, static_cast<double>(max_deg), avg,
                    "max degree against average degree");
        battery.add("mu_1 = 0: k equals the common degree", k == max_deg, k, static_cast<double>(max_deg));
        battery.multiplicity_at_least("multiplicity of 0 in L^1 >= k - 1", es.zero_count(), k);
        return;
    }

    if (k >= 2) {
        std::string detail;
        const double r = pair_residual(h, coloring, nullptr, mu1, true, detail);
        battery.add("gamma_ij are mu_1-eigenfunctions of L^1", r <= tol::kBatteryResidual, r, tol::kBatteryResidual,
                    detail);
    }
    battery.multiplicity_at_least("multiplicity(mu_1) in L^1 >= k - 1", multiplicity(es, mu1), k);
    battery.multiplicity_at_least("multiplicity(mu_1) in L >= k - 1", multiplicity(vertex_spectrum(h), mu1), k);
}

} // namespace

bool SharpnessReport::pass() const
{
    return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.pass; });
}

const Condition* SharpnessReport::first_failure() const
{
    for (const auto& c : conditions)
        if (!c.pass)
            return &c;
    return nullptr;
}

SharpnessReport check_sharpness(const OrientedHypergraph& h, const Coloring& coloring, const ColoringMode& mode,
                                double sharp_tol)
{
    const int c = detail::bound_scope(h, mode);
    if (!is_valid(h, coloring, mode))
        throw ModeMismatch("check_sharpness: coloring is not a valid " + to_string(mode) + " coloring");

    SharpnessReport report;
    report.kind = bound_kind_of(mode);
    report.colors = coloring.num_colors();
    Battery battery(report);

    switch (report.kind) {
    case BoundKind::General: strong_battery(battery, report, h, coloring, c, sharp_tol); break;
    case BoundKind::DProper: d_proper_battery(battery, report, h, coloring, c, std::get<DProper>(mode).d, sharp_tol); break;
    case BoundKind::QTailored:
        q_tailored_battery(battery, report, h, coloring, c, std::get<QTailored>(mode).q, sharp_tol);
        break;
    case BoundKind::DImproper: d_improper_battery(battery, report, h, coloring, std::get<DImproper>(mode).d, sharp_tol); break;
    case BoundKind::Edge: edge_battery(battery, report, h, coloring, c, sharp_tol); break;
    }
    return report;
}

} // namespace hyperspec
