#include "hyperspec/families.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <random>
#include <set>

#include "hyperspec/detail/overloaded.hpp"
#include "hyperspec/error.hpp"

namespace hyperspec {

using detail::overloaded;

namespace {

std::string name(const char* prefix, int a)
{
    return prefix + std::to_string(a);
}

std::string name(const char* prefix, int a, int b)
{
    return prefix + std::to_string(a) + "_" + std::to_string(b);
}

void require(bool ok, const std::string& message)
{
    if (!ok)
        throw DomainError(message);
}

// Uniform draw from [0, n) by rejection, independent of the standard library's distributions.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n)
{
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % n;
    while (true) {
        const std::uint64_t x = rng();
        if (x < limit)
            return x % n;
    }
}

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

// Parameter rules shared by the generators and the spec parser; empty string when valid.
std::string violation(const FamilySpec& spec)
{
    return std::visit(
        overloaded{
            [](const Hyperflower& f) -> std::string {
                if (f.k < 1 || f.k >= f.c)
                    return "hyperflower needs 1 <= k < c";
                if (f.p < 1)
                    return "hyperflower needs p >= 1";
                return {};
            },
            [](const CompleteMultipartite& f) -> std::string {
                if (f.c < 1)
                    return "multipartite needs c >= 1";
                if (static_cast<int>(f.sizes.size()) < f.c)
                    return "multipartite needs at least c parts";
                if (std::any_of(f.sizes.begin(), f.sizes.end(), [](int s) { return s < 1; }))
                    return "multipartite parts must be nonempty";
                return {};
            },
            [](const UniformMultipartite& f) -> std::string {
                if (f.c < 1 || f.s < 1)
                    return "multipartite needs c >= 1 and s >= 1";
                if (f.k < f.c)
                    return "multipartite needs k >= c";
                return {};
            },
            [](const DisjointEdges& f) -> std::string {
                if (f.c < 1 || f.m < 1)
                    return "disjoint needs c >= 1 and m >= 1";
                return {};
            },
            [](const ExampleA0&) -> std::string { return {}; },
            [](const CompleteGraph& f) -> std::string {
                if (f.n < 2)
                    return "complete graph needs n >= 2";
                return {};
            },
            [](const RandomUniform& f) -> std::string {
                if (f.c < 1 || f.n < 1 || f.m < 1)
                    return "random needs c, n, m >= 1";
                if (f.c > f.n)
                    return "random needs c <= n";
                if (f.orientation == Orientation::Graph && f.c != 2)
                    return "random graph orientation needs c = 2";
                if (static_cast<double>(f.m) > binomial(f.n, f.c))
                    return "random: m = " + std::to_string(f.m) + " exceeds the number of distinct " + std::to_string(f.c)
                           + "-subsets";
                if (static_cast<long long>(f.m) * f.c < f.n)
                    return "random: m c < n leaves a vertex uncovered";
                return {};
            },
        },
        spec);
}

} // namespace

OrientedHypergraph hyperflower(int c, int p, int k)
{
    const std::string bad = violation(Hyperflower{c, p, k});
    require(bad.empty(), bad);
    std::vector<std::string> vertices;
    std::vector<std::size_t> center;
    for (int t = 1; t <= k; ++t) {
        center.push_back(vertices.size());
        vertices.push_back(name("z", t));
    }
    std::vector<Edge> edges;
    for (int j = 1; j <= p; ++j) {
        std::vector<std::size_t> members = center;
        for (int t = 1; t <= c - k; ++t) {
            members.push_back(vertices.size());
            vertices.push_back(name("p", j, t));
        }
        edges.push_back(Edge::uniform(members, Sign::Input));
    }
    return OrientedHypergraph(std::move(vertices), std::move(edges));
}

OrientedHypergraph complete_multipartite(int c, const std::vector<int>& sizes)
{
    const std::string bad = violation(CompleteMultipartite{c, sizes});
    require(bad.empty(), bad);
    std::vector<std::string> vertices;
    std::vector<std::vector<std::size_t>> parts(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i)
        for (int t = 1; t <= sizes[i]; ++t) {
            parts[i].push_back(vertices.size());
            vertices.push_back(name("V", static_cast<int>(i) + 1, t));
        }

    // Choose c parts (lexicographic), then one vertex from each (odometer).
    std::vector<Edge> edges;
    const int k = static_cast<int>(sizes.size());
    std::vector<int> chosen(static_cast<std::size_t>(c));
    for (int i = 0; i < c; ++i)
        chosen[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(c), 0);
        while (true) {
            std::vector<std::size_t> members;
            for (int i = 0; i < c; ++i)
                members.push_back(parts[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])]
                                       [pick[static_cast<std::size_t>(i)]]);
            edges.push_back(Edge::uniform(members, Sign::Input));
            int i = c - 1;
            while (i >= 0) {
                auto& slot = pick[static_cast<std::size_t>(i)];
                if (++slot < parts[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])].size())
                    break;
                slot = 0;
                --i;
            }
            if (i < 0)
                break;
        }
        int i = c - 1;
        while (i >= 0 && chosen[static_cast<std::size_t>(i)] == k - c + i)
            --i;
        if (i < 0)
            break;
        ++chosen[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < c; ++j)
            chosen[static_cast<std::size_t>(j)] = chosen[static_cast<std::size_t>(j - 1)] + 1;
    }
    return OrientedHypergraph(std::move(vertices), std::move(edges));
}

OrientedHypergraph uniform_multipartite(int c, int s, int k)
{
    const std::string bad = violation(UniformMultipartite{c, s, k});
    require(bad.empty(), bad);
    return complete_multipartite(c, std::vector<int>(static_cast<std::size_t>(k), s));
}

OrientedHypergraph example_a0()
{
    // Rows v1..v4, columns e1..e4; e_i = V \ {v_i}.
    const int table[4][4] = {
        {0, 1, -1, -1},
        {1, 0, -1, 1},
        {1, -1, 0, -1},
        {1, 1, 1, 0},
    };
    std::vector<Edge> edges;
    for (int e = 0; e < 4; ++e) {
        std::vector<Incidence> members;
        for (int v = 0; v < 4; ++v)
            if (table[v][e] != 0)
                members.push_back({static_cast<std::size_t>(v), table[v][e] < 0 ? Sign::Input : Sign::Output});
        edges.emplace_back(std::move(members));
    }
    return OrientedHypergraph({"v1", "v2", "v3", "v4"}, std::move(edges));
}

OrientedHypergraph disjoint_edges(int c, int m)
{
    const std::string bad = violation(DisjointEdges{c, m});
    require(bad.empty(), bad);
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    for (int j = 1; j <= m; ++j) {
        std::vector<std::size_t> members;
        for (int t = 1; t <= c; ++t) {
            members.push_back(vertices.size());
            vertices.push_back(name("d", j, t));
        }
        edges.push_back(Edge::uniform(members, Sign::Input));
    }
    return OrientedHypergraph(std::move(vertices), std::move(edges));
}

OrientedHypergraph complete_graph(int n)
{
    const std::string bad = violation(CompleteGraph{n});
    require(bad.empty(), bad);
    std::vector<std::string> vertices;
    for (int i = 1; i <= n; ++i)
        vertices.push_back(name("v", i));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        for (std::size_t j = i + 1; j < static_cast<std::size_t>(n); ++j)
            edges.emplace_back(std::vector<Incidence>{{i, Sign::Input}, {j, Sign::Output}});
    return OrientedHypergraph(std::move(vertices), std::move(edges));
}

OrientedHypergraph random_uniform(const RandomUniform& spec)
{
    const std::string bad = violation(spec);
    require(bad.empty(), bad);
    const auto n = static_cast<std::size_t>(spec.n);
    const auto c = static_cast<std::size_t>(spec.c);

    std::mt19937_64 rng(spec.seed);
    constexpr int kAttempts = 1000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::set<std::vector<std::size_t>> seen;
        std::vector<std::vector<std::size_t>> sets;
        std::vector<std::size_t> pool(n);
        while (sets.size() < static_cast<std::size_t>(spec.m)) {
            for (std::size_t i = 0; i < n; ++i)
                pool[i] = i;
            for (std::size_t i = 0; i < c; ++i)
                std::swap(pool[i], pool[i + bounded(rng, n - i)]);
            std::vector<std::size_t> members(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(c));
            std::sort(members.begin(), members.end());
            if (seen.insert(members).second)
                sets.push_back(std::move(members));
        }

        std::vector<bool> covered(n, false);
        for (const auto& s : sets)
            for (std::size_t v : s)
                covered[v] = true;
        if (std::find(covered.begin(), covered.end(), false) != covered.end())
            continue;

        std::vector<Edge> edges;
        for (const auto& s : sets) {
            std::vector<Incidence> members;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Sign sign = Sign::Input;
                if (spec.orientation == Orientation::RandomSigns)
                    sign = (rng() >> 63) != 0 ? Sign::Output : Sign::Input;
                else if (spec.orientation == Orientation::Graph)
                    sign = i == 0 ? Sign::Input : Sign::Output;
                members.push_back({s[i], sign});
            }
            edges.emplace_back(std::move(members));
        }
        std::vector<std::string> vertices;
        for (int i = 1; i <= spec.n; ++i)
            vertices.push_back(name("v", i));
        return OrientedHypergraph(std::move(vertices), std::move(edges));
    }
    throw DomainError("random_uniform: no instance covering every vertex after 1000 draws");
}

OrientedHypergraph generate(const FamilySpec& spec)
{
    return std::visit(overloaded{
                          [](const Hyperflower& f) { return hyperflower(f.c, f.p, f.k); },
                          [](const CompleteMultipartite& f) { return complete_multipartite(f.c, f.sizes); },
                          [](const UniformMultipartite& f) { return uniform_multipartite(f.c, f.s, f.k); },
                          [](const DisjointEdges& f) { return disjoint_edges(f.c, f.m); },
                          [](const ExampleA0&) { return example_a0(); },
                          [](const CompleteGraph& f) { return complete_graph(f.n); },
                          [](const RandomUniform& f) { return random_uniform(f); },
                      },
                      spec);
}

std::vector<double> hyperflower_spectrum(int c, int p, int k)
{
    const std::string bad = violation(Hyperflower{c, p, k});
    require(bad.empty(), bad);
    const int n = k + p * (c - k);
    std::vector<double> out(static_cast<std::size_t>(n - p), 0.0);
    out.insert(out.end(), static_cast<std::size_t>(p - 1), static_cast<double>(c - k));
    out.push_back(static_cast<double>(c));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> uniform_multipartite_spectrum(int c, int s, int k)
{
    const std::string bad = violation(UniformMultipartite{c, s, k});
    require(bad.empty(), bad);
    std::vector<double> out;
    out.push_back(static_cast<double>(c));
    out.insert(out.end(), static_cast<std::size_t>(k * (s - 1)), 1.0);
    // k = c = 1 is a single vertex; the (k - c)/(k - 1) family is then empty.
    if (k > 1)
        out.insert(out.end(), static_cast<std::size_t>(k - 1), static_cast<double>(k - c) / (k - 1));
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::vector<double>> closed_form_spectrum(const FamilySpec& spec)
{
    return std::visit(
        overloaded{
            [](const Hyperflower& f) -> std::optional<std::vector<double>> {
                return hyperflower_spectrum(f.c, f.p, f.k);
            },
            [](const CompleteMultipartite& f) -> std::optional<std::vector<double>> {
                if (!f.sizes.empty()
                    && std::all_of(f.sizes.begin(), f.sizes.end(), [&f](int s) { return s == f.sizes.front(); }))
                    return uniform_multipartite_spectrum(f.c, f.sizes.front(), static_cast<int>(f.sizes.size()));
                return std::nullopt;
            },
            [](const UniformMultipartite& f) -> std::optional<std::vector<double>> {
                return uniform_multipartite_spectrum(f.c, f.s, f.k);
            },
            [](const DisjointEdges& f) -> std::optional<std::vector<double>> {
                std::vector<double> out(static_cast<std::size_t>(f.m * (f.c - 1)), 0.0);
                out.insert(out.end(), static_cast<std::size_t>(f.m), static_cast<double>(f.c));
                return out;
            },
            [](const ExampleA0&) -> std::optional<std::vector<double>> { return std::vector<double>(4, 1.0); },
            [](const CompleteGraph& f) -> std::optional<std::vector<double>> {
                std::vector<double> out{0.0};
                out.insert(out.end(), static_cast<std::size_t>(f.n - 1), static_cast<double>(f.n) / (f.n - 1));
                return out;
            },
            [](const RandomUniform&) -> std::optional<std::vector<double>> { return std::nullopt; },
        },
        spec);
}

// Spec strings.

namespace {

struct RawSpec {
    std::string family;
    std::map<std::string, std::string> params;
};

RawSpec split_spec(std::string_view text)
{
    RawSpec raw;
    const auto colon = text.find(':');
    raw.family = std::string(text.substr(0, colon));
    if (raw.family.empty())
        throw SpecError("family spec '" + std::string(text) + "' has no family name");
    if (colon == std::string_view::npos)
        return raw;
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
            throw SpecError("family spec '" + std::string(text) + "': expected key=value, got '" + std::string(item) + "'");
        const std::string key(item.substr(0, eq));
        if (!raw.params.emplace(key, std::string(item.substr(eq + 1))).second)
            throw SpecError("family spec '" + std::string(text) + "': key '" + key + "' given twice");
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return raw;
}

template <class T>
T parse_number(const std::string& key, const std::string& value)
{
    T out{};
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw SpecError("parameter " + key + "=" + value + " is not an integer");
    return out;
}

class Params {
public:
    Params(const RawSpec& raw, std::string_view text) : raw_(raw), text_(text) {}

    int integer(const std::string& key)
    {
        return parse_number<int>(key, take(key));
    }

    std::optional<std::string> optional(const std::string& key)
    {
        const auto it = raw_.params.find(key);
        if (it == raw_.params.end())
            return std::nullopt;
        used_.insert(key);
        return it->second;
    }

    std::string take(const std::string& key)
    {
        auto value = optional(key);
        if (!value)
            throw SpecError("family spec '" + std::string(text_) + "' is missing parameter '" + key + "'");
        return *value;
    }

    void finish() const
    {
        for (const auto& [key, value] : raw_.params)
            if (!used_.count(key))
                throw SpecError("family spec '" + std::string(text_) + "': unknown parameter '" + key + "'");
    }

private:
    const RawSpec& raw_;
    std::string_view text_;
    std::set<std::string> used_;
};

// Structural parse only; parameter rules are checked by the callers.
FamilySpec build_spec(const RawSpec& raw, std::string_view text)
{
    Params p(raw, text);
    FamilySpec spec;
    if (raw.family == "hyperflower") {
        const int c = p.integer("c");
        const int pp = p.integer("p");
        spec = Hyperflower{c, pp, p.integer("k")};
    }
    else if (raw.family == "multipartite") {
        const int c = p.integer("c");
        if (auto sizes = p.optional("sizes")) {
            std::vector<int> parts;
            std::string_view rest = *sizes;
            while (true) {
                const auto dash = rest.find('-');
                parts.push_back(parse_number<int>("sizes", std::string(rest.substr(0, dash))));
                if (dash == std::string_view::npos)
                    break;
                rest = rest.substr(dash + 1);
            }
            spec = CompleteMultipartite{c, std::move(parts)};
        }
        else {
            const int s = p.integer("s");
            spec = UniformMultipartite{c, s, p.integer("k")};
        }
    }
    else if (raw.family == "disjoint") {
        const int c = p.integer("c");
        spec = DisjointEdges{c, p.integer("m")};
    }
    else if (raw.family == "examplea0") {
        spec = ExampleA0{};
    }
    else if (raw.family == "complete") {
        spec = CompleteGraph{p.integer("n")};
    }
    else if (raw.family == "random") {
        RandomUniform r{};
        r.c = p.integer("c");
        r.n = p.integer("n");
        r.m = p.integer("m");
        r.seed = parse_number<std::uint64_t>("seed", p.optional("seed").value_or("0"));
        const std::string orient = p.optional("orient").value_or("inputs");
        if (orient == "inputs")
            r.orientation = Orientation::AllInputs;
        else if (orient == "signs")
            r.orientation = Orientation::RandomSigns;
        else if (orient == "graph")
            r.orientation = Orientation::Graph;
        else
            throw SpecError("orient=" + orient + " is not one of inputs, signs, graph");
        spec = r;
    }
    else {
        throw SpecError("unknown family '" + raw.family
                        + "' (expected hyperflower, multipartite, disjoint, complete, examplea0, random)");
    }
    p.finish();
    return spec;
}

} // namespace

FamilySpec parse_family_spec(std::string_view text)
{
    FamilySpec spec = build_spec(split_spec(text), text);
    const std::string bad = violation(spec);
    if (!bad.empty())
        throw SpecError("family spec '" + std::string(text) + "': " + bad);
    return spec;
}

std::string to_string(const FamilySpec& spec)
{
    return std::visit(
        overloaded{
            [](const Hyperflower& f) {
                return "hyperflower:c=" + std::to_string(f.c) + ",p=" + std::to_string(f.p) + ",k=" + std::to_string(f.k);
            },
            [](const CompleteMultipartite& f) {
                std::string sizes;
                for (int s : f.sizes)
                    sizes += (sizes.empty() ? "" : "-") + std::to_string(s);
                return "multipartite:c=" + std::to_string(f.c) + ",sizes=" + sizes;
            },
            [](const UniformMultipartite& f) {
                return "multipartite:c=" + std::to_string(f.c) + ",s=" + std::to_string(f.s) + ",k=" + std::to_string(f.k);
            },
            [](const DisjointEdges& f) { return "disjoint:c=" + std::to_string(f.c) + ",m=" + std::to_string(f.m); },
            [](const ExampleA0&) { return std::string("examplea0"); },
            [](const CompleteGraph& f) { return "complete:n=" + std::to_string(f.n); },
            [](const RandomUniform& f) {
                const char* orient = f.orientation == Orientation::AllInputs ? "inputs"
                                     : f.orientation == Orientation::RandomSigns ? "signs"
                                                                                 : "graph";
                return "random:c=" + std::to_string(f.c) + ",n=" + std::to_string(f.n) + ",m=" + std::to_string(f.m)
                       + ",seed=" + std::to_string(f.seed) + ",orient=" + orient;
            },
        },
        spec);
}

std::vector<FamilySpec> expand_corpus(std::string_view text, int count, std::optional<std::uint64_t> seed)
{
    if (count < 0)
        throw SpecError("corpus count must be nonnegative");
    std::vector<FamilySpec> points;
    constexpr std::string_view kGrid = "grid:";
    if (text.substr(0, kGrid.size()) == kGrid) {
        const RawSpec raw = split_spec(text.substr(kGrid.size()));
        // Each key expands to a list of values; "lo..hi" ranges become all integers in between.
        std::vector<std::pair<std::string, std::vector<std::string>>> axes;
        for (const auto& [key, value] : raw.params) {
            std::vector<std::string> values;
            if (const auto dots = value.find(".."); dots != std::string::npos) {
                const int lo = parse_number<int>(key, value.substr(0, dots));
                const int hi = parse_number<int>(key, value.substr(dots + 2));
                if (hi < lo)
                    throw SpecError("grid range " + key + "=" + value + " is empty");
                if (hi - lo > 10000)
                    throw SpecError("grid range " + key + "=" + value + " is too large");
                for (int x = lo; x <= hi; ++x)
                    values.push_back(std::to_string(x));
            }
            else {
                values.push_back(value);
            }
            axes.emplace_back(key, std::move(values));
        }
        std::vector<std::size_t> index(axes.size(), 0);
        while (true) {
            RawSpec point{raw.family, {}};
            for (std::size_t a = 0; a < axes.size(); ++a)
                point.params[axes[a].first] = axes[a].second[index[a]];
            FamilySpec spec = build_spec(point, text);
            if (violation(spec).empty())
                points.push_back(std::move(spec));
            std::size_t a = axes.size();
            while (a-- > 0) {
                if (++index[a] < axes[a].second.size())
                    break;
                index[a] = 0;
            }
            if (a == static_cast<std::size_t>(-1))
                break;
        }
        if (points.empty())
            throw SpecError("grid '" + std::string(text) + "' has no admissible point");
    }
    else {
        points.push_back(parse_family_spec(text));
    }

    std::vector<FamilySpec> out;
    for (const auto& spec : points) {
        if (const auto* r = std::get_if<RandomUniform>(&spec)) {
            const std::uint64_t base = seed.value_or(r->seed);
            for (int i = 0; i < count; ++i) {
                RandomUniform copy = *r;
                copy.seed = base + static_cast<std::uint64_t>(i);
                out.push_back(copy);
            }
        }
        else if (count > 0) {
            out.push_back(spec);
        }
    }
    return out;
}

} // namespace hyperspec
