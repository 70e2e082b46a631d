#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "hyperspec/bounds.hpp"
#include "hyperspec/coloring.hpp"
#include "hyperspec/error.hpp"
#include "hyperspec/families.hpp"
#include "hyperspec/interchange.hpp"
#include "hyperspec/reports.hpp"
#include "hyperspec/spectral.hpp"

namespace hyperspec::cli {

using nlohmann::json;

namespace {

class InputError : public Error {
public:
    using Error::Error;
};

struct Options {
    std::string input;
    std::string family;
    std::string out;
    std::string format = "json";
    std::string mode = "strong";
    int d = 0;
    std::string q;
    double tol = -1.0;
    std::uint64_t budget = SolverOptions{}.node_budget;
    std::uint64_t seed = 0;
    std::string which = "vertex";
    std::string corpus;
    int count = 1;
    int jobs = 1;
    bool oracle = false;
    bool battery = false;

    // Set after parsing from the option objects.
    bool has_d = false;
    bool has_q = false;
    bool has_seed = false;
};

ColoringMode resolve_mode(const std::string& text, const Options& o)
{
    const bool inline_param = text.find(':') != std::string::npos || text.find('(') != std::string::npos;
    if (!inline_param) {
        if (text == "d-proper" || text == "d-improper") {
            if (!o.has_d)
                throw SpecError("mode " + text + " needs --d or an inline parameter such as " + text + ":1");
            if (text == "d-proper")
                return DProper{o.d};
            return DImproper{o.d};
        }
        if (text == "q-tailored") {
            if (!o.has_q)
                throw SpecError("mode q-tailored needs --q or an inline parameter such as q-tailored:1/2");
            return QTailored{Rational::parse(o.q)};
        }
    }
    return parse_mode(text);
}

std::vector<ColoringMode> resolve_modes(const Options& o)
{
    std::vector<ColoringMode> modes;
    std::string_view rest = o.mode;
    while (true) {
        const auto comma = rest.find(',');
        const std::string item(rest.substr(0, comma));
        if (item.empty())
            throw SpecError("empty entry in --mode list '" + o.mode + "'");
        modes.push_back(resolve_mode(item, o));
        if (comma == std::string_view::npos)
            break;
        rest = rest.substr(comma + 1);
    }
    return modes;
}

FamilySpec family_with_seed(const std::string& text, const Options& o)
{
    FamilySpec spec = parse_family_spec(text);
    if (auto* r = std::get_if<RandomUniform>(&spec); r != nullptr && o.has_seed)
        r->seed = o.seed;
    return spec;
}

std::string read_text(const std::string& path)
{
    std::ostringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read input file '" + path + "'");
    buffer << in.rdbuf();
    return buffer.str();
}

OrientedHypergraph load(const Options& o)
{
    if (o.input.empty() == o.family.empty())
        throw SpecError("give exactly one input: a document path or --family");
    if (!o.family.empty())
        return generate(family_with_seed(o.family, o));
    OrientedHypergraph h = parse(read_text(o.input));
    h.require_valid();
    return h;
}

void emit(const Options& o, const std::string& text, std::ostream& out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    // Write beside the target, then rename, so readers never see a partial file.
    const std::filesystem::path target(o.out);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file)
            throw Error("cannot write '" + tmp.string() + "'");
        file << text;
        if (!file.flush())
            throw Error("cannot write '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, target);
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

void require_format(const Options& o, std::initializer_list<const char*> allowed)
{
    for (const char* f : allowed)
        if (o.format == f)
            return;
    throw SpecError("--format " + o.format + " is not supported by this command");
}

int cmd_gen(const Options& o, std::ostream& out)
{
    require_format(o, {"json"});
    if (o.family.empty() == o.input.empty())
        throw SpecError("gen needs exactly one family spec");
    const std::string& text = o.family.empty() ? o.input : o.family;
    emit(o, serialize(generate(family_with_seed(text, o))), out);
    return kOk;
}

int cmd_spectrum(const Options& o, std::ostream& out)
{
    require_format(o, {"json"});
    if (o.which != "vertex" && o.which != "edge")
        throw SpecError("--which must be vertex or edge");
    const OrientedHypergraph h = load(o);
    const double cluster_tol = o.tol > 0.0 ? o.tol : tol::kCluster;
    const bool edge = o.which == "edge";
    const SpectralResult spec = edge ? edge_spectrum(h, cluster_tol) : vertex_spectrum(h, cluster_tol);
    emit(o, dump(spectrum_json(h, spec, edge)), out);
    return kOk;
}

int cmd_chromatic(const Options& o, std::ostream& out)
{
    require_format(o, {"json"});
    const OrientedHypergraph h = load(o);
    const ColoringMode mode = resolve_mode(o.mode, o);
    const ChromaticResult r = chromatic(h, mode, SolverOptions{o.budget});
    emit(o, dump(chromatic_json(h, r, mode)), out);
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err)
{
    require_format(o, {"json", "csv"});
    const OrientedHypergraph h = load(o);
    const ColoringMode mode = resolve_mode(o.mode, o);
    EvaluateOptions options;
    options.solver.node_budget = o.budget;
    if (o.tol > 0.0)
        options.sharp_tol = o.tol;
    const BoundReport r = evaluate(h, mode, options);

    std::optional<SharpnessReport> battery;
    if (r.witness && r.exact && (r.sharp.value_or(false) || o.battery))
        battery = check_sharpness(h, *r.witness, mode, options.sharp_tol);

    if (o.format == "csv") {
        const std::string id = o.family.empty() ? o.input : o.family;
        std::string safe = id;
        std::replace(safe.begin(), safe.end(), ',', ';');
        emit(o, std::string(kCsvHeader) + "\n" + csv_row(safe, r) + "\n", out);
    }
    else {
        json doc{{"bound", bound_json(h, r)}};
        doc["sharpness"] = battery ? sharpness_json(*battery) : json(nullptr);
        emit(o, dump(doc), out);
    }
    if (!r.sound(options.sharp_tol)) {
        err << "soundness violation: bound " << r.value << " exceeds exact value " << *r.exact << "\n";
        return kSoundness;
    }
    return kOk;
}

struct BatchRow {
    std::string csv;
    json js;
    bool applicable = true;
    bool inconclusive = false;
    std::vector<std::string> violations;
};

// Spectrum checks shared by every mode of one instance.
std::vector<std::string> instance_checks(const FamilySpec& spec, const OrientedHypergraph& h)
{
    std::vector<std::string> problems;
    const SpectralResult vs = vertex_spectrum(h);
    if (!trace_check(vs, h.num_vertices()))
        problems.push_back("trace identity fails");
    if (const auto expected = closed_form_spectrum(spec)) {
        bool match = expected->size() == vs.dimension();
        for (std::size_t i = 0; match && i < expected->size(); ++i)
            match = std::abs((*expected)[i] - vs.eigenvalues[i]) <= 1e-7;
        if (!match)
            problems.push_back("spectrum differs from the closed form");
    }
    if (!spectra_consistency(h).pass())
        problems.push_back("vertex and edge spectra are inconsistent");
    return problems;
}

BatchRow batch_row(const std::string& id, const FamilySpec& spec, const OrientedHypergraph& h,
                   const ColoringMode& mode, const Options& o)
{
    BatchRow row;
    EvaluateOptions options;
    options.solver.node_budget = o.budget;
    if (o.tol > 0.0)
        options.sharp_tol = o.tol;

    std::optional<int> oracle;
    if (o.oracle) {
        const std::size_t items = target_of(mode) == Target::Vertex ? h.num_vertices() : h.num_edges();
        try {
            check_mode_applicable(h, mode);
            if (items <= kBruteForceItemCap)
                oracle = brute_force_chromatic(h, mode);
        }
        catch (const ModeMismatch&) {
        }
    }

    BoundReport r;
    try {
        r = evaluate(h, mode, options);
    }
    catch (const ModeMismatch& e) {
        row.applicable = false;
        row.csv = id + "," + to_string(mode) + ",,,,,,,not-applicable";
        row.js = json{{"id", id}, {"family", to_string(spec)}, {"mode", to_string(mode)}, {"status", "not-applicable"},
                      {"reason", e.what()}};
        return row;
    }
    catch (const DomainError& e) {
        row.applicable = false;
        row.csv = id + "," + to_string(mode) + ",,,,,,,not-applicable";
        row.js = json{{"id", id}, {"family", to_string(spec)}, {"mode", to_string(mode)}, {"status", "not-applicable"},
                      {"reason", e.what()}};
        return row;
    }

    if (oracle) {
        if (r.exact && *r.exact != *oracle)
            row.violations.push_back(id + " " + to_string(mode) + ": solver gives " + std::to_string(*r.exact)
                                     + ", brute force gives " + std::to_string(*oracle));
        if (!r.exact) {
            r.exact = oracle;
            r.gap = *oracle - r.value;
            r.sharp = std::abs(*r.gap) <= options.sharp_tol;
        }
    }
    if (!r.sound(options.sharp_tol))
        row.violations.push_back(id + " " + to_string(mode) + ": bound " + std::to_string(r.value)
                                 + " exceeds exact value " + std::to_string(*r.exact));
    row.inconclusive = !r.exact;
    row.csv = csv_row(id, r);
    row.js = bound_json(h, r);
    row.js["id"] = id;
    row.js["family"] = to_string(spec);
    return row;
}

int cmd_batch(const Options& o, std::ostream& out, std::ostream& err)
{
    require_format(o, {"csv", "json"});
    if (o.corpus.empty())
        throw SpecError("batch needs --corpus");
    if (o.jobs < 1)
        throw SpecError("--jobs must be at least 1");
    const std::vector<ColoringMode> modes = resolve_modes(o);
    const std::vector<FamilySpec> specs =
        expand_corpus(o.corpus, o.count, o.has_seed ? std::optional<std::uint64_t>(o.seed) : std::nullopt);

    std::vector<OrientedHypergraph> instances;
    std::vector<std::string> ids;
    for (const auto& spec : specs) {
        try {
            instances.push_back(generate(spec));
        }
        catch (const DomainError& e) {
            throw SpecError(to_string(spec) + ": " + e.what());
        }
        std::string id = to_string(spec);
        std::replace(id.begin(), id.end(), ',', ';');
        ids.push_back(std::move(id));
    }

    const std::size_t n = instances.size();
    std::vector<std::vector<std::string>> instance_problems(n);
    std::vector<BatchRow> rows(n * modes.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&]() {
        while (true) {
            const std::size_t task = next++;
            if (task >= n * (modes.size() + 1))
                return;
            try {
                // Tasks 0..n-1 check instances; the rest evaluate (instance, mode) pairs.
                if (task < n) {
                    instance_problems[task] = instance_checks(specs[task], instances[task]);
                }
                else {
                    const std::size_t t = task - n;
                    const std::size_t i = t / modes.size();
                    rows[t] = batch_row(ids[i], specs[i], instances[i], modes[t % modes.size()], o);
                }
            }
            catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const int threads = std::min<int>(o.jobs, static_cast<int>(std::max<std::size_t>(1, n * (modes.size() + 1))));
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);

    std::vector<std::string> violations;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& p : instance_problems[i])
            violations.push_back(ids[i] + ": " + p);
    std::size_t inconclusive = 0;
    std::size_t not_applicable = 0;
    for (const auto& row : rows) {
        violations.insert(violations.end(), row.violations.begin(), row.violations.end());
        inconclusive += row.inconclusive ? 1 : 0;
        not_applicable += row.applicable ? 0 : 1;
    }

    std::ostringstream summary;
    summary << "instances=" << n << " rows=" << rows.size() << " violations=" << violations.size()
            << " inconclusive=" << inconclusive << " not_applicable=" << not_applicable;

    if (o.format == "csv") {
        std::string text = std::string(kCsvHeader) + "\n";
        for (const auto& row : rows)
            text += row.csv + "\n";
        emit(o, text, out);
    }
    else {
        json doc{{"rows", json::array()}};
        for (const auto& row : rows)
            doc["rows"].push_back(row.js);
        doc["summary"] = json{{"instances", n},
                              {"rows", rows.size()},
                              {"violations", violations.size()},
                              {"inconclusive", inconclusive},
                              {"not_applicable", not_applicable}};
        emit(o, dump(doc), out);
    }
    for (const auto& v : violations)
        err << "violation: " << v << "\n";
    err << "batch: " << summary.str() << "\n";
    return violations.empty() ? kOk : kSoundness;
}

void add_input(CLI::App* cmd, Options& o)
{
    cmd->add_option("input", o.input, "Interchange document path ('-' for stdin)");
    cmd->add_option("--family", o.family, "Family spec used instead of a document, e.g. hyperflower:c=3,p=3,k=1");
    cmd->add_option("--seed", o.seed, "Seed for random family specs");
}

void add_mode(CLI::App* cmd, Options& o)
{
    cmd->add_option("--mode", o.mode, "strong | d-proper | q-tailored | d-improper | edge (parameters inline, e.g. d-proper:2)");
    cmd->add_option("--d", o.d, "Parameter d for d-proper / d-improper");
    cmd->add_option("--q", o.q, "Parameter q for q-tailored, as p/q or decimal");
    cmd->add_option("--budget", o.budget, "Solver node budget");
}

void add_output(CLI::App* cmd, Options& o)
{
    cmd->add_option("--out", o.out, "Output path (written atomically); stdout when absent");
    cmd->add_option("--format", o.format, "json | csv");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Spectral bounds for chromatic numbers of oriented hypergraphs", "hyperspec"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Write the interchange document of a family spec");
    gen->add_option("spec", o.input, "Family spec, e.g. hyperflower:c=9,p=3,k=2");
    gen->add_option("--family", o.family, "Family spec (alternative to the positional form)");
    gen->add_option("--seed", o.seed, "Seed for random family specs");
    add_output(gen, o);

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the normalized or edge Laplacian");
    add_input(spectrum, o);
    spectrum->add_option("--which", o.which, "vertex | edge");
    spectrum->add_option("--tol", o.tol, "Cluster tolerance (relative)");
    add_output(spectrum, o);

    auto* chrom = app.add_subcommand("chromatic", "Exact coloring number with a witness");
    add_input(chrom, o);
    add_mode(chrom, o);
    add_output(chrom, o);

    auto* verify = app.add_subcommand("verify", "Bound, exact value, gap and sharpness battery");
    add_input(verify, o);
    add_mode(verify, o);
    verify->add_option("--tol", o.tol, "Sharpness tolerance on |chi - bound|");
    verify->add_flag("--battery", o.battery, "Run the sharpness battery even when the bound is not attained");
    add_output(verify, o);

    auto* batch = app.add_subcommand("batch", "Sweep a corpus of family instances over several modes");
    batch->add_option("--corpus", o.corpus, "Family spec or grid:<family>:<key>=<lo>..<hi>,...")->required();
    batch->add_option("--count", o.count, "Instances per random spec (seeds seed, seed + 1, ...)");
    batch->add_option("--seed", o.seed, "First seed for random specs");
    batch->add_option("--mode", o.mode, "Comma-separated modes, e.g. strong,d-proper:2,edge");
    batch->add_option("--d", o.d, "Default d for bare d-proper / d-improper entries");
    batch->add_option("--q", o.q, "Default q for bare q-tailored entries");
    batch->add_option("--budget", o.budget, "Solver node budget per solve");
    batch->add_option("--tol", o.tol, "Sharpness tolerance on |chi - bound|");
    batch->add_option("--jobs", o.jobs, "Worker threads");
    batch->add_flag("--oracle", o.oracle, "Cross-check the solver against brute force (at most 9 items)");
    add_output(batch, o);

    std::vector<std::string> argv_storage{"hyperspec"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kSpecError;
    }

    for (auto* cmd : {gen, spectrum, chrom, verify, batch}) {
        if (auto* opt = cmd->get_option_no_throw("--d"))
            o.has_d = o.has_d || opt->count() > 0;
        if (auto* opt = cmd->get_option_no_throw("--q"))
            o.has_q = o.has_q || opt->count() > 0;
        if (auto* opt = cmd->get_option_no_throw("--seed"))
            o.has_seed = o.has_seed || opt->count() > 0;
    }
    if (batch->parsed() && batch->get_option("--format")->count() == 0)
        o.format = "csv";

    try {
        if (gen->parsed())
            return cmd_gen(o, out);
        if (spectrum->parsed())
            return cmd_spectrum(o, out);
        if (chrom->parsed())
            return cmd_chromatic(o, out);
        if (verify->parsed())
            return cmd_verify(o, out, err);
        return cmd_batch(o, out, err);
    }
    catch (const SpecError& e) {
        err << "error: " << e.what() << "\n";
        return kSpecError;
    }
    catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    catch (const ModeMismatch& e) {
        err << "error: " << e.what() << "\n";
        return kModeMismatch;
    }
    catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kModeMismatch;
    }
    catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

} // namespace hyperspec::cli
