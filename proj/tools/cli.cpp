#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "dsr/connectivity.hpp"
#include "dsr/enumeration.hpp"
#include "dsr/families.hpp"
#include "dsr/graph6.hpp"
#include "dsr/report.hpp"
#include "dsr/spectral.hpp"
#include "dsr/verifier.hpp"

namespace dsr::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr const char* kVersion = "1.0.0";
constexpr const char* kCacheEnv = "DSR_CACHE_DIR";

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(const std::string& data)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr))
        throw Error("SHA-256 digest failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    return os.str();
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open input file " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// A positional graph6 string or every line of --file.
std::vector<Graph> load_graphs(const std::string& inline_g6, const std::string& file,
                               ordered_json* digests)
{
    if (!inline_g6.empty() && !file.empty())
        throw UsageError("give either a graph6 argument or --file, not both");
    if (!file.empty()) {
        const std::string text = read_file(file);
        if (digests)
            (*digests)[file] = sha256_hex(text);
        std::istringstream in(text);
        return ingest_graph6_stream(in, true).graphs;
    }
    if (inline_g6.empty())
        throw UsageError("no input graph (pass a graph6 string or --file)");
    return {parse_graph6(inline_g6)};
}

void require_connected(const Graph& g)
{
    const ComponentDecomposition c = components(g);
    if (c.count != 1)
        throw UsageError("graph is disconnected; components " + describe_components(c));
}

std::string fixed12(double v)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(12) << v;
    return os.str();
}

ordered_json base_manifest(int argc, const char* const* argv)
{
    ordered_json m;
    std::vector<std::string> cmd(argv, argv + argc);
    m["command_line"] = cmd;
    m["versions"] = {{"dsr", kVersion},
                     {"compiler", __VERSION__},
#ifdef _OPENMP
                     {"openmp", _OPENMP}
#else
                     {"openmp", nullptr}
#endif
    };
    m["input_digests"] = ordered_json::object();
    return m;
}

void write_text(const fs::path& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + path.string());
    out << text;
}

std::string cache_file(const std::string& dir, const PowerIterationOptions& power)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, "dsr-evaluation-cache v1 tol=%a max_iterations=%d",
                  power.tolerance, power.max_iterations);
    return (fs::path(dir) / ("evaluations-" + sha256_hex(buf).substr(0, 16) + ".tsv")).string();
}

struct LambdaArgs {
    std::string g6;
    std::string file;
    bool full = false;
    double tol = 1e-12;
};

int cmd_lambda1(const LambdaArgs& a, std::ostream& out)
{
    const std::vector<Graph> graphs = load_graphs(a.g6, a.file, nullptr);
    PowerIterationOptions opts;
    opts.tolerance = a.tol;
    for (const Graph& g : graphs) {
        require_connected(g);
        const SpectralResult res = distance_spectral_radius(g, opts);
        if (!a.file.empty())
            out << emit_graph6(g) << ' ';
        out << fixed12(res.lambda1) << '\n';
        if (a.full) {
            out << "spectrum:";
            for (double v : full_spectrum(distance_matrix(g)))
                out << ' ' << fixed12(v);
            out << '\n';
        }
    }
    return kExitOk;
}

struct CkappaArgs {
    std::string g6;
    std::string file;
    int r = 2;
    int h = 0;
};

int cmd_ckappa(const CkappaArgs& a, std::ostream& out)
{
    for (const Graph& g : load_graphs(a.g6, a.file, nullptr)) {
        require_connected(g);
        if (!a.file.empty())
            out << emit_graph6(g) << ' ';
        const CkappaResult res = ckappa(g, a.r, a.h);
        if (!res.value) {
            out << "undefined\n";
            continue;
        }
        out << *res.value << '\n';
        out << "witness:";
        for (int v : mask_to_vertices(res.witness->s))
            out << ' ' << v;
        out << "\ncomponent sizes:";
        for (int s : res.witness->component_sizes)
            out << ' ' << s;
        out << '\n';
    }
    return kExitOk;
}

struct FamilyArgs {
    std::string which;
    FamilyParams p;
};

int cmd_family(const FamilyArgs& a, std::ostream& out)
{
    try {
        check_hypothesis(a.p);
    } catch (const Error& e) {
        throw UsageError(std::string("infeasible parameters: ") + e.what());
    }
    FamilyGraph fam;
    try {
        if (a.which.empty())
            fam = extremal_graph(a.p);
        else if (a.which == "i")
            fam = family_case_i(a.p);
        else if (a.which == "ii")
            fam = family_case_ii(a.p);
        else
            fam = family_case_iii(a.p);
    } catch (const Error& e) {
        throw UsageError(std::string("infeasible parameters: ") + e.what());
    }
    const FamilyValidation v = validate_family(fam.graph, a.p);
    out << emit_graph6(fam.graph) << '\n';
    out << to_json(a.p, v).dump(2) << '\n';
    return v.all_pass() ? kExitOk : kExitVerificationFailed;
}

struct VerifyArgs {
    bool theorem = false;
    bool edge = false;
    bool join = false;
    int n = 0;
    int n_max = 9;
    int r = 2;
    int h = 1;
    int jobs = 1;
    std::string input;
    std::string out_dir = "dsr-reports";
    std::string cache_dir;
    bool strict = false;
};

std::vector<Graph> sweep_source(const VerifyArgs& a, ordered_json& manifest, std::string& label)
{
    if (!a.input.empty()) {
        label = "graph6:" + a.input;
        return load_graphs("", a.input, &manifest["input_digests"]);
    }
    label = "enumeration";
    return enumerate_connected(a.n);
}

int cmd_verify(const VerifyArgs& a, int argc, const char* const* argv, std::ostream& out,
               std::ostream& err)
{
    if (int(a.theorem) + int(a.edge) + int(a.join) != 1)
        throw UsageError("choose exactly one of --theorem, --edge-lemma, --join-lemma");
    if ((a.theorem || a.edge) && a.n < 1)
        throw UsageError("--n is required");

    const auto t0 = Clock::now();
    ordered_json manifest = base_manifest(argc, argv);
    manifest["jobs"] = effective_jobs(a.jobs);
    fs::create_directories(a.out_dir);

    ordered_json doc;
    std::string stem;
    int code = kExitOk;

    if (a.theorem) {
        std::string label;
        const std::vector<Graph> source = sweep_source(a, manifest, label);
        TheoremOptions opts;
        opts.jobs = a.jobs;
        manifest["parameters"] = {{"command", "theorem"}, {"n", a.n}, {"r", a.r},
                                  {"h", a.h}, {"source", label}};
        manifest["tolerances"] = {{"power_iteration", opts.power.tolerance},
                                  {"max_iterations", opts.power.max_iterations},
                                  {"tie", opts.tie_tolerance},
                                  {"escalation", opts.escalation_tolerance}};

        std::string cache_dir = a.cache_dir;
        if (cache_dir.empty())
            if (const char* env = std::getenv(kCacheEnv))
                cache_dir = env;
        EvaluationCache cache;
        std::string cache_path;
        if (!cache_dir.empty()) {
            fs::create_directories(cache_dir);
            cache_path = cache_file(cache_dir, opts.power);
            cache.load(cache_path);
            manifest["cache"] = {{"path", cache_path}, {"entries_loaded", cache.size()}};
        }

        const TheoremSweep sweep =
            verify_theorem(source, a.n, a.r, a.h, opts, cache_dir.empty() ? nullptr : &cache);
        if (!cache_path.empty() && cache.dirty())
            cache.save(cache_path);

        doc["results"] = to_json(sweep);
        manifest["timing"] = {{"classes", timing_json(sweep)}};
        stem = "theorem-n" + std::to_string(a.n) + "-r" + std::to_string(a.r) + "-h" +
               std::to_string(a.h);
        write_text(fs::path(a.out_dir) / (stem + ".csv"), theorem_csv(sweep));

        out << "delta ckappa size  case verdict\n";
        bool unmet = false;
        for (const auto& r : sweep.reports) {
            if (r.verdict == Verdict::HypothesisUnmet)
                unmet = true;
            if (r.class_size == 0 && r.verdict != Verdict::HypothesisUnmet)
                continue;
            out << std::setw(5) << r.key.delta << ' ' << std::setw(6) << r.key.ckappa << ' '
                << std::setw(5) << r.class_size << ' ' << std::setw(5)
                << (r.predicted_case ? to_string(*r.predicted_case) : "-") << ' '
                << to_string(r.verdict) << '\n';
        }
        for (const auto& f : sweep.consistency_failures)
            err << "consistency: " << f << '\n';
        if (sweep.grid_infeasible)
            out << "no (delta, ckappa) meets n >= ckappa + r(h+1)\n";
        if (sweep.any_failure())
            code = kExitVerificationFailed;
        else if (a.strict && (unmet || sweep.grid_infeasible))
            code = kExitVerificationFailed;
    } else if (a.edge) {
        std::string label;
        const std::vector<Graph> source = sweep_source(a, manifest, label);
        std::vector<Graph> graphs;
        for (const Graph& g : source)
            if (g.order() == a.n && is_connected(g))
                graphs.push_back(g);
        manifest["parameters"] = {{"command", "edge-lemma"}, {"n", a.n}, {"source", label}};
        manifest["tolerances"] = {{"margin", 1e-9}, {"power_iteration", 1e-12}};
        const EdgeLemmaReport rep = verify_edge_deletion_lemma(graphs, a.jobs);
        doc["results"] = to_json(rep);
        stem = "edge-lemma-n" + std::to_string(a.n);
        out << "graphs " << rep.graphs << ", pairs checked " << rep.pairs_checked << ", skipped "
            << rep.pairs_skipped << ", violations " << rep.violations << ", min margin "
            << rep.min_margin << '\n';
        if (!rep.holds())
            code = kExitVerificationFailed;
    } else {
        manifest["parameters"] = {{"command", "join-lemma"}, {"n_max", a.n_max}};
        manifest["tolerances"] = {{"margin", 1e-9}, {"power_iteration", 1e-12}};
        const JoinLemmaReport rep = verify_join_lemma(a.n_max, a.jobs);
        doc["results"] = to_json(rep);
        stem = "join-lemma-n" + std::to_string(a.n_max);
        out << "instances " << rep.instances << ", violations " << rep.violations
            << ", min margin " << rep.min_margin << '\n';
        if (!rep.holds())
            code = kExitVerificationFailed;
    }

    if (!manifest.contains("timing"))
        manifest["timing"] = ordered_json::object();
    manifest["timing"]["total_seconds"] =
        std::chrono::duration<double>(Clock::now() - t0).count();
    doc["manifest"] = std::move(manifest);
    const fs::path json_path = fs::path(a.out_dir) / (stem + ".json");
    write_text(json_path, doc.dump(2) + "\n");
    out << "wrote " << json_path.string() << '\n';
    return code;
}

struct EnumerateArgs {
    int n = 0;
    std::string out_file;
};

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out)
{
    const std::vector<Graph> graphs = enumerate_connected(a.n);
    if (a.out_file.empty()) {
        write_graph6_stream(out, graphs);
    } else {
        std::ofstream f(a.out_file, std::ios::trunc);
        if (!f)
            throw Error("cannot write " + a.out_file);
        write_graph6_stream(f, graphs);
        out << graphs.size() << " graphs written to " << a.out_file << '\n';
    }
    return kExitOk;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Distance spectral radius and h-extra r-component connectivity toolkit"};
    // "--h" is a parameter here, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    LambdaArgs la;
    auto* lambda = app.add_subcommand("lambda1", "Distance spectral radius of graph6 input");
    lambda->add_option("graph6", la.g6, "Graph in graph6 format");
    lambda->add_option("-f,--file", la.file, "File with one graph6 line per graph");
    lambda->add_flag("--full-spectrum", la.full, "Also print every eigenvalue (Jacobi)");
    lambda->add_option("--tol", la.tol, "Relative power-iteration tolerance")
        ->check(CLI::PositiveNumber);

    CkappaArgs ca;
    auto* ck = app.add_subcommand("ckappa", "h-extra r-component connectivity with a witness cut");
    ck->add_option("graph6", ca.g6, "Graph in graph6 format");
    ck->add_option("-f,--file", ca.file, "File with one graph6 line per graph");
    ck->add_option("--r", ca.r, "Minimum number of components (>= 2)")
        ->required()
        ->check(CLI::Range(2, kMaxVertices));
    ck->add_option("--h", ca.h, "Each component keeps at least h+1 vertices")
        ->required()
        ->check(CLI::NonNegativeNumber);

    FamilyArgs fa;
    auto* fam = app.add_subcommand("family", "Construct and validate an extremal family graph");
    fam->add_option("--case", fa.which, "Family case; chosen from delta, h, ckappa when omitted")
        ->check(CLI::IsMember({"i", "ii", "iii"}));
    fam->add_option("--n", fa.p.n, "Order")->required();
    fam->add_option("--r", fa.p.r, "Component count")->required();
    fam->add_option("--h", fa.p.h, "Extra parameter")->required();
    fam->add_option("--delta", fa.p.delta, "Minimum degree")->required();
    fam->add_option("--ckappa", fa.p.ckappa, "Connectivity value")->required();

    VerifyArgs va;
    auto* ver = app.add_subcommand("verify", "Exhaustive verification sweeps");
    ver->add_flag("--theorem", va.theorem, "Class minimisers against the extremal families");
    ver->add_flag("--edge-lemma", va.edge, "Edge deletion strictly raises lambda1");
    ver->add_flag("--join-lemma", va.join, "Clique-join comparison inequality");
    ver->add_option("--n", va.n, "Order of the graphs swept");
    ver->add_option("--n-max", va.n_max, "Largest order for --join-lemma")
        ->check(CLI::Range(3, kMaxJoinLemmaOrder));
    ver->add_option("--r", va.r, "Component count")->check(CLI::Range(2, kMaxVertices));
    ver->add_option("--h", va.h, "Extra parameter")->check(CLI::Range(1, kMaxVertices));
    ver->add_option("--input", va.input, "graph6 file instead of in-process enumeration");
    ver->add_option("--jobs", va.jobs, "Worker threads (0 = OpenMP default)")
        ->check(CLI::NonNegativeNumber);
    ver->add_option("--out", va.out_dir, "Directory for JSON and CSV reports");
    ver->add_option("--cache-dir", va.cache_dir, "Evaluation cache directory (default $" +
                                                     std::string(kCacheEnv) + ")");
    ver->add_flag("--strict", va.strict, "Fail when any row is HYPOTHESIS_UNMET");

    for (CLI::App* sub : {lambda, ck, fam, ver})
        sub->set_help_flag("--help", "Print this help message and exit");

    EnumerateArgs ea;
    auto* en = app.add_subcommand("enumerate", "Dump connected graphs of order n as graph6");
    en->add_option("--n", ea.n, "Order")->required()->check(CLI::Range(1, kMaxEnumerationOrder));
    en->set_help_flag("--help", "Print this help message and exit");
    en->add_option("--out", ea.out_file, "Output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (lambda->parsed())
            return cmd_lambda1(la, out);
        if (ck->parsed())
            return cmd_ckappa(ca, out);
        if (fam->parsed())
            return cmd_family(fa, out);
        if (ver->parsed())
            return cmd_verify(va, argc, argv, out, err);
        if (en->parsed())
            return cmd_enumerate(ea, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace dsr::cli
