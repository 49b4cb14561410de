#include "kpg/cli.hpp"

#include "kpg/decomp.hpp"
#include "kpg/error.hpp"
#include "kpg/extremal.hpp"
#include "kpg/graphical.hpp"
#include "kpg/potential.hpp"
#include "kpg/sigma.hpp"
#include "kpg/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

namespace kpg::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
    bool json_output = false;
    bool timing = false;
    std::string cache_dir;
    int jobs = 0;
};

/// Result of one subcommand: a human-readable text block plus the same
/// content as a machine-readable report.
struct RunReport {
    explicit RunReport(std::string cmd = {}) : command(std::move(cmd)) {}

    std::string command;
    json inputs = json::object();
    std::string outcome = "value"; // pass | fail | value
    json value = json::object();
    std::vector<std::string> artifacts;
    std::string text;
    ExitCode exit = ExitCode::Decided;
};

json graph_json(const SimpleGraph& g)
{
    json edges = json::array();
    for (const auto& e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
}

std::string embedding_text(const Embedding& emb)
{
    std::string out;
    for (std::size_t i = 0; i < emb.size(); ++i)
        out += "H:" + std::to_string(i) + " -> G:" + std::to_string(emb[i]) + '\n';
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content, RunReport& report)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << content;
    report.artifacts.push_back(path);
}

TargetPattern resolve_target(const std::string& spec, const std::string& file)
{
    if (!file.empty())
        return TargetPattern(parse_graph(read_file(file)), "file:" + file);
    const std::string prefix = "kp11:";
    if (spec.rfind(prefix, 0) != 0)
        throw ParseError("target must look like kp11:P, got '" + spec + "'");
    int p = 0;
    try {
        std::size_t used = 0;
        p = std::stoi(spec.substr(prefix.size()), &used);
        if (used != spec.size() - prefix.size())
            throw ParseError("");
    } catch (const std::exception&) {
        throw ParseError("target must look like kp11:P, got '" + spec + "'");
    }
    return make_kp11(p);
}

struct Certificate {
    SimpleGraph graph;
    Embedding embedding;
};

Certificate parse_certificate(const std::string& text)
{
    std::istringstream in(text);
    Certificate cert{read_graph(in), {}};
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        int h = -1, g = -1;
        if (std::sscanf(line.c_str(), " H:%d -> G:%d", &h, &g) != 2 || h != static_cast<int>(cert.embedding.size()))
            throw ParseError("bad embedding line '" + line + "'");
        cert.embedding.push_back(g);
    }
    return cert;
}

std::unique_ptr<VerdictCache> open_cache(const GlobalOptions& global)
{
    std::string dir = global.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv(VerdictCache::kEnvironmentVariable))
            dir = env;
    if (dir.empty())
        return std::make_unique<VerdictCache>();
    return std::make_unique<VerdictCache>(dir);
}

json exceptions_json(const std::vector<SigmaException>& exceptions)
{
    json out = json::array();
    for (const auto& e : exceptions)
        out.push_back({{"sequence", e.sequence.to_string()}, {"sum", e.sum}});
    return out;
}

std::string exceptions_text(const std::vector<SigmaException>& exceptions)
{
    std::string out = "exceptions " + std::to_string(exceptions.size()) + '\n';
    for (const auto& e : exceptions)
        out += "  " + e.sequence.to_string() + " sum " + std::to_string(e.sum) + '\n';
    return out;
}

std::string sigma_text(const SigmaResult& r)
{
    std::string out = "target " + r.target.name() + '\n';
    out += "n " + std::to_string(r.n) + '\n';
    out += "sigma " + std::to_string(r.sigma_value) + '\n';
    out += "swept sums " + std::to_string(r.max_sum_checked) + ".." + std::to_string(r.min_sum_checked) + " (" +
           std::to_string(r.sequences_checked) + " sequences)\n";
    return out + exceptions_text(r.exceptions);
}

json sigma_json(const SigmaResult& r)
{
    return {{"target", r.target.name()},
            {"n", r.n},
            {"sigma_value", r.sigma_value},
            {"max_sum_checked", r.max_sum_checked},
            {"min_sum_checked", r.min_sum_checked},
            {"sequences_checked", r.sequences_checked},
            {"exceptions", exceptions_json(r.exceptions)}};
}

SigmaOptions sigma_options(const GlobalOptions& global, VerdictCache* cache, bool lift_cap)
{
    SigmaOptions opts;
    opts.jobs = global.jobs;
    opts.cache = cache;
    if (lift_cap)
        opts.max_n = std::numeric_limits<int>::max();
    return opts;
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Potentially K_{p,1,1}-graphic sequences: thresholds, constructions and certificates", "kpg"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions global;
    app.add_flag("--json", global.json_output, "Emit a machine-readable JSON report");
    app.add_flag("--timing", global.timing, "Include elapsed time in the report");
    app.add_option("--cache-dir", global.cache_dir, "Directory for the persistent verdict cache");
    app.add_option("--jobs", global.jobs, "Worker threads for sweeps (0 = all cores)")->check(CLI::NonNegativeNumber);

    std::function<RunReport()> action;

    // seq
    auto* seq_cmd = app.add_subcommand("seq", "Degree-sequence utilities")->require_subcommand(1);
    std::string seq_text;
    {
        auto* check = seq_cmd->add_subcommand("check", "Test graphicality");
        check->add_option("SEQ", seq_text, "Sequence, e.g. 4^6 or 3,1,1")->required();
        check->callback([&] {
            action = [&] {
                RunReport r{"seq check"};
                r.inputs = {{"sequence", seq_text}};
                const auto seq = DegreeSequence::parse(seq_text);
                const bool graphical = is_graphical(seq);
                r.value = {{"sequence", seq.to_string()}, {"sigma", sigma(seq)}, {"graphical", graphical}};
                r.text = seq.to_string() + (graphical ? " is graphical" : " is not graphical") + " (sigma " +
                         std::to_string(sigma(seq)) + ")\n";
                return r;
            };
        });

        auto* realize_cmd = seq_cmd->add_subcommand("realize", "Havel-Hakimi realization");
        realize_cmd->add_option("SEQ", seq_text)->required();
        realize_cmd->callback([&] {
            action = [&] {
                RunReport r{"seq realize"};
                r.inputs = {{"sequence", seq_text}};
                const SimpleGraph g = realize(DegreeSequence::parse(seq_text));
                r.value = {{"graph", graph_json(g)}};
                r.text = g.to_text();
                return r;
            };
        });
    }
    int enum_n = 0;
    long long enum_sum = 0;
    {
        auto* enumerate = seq_cmd->add_subcommand("enumerate", "List graphical sequences of given length and sum");
        enumerate->add_option("--n", enum_n)->required()->check(CLI::PositiveNumber);
        enumerate->add_option("--sum", enum_sum)->required()->check(CLI::NonNegativeNumber);
        enumerate->callback([&] {
            action = [&] {
                RunReport r{"seq enumerate"};
                r.inputs = {{"n", enum_n}, {"sum", enum_sum}};
                json list = json::array();
                GraphicalSequences stream(enum_n, enum_sum);
                while (auto s = stream.next()) {
                    list.push_back(s->to_string());
                    r.text += s->to_string() + '\n';
                }
                r.value = {{"count", list.size()}, {"sequences", list}};
                return r;
            };
        });
    }

    // decomp
    auto* decomp_cmd = app.add_subcommand("decomp", "Complete-graph decompositions")->require_subcommand(1);
    int decomp_m = 0;
    for (const bool even : {true, false}) {
        auto* sub = decomp_cmd->add_subcommand(even ? "even" : "odd",
                                               even ? "K_{2m}: one 1-factor + m-1 spanning cycles"
                                                    : "K_{2m+1}: m spanning cycles");
        sub->add_option("--m", decomp_m)->required();
        sub->callback([&, even] {
            action = [&, even] {
                RunReport r{even ? "decomp even" : "decomp odd"};
                r.inputs = {{"m", decomp_m}};
                const Decomposition d = even ? decompose_even(decomp_m) : decompose_odd(decomp_m);
                json parts = json::array();
                for (const auto& part : d.parts)
                    parts.push_back({{"role", to_string(part.role)}, {"graph", graph_json(SimpleGraph(d.n, part.edges))}});
                r.value = {{"n", d.n}, {"parts", parts}};
                r.text = d.to_text();
                return r;
            };
        });
    }

    // extremal
    auto* extremal_cmd = app.add_subcommand("extremal", "Lower-bound constructions")->require_subcommand(1);
    int ext_p = 0, ext_n = 0;
    std::string emit = "both";
    {
        auto* build = extremal_cmd->add_subcommand("build", "Build the extremal sequence and its realization");
        build->add_option("--p", ext_p)->required();
        build->add_option("--n", ext_n)->required();
        build->add_option("--emit", emit)->check(CLI::IsMember({"graph", "sequence", "both"}));
        build->callback([&] {
            action = [&] {
                RunReport r{"extremal build"};
                r.inputs = {{"p", ext_p}, {"n", ext_n}, {"emit", emit}};
                const auto inst = build_lower_bound(ext_p, ext_n);
                r.value = {{"p", inst.p},
                           {"n", inst.n},
                           {"bound", inst.bound},
                           {"sigma", sigma(inst.sequence)},
                           {"construction", inst.construction}};
                if (emit != "graph") {
                    r.value["sequence"] = inst.sequence.to_string();
                    r.text += inst.sequence.to_string() + '\n';
                }
                if (emit != "sequence") {
                    r.value["graph"] = graph_json(inst.witness_graph);
                    r.text += inst.witness_graph.to_text();
                }
                return r;
            };
        });
        auto* bound = extremal_cmd->add_subcommand("bound", "Evaluate 2[((p+1)(n-1)+2)/2]");
        bound->add_option("--p", ext_p)->required();
        bound->add_option("--n", ext_n)->required();
        bound->callback([&] {
            action = [&] {
                RunReport r{"extremal bound"};
                r.inputs = {{"p", ext_p}, {"n", ext_n}};
                const long long b = sigma_lower_bound(ext_p, ext_n);
                r.value = {{"bound", b}};
                r.text = std::to_string(b) + '\n';
                return r;
            };
        });
    }

    // target selection shared by potential check, sigma compute, verify-certificate
    std::string target_spec = "kp11:3";
    std::string target_file;
    std::string out_file;

    // potential
    auto* potential_cmd = app.add_subcommand("potential", "Potentially H-graphic decisions")->require_subcommand(1);
    {
        auto* check = potential_cmd->add_subcommand("check", "Decide whether SEQ is potentially H-graphic");
        check->add_option("SEQ", seq_text)->required();
        auto* t = check->add_option("--target", target_spec, "Target as kp11:P");
        check->add_option("--target-file", target_file, "Target graph in graph text format")->excludes(t);
        check->add_option("--out", out_file, "Write the certificate to this file");
        check->callback([&] {
            action = [&] {
                RunReport r{"potential check"};
                r.inputs = {{"sequence", seq_text}, {"target", target_file.empty() ? target_spec : target_file}};
                const auto seq = DegreeSequence::parse(seq_text);
                const auto target = resolve_target(target_spec, target_file);
                const auto verdict = is_potentially(seq, target);
                r.value = {{"sequence", seq.to_string()}, {"target", target.name()}, {"potentially", verdict.answer}};
                r.text = "verdict " + std::string(verdict.answer ? "true" : "false") + '\n';
                if (verdict.answer) {
                    const std::string cert = verdict.certificate->to_text() + embedding_text(verdict.embedding);
                    r.value["certificate"] = graph_json(*verdict.certificate);
                    r.value["embedding"] = verdict.embedding;
                    r.text += cert;
                    if (!out_file.empty())
                        write_file(out_file, cert, r);
                }
                return r;
            };
        });
    }

    // sigma
    auto* sigma_cmd = app.add_subcommand("sigma", "Exact thresholds by exhaustive sweep")->require_subcommand(1);
    int sig_n = 0, sig_p = 0;
    bool lift_cap = false;
    std::unique_ptr<VerdictCache> cache;
    {
        auto* compute = sigma_cmd->add_subcommand("compute", "Compute sigma(H, n)");
        auto* t = compute->add_option("--target", target_spec);
        compute->add_option("--target-file", target_file)->excludes(t);
        compute->add_option("--n", sig_n)->required();
        compute->add_flag("--max-n-override", lift_cap, "Allow n above the default cap of 9");
        compute->callback([&] {
            action = [&] {
                RunReport r{"sigma compute"};
                r.inputs = {{"target", target_file.empty() ? target_spec : target_file}, {"n", sig_n}};
                cache = open_cache(global);
                const auto result = compute_sigma(resolve_target(target_spec, target_file), sig_n,
                                                  sigma_options(global, cache.get(), lift_cap));
                r.value = sigma_json(result);
                r.text = sigma_text(result);
                return r;
            };
        });

        auto* thm = sigma_cmd->add_subcommand("verify-theorem2", "Check the K_{3,1,1} threshold values");
        thm->add_option("--n", sig_n)->required();
        thm->callback([&] {
            action = [&] {
                RunReport r{"sigma verify-theorem2"};
                r.inputs = {{"n", sig_n}};
                cache = open_cache(global);
                const auto rep = verify_theorem2(sig_n, sigma_options(global, cache.get(), false));
                r.outcome = rep.pass ? "pass" : "fail";
                r.exit = rep.pass ? ExitCode::Decided : ExitCode::VerificationFailed;
                r.value = sigma_json(rep.result);
                r.value["expected"] = rep.expected;
                r.text = sigma_text(rep.result) + "expected " + std::to_string(rep.expected) + '\n' + r.outcome + '\n';
                return r;
            };
        });

        auto* conj = sigma_cmd->add_subcommand("verify-conjecture", "Compare sigma(K_{p,1,1}, n) with the lower bound");
        conj->add_option("--p", sig_p)->required();
        conj->add_option("--n", sig_n)->required();
        conj->add_flag("--max-n-override", lift_cap, "Allow n above the default cap of 9");
        conj->callback([&] {
            action = [&] {
                RunReport r{"sigma verify-conjecture"};
                r.inputs = {{"p", sig_p}, {"n", sig_n}};
                cache = open_cache(global);
                const auto rep = verify_conjecture(sig_p, sig_n, sigma_options(global, cache.get(), lift_cap));
                r.outcome = rep.pass ? "pass" : "fail";
                r.exit = rep.pass ? ExitCode::Decided : ExitCode::VerificationFailed;
                r.value = {{"p", rep.p}, {"n", rep.n}, {"sigma_value", rep.sigma_value}, {"bound", rep.bound}};
                r.text = "sigma " + std::to_string(rep.sigma_value) + "\nbound " + std::to_string(rep.bound) + '\n' +
                         r.outcome + '\n';
                return r;
            };
        });
    }

    // witness
    auto* witness_cmd = app.add_subcommand("witness", "Constructive certificates")->require_subcommand(1);
    bool show_trace = false;
    {
        auto* k311 = witness_cmd->add_subcommand("k311", "Realization of SEQ containing K_{3,1,1}");
        k311->add_option("SEQ", seq_text)->required();
        k311->add_flag("--trace", show_trace, "Print the step log");
        k311->add_option("--out", out_file, "Write the certificate to this file");
        k311->callback([&] {
            action = [&] {
                RunReport r{"witness k311"};
                r.inputs = {{"sequence", seq_text}};
                const auto seq = DegreeSequence::parse(seq_text);
                const auto w = find_k311_realization(seq);
                const std::string cert = w.graph.to_text() + embedding_text(w.embedding);
                r.value = {{"sequence", seq.to_string()},
                           {"graph", graph_json(w.graph)},
                           {"embedding", w.embedding},
                           {"divergences", w.divergences}};
                r.text = cert;
                if (show_trace) {
                    json steps = json::array();
                    for (const auto& s : w.trace)
                        steps.push_back({{"n", s.n}, {"kind", to_string(s.kind)}, {"detail", s.detail}});
                    r.value["trace"] = steps;
                    r.text += format_trace(w.trace);
                }
                if (!out_file.empty())
                    write_file(out_file, cert, r);
                return r;
            };
        });
    }

    // verify-certificate
    std::string cert_file, decomposition_file;
    bool target_absent = false;
    {
        auto* verify = app.add_subcommand("verify-certificate", "Independently re-check an emitted certificate");
        verify->add_option("SEQ", seq_text, "Sequence the certificate claims to realize");
        verify->add_option("CERT", cert_file, "Graph text, optionally followed by 'H:i -> G:j' lines");
        auto* t = verify->add_option("--target", target_spec);
        verify->add_option("--target-file", target_file)->excludes(t);
        verify->add_option("--decomposition", decomposition_file, "Check a decomp block file instead");
        verify->add_flag("--absent", target_absent, "Require that the target does not occur in the graph");
        verify->callback([&] {
            action = [&] {
                RunReport r{"verify-certificate"};
                std::string problem;
                if (!decomposition_file.empty()) {
                    r.inputs = {{"decomposition", decomposition_file}};
                    if (auto bad = check_decomposition(parse_decomposition(read_file(decomposition_file))))
                        problem = *bad;
                } else {
                    if (seq_text.empty() || cert_file.empty())
                        throw CLI::ValidationError("verify-certificate needs SEQ and CERT, or --decomposition FILE");
                    r.inputs = {{"sequence", seq_text}, {"certificate", cert_file}};
                    const auto seq = DegreeSequence::parse(seq_text);
                    const auto cert = parse_certificate(read_file(cert_file));
                    if (cert.graph.vertex_count() == 0 || degree_sequence(cert.graph) != seq)
                        problem = "degree sequence of the certificate is not " + seq.to_string();
                    else if (target_absent) {
                        const auto target = resolve_target(target_spec, target_file);
                        r.inputs["target"] = target.name();
                        if (contains_subgraph(cert.graph, target))
                            problem = "graph contains " + target.name();
                    } else if (!cert.embedding.empty()) {
                        const auto target = resolve_target(target_spec, target_file);
                        r.inputs["target"] = target.name();
                        if (!is_valid_embedding(cert.graph, target.graph(), cert.embedding))
                            problem = "embedding is not a valid " + target.name() + " subgraph embedding";
                    }
                }
                r.outcome = problem.empty() ? "pass" : "fail";
                r.exit = problem.empty() ? ExitCode::Decided : ExitCode::VerificationFailed;
                r.value = {{"valid", problem.empty()}};
                if (!problem.empty())
                    r.value["problem"] = problem;
                r.text = problem.empty() ? "certificate valid\n" : "certificate invalid: " + problem + '\n';
                return r;
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n\n" << app.help();
        return static_cast<int>(ExitCode::Usage);
    }
    if (!action) {
        err << app.help();
        return static_cast<int>(ExitCode::Usage);
    }

    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    try {
        report = action();
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::Usage);
    } catch (const std::exception& e) {
        if (global.json_output)
            out << json{{"outcome", "fail"}, {"error", e.what()}}.dump(2) << '\n';
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::VerificationFailed);
    }
    const auto elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (global.json_output) {
        json j = {{"command", report.command},
                  {"inputs", report.inputs},
                  {"outcome", report.outcome},
                  {"value", report.value},
                  {"artifacts", report.artifacts}};
        if (global.timing)
            j["elapsed_ms"] = elapsed;
        out << j.dump(2) << '\n';
    } else {
        out << report.text;
        if (global.timing)
            out << "elapsed_ms " << elapsed << '\n';
    }
    return static_cast<int>(report.exit);
}

} // namespace kpg::cli
