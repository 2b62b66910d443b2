#pragma once

#include "lat/lat.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace lat::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalidInput = 2, kInfeasible = 3, kExhausted = 4 };

// Thrown for bad command-line input that is not a library error.
class UsageError : public Error {
public:
    using Error::Error;
};

struct GraphSource {
    Graph graph;
    std::optional<FamilySpec> family;
};

inline std::string read_text(const std::string& path, std::istream& in) {
    std::stringstream buf;
    if (path == "-") {
        buf << in.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw UsageError("cannot open '" + path + "'");
        buf << file.rdbuf();
    }
    return buf.str();
}

/// Accepts a family spec ("wheel:4"), an inline graph6 string ("g6:Bw"),
/// "-" for stdin, or a file holding an edge list or graph6 text.
inline GraphSource resolve_graph(const std::string& arg, std::istream& in) {
    if (arg.starts_with("g6:")) return {parse_graph6(arg.substr(3)), std::nullopt};
    if (const auto colon = arg.find(':'); colon != std::string::npos && arg != "-" && !std::ifstream(arg)) {
        const auto spec = parse_family(arg);
        return {generate(spec), spec};
    }
    const std::string text = read_text(arg, in);
    return {parse_graph(text, detect_format(text)), std::nullopt};
}

struct BudgetFlags {
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::int64_t> max_millis;
    bool deterministic = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--max-nodes", max_nodes, "search-tree node limit");
        cmd->add_option("--max-millis", max_millis, "wall-clock limit in milliseconds (default 60000)");
        cmd->add_flag("--deterministic", deterministic, "single-threaded, reproducible search");
    }

    SolveBudget budget() const {
        SolveBudget b;
        b.deterministic = deterministic;
        b.max_nodes = max_nodes;
        if (max_millis) b.max_millis = std::chrono::milliseconds(*max_millis);
        else if (max_nodes) b.max_millis.reset();
        return b;
    }
};

inline Json solve_json(const SolveResult& r) {
    Json j = Json::object();
    j["status"] = to_string(r.status);
    j["value"] = r.status == SolveStatus::Exact ? Json(r.value) : Json(nullptr);
    j["lower"] = r.lower;
    j["upper"] = r.status == SolveStatus::Exact || r.status == SolveStatus::LowerUpper ? Json(r.upper) : Json(nullptr);
    j["nodes"] = r.nodes_explored;
    return j;
}

inline int exit_for(SolveStatus s) {
    switch (s) {
    case SolveStatus::Exact: return kOk;
    case SolveStatus::Infeasible: return kInfeasible;
    default: return kExhausted;
    }
}

inline void print_certificate(std::ostream& out, const Certificate& c) { out << write_certificate(c); }

class Cli {
public:
    Cli(std::ostream& out, std::ostream& err, std::istream& in) : out_(out), err_(err), in_(in) {}

    int run(std::vector<std::string> args) {
        CLI::App app{"Local antimagic (total) labelings: construct, verify, transform and solve."};
        app.name("lat");
        app.require_subcommand(1);
        setup_gen(app);
        setup_verify(app);
        setup_solve(app);
        setup_construct(app);
        setup_transform(app);
        setup_bounds(app);
        setup_atlas(app);
        setup_dot(app);

        std::reverse(args.begin(), args.end());
        try {
            app.parse(args);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return kOk;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return kOk;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << "\n";
            return kInvalidInput;
        }

        try {
            return action_();
        } catch (const ParseError& e) {
            err_ << "error: " << e.what() << "\n";
        } catch (const ParameterError& e) {
            err_ << "error: " << e.what() << "\n";
        } catch (const ValidationError& e) {
            err_ << "error: " << e.what() << "\n";
        } catch (const SchemaError& e) {
            err_ << "error: schema: " << e.what() << "\n";
        } catch (const IntegrityError& e) {
            err_ << "error: integrity: " << e.what() << "\n";
        } catch (const PreconditionError& e) {
            err_ << "error: precondition: " << e.what() << "\n";
        } catch (const StructureError& e) {
            err_ << "error: structure: " << e.what() << "\n";
        } catch (const BijectionError& e) {
            err_ << "error: " << e.what() << "\n";
        } catch (const RefusalError& e) {
            err_ << "error: " << e.what() << "\n";
        } catch (const UsageError& e) {
            err_ << "error: " << e.what() << "\n";
        } catch (const std::exception& e) {
            err_ << "internal error: " << e.what() << "\n";
            return kInternal;
        }
        return kInvalidInput;
    }

private:
    void setup_gen(CLI::App& app) {
        auto* cmd = app.add_subcommand("gen", "emit a family graph");
        cmd->add_option("family", gen_.family, "family name, e.g. wheel")->required();
        cmd->add_option("params", gen_.params, "family parameters");
        cmd->add_option("--format", gen_.format, "edge-list or graph6")->check(CLI::IsMember({"edge-list", "graph6"}));
        cmd->callback([this] {
            action_ = [this] {
                const auto spec = make_family(gen_.family, gen_.params);
                const auto fmt = gen_.format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
                out_ << serialize_graph(generate(spec), fmt) << "\n";
                return kOk;
            };
        });
    }

    void setup_verify(CLI::App& app) {
        auto* cmd = app.add_subcommand("verify", "re-verify a certificate (exit 0 iff valid)");
        cmd->add_option("certificate", cert_path_, "certificate file or -")->required();
        cmd->add_flag("--json", json_);
        cmd->callback([this] {
            action_ = [this] {
                const auto cert = parse_certificate(read_text(cert_path_, in_));
                const auto report = reverify(cert);
                auto problems = integrity_problems(cert, report);
                const bool ok = report.valid() && problems.empty();
                if (json_) {
                    Json j = Json::object();
                    j["valid"] = ok;
                    j["distinct_count"] = report.profile.distinct_count;
                    j["weights"] = report.profile.weights;
                    Json viol = Json::array();
                    for (auto e : report.violations) viol.push_back({cert.graph.edge(e).u, cert.graph.edge(e).v});
                    j["violations"] = viol;
                    j["problems"] = problems;
                    out_ << pretty_json(j);
                } else {
                    out_ << "valid: " << (ok ? "yes" : "no") << "\n";
                    if (report.bijection_ok) out_ << "distinct_count: " << report.profile.distinct_count << "\n";
                    for (auto e : report.violations) {
                        const auto& edge = cert.graph.edge(e);
                        out_ << "violation: edge " << e.value << " {" << edge.u << "," << edge.v << "} both weigh "
                             << report.profile.weights[edge.u] << "\n";
                    }
                    for (const auto& p : problems) out_ << "problem: " << p << "\n";
                }
                return ok ? kOk : kInvalidInput;
            };
        });
    }

    void setup_solve(CLI::App& app) {
        auto* cmd = app.add_subcommand("solve", "minimum distinct weights (or feasibility with --k)");
        cmd->add_option("graph", graph_arg_, "family spec, g6:<string>, file, or -")->required();
        cmd->add_option("--mode", mode_, "total or edge")->check(CLI::IsMember({"total", "edge"}));
        cmd->add_option("--k", k_, "find a labeling with at most k distinct weights");
        cmd->add_option("--out", out_path_, "also write the certificate to this file");
        cmd->add_flag("--json", json_);
        budget_.attach(cmd);
        cmd->callback([this] { action_ = [this] { return do_solve(); }; });
    }

    int do_solve() {
        const auto src = resolve_graph(graph_arg_, in_);
        const SearchMode mode = mode_ == "edge" ? SearchMode::EdgeOnly : SearchMode::Total;
        SolveOptions options;
        if (src.family) options.symmetry = symmetry_hint(*src.family, mode);
        const auto budget = budget_.budget();

        Json j = Json::object();
        j["graph6"] = serialize_graph6(src.graph);
        j["mode"] = to_string(mode);
        std::optional<Certificate> cert;
        int code;
        if (k_) {
            const auto r = find_with_at_most_k(src.graph, *k_, mode, budget, options);
            j["k"] = *k_;
            j["status"] = to_string(r.status);
            j["nodes"] = r.nodes_explored;
            if (r.certificate) cert = make_certificate(src.graph, *r.certificate, provenance("solver:find", mode));
            code = r.status == FindStatus::Found ? kOk : r.status == FindStatus::None ? kInfeasible : kExhausted;
        } else {
            const auto r = solve_min_distinct(src.graph, mode, budget, options);
            const Json summary = solve_json(r);
            for (const auto& [key, value] : summary.items()) j[key] = value;
            if (r.certificate) cert = make_certificate(src.graph, *r.certificate, provenance("solver:min", mode));
            code = exit_for(r.status);
        }
        if (cert && src.family) {
            if (auto known = known_value(*src.family)) cert->citation = known->citation;
        }
        j["certificate"] = cert ? to_json(*cert) : Json(nullptr);
        if (cert && out_path_) std::ofstream(*out_path_) << write_certificate(*cert);

        if (json_) {
            out_ << pretty_json(j);
        } else {
            for (const auto& [key, value] : j.items()) {
                if (key == "certificate") continue;
                out_ << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
            }
            if (cert) out_ << "certificate:\n" << write_certificate(*cert);
        }
        return code;
    }

    Json provenance(const std::string& source, SearchMode mode) const {
        Json p = make_provenance(source);
        p["mode"] = to_string(mode);
        p["deterministic"] = budget_.deterministic;
        return p;
    }

    void setup_construct(CLI::App& app) {
        auto* cmd = app.add_subcommand("construct", "closed-form labelings: k2-plus-empty N | odd-path N | path-from-cycle CERT");
        cmd->add_option("name", construct_.name)->required()->check(CLI::IsMember({"k2-plus-empty", "odd-path", "path-from-cycle"}));
        cmd->add_option("arg", construct_.arg, "parameter or certificate path")->required();
        cmd->add_option("--edge", construct_.edge, "edge id to cut (path-from-cycle; default: the edge labelled 1)");
        cmd->callback([this] { action_ = [this] { return do_construct(); }; });
    }

    int do_construct() {
        Certificate cert;
        if (construct_.name == "path-from-cycle") {
            const auto input = read_certificate(read_text(construct_.arg, in_));
            if (input.mode != SearchMode::Total) throw UsageError("path-from-cycle needs a total-labeling certificate");
            std::size_t edge = 0;
            if (construct_.edge) {
                edge = *construct_.edge;
            } else {
                const auto it = std::find(input.edge_labels.begin(), input.edge_labels.end(), 1);
                if (it == input.edge_labels.end()) throw PreconditionError("no edge carries label 1");
                edge = static_cast<std::size_t>(it - input.edge_labels.begin());
            }
            const auto res = path_from_cycle(input.graph, TotalLabeling{input.vertex_labels, input.edge_labels}, EdgeId{edge});
            Json p = make_provenance("construction:path-from-cycle");
            p["cut_edge"] = edge;
            p["cycle_vertex"] = res.cycle_vertex;
            cert = make_certificate(res.path, res.labeling, p);
        } else {
            const std::size_t n = parse_count(construct_.arg);
            const auto built = construct_.name == "odd-path" ? construct_small_odd_path(n) : construct_k2_plus_empty(n);
            Json p = make_provenance("construction:" + construct_.name);
            if (construct_.name == "odd-path") {
                p["sequence_order"] = "v1,e1,v2,e2,...,vn";
                p["sequence"] = to_interleaved_path(built.labeling);
            }
            cert = make_certificate(built.graph, built.labeling, p);
            const FamilySpec spec = construct_.name == "odd-path" ? FamilySpec{family::Path{n}} : FamilySpec{family::K2PlusEmpty{n}};
            if (auto known = known_value(spec)) cert.citation = known->citation;
        }
        print_certificate(out_, cert);
        return kOk;
    }

    void setup_transform(CLI::App& app) {
        auto* cmd = app.add_subcommand("transform", "cone-to-total | total-to-cone | double-cone");
        cmd->add_option("kind", transform_.kind)->required()->check(CLI::IsMember({"cone-to-total", "total-to-cone", "double-cone"}));
        cmd->add_option("certificate", transform_.cert, "input certificate file or -")->required();
        cmd->add_option("--apex", transform_.apex, "apex vertex (cone-to-total; default: last vertex)");
        cmd->add_option("--apexes", transform_.apexes, "kept and consumed apex (double-cone; default: last two)")->expected(2);
        cmd->callback([this] { action_ = [this] { return do_transform(); }; });
    }

    int do_transform() {
        const auto input = read_certificate(read_text(transform_.cert, in_));
        const std::size_t p = input.graph.order();
        Certificate cert;
        if (transform_.kind == "total-to-cone") {
            if (input.mode != SearchMode::Total) throw UsageError("total-to-cone needs a total-labeling certificate");
            const auto res = total_to_cone(input.graph, TotalLabeling{input.vertex_labels, input.edge_labels});
            Json prov = make_provenance("transform:total-to-cone");
            prov["apex"] = res.apex.value;
            prov["apex_weight"] = res.apex_weight;
            prov["note"] = "apex weight differs from every vertex weight, so the cone has one more distinct weight "
                           "than the input and chi_la(K_1 v G) <= distinct_count";
            cert = make_certificate(res.cone, res.labeling, prov);
        } else {
            if (input.mode != SearchMode::EdgeOnly) throw UsageError(transform_.kind + " needs an edge-labeling certificate");
            const EdgeLabeling g{input.edge_labels};
            if (p == 0) throw UsageError("empty graph has no apex");
            if (transform_.kind == "cone-to-total") {
                const std::size_t apex = transform_.apex.value_or(p - 1);
                const auto res = cone_to_total(input.graph, g, VertexId{apex});
                Json prov = make_provenance("transform:cone-to-total");
                prov["apex"] = apex;
                prov["cone_vertex"] = res.cone_vertex;
                cert = make_certificate(res.graph, res.labeling, prov);
            } else {
                if (p < 2) throw UsageError("double cone needs two apexes");
                const std::size_t kept = transform_.apexes.empty() ? p - 2 : transform_.apexes[0];
                const std::size_t consumed = transform_.apexes.empty() ? p - 1 : transform_.apexes[1];
                const auto res = double_cone_collapse(input.graph, g, {VertexId{kept}, VertexId{consumed}});
                Json prov = make_provenance("transform:double-cone");
                prov["kept_apex"] = res.kept_apex.value;
                prov["consumed_apex"] = res.consumed_apex.value;
                prov["source_vertex"] = res.source_vertex;
                cert = make_certificate(res.graph, res.labeling, prov);
            }
        }
        print_certificate(out_, cert);
        return kOk;
    }

    void setup_bounds(CLI::App& app) {
        auto* cmd = app.add_subcommand("bounds", "lower/upper bounds on chi_lat with known-table entry");
        cmd->add_option("graph", graph_arg_, "family spec, g6:<string>, file, or -")->required();
        cmd->add_flag("--json", json_);
        budget_.attach(cmd);
        cmd->callback([this] { action_ = [this] { return do_bounds(); }; });
    }

    int do_bounds() {
        const auto src = resolve_graph(graph_arg_, in_);
        const auto r = bounds_report(src.graph, budget_.budget(), src.family);
        Json j = Json::object();
        j["chromatic"] = r.chromatic;
        j["isolated_count"] = r.isolated_count;
        j["lower"] = r.lower;
        j["upper"] = r.upper ? Json{{"value", r.upper->value}, {"provenance", r.upper->provenance}} : Json(nullptr);
        if (r.known) {
            j["known"] = {{"quantity", to_string(r.known->quantity)}, {"lo", r.known->lo}, {"hi", r.known->hi},
                          {"status", to_string(r.known->status)}, {"citation", r.known->citation}};
        } else {
            j["known"] = nullptr;
        }
        j["cone_certificate"] =
            r.cone ? to_json(make_certificate(r.cone->graph, r.cone->witness, make_provenance("bounds:cone-solver")))
                   : Json(nullptr);
        j["notes"] = r.notes;
        if (json_) {
            out_ << pretty_json(j);
        } else {
            out_ << "chromatic: " << r.chromatic << "\nisolated_count: " << r.isolated_count << "\nlower: " << r.lower << "\n";
            if (r.upper) out_ << "upper: " << r.upper->value << " (" << r.upper->provenance << ")\n";
            if (r.known) {
                out_ << "known: " << to_string(r.known->quantity) << " " << r.known->lo;
                if (!r.known->exact()) out_ << ".." << r.known->hi;
                out_ << " [" << to_string(r.known->status) << "] " << r.known->citation << "\n";
            }
            for (const auto& n : r.notes) out_ << "note: " << n << "\n";
            if (r.cone) {
                out_ << "cone certificate:\n"
                     << write_certificate(make_certificate(r.cone->graph, r.cone->witness, make_provenance("bounds:cone-solver")));
            }
        }
        return kOk;
    }

    void setup_atlas(CLI::App& app) {
        auto* cmd = app.add_subcommand("atlas", "batch-solve a graph6 stream with a result cache");
        cmd->add_option("input", atlas_.input, "graph6 file (one graph per line) or -")->required();
        cmd->add_option("--mode", mode_, "total or edge")->check(CLI::IsMember({"total", "edge"}));
        cmd->add_option("--cache-dir", atlas_.cache_dir, std::string("cache directory (default: $") + kCacheDirEnv + ")");
        cmd->add_option("--jobs", atlas_.jobs, "graphs solved concurrently")->check(CLI::PositiveNumber);
        cmd->add_flag("--json", json_);
        budget_.attach(cmd);
        cmd->callback([this] { action_ = [this] { return do_atlas(); }; });
    }

    int do_atlas() {
        const SearchMode mode = mode_ == "edge" ? SearchMode::EdgeOnly : SearchMode::Total;
        std::vector<std::string> lines;
        {
            std::istringstream text(read_text(atlas_.input, in_));
            for (std::string line; std::getline(text, line);) {
                while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
                if (!line.empty()) lines.push_back(line);
            }
        }
        std::optional<ResultCache> cache;
        if (atlas_.cache_dir) cache.emplace(*atlas_.cache_dir);
        else if (auto dir = ResultCache::directory_from_env()) cache.emplace(*dir);

        const auto budget = budget_.budget();
        std::vector<Json> rows(lines.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
                Json row = Json::object();
                row["graph6"] = lines[i];
                try {
                    const Graph g = parse_graph6(lines[i]);
                    row["p"] = g.order();
                    row["q"] = g.size();
                    std::optional<CacheEntry> hit;
                    if (cache) hit = cache->lookup(g, mode);
                    if (hit) {
                        row["status"] = "exact";
                        row["value"] = hit->value;
                        row["cached"] = true;
                    } else {
                        const auto r = solve_min_distinct(g, mode, budget);
                        const Json summary = solve_json(r);
                        for (const auto& [key, value] : summary.items()) row[key] = value;
                        row["cached"] = false;
                        if (cache) cache->store(g, mode, r);
                    }
                } catch (const Error& e) {
                    row["status"] = "error";
                    row["error"] = e.what();
                }
                rows[i] = std::move(row);
            }
        };
        {
            std::vector<std::jthread> pool;
            for (std::size_t t = 1; t < atlas_.jobs; ++t) pool.emplace_back(work);
            work();
        }

        int code = kOk;
        for (const auto& row : rows) {
            const std::string status = row["status"];
            if (status == "error") code = kInvalidInput;
            else if (code == kOk && status != "exact") code = status == "infeasible" ? kInfeasible : kExhausted;
            if (json_) {
                out_ << row.dump() << "\n";
            } else {
                out_ << row["graph6"].get<std::string>() << " " << status;
                if (row.contains("value") && !row["value"].is_null()) out_ << " " << row["value"].dump();
                if (row.contains("cached") && row["cached"].get<bool>()) out_ << " (cached)";
                if (row.contains("error")) out_ << " " << row["error"].get<std::string>();
                out_ << "\n";
            }
        }
        return code;
    }

    void setup_dot(CLI::App& app) {
        auto* cmd = app.add_subcommand("dot", "export a certificate as Graphviz DOT");
        cmd->add_option("certificate", cert_path_, "certificate file or -")->required();
        cmd->callback([this] {
            action_ = [this] {
                out_ << export_dot(read_certificate(read_text(cert_path_, in_)));
                return kOk;
            };
        });
    }

    std::ostream& out_;
    std::ostream& err_;
    std::istream& in_;
    std::function<int()> action_;

    struct {
        std::string family;
        std::vector<std::size_t> params;
        std::string format = "edge-list";
    } gen_;
    struct {
        std::string name;
        std::string arg;
        std::optional<std::size_t> edge;
    } construct_;
    struct {
        std::string kind;
        std::string cert;
        std::optional<std::size_t> apex;
        std::vector<std::size_t> apexes;
    } transform_;
    struct {
        std::string input;
        std::optional<std::string> cache_dir;
        std::size_t jobs = 1;
    } atlas_;
    std::string cert_path_;
    std::string graph_arg_;
    std::string mode_ = "total";
    std::optional<std::size_t> k_;
    std::optional<std::string> out_path_;
    bool json_ = false;
    BudgetFlags budget_;
};

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    return Cli(out, err, in).run(args);
}

} // namespace lat::cli
