#include "kcirc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "kcirc/ears.hpp"
#include "kcirc/graphcore.hpp"
#include "kcirc/kcirc.hpp"
#include "kcirc/oracle.hpp"

namespace kcirc {

namespace {

using nlohmann::json;

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' &&
            c != '-') {
            return false;
        }
    }
    return true;
}

}  // namespace

MultiGraph parse_graph(const std::string& text) {
    std::vector<MultiGraph::EdgeDecl> edges;
    std::vector<VertexId> declared;
    std::set<VertexId> declared_seen;
    std::set<EdgeId> edge_seen;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;

        auto bad = [&](const std::string& kind, const std::string& why) {
            fail(kind, "line " + std::to_string(lineno) + ": " + why);
        };

        if (tokens[0] == "v") {
            if (tokens.size() != 2) bad("ParseError", "expected 'v <vertexId>'");
            if (!valid_identifier(tokens[1])) bad("ParseError", "bad identifier '" + tokens[1] + "'");
            if (!declared_seen.insert(tokens[1]).second) {
                bad("DuplicateId", "vertex '" + tokens[1] + "' declared twice");
            }
            declared.push_back(tokens[1]);
        } else if (tokens[0] == "e") {
            if (tokens.size() != 4) bad("ParseError", "expected 'e <edgeId> <u> <v>'");
            for (int i = 1; i <= 3; ++i) {
                if (!valid_identifier(tokens[i])) {
                    bad("ParseError", "bad identifier '" + tokens[i] + "'");
                }
            }
            if (!edge_seen.insert(tokens[1]).second) {
                bad("DuplicateId", "edge '" + tokens[1] + "' declared twice");
            }
            edges.push_back({tokens[1], tokens[2], tokens[3]});
        } else {
            bad("ParseError", "unknown directive '" + tokens[0] + "'");
        }
    }
    return MultiGraph::from_edges(edges, declared);
}

std::string serialize_graph(const MultiGraph& g) {
    std::ostringstream out;
    for (const VertexId& v : g.vertex_ids()) out << "v " << v << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.ends(e);
        out << "e " << g.edge_id(e) << " " << g.vertex_id(u) << " " << g.vertex_id(v)
            << "\n";
    }
    return out.str();
}

namespace {

MultiGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        fail("FileError", "cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

EdgeSet parse_edge_list(const std::string& csv) {
    EdgeSet out;
    std::string item;
    std::istringstream in(csv);
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.insert(item);
    }
    return out;
}

int resolve_limit(int flag_value, int fallback) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("KCIRC_ENUM_LIMIT")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return fallback;
}

json set_json(const EdgeSet& s) {
    json arr = json::array();
    for (const EdgeId& e : s) arr.push_back(e);
    return arr;
}

json sets_json(const std::vector<EdgeSet>& sets) {
    json arr = json::array();
    for (const EdgeSet& s : sets) arr.push_back(set_json(s));
    return arr;
}

std::string joined(const EdgeSet& s) {
    std::string out;
    for (const EdgeId& e : s) {
        if (!out.empty()) out += " ";
        out += e;
    }
    return out;
}

void emit_sets(std::ostream& out, const std::string& format, const std::string& key,
               const std::vector<EdgeSet>& sets) {
    if (format == "text") {
        for (const EdgeSet& s : sets) out << joined(s) << "\n";
    } else {
        out << json{{key, sets_json(sets)}}.dump() << "\n";
    }
}

void emit_set(std::ostream& out, const std::string& format, const std::string& key,
              const EdgeSet& s) {
    if (format == "text") {
        out << joined(s) << "\n";
    } else {
        out << json{{key, set_json(s)}}.dump() << "\n";
    }
}

struct VerifyCheck {
    std::string name;
    bool pass;
};

EdgeSet edges_in_no_circuit(const BruteMatroid& bm) {
    EdgeSet out = bm.ground;
    for (const EdgeSet& c : bm.circuits) {
        for (const EdgeId& e : c) out.erase(e);
    }
    return out;
}

EdgeSet edges_in_every_base(const BruteMatroid& bm) {
    EdgeSet out = bm.ground;
    for (const EdgeSet& b : bm.bases) {
        EdgeSet keep;
        for (const EdgeId& e : out) {
            if (b.count(e)) keep.insert(e);
        }
        out = std::move(keep);
    }
    return out;
}

std::vector<VerifyCheck> run_verify(const MultiGraph& g, int k, bool exhaustive,
                                    int limit) {
    std::vector<VerifyCheck> checks;
    std::string tag = "k=" + std::to_string(k) + " ";
    KCircularMatroid m(g, k);
    BruteMatroid bm = brute_matroid(g, k, limit);

    checks.push_back({tag + "circuits match oracle", circuits(m, limit) == bm.circuits});
    checks.push_back({tag + "matroid axioms", check_axioms(bm).ok()});

    if (!is_trivial(m)) {
        EdgeSet no_circuit = edges_in_no_circuit(bm);
        EdgeSet every_base = edges_in_every_base(bm);
        bool triple = no_circuit == every_base && no_circuit == coloops(m);
        if (k >= 1) {
            EdgeSet yg;
            for (const EdgeId& e : bm.ground) {
                if (coloop_edge_test(g, e)) yg.insert(e);
            }
            triple = triple && no_circuit == yg;
        }
        checks.push_back({tag + "coloop characterizations agree", triple});
    }

    if (k >= 1 && is_connected_matroid(m)) {
        bool rank_ok = true;
        int expected = g.vertex_count() - 1 + k;
        for (const EdgeSet& b : bm.bases) {
            if (static_cast<int>(b.size()) != expected) rank_ok = false;
        }
        checks.push_back({tag + "base size |V|-1+k", rank_ok});

        if (exhaustive) {
            bool cocircuits_ok = true;
            for (const EdgeSet& b : bm.bases) {
                for (const EdgeId& e : b) {
                    if (fundamental_cocircuit(m, b, e) != brute_dual_cocircuit(bm, b, e)) {
                        cocircuits_ok = false;
                    }
                }
            }
            checks.push_back({tag + "cocircuit formulas", cocircuits_ok});
            checks.push_back({tag + "bases match oracle", bases(m, limit) == bm.bases});
        }
    }
    return checks;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"k-circular matroids of multigraphs"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    int k = -1;
    int limit_flag = -1;
    std::string file, file2, base_csv, edge_arg, from_csv, circuit_csv;
    bool exhaustive = false, all_k = false;
    int max_edges = kOracleEnumerationLimit;

    auto add_common = [&](CLI::App* cmd, bool needs_k) {
        if (needs_k) cmd->add_option("-k", k, "matroid level")->required();
        cmd->add_option("--limit", limit_flag, "enumeration cap override");
        cmd->add_option("file", file, "graph file")->required();
    };

    CLI::App* cmd_info = app.add_subcommand("info", "matroid summary");
    add_common(cmd_info, true);
    CLI::App* cmd_circuits = app.add_subcommand("circuits", "all circuits");
    add_common(cmd_circuits, true);
    CLI::App* cmd_bases = app.add_subcommand("bases", "all bases");
    add_common(cmd_bases, true);
    CLI::App* cmd_coloops = app.add_subcommand("coloops", "coloop set");
    add_common(cmd_coloops, true);
    CLI::App* cmd_core = app.add_subcommand("core", "core of the graph");
    add_common(cmd_core, false);
    CLI::App* cmd_kernel = app.add_subcommand("kernel", "kernel of the graph");
    add_common(cmd_kernel, false);

    CLI::App* cmd_fundcircuit = app.add_subcommand("fundcircuit", "fundamental circuit");
    add_common(cmd_fundcircuit, true);
    cmd_fundcircuit->add_option("-b", base_csv, "base edge list (comma separated)")->required();
    cmd_fundcircuit->add_option("-e", edge_arg, "root edge")->required();

    CLI::App* cmd_cocircuit = app.add_subcommand("cocircuit", "fundamental cocircuit");
    add_common(cmd_cocircuit, true);
    cmd_cocircuit->add_option("-b", base_csv, "base edge list (comma separated)")->required();
    cmd_cocircuit->add_option("-e", edge_arg, "root edge")->required();

    CLI::App* cmd_ears = app.add_subcommand("ears", "ear assembly");
    add_common(cmd_ears, false);
    cmd_ears->add_option("--from", from_csv, "starting edge list")->required();

    CLI::App* cmd_grow = app.add_subcommand("grow", "extend a (k-1)-circuit");
    add_common(cmd_grow, true);
    cmd_grow->add_option("-c", circuit_csv, "(k-1)-circuit edge list")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "check against the oracle");
    cmd_verify->add_option("-k", k, "matroid level");
    cmd_verify->add_option("--limit", limit_flag, "enumeration cap override");
    cmd_verify->add_flag("--exhaustive", exhaustive, "also compare bases and cocircuits");
    cmd_verify->add_option("--max-edges", max_edges, "refuse larger graphs");
    cmd_verify->add_flag("--all-k", all_k, "run every k up to triviality");
    cmd_verify->add_option("file", file, "graph file")->required();

    CLI::App* cmd_equal = app.add_subcommand("equal", "compare two matroids");
    cmd_equal->add_option("-k", k, "matroid level")->required();
    cmd_equal->add_option("--limit", limit_flag, "enumeration cap override");
    cmd_equal->add_option("file", file, "first graph")->required();
    cmd_equal->add_option("file2", file2, "second graph")->required();

    std::vector<const char*> argv;
    argv.push_back("kcirc");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_info->parsed()) {
            MultiGraph g = load_graph(file);
            KCircularMatroid m(g, k);
            bool trivial = is_trivial(m);
            EdgeSet colo = trivial ? g.edge_set() : coloops(m);
            int rank = rank_of(m, g.edge_set());
            if (format == "text") {
                out << "delta " << delta(g, g.edge_set()) << "\n";
                out << "trivial " << (trivial ? "true" : "false") << "\n";
                if (k >= 1) {
                    out << "connected_matroid "
                        << (is_connected_matroid(m) ? "true" : "false") << "\n";
                }
                out << "rank " << rank << "\n";
                out << "coloops " << joined(colo) << "\n";
            } else {
                json j{{"delta", delta(g, g.edge_set())},
                       {"trivial", trivial},
                       {"rank", rank},
                       {"coloops", set_json(colo)}};
                if (k >= 1) j["connected_matroid"] = is_connected_matroid(m);
                out << j.dump() << "\n";
            }
            return 0;
        }
        if (cmd_circuits->parsed()) {
            MultiGraph g = load_graph(file);
            KCircularMatroid m(g, k);
            emit_sets(out, format, "circuits",
                      circuits(m, resolve_limit(limit_flag, kDefaultEnumerationLimit)));
            return 0;
        }
        if (cmd_bases->parsed()) {
            MultiGraph g = load_graph(file);
            KCircularMatroid m(g, k);
            emit_sets(out, format, "bases",
                      bases(m, resolve_limit(limit_flag, kDefaultEnumerationLimit)));
            return 0;
        }
        if (cmd_coloops->parsed()) {
            MultiGraph g = load_graph(file);
            KCircularMatroid m(g, k);
            emit_set(out, format, "coloops", coloops(m));
            return 0;
        }
        if (cmd_core->parsed()) {
            MultiGraph g = load_graph(file);
            emit_set(out, format, "core", core(g, g.edge_set()));
            return 0;
        }
        if (cmd_kernel->parsed()) {
            MultiGraph g = load_graph(file);
            emit_set(out, format, "kernel", kernel(g, g.edge_set()));
            return 0;
        }
        if (cmd_fundcircuit->parsed()) {
            MultiGraph g = load_graph(file);
            KCircularMatroid m(g, k);
            emit_set(out, format, "circuit",
                     fundamental_circuit(m, parse_edge_list(base_csv), edge_arg));
            return 0;
        }
        if (cmd_cocircuit->parsed()) {
            MultiGraph g = load_graph(file);
            KCircularMatroid m(g, k);
            EdgeSet b = parse_edge_list(base_csv);
            CocircuitKind kind = cocircuit_kind(m, b, edge_arg);
            EdgeSet cc = fundamental_cocircuit(m, b, edge_arg);
            if (format == "text") {
                out << to_string(kind) << " " << joined(cc) << "\n";
            } else {
                out << json{{"kind", to_string(kind)}, {"cocircuit", set_json(cc)}}.dump()
                    << "\n";
            }
            return 0;
        }
        if (cmd_ears->parsed()) {
            MultiGraph g = load_graph(file);
            EarAssembly assembly = ear_assembly(g, parse_edge_list(from_csv));
            bool valid = validate_assembly(g, assembly);
            if (format == "text") {
                out << "start " << joined(assembly.start) << "\n";
                for (const Ear& ear : assembly.ears) {
                    out << to_string(ear.kind) << " " << joined(ear.edges) << " @";
                    for (const VertexId& v : ear.attachment) out << " " << v;
                    out << "\n";
                }
                out << "valid " << (valid ? "true" : "false") << "\n";
            } else {
                json ears_json = json::array();
                for (const Ear& ear : assembly.ears) {
                    json att = json::array();
                    for (const VertexId& v : ear.attachment) att.push_back(v);
                    ears_json.push_back({{"kind", to_string(ear.kind)},
                                         {"edges", set_json(ear.edges)},
                                         {"attachment", att}});
                }
                out << json{{"start", set_json(assembly.start)},
                            {"ears", ears_json},
                            {"valid", valid}}
                           .dump()
                    << "\n";
            }
            return 0;
        }
        if (cmd_grow->parsed()) {
            MultiGraph g = load_graph(file);
            KCircularMatroid m(g, k);
            emit_set(out, format, "circuit", grow_circuit(m, parse_edge_list(circuit_csv)));
            return 0;
        }
        if (cmd_verify->parsed()) {
            MultiGraph g = load_graph(file);
            int limit = resolve_limit(limit_flag, kOracleEnumerationLimit);
            if (g.edge_count() > max_edges) {
                err << "graph exceeds --max-edges (" << g.edge_count() << " > "
                    << max_edges << ")\n";
                return 2;
            }
            std::vector<int> ks;
            if (all_k) {
                // every level with circuits, plus one trivial level beyond
                int top = 1;
                while (top < g.edge_count() + 1 && !is_trivial(KCircularMatroid(g, top))) {
                    ++top;
                }
                for (int kk = 0; kk <= top; ++kk) ks.push_back(kk);
            } else {
                if (k < 0) {
                    err << "verify needs -k or --all-k\n";
                    return 2;
                }
                ks.push_back(k);
            }
            std::vector<VerifyCheck> checks;
            for (int kk : ks) {
                for (VerifyCheck& c : run_verify(g, kk, exhaustive, limit)) {
                    checks.push_back(std::move(c));
                }
            }
            bool all_pass = true;
            for (const VerifyCheck& c : checks) all_pass = all_pass && c.pass;
            if (format == "text") {
                for (const VerifyCheck& c : checks) {
                    out << (c.pass ? "PASS" : "FAIL") << " " << c.name << "\n";
                }
                out << (all_pass ? "PASS" : "FAIL") << "\n";
            } else {
                json arr = json::array();
                for (const VerifyCheck& c : checks) {
                    arr.push_back({{"name", c.name}, {"pass", c.pass}});
                }
                out << json{{"checks", arr}, {"pass", all_pass}}.dump() << "\n";
            }
            return all_pass ? 0 : 1;
        }
        if (cmd_equal->parsed()) {
            MultiGraph g = load_graph(file);
            MultiGraph h = load_graph(file2);
            bool eq = matroids_equal(g, h, k, resolve_limit(limit_flag, kOracleEnumerationLimit));
            if (format == "text") {
                out << (eq ? "equal" : "different") << "\n";
            } else {
                out << json{{"equal", eq}}.dump() << "\n";
            }
            return eq ? 0 : 1;
        }
    } catch (const error& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no command\n";
    return 2;
}

}  // namespace kcirc
