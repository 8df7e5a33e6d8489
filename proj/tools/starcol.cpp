// Command-line surface for the star-colouring toolkit. Subcommands emit the
// canonical edge-list / colouring / orientation text formats on stdout and
// versioned JSON reports; machine-readable errors go to stderr as JSON.
// Exit status: 0 = computed (whatever the verdict), 1 = input error,
// 2 = budget exhausted.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "starcol/constructions.hpp"
#include "starcol/graph.hpp"
#include "starcol/io.hpp"
#include "starcol/orientation.hpp"
#include "starcol/patterns.hpp"
#include "starcol/reductions.hpp"
#include "starcol/solver.hpp"
#include "starcol/structure.hpp"

using namespace starcol;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;

Graph load_graph(const std::string& path) {
    if (path == "-" || path.empty()) return read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open graph file: " + path);
    return read_edge_list(in);
}

Colouring load_colouring(const std::string& path, int n) {
    if (path == "-" || path.empty()) return read_colouring(std::cin, n);
    std::ifstream in(path);
    if (!in) throw input_error("cannot open colouring file: " + path);
    return read_colouring(in, n);
}

std::string load_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write file: " + path);
    out << text;
}

std::map<int, int> parse_pins(const std::vector<std::string>& specs) {
    std::map<int, int> pins;
    for (const std::string& s : specs) {
        size_t eq = s.find('=');
        if (eq == std::string::npos) throw input_error("bad pin (want v=c): " + s);
        try {
            int v = std::stoi(s.substr(0, eq));
            int c = std::stoi(s.substr(eq + 1));
            pins[v] = c;
        } catch (const std::exception&) {
            throw input_error("bad pin (want v=c): " + s);
        }
    }
    return pins;
}

const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Sat: return "sat";
        case SolveStatus::Unsat: return "unsat";
        default: return "indeterminate";
    }
}

json colouring_json(const std::optional<Colouring>& c) {
    if (!c) return nullptr;
    return c->at;
}

struct Options {
    std::string in, graph_file, colouring_file, partition_file, orientation_file, target_file;
    std::string labels_path, sidecar_path, certificate_path;
    std::vector<std::string> pins;
    long long budget = -1;
    int jobs = 1;
    unsigned seed = 0;
    int k = 3, p = 2, t = 1, s = 0, d = 3, qmax = 0, upper = 0;
    bool up_to_swaps = false, use_eq = false;
    int g2p_target = 0;
};

SolveConfig make_cfg(const Options& o) {
    SolveConfig cfg;
    cfg.pinned = parse_pins(o.pins);
    cfg.node_budget = o.budget;
    cfg.jobs = o.jobs;
    cfg.seed = o.seed;
    cfg.deterministic = o.jobs <= 1;
    return cfg;
}

int run_gen(const std::string& kind, const Options& o) {
    Graph g;
    json labels = nullptr;
    if (kind == "g2p") {
        g = build_g2p(o.p);
        json pairs = json::array();
        for (auto [i, j] : g2p_pair_labels(o.p)) pairs.push_back({i, j});
        labels = {{"format", 1}, {"kind", "g2p"}, {"p", o.p}, {"pairs", pairs}};
    } else if (kind == "h2p") {
        g = build_h2p(o.p);
        json pairs = json::array();
        for (auto [i, j] : g2p_pair_labels(o.p)) pairs.push_back({i, j});
        labels = {{"format", 1}, {"kind", "h2p"}, {"p", o.p}, {"pairs", pairs}};
    } else if (kind == "ring") {
        RingGraph r = build_ring(o.p, o.t);
        g = r.graph;
        json pairs = json::array();
        for (int v = 0; v < g.n(); ++v)
            pairs.push_back({{"pair", {r.pair_label[v].first, r.pair_label[v].second}},
                             {"copy", r.copy_label[v]}});
        labels = {{"format", 1}, {"kind", "ring"}, {"p", o.p}, {"t", o.t}, {"vertices", pairs}};
    } else if (kind == "complete") {
        g = gen_standard(StandardKind::Complete, o.k);
    } else if (kind == "cycle") {
        g = gen_standard(StandardKind::Cycle, o.k);
    } else if (kind == "hypercube") {
        g = gen_standard(StandardKind::Hypercube, o.d);
    } else {  // m8
        g = gen_standard(StandardKind::MoebiusLadder8, 8);
    }
    write_edge_list(std::cout, g);
    if (!o.labels_path.empty()) {
        if (labels.is_null()) throw input_error("this generator has no label sidecar");
        save_text(o.labels_path, labels.dump());
    }
    return kExitOk;
}

int run_chis(const Options& o) {
    Graph g = load_graph(o.in);
    SolveConfig cfg = make_cfg(o);
    cfg.upper_bound_k = o.upper;
    ChiResult r = star_chromatic_number(g, cfg);
    json out = {{"format", 1},
                {"nodes_explored", r.nodes},
                {"status", r.exact ? "exact" : "interval"},
                {"colouring", colouring_json(r.colouring)}};
    if (r.exact)
        out["chi_s"] = r.lo;
    else
        out["interval"] = {r.lo, r.hi};
    std::cout << out.dump() << "\n";
    return r.exact ? kExitOk : kExitBudget;
}

int run_decide(const Options& o) {
    Graph g = load_graph(o.in);
    SolveConfig cfg = make_cfg(o);
    DecideResult r = decide_k_star(g, o.k, cfg);
    json out = {{"format", 1},
                {"verdict", r.status == SolveStatus::Sat     ? "yes"
                            : r.status == SolveStatus::Unsat ? "no"
                                                             : "unknown"},
                {"k", o.k},
                {"colouring", colouring_json(r.colouring)},
                {"witness", nullptr},
                {"nodes_explored", r.nodes},
                {"status", status_name(r.status)},
                {"reason", r.reason}};
    std::cout << out.dump() << "\n";
    return r.status == SolveStatus::Indeterminate ? kExitBudget : kExitOk;
}

int run_verify_star(const Options& o) {
    Graph g = load_graph(o.graph_file);
    Colouring c = load_colouring(o.colouring_file, g.n());
    StarVerdict v = verify_star(g, c);
    json witness = nullptr;
    if (v.monochromatic_edge)
        witness = {{"type", "monochromatic_edge"},
                   {"vertices", {v.monochromatic_edge->first, v.monochromatic_edge->second}}};
    if (v.bicoloured_p4)
        witness = {{"type", "bicoloured_p4"},
                   {"vertices",
                    std::vector<int>(v.bicoloured_p4->begin(), v.bicoloured_p4->end())}};
    json out = {{"format", 1}, {"verdict", v.ok ? "accept" : "reject"}, {"witness", witness}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

int run_structure(const std::string& sub, const Options& o) {
    if (sub == "dq") {
        DegreeConstraintMatrix m = o.use_eq ? build_eq(o.p) : build_dq(o.p);
        std::cout << matrix_to_json(m) << "\n";
        return kExitOk;
    }
    if (sub == "extract") {
        Graph g = load_graph(o.graph_file);
        Colouring c = load_colouring(o.colouring_file, g.n());
        auto verdict = verify_star(g, c);
        if (!verdict.ok) throw input_error("colouring is not a star colouring");
        StarPartition sp = extract_partition(g, c);
        std::cout << partition_to_json(sp) << "\n";
        return kExitOk;
    }
    if (sub == "verify") {
        Graph g = load_graph(o.graph_file);
        StarPartition sp = partition_from_json(load_text(o.partition_file));
        PartitionReport rep = verify_partition(g, sp);
        Verdict dq = verify_dq_partition(g, sp, o.use_eq ? build_eq(sp.p) : build_dq(sp.p));
        json out = {{"format", 1},
                    {"verdict", rep.ok ? "accept" : "reject"},
                    {"detail", rep.detail},
                    {"equal_cells", rep.equal_cells},
                    {"matrix", o.use_eq ? "eq" : "dq"},
                    {"matrix_verdict", dq.ok ? "accept" : "reject"},
                    {"matrix_detail", dq.detail}};
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    if (sub == "cover") {
        Graph g = load_graph(o.graph_file);
        Graph h = o.g2p_target > 0 ? build_g2p(o.g2p_target) : load_graph(o.target_file);
        auto label = find_cover(g, h, std::max(g.n(), 60));
        json out = {{"format", 1},
                    {"verdict", label ? "found" : "absent"},
                    {"labelling", label ? json(*label) : json(nullptr)}};
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    if (sub == "it") {
        StarPartition sp = partition_from_json(load_text(o.partition_file));
        auto set = independent_set_it(sp, o.t);
        json out = {{"format", 1}, {"t", o.t}, {"vertices", set}};
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    // recolour
    Graph g = load_graph(o.graph_file);
    StarPartition sp = partition_from_json(load_text(o.partition_file));
    Colouring c = colour_from_partition(g, sp);
    write_colouring(std::cout, c);
    return kExitOk;
}

int run_orient(const std::string& sub, const Options& o) {
    if (sub == "euler") {
        Graph g = load_graph(o.in);
        auto eo = eulerian_orientation(g);
        if (!eo) {
            json out = {{"format", 1}, {"verdict", "absent"}, {"reason", "odd-degree vertex"}};
            std::cout << out.dump() << "\n";
            return kExitOk;
        }
        write_orientation(std::cout, g, *eo);
        return kExitOk;
    }
    if (sub == "check") {
        Graph g = load_graph(o.graph_file);
        std::ifstream of(o.orientation_file);
        if (!of) throw input_error("cannot open orientation file");
        Orientation ori = read_orientation(of, g);
        Colouring c = load_colouring(o.colouring_file, g.n());
        ColourfulVerdict v = check_colourful(g, ori, c);
        json out = {{"format", 1},
                    {"verdict", v.ok ? "accept" : "reject"},
                    {"vertex", v.ok ? json(nullptr) : json(v.vertex)},
                    {"condition", v.ok ? json(nullptr) : json(v.condition)},
                    {"detail", v.detail}};
        std::cout << out.dump() << "\n";
        return kExitOk;
    }
    if (sub == "from-colouring") {
        Graph g = load_graph(o.graph_file);
        Colouring c = load_colouring(o.colouring_file, g.n());
        CeoCertificate cert = colouring_to_ceo(g, c);
        write_orientation(std::cout, g, cert.orientation);
        if (!o.certificate_path.empty())
            save_text(o.certificate_path, certificate_to_json(g, cert));
        return kExitOk;
    }
    // exists
    Graph g = load_graph(o.in);
    int qmax = o.qmax > 0 ? o.qmax : std::max(g.n(), 1);
    CeoSearchResult r = ceo_exists(g, qmax, o.budget, o.jobs);
    json out = {{"format", 1},
                {"verdict", r.status == SolveStatus::Sat     ? "yes"
                            : r.status == SolveStatus::Unsat ? "no"
                                                             : "unknown"},
                {"orientations_tried", r.orientations_tried},
                {"reason", r.reason},
                {"certificate", nullptr}};
    if (r.certificate) out["certificate"] = json::parse(certificate_to_json(g, *r.certificate));
    std::cout << out.dump() << "\n";
    return r.status == SolveStatus::Indeterminate ? kExitBudget : kExitOk;
}

int run_reduce(const std::string& kind, const Options& o) {
    Graph g = load_graph(o.in);
    ReductionOutput red;
    if (kind == "c1")
        red = construction1(g, o.s);
    else if (kind == "c2")
        red = construction2(g, o.s);
    else
        red = construction3(g, o.k);
    write_edge_list(std::cout, red.graph);
    if (!o.sidecar_path.empty()) save_text(o.sidecar_path, reduction_sidecar_json(red));
    return kExitOk;
}

int run_count(const Options& o) {
    Graph g = load_graph(o.in);
    SolveConfig cfg = make_cfg(o);
    CountResult r = count_k_star(g, o.k, o.up_to_swaps, cfg);
    json out = {{"format", 1},
                {"k", o.k},
                {"up_to_swaps", o.up_to_swaps},
                {"count", r.count},
                {"nodes_explored", r.nodes},
                {"status", r.complete ? "complete" : "budget"}};
    std::cout << out.dump() << "\n";
    return r.complete ? kExitOk : kExitBudget;
}

int run_detect(const Options& o) {
    Graph g = load_graph(o.in);
    auto hit = obstruction_reject(g);
    json out = {{"format", 1},
                {"pattern", hit ? json(pattern_name(hit->pattern)) : json(nullptr)},
                {"embedding", hit ? json(hit->embedding) : json(nullptr)}};
    std::cout << out.dump() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact star-colouring toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_solver_flags = [&](CLI::App* cmd) {
        cmd->add_option("--budget", o.budget, "node budget (-1 = unlimited)");
        cmd->add_option("--jobs", o.jobs, "parallel workers");
        cmd->add_option("--seed", o.seed, "tie-breaking seed");
    };

    CLI::App* gen = app.add_subcommand("gen", "emit a generated graph as an edge list");
    gen->require_subcommand(1);
    for (const char* kind : {"g2p", "h2p", "ring", "complete", "cycle", "hypercube", "m8"}) {
        CLI::App* sub = gen->add_subcommand(kind);
        std::string k(kind);
        if (k == "g2p" || k == "h2p" || k == "ring")
            sub->add_option("--p", o.p, "half-degree parameter")->required();
        if (k == "ring") sub->add_option("--t", o.t, "copies")->required();
        if (k == "complete" || k == "cycle") sub->add_option("--k", o.k, "vertices")->required();
        if (k == "hypercube") sub->add_option("--d", o.d, "dimension")->required();
        sub->add_option("--labels", o.labels_path, "label sidecar path");
    }

    CLI::App* solve = app.add_subcommand("solve", "exact star-colouring solver");
    solve->require_subcommand(1);
    CLI::App* chis = solve->add_subcommand("chis", "star chromatic number");
    chis->add_option("--in", o.in, "input edge list (default stdin)");
    chis->add_option("--upper", o.upper, "cap the upward search at this k");
    add_solver_flags(chis);
    CLI::App* decide = solve->add_subcommand("decide", "k-star colourability");
    decide->add_option("--in", o.in, "input edge list (default stdin)");
    decide->add_option("--k", o.k, "number of colours")->required();
    decide->add_option("--pin", o.pins, "pinned colour v=c (repeatable)");
    add_solver_flags(decide);

    CLI::App* verify = app.add_subcommand("verify", "verification");
    verify->require_subcommand(1);
    CLI::App* vstar = verify->add_subcommand("star", "verify a star colouring");
    vstar->add_option("--graph", o.graph_file, "edge list")->required();
    vstar->add_option("--colouring", o.colouring_file, "colouring file")->required();

    CLI::App* structure = app.add_subcommand("structure", "partition certificates");
    structure->require_subcommand(1);
    CLI::App* sx = structure->add_subcommand("extract", "extract the cell partition");
    sx->add_option("--graph", o.graph_file)->required();
    sx->add_option("--colouring", o.colouring_file)->required();
    CLI::App* sv = structure->add_subcommand("verify", "verify a cell partition");
    sv->add_option("--graph", o.graph_file)->required();
    sv->add_option("--partition", o.partition_file)->required();
    sv->add_flag("--eq", o.use_eq, "check against E_q instead of D_q");
    CLI::App* sd = structure->add_subcommand("dq", "emit the constraint matrix");
    sd->add_option("--p", o.p)->required();
    sd->add_flag("--eq", o.use_eq);
    CLI::App* sc = structure->add_subcommand("cover", "locally bijective homomorphism");
    sc->add_option("--graph", o.graph_file)->required();
    sc->add_option("--target", o.target_file, "target edge list");
    sc->add_option("--g2p", o.g2p_target, "target G_2p for this p");
    CLI::App* si = structure->add_subcommand("it", "independent set I_t");
    si->add_option("--partition", o.partition_file)->required();
    si->add_option("--t", o.t)->required();
    CLI::App* sr = structure->add_subcommand("recolour", "proper colouring from partition");
    sr->add_option("--graph", o.graph_file)->required();
    sr->add_option("--partition", o.partition_file)->required();

    CLI::App* orient = app.add_subcommand("orient", "Eulerian orientations");
    orient->require_subcommand(1);
    CLI::App* oe = orient->add_subcommand("euler", "Eulerian orientation");
    oe->add_option("--in", o.in);
    CLI::App* oc = orient->add_subcommand("check", "check the colourful conditions");
    oc->add_option("--graph", o.graph_file)->required();
    oc->add_option("--orientation", o.orientation_file)->required();
    oc->add_option("--colouring", o.colouring_file)->required();
    CLI::App* ofc = orient->add_subcommand("from-colouring", "in-orientation of a star colouring");
    ofc->add_option("--graph", o.graph_file)->required();
    ofc->add_option("--colouring", o.colouring_file)->required();
    ofc->add_option("--certificate", o.certificate_path, "certificate JSON path");
    CLI::App* ox = orient->add_subcommand("exists", "exhaustive colourful-orientation search");
    ox->add_option("--in", o.in);
    ox->add_option("--qmax", o.qmax, "maximum colour count");
    add_solver_flags(ox);

    CLI::App* reduce = app.add_subcommand("reduce", "hardness-reduction generators");
    reduce->require_subcommand(1);
    for (const char* kind : {"c1", "c2", "c3"}) {
        CLI::App* sub = reduce->add_subcommand(kind);
        std::string k(kind);
        sub->add_option("--in", o.in);
        if (k != "c3") sub->add_option("--s", o.s, "girth parameter");
        if (k == "c3") sub->add_option("--k", o.k, "colour parameter")->required();
        sub->add_option("--sidecar", o.sidecar_path, "terminal-map sidecar path");
    }

    CLI::App* count = app.add_subcommand("count", "count k-star colourings");
    count->add_option("--in", o.in);
    count->add_option("--k", o.k)->required();
    count->add_flag("--up-to-swaps", o.up_to_swaps);
    count->add_option("--pin", o.pins, "pinned colour v=c (repeatable)");
    add_solver_flags(count);

    CLI::App* detect = app.add_subcommand("detect", "pattern detection");
    detect->require_subcommand(1);
    CLI::App* dob = detect->add_subcommand("obstructions", "colourful-orientation obstructions");
    dob->add_option("--in", o.in);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        nlohmann::json err = {{"format", 1}, {"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return kExitInput;
    }

    try {
        for (const char* kind : {"g2p", "h2p", "ring", "complete", "cycle", "hypercube", "m8"})
            if (gen->got_subcommand(kind)) return run_gen(kind, o);
        if (solve->got_subcommand(chis)) return run_chis(o);
        if (solve->got_subcommand(decide)) return run_decide(o);
        if (verify->got_subcommand(vstar)) return run_verify_star(o);
        for (const char* sub : {"extract", "verify", "dq", "cover", "it", "recolour"})
            if (structure->got_subcommand(sub)) return run_structure(sub, o);
        for (const char* sub : {"euler", "check", "from-colouring", "exists"})
            if (orient->got_subcommand(sub)) return run_orient(sub, o);
        for (const char* kind : {"c1", "c2", "c3"})
            if (reduce->got_subcommand(kind)) return run_reduce(kind, o);
        if (app.got_subcommand(count)) return run_count(o);
        if (detect->got_subcommand(dob)) return run_detect(o);
        throw input_error("no subcommand given");
    } catch (const input_error& e) {
        nlohmann::json err = {{"format", 1}, {"error", e.what()}};
        std::cerr << err.dump() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        nlohmann::json err = {{"format", 1}, {"error", std::string("internal error: ") + e.what()}};
        std::cerr << err.dump() << "\n";
        return kExitInput;
    }
}
