#include "spanner4/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "spanner4/verify.hpp"

namespace spanner4 {

using nlohmann::json;

std::string serialize_instance(const InstanceFile& f) {
    json j;
    j["version"] = f.version;
    auto& pts = j["points"] = json::array();
    for (const auto& p : f.points) pts.push_back({p.x, p.y});
    return j.dump(2) + "\n";
}

InstanceFile parse_instance(const std::string& text) {
    const json j = json::parse(text);
    InstanceFile f;
    f.version = j.at("version").get<int>();
    for (const auto& p : j.at("points")) f.points.push_back({p.at(0).get<Coord>(), p.at(1).get<Coord>()});
    return f;
}

std::string serialize_graph(const GraphFile& f) {
    json j;
    j["version"] = f.version;
    j["n"] = f.n;
    j["stage"] = f.stage;
    auto& e = j["edges"] = json::array();
    for (auto [a, b] : f.edges) e.push_back({a, b});
    auto& s = j["shortcuts"] = json::array();
    for (auto [a, b] : f.shortcuts) s.push_back({a, b});
    auto& c = j["cutoffs"] = json::array();
    for (auto [a, b] : f.cutoffs) c.push_back({a, b});
    return j.dump(2) + "\n";
}

GraphFile parse_graph(const std::string& text) {
    const json j = json::parse(text);
    GraphFile f;
    f.version = j.at("version").get<int>();
    f.n = j.at("n").get<NodeId>();
    f.stage = j.at("stage").get<std::string>();
    const auto pairs = [&](const char* key) {
        std::vector<Edge> out;
        for (const auto& p : j.at(key)) out.push_back({p.at(0).get<NodeId>(), p.at(1).get<NodeId>()});
        return out;
    };
    f.edges = pairs("edges");
    f.shortcuts = pairs("shortcuts");
    for (const auto& p : j.at("cutoffs"))
        f.cutoffs.push_back({p.at(0).get<NodeId>(), p.at(1).get<NodeId>()});
    for (const auto* lst : {&f.edges, &f.shortcuts}) {
        for (auto [a, b] : *lst)
            if (a < 0 || b < 0 || a >= f.n || b >= f.n || a >= b)
                throw Error(Errc::InconsistentFiles, "edge list not canonical");
        if (!std::is_sorted(lst->begin(), lst->end()) ||
            std::adjacent_find(lst->begin(), lst->end()) != lst->end())
            throw Error(Errc::InconsistentFiles, "edge list not sorted or has duplicates");
    }
    for (auto [c, u] : f.cutoffs)
        if (c < 0 || u < 0 || c >= f.n || u >= f.n)
            throw Error(Errc::InconsistentFiles, "cutoff index out of range");
    return f;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::InconsistentFiles, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(Errc::InconsistentFiles, "cannot write " + path);
    out << content;
}

namespace {

// Bounded draw via modulo rejection; keeps output identical across standard
// libraries, unlike uniform_int_distribution.
Coord draw(std::mt19937_64& rng, Coord bound_inclusive) {
    const std::uint64_t span = static_cast<std::uint64_t>(bound_inclusive) + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return static_cast<Coord>(v % span);
}

} // namespace

InstanceFile gen_instance(NodeId n, std::uint64_t seed, Coord max_coord) {
    if (n < 1) throw Error(Errc::CoordinateSpaceExhausted, "need n >= 1");
    if (max_coord < 0 || max_coord > kCoordBound)
        throw Error(Errc::GeneralPositionViolation, "max_coord outside [0, 2^20]");
    if (static_cast<std::int64_t>(n) > max_coord + 1)
        throw Error(Errc::CoordinateSpaceExhausted,
                    "n exceeds distinct-coordinate capacity of [0, max_coord]");
    std::mt19937_64 rng(seed);
    std::set<Coord> xs, ys;
    InstanceFile f;
    while (static_cast<NodeId>(f.points.size()) < n) {
        const Coord x = draw(rng, max_coord);
        const Coord y = draw(rng, max_coord);
        if (xs.count(x) || ys.count(y)) continue;
        xs.insert(x);
        ys.insert(y);
        f.points.push_back({x, y});
    }
    return f;
}

InstanceFile perturb_repair(InstanceFile f, std::uint64_t seed, Coord max_coord) {
    std::mt19937_64 rng(seed);
    for (int round = 0; round < 10000; ++round) {
        const PointSet ps{f.points};
        const auto rep = ps.general_position();
        if (rep.ok()) return f;
        const auto nudge = [&](NodeId i) {
            auto& p = f.points[static_cast<size_t>(i)];
            p.x = std::clamp<Coord>(p.x + static_cast<Coord>(draw(rng, 4)) - 2, 0, max_coord);
            p.y = std::clamp<Coord>(p.y + static_cast<Coord>(draw(rng, 4)) - 2, 0, max_coord);
        };
        for (const auto& [i, j] : rep.duplicate_x) nudge(j);
        for (const auto& [i, j] : rep.duplicate_y) nudge(j);
    }
    throw Error(Errc::GeneralPositionViolation, "perturbation failed to reach general position");
}

GraphFile build_stage_file(const PointSet& ps, const std::string& stage) {
    GraphFile g;
    g.n = ps.size();
    g.stage = stage;
    if (stage == "delaunay") {
        g.edges = build_triangulation(ps).edges;
        return g;
    }
    if (stage == "y4") {
        const auto t = build_triangulation(ps);
        g.edges = build_y4(ps, t).edges;
        return g;
    }
    const Pipeline p = run_pipeline(ps);
    if (stage == "h8") {
        g.edges = p.h8.graph.edges;
    } else if (stage == "h6") {
        g.edges = p.h6.edges;
    } else if (stage == "h4") {
        g.edges = p.h4.edges;
        g.shortcuts = p.h4.shortcuts;
        g.cutoffs = p.h4.cutoffs;
    } else {
        throw Error(Errc::InconsistentFiles, "unknown stage " + stage);
    }
    return g;
}

std::string render_svg(const InstanceFile& inst, const GraphFile& g) {
    const NodeId n = static_cast<NodeId>(inst.points.size());
    if (g.n != n) throw Error(Errc::InconsistentFiles, "graph n does not match instance");
    for (auto [a, b] : g.edges)
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error(Errc::InconsistentFiles, "edge index out of range");

    Coord x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    if (n > 0) {
        x0 = x1 = inst.points[0].x;
        y0 = y1 = inst.points[0].y;
        for (const auto& p : inst.points) {
            x0 = std::min(x0, p.x);
            x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y);
            y1 = std::max(y1, p.y);
        }
    }
    const Coord margin = std::max<Coord>(10, (x1 - x0 + y1 - y0) / 40);
    const Coord wpx = (x1 - x0) + 2 * margin, hpx = (y1 - y0) + 2 * margin;
    // y axis up
    const auto X = [&](Point p) { return p.x - x0 + margin; };
    const auto Y = [&](Point p) { return (y1 - p.y) + margin; };

    // selected anchors drawn heavier; recomputed from the instance
    EdgeSet selected;
    if (n >= 2 && (g.stage == "h8" || g.stage == "h6" || g.stage == "h4" || g.stage == "y4")) {
        const PointSet ps{inst.points};
        const auto t = build_triangulation(ps);
        const auto y = build_y4(ps, t);
        const auto anchors = build_anchor_table(ps, y);
        for (auto [a, b] : anchors.table.selected_edges()) selected.insert(edge_key(a, b));
        selected.normalize();
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << wpx << " " << hpx
        << "\">\n";
    svg << "  <g class=\"edges\" stroke=\"#555555\" stroke-width=\"2\">\n";
    for (auto [a, b] : g.edges) {
        const bool anc = selected.contains_edge(a, b);
        svg << "    <line class=\"" << (anc ? "anchor" : "canonical") << "\" x1=\""
            << X(inst.points[static_cast<size_t>(a)]) << "\" y1=\"" << Y(inst.points[static_cast<size_t>(a)])
            << "\" x2=\"" << X(inst.points[static_cast<size_t>(b)]) << "\" y2=\""
            << Y(inst.points[static_cast<size_t>(b)]) << "\""
            << (anc ? " stroke=\"#b03030\" stroke-width=\"4\"" : "") << "/>\n";
    }
    svg << "  </g>\n";
    svg << "  <g class=\"shortcuts\" stroke=\"#000000\" stroke-width=\"5\">\n";
    for (auto [a, b] : g.shortcuts) {
        svg << "    <line class=\"shortcut\" x1=\"" << X(inst.points[static_cast<size_t>(a)])
            << "\" y1=\"" << Y(inst.points[static_cast<size_t>(a)]) << "\" x2=\""
            << X(inst.points[static_cast<size_t>(b)]) << "\" y2=\""
            << Y(inst.points[static_cast<size_t>(b)]) << "\"/>\n";
    }
    svg << "  </g>\n";
    svg << "  <g class=\"sites\" fill=\"#202020\">\n";
    std::vector<char> cut(static_cast<size_t>(n), 0);
    for (auto [c, u] : g.cutoffs)
        if (c >= 0 && c < n) cut[static_cast<size_t>(c)] = 1;
    for (NodeId i = 0; i < n; ++i) {
        const Point p = inst.points[static_cast<size_t>(i)];
        if (cut[static_cast<size_t>(i)])
            svg << "    <circle class=\"cutoff\" cx=\"" << X(p) << "\" cy=\"" << Y(p)
                << "\" r=\"7\" fill=\"none\" stroke=\"#b03030\" stroke-width=\"2\"/>\n";
        svg << "    <circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"4\"/>\n";
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

BenchSummary run_bench(int trials, NodeId n_min, NodeId n_max, std::uint64_t seed0,
                       Coord max_coord) {
    BenchSummary s;
    s.trials.resize(static_cast<size_t>(std::max(0, trials)));

#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) {
        BenchTrial& tr = s.trials[static_cast<size_t>(i)];
        tr.seed = seed0 + static_cast<std::uint64_t>(i);
        tr.n = n_min + static_cast<NodeId>(i % std::max(1, n_max - n_min + 1));
        try {
            const auto inst = gen_instance(tr.n, tr.seed, max_coord);
            const PointSet ps{inst.points};
            const Pipeline p = run_pipeline(ps);
            tr.max_degree_h4 = max_degree(ps.size(), p.h4.all_edges());
            tr.plane_h4 = !check_planarity(ps, p.h4.all_edges()).has_value();
            tr.charges_ok = true;
            for (NodeId u = 0; u < ps.size(); ++u)
                for (int c = 0; c < 4; ++c)
                    if (p.h8.ledger.at(u, Cone{c}) > 2) tr.charges_ok = false;
            tr.stretch_y4 = stretch_factor(ps, p.y.edges).max_ratio;
            tr.stretch_h8 = stretch_factor(ps, p.h8.graph.edges).max_ratio;
            tr.stretch_h6 = stretch_factor(ps, p.h6.edges).max_ratio;
            tr.stretch_h4 = stretch_factor(ps, p.h4.all_edges()).max_ratio;
            tr.h4_bound_margin = bounds::h4_stretch_bound() / tr.stretch_h4;
        } catch (const Error& e) {
            tr.failed = true;
            tr.error = e.what();
        }
    }

    double sum = 0;
    int ok = 0;
    for (const auto& tr : s.trials) {
        if (tr.failed) {
            s.all_plane = false;
            continue;
        }
        s.max_degree_h4 = std::max(s.max_degree_h4, tr.max_degree_h4);
        s.max_stretch_h4 = std::max(s.max_stretch_h4, tr.stretch_h4);
        sum += tr.stretch_h4;
        ++ok;
        s.all_plane = s.all_plane && tr.plane_h4;
        s.all_charges_ok = s.all_charges_ok && tr.charges_ok;
    }
    s.mean_stretch_h4 = ok ? sum / ok : 0;
    s.stretch_warning = s.max_stretch_h4 > 10.0;
    return s;
}

std::string bench_to_json(const BenchSummary& s) {
    json j;
    j["aggregate"]["max_degree_h4"] = s.max_degree_h4;
    j["aggregate"]["max_stretch_h4"] = s.max_stretch_h4;
    j["aggregate"]["mean_stretch_h4"] = s.mean_stretch_h4;
    j["aggregate"]["all_plane"] = s.all_plane;
    j["aggregate"]["all_charges_ok"] = s.all_charges_ok;
    j["aggregate"]["stretch_warning"] = s.stretch_warning;
    auto& arr = j["trials"] = json::array();
    for (const auto& t : s.trials) {
        json row;
        row["n"] = t.n;
        row["seed"] = t.seed;
        if (t.failed) {
            row["error"] = t.error;
        } else {
            row["max_degree_h4"] = t.max_degree_h4;
            row["plane_h4"] = t.plane_h4;
            row["charges_ok"] = t.charges_ok;
            row["stretch"] = {{"y4", t.stretch_y4},
                              {"h8", t.stretch_h8},
                              {"h6", t.stretch_h6},
                              {"h4", t.stretch_h4}};
            row["h4_bound_margin"] = t.h4_bound_margin;
        }
        arr.push_back(std::move(row));
    }
    return j.dump(2) + "\n";
}

std::string bench_to_text(const BenchSummary& s) {
    std::ostringstream os;
    os << "trials: " << s.trials.size() << "\n";
    os << "max H4 degree: " << s.max_degree_h4 << "\n";
    os << "all H4 plane: " << (s.all_plane ? "yes" : "NO") << "\n";
    os << "all H8 cone charges <= 2: " << (s.all_charges_ok ? "yes" : "NO") << "\n";
    os << "max H4 stretch: " << s.max_stretch_h4 << "\n";
    os << "mean H4 stretch: " << s.mean_stretch_h4 << "\n";
    if (s.stretch_warning) os << "warning: measured H4 stretch above 10\n";
    return os.str();
}

} // namespace spanner4
