#include "spanner4/cli.hpp"

#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "spanner4/io.hpp"
#include "spanner4/verify.hpp"

namespace spanner4 {

namespace {

PointSet load_points(const std::string& path, std::optional<std::uint64_t> perturb_seed,
                     Coord max_coord) {
    InstanceFile inst = parse_instance(read_file(path));
    PointSet ps{inst.points};
    const auto rep = ps.general_position();
    if (!rep.ok()) {
        if (perturb_seed) {
            std::cerr << "note: input violates general position; applying seeded jitter repair\n";
            inst = perturb_repair(std::move(inst), *perturb_seed, max_coord);
            return PointSet{inst.points};
        }
        std::cerr << "warning: input violates general position (" << rep.duplicate_x.size()
                  << " duplicate x, " << rep.duplicate_y.size()
                  << " duplicate y); proceeding, stages fail only if a degenerate pair is "
                     "consulted (use --perturb-seed to repair)\n";
    }
    return ps;
}

int cmd_verify(const std::string& in, const std::string& format,
               std::optional<std::uint64_t> perturb_seed, Coord max_coord) {
    const PointSet ps = load_points(in, perturb_seed, max_coord);
    const Certificate cert = full_certificate(ps);
    if (format == "json") {
        nlohmann::json j;
        j["ok"] = cert.ok;
        j["max_degree_h4"] = cert.max_degree_h4;
        j["degree_histogram_h4"] = cert.degree_histogram_h4;
        j["max_cone_charge_h8"] = cert.max_cone_charge_h8;
        j["charge2_cones_h8"] = cert.charge2_cones_h8;
        j["stretch_h4"] = cert.stretch_h4;
        auto& arr = j["checks"] = nlohmann::json::array();
        for (const auto& c : cert.checks)
            arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["warnings"] = cert.warnings;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : cert.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.name
                      << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
        for (const auto& w : cert.warnings) std::cout << "warning: " << w << "\n";
        std::cout << "h4 max degree: " << cert.max_degree_h4
                  << "  h4 stretch: " << cert.stretch_h4 << "\n";
    }
    if (const auto* c = cert.find("pipeline"); c && !c->pass) return 2;
    return cert.ok ? 0 : 1;
}

int cmd_stretch(const std::string& in, const std::string& stage, const std::string& format,
                std::optional<std::uint64_t> perturb_seed, Coord max_coord) {
    const PointSet ps = load_points(in, perturb_seed, max_coord);
    const Pipeline p = run_pipeline(ps);
    const std::vector<Edge>* edges = nullptr;
    std::vector<Edge> all;
    if (stage == "delaunay") edges = &p.t.edges;
    else if (stage == "y4") edges = &p.y.edges;
    else if (stage == "h8") edges = &p.h8.graph.edges;
    else if (stage == "h6") edges = &p.h6.edges;
    else if (stage == "h4") {
        all = p.h4.all_edges();
        edges = &all;
    } else {
        throw Error(Errc::InconsistentFiles, "unknown stage " + stage);
    }
    const auto rep = stretch_factor(ps, *edges, stage);
    if (format == "json") {
        nlohmann::json j;
        j["stage"] = stage;
        j["max_stretch"] = rep.max_ratio;
        j["argmax"] = {rep.argmax.first, rep.argmax.second};
        j["bound_h4"] = bounds::h4_stretch_bound();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << stage << " stretch: " << rep.max_ratio << " (pair " << rep.argmax.first
                  << "," << rep.argmax.second << ")\n";
    }
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"bounded-degree plane spanner construction and certification"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    NodeId gen_n = 10;
    std::uint64_t gen_seed = 0;
    Coord max_coord = kCoordBound;
    std::string out_path, in_path, graph_path, stage = "h4", format = "text";
    gen->add_option("--n", gen_n, "number of points")->required();
    gen->add_option("--seed", gen_seed, "rng seed");
    gen->add_option("--max-coord", max_coord, "coordinate bound (<= 2^20)");
    gen->add_option("--out", out_path, "output instance file")->required();

    // build
    auto* build = app.add_subcommand("build", "build a stage graph file");
    std::optional<std::uint64_t> perturb_seed;
    build->add_option("--in", in_path, "instance file")->required();
    build->add_option("--stage", stage, "delaunay|y4|h8|h6|h4");
    build->add_option("--out", out_path, "output graph file")->required();
    build->add_option("--perturb-seed", perturb_seed, "jitter repair seed");
    build->add_option("--max-coord", max_coord, "coordinate bound for repair");

    // verify
    auto* verify = app.add_subcommand("verify", "run the full certificate");
    verify->add_option("--in", in_path, "instance file")->required();
    verify->add_option("--format", format, "json|text");
    verify->add_option("--perturb-seed", perturb_seed, "jitter repair seed");
    verify->add_option("--max-coord", max_coord, "coordinate bound for repair");

    // stretch
    auto* stretch = app.add_subcommand("stretch", "measure stretch of a stage");
    stretch->add_option("--in", in_path, "instance file")->required();
    stretch->add_option("--stage", stage, "delaunay|y4|h8|h6|h4");
    stretch->add_option("--format", format, "json|text");
    stretch->add_option("--perturb-seed", perturb_seed, "jitter repair seed");
    stretch->add_option("--max-coord", max_coord, "coordinate bound for repair");

    // svg
    auto* svg = app.add_subcommand("svg", "render an instance + graph to SVG");
    svg->add_option("--in", in_path, "instance file")->required();
    svg->add_option("--graph", graph_path, "graph file")->required();
    svg->add_option("--out", out_path, "output svg file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "randomized certification sweep");
    int trials = 100;
    NodeId n_min = 5, n_max = 200;
    bench->add_option("--trials", trials, "number of trials");
    bench->add_option("--n-min", n_min, "smallest instance size");
    bench->add_option("--n", n_max, "largest instance size")->option_text("N");
    bench->add_option("--seed", gen_seed, "first trial seed");
    bench->add_option("--max-coord", max_coord, "coordinate bound");
    bench->add_option("--format", format, "json|text");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            write_file(out_path, serialize_instance(gen_instance(gen_n, gen_seed, max_coord)));
            return 0;
        }
        if (build->parsed()) {
            const PointSet ps = load_points(in_path, perturb_seed, max_coord);
            write_file(out_path, serialize_graph(build_stage_file(ps, stage)));
            return 0;
        }
        if (verify->parsed()) return cmd_verify(in_path, format, perturb_seed, max_coord);
        if (stretch->parsed()) return cmd_stretch(in_path, stage, format, perturb_seed, max_coord);
        if (svg->parsed()) {
            const InstanceFile inst = parse_instance(read_file(in_path));
            const GraphFile g = parse_graph(read_file(graph_path));
            write_file(out_path, render_svg(inst, g));
            return 0;
        }
        if (bench->parsed()) {
            const auto s = run_bench(trials, n_min, n_max, gen_seed, max_coord);
            std::cout << (format == "json" ? bench_to_json(s) : bench_to_text(s));
            bool ok = s.all_plane && s.all_charges_ok && s.max_degree_h4 <= 4;
            for (const auto& t : s.trials) ok = ok && !t.failed;
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case Errc::GeneralPositionViolation:
            case Errc::DegenerateDirection:
            case Errc::DegenerateSquareWitness:
            case Errc::CoordinateSpaceExhausted:
            case Errc::InconsistentFiles:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

} // namespace spanner4
