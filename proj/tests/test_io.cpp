#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "fixture.hpp"
#include "test_support.hpp"

#include "spanner4/cli.hpp"
#include "spanner4/io.hpp"

using namespace spanner4;

#ifndef SPANNER4_SOURCE_DIR
#define SPANNER4_SOURCE_DIR "."
#endif

namespace {

std::string temp_dir() {
    const auto dir = std::filesystem::temp_directory_path() / "spanner4-test";
    std::filesystem::create_directories(dir);
    return dir.string();
}

} // namespace

TEST_CASE("instance round trip is byte identical") {
    const auto inst = gen_instance(17, 42, 1 << 12);
    const std::string once = serialize_instance(inst);
    const std::string twice = serialize_instance(parse_instance(once));
    CHECK(once == twice);
}

TEST_CASE("bundled 29-point instance matches the fixture header and is canonical") {
    const std::string path = std::string(SPANNER4_SOURCE_DIR) + "/data/points29.json";
    const std::string text = read_file(path);
    const auto inst = parse_instance(text);
    CHECK(inst.points == fixture::kPoints);
    CHECK(serialize_instance(inst) == text);
}

TEST_CASE("graph files reject non-canonical edge lists") {
    GraphFile g;
    g.n = 3;
    g.stage = "h4";
    g.edges = {{1, 0}};
    CHECK_THROWS_AS((void)parse_graph(serialize_graph(g)), Error);
}

TEST_CASE("generation is deterministic with distinct coordinates") {
    const auto a = gen_instance(50, 7, kCoordBound);
    const auto b = gen_instance(50, 7, kCoordBound);
    CHECK(serialize_instance(a) == serialize_instance(b));
    const PointSet ps{a.points};
    CHECK(ps.general_position().ok());

    const auto single = gen_instance(1, 7, 100);
    CHECK(single.points.size() == 1);

    CHECK_THROWS_AS((void)gen_instance(5, 0, 3), Error);
}

TEST_CASE("perturbation repair reaches general position") {
    InstanceFile f;
    f.points = {{0, 0}, {0, 7}, {4, 3}, {9, 3}};   // duplicate x and duplicate y
    const auto fixed = perturb_repair(f, 99, 100);
    CHECK(PointSet{fixed.points}.general_position().ok());
}

TEST_CASE("stage graph files") {
    const auto ps = fixture::point_set();
    const auto y = build_stage_file(ps, "y4");
    const auto t = build_stage_file(ps, "delaunay");
    CHECK(t.edges.size() == y.edges.size() + 3);
    const auto h4 = build_stage_file(ps, "h4");
    CHECK(h4.shortcuts == std::vector<Edge>{{1, 8}});
    CHECK(h4.cutoffs == std::vector<std::pair<NodeId, NodeId>>{{14, 13}});
    PointSet two{{{0, 0}, {9, 4}}};
    for (const char* stage : {"delaunay", "y4", "h8", "h6", "h4"})
        CHECK(build_stage_file(two, stage).edges.size() == 1);
}

TEST_CASE("svg rendering") {
    InstanceFile inst;
    inst.points = fixture::kPoints;
    const auto g = build_stage_file(fixture::point_set(), "h4");
    const std::string svg = render_svg(inst, g);
    size_t shortcut_lines = 0, pos = 0;
    while ((pos = svg.find("class=\"shortcut\"", pos)) != std::string::npos) {
        ++shortcut_lines;
        pos += 10;
    }
    CHECK(shortcut_lines == 1);
    CHECK(render_svg(inst, g) == svg);   // deterministic bytes

    InstanceFile single;
    single.points = {{3, 4}};
    GraphFile empty;
    empty.n = 1;
    empty.stage = "h4";
    const std::string s1 = render_svg(single, empty);
    CHECK(s1.find("<circle") != std::string::npos);

    GraphFile bad;
    bad.n = 2;
    CHECK_THROWS_AS((void)render_svg(single, bad), Error);
}

TEST_CASE("bench summaries") {
    const auto empty = run_bench(0, 5, 10, 0, 1 << 10);
    CHECK(empty.trials.empty());
    const auto s = run_bench(6, 5, 12, 0, 1 << 10);
    CHECK(s.trials.size() == 6);
    CHECK(s.max_degree_h4 <= 4);
    CHECK(s.all_plane);
    CHECK(s.all_charges_ok);
    const auto j = nlohmann::json::parse(bench_to_json(s));
    CHECK(j.at("aggregate").at("all_plane").get<bool>());
    CHECK(j.at("trials").size() == 6);
}

TEST_CASE("cli end to end") {
    const std::string dir = temp_dir();
    const std::string inst = dir + "/inst.json";
    const std::string graph = dir + "/graph.json";
    const std::string svg = dir + "/out.svg";

    CHECK(run_cli({"gen", "--n", "40", "--seed", "3", "--max-coord", "4096", "--out", inst}) == 0);
    CHECK(run_cli({"build", "--in", inst, "--stage", "h4", "--out", graph}) == 0);
    const auto g = parse_graph(read_file(graph));
    CHECK(g.stage == "h4");
    CHECK(g.n == 40);
    CHECK(run_cli({"verify", "--in", inst, "--format", "json"}) == 0);
    CHECK(run_cli({"stretch", "--in", inst, "--stage", "h4"}) == 0);
    CHECK(run_cli({"svg", "--in", inst, "--graph", graph, "--out", svg}) == 0);
    CHECK(read_file(svg).find("<svg") == 0);
    CHECK(run_cli({"bench", "--trials", "4", "--n", "30", "--seed", "5", "--max-coord", "2048"}) == 0);

    // determinism across runs
    const std::string inst2 = dir + "/inst2.json";
    CHECK(run_cli({"gen", "--n", "40", "--seed", "3", "--max-coord", "4096", "--out", inst2}) == 0);
    CHECK(read_file(inst) == read_file(inst2));
    const std::string graph2 = dir + "/graph2.json";
    CHECK(run_cli({"build", "--in", inst2, "--stage", "h4", "--out", graph2}) == 0);
    CHECK(read_file(graph) == read_file(graph2));

    // degenerate input: coincident points cannot even load
    write_file(inst2, "{\"version\":1,\"points\":[[0,0],[0,0]]}");
    CHECK(run_cli({"verify", "--in", inst2}) == 2);
}
