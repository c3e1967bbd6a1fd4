#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spanner4/geometry.hpp"
#include "spanner4/pipeline.hpp"
#include "spanner4/spanner.hpp"

namespace spanner4 {

struct InstanceFile {
    int version = 1;
    std::vector<Point> points;
};

struct GraphFile {
    int version = 1;
    NodeId n = 0;
    std::string stage;                               // delaunay | y4 | h8 | h6 | h4
    std::vector<Edge> edges;                         // sorted pairs, i < j
    std::vector<Edge> shortcuts;
    std::vector<std::pair<NodeId, NodeId>> cutoffs;  // [cutoff, owner]
};

std::string serialize_instance(const InstanceFile& f);
InstanceFile parse_instance(const std::string& text);
std::string serialize_graph(const GraphFile& f);
GraphFile parse_graph(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Uniform integer points with pairwise-distinct x and y by rejection
/// sampling; deterministic per seed. Throws CoordinateSpaceExhausted when n
/// exceeds the distinct-coordinate capacity.
InstanceFile gen_instance(NodeId n, std::uint64_t seed, Coord max_coord);

/// Seeded integer jitter until the general-position report is clean; the
/// explicit repair behind the --perturb-seed flag.
InstanceFile perturb_repair(InstanceFile f, std::uint64_t seed, Coord max_coord);

/// Stage graph file for an instance (runs the pipeline up to the stage).
GraphFile build_stage_file(const PointSet& ps, const std::string& stage);

/// Deterministic SVG document, y axis up. Selected anchors, plain edges,
/// shortcut edges, and cut-off sites carry distinct styles. Throws
/// InconsistentFiles when the graph does not fit the instance.
std::string render_svg(const InstanceFile& inst, const GraphFile& g);

struct BenchTrial {
    NodeId n = 0;
    std::uint64_t seed = 0;
    int max_degree_h4 = 0;
    bool plane_h4 = false;
    bool charges_ok = false;
    double stretch_y4 = 0, stretch_h8 = 0, stretch_h6 = 0, stretch_h4 = 0;
    double h4_bound_margin = 0;    // bound / measured
    bool failed = false;
    std::string error;
};

struct BenchSummary {
    std::vector<BenchTrial> trials;
    int max_degree_h4 = 0;
    double max_stretch_h4 = 0;
    double mean_stretch_h4 = 0;
    bool all_plane = true;
    bool all_charges_ok = true;
    bool stretch_warning = false;   // measured H4 stretch above 10 somewhere
};

BenchSummary run_bench(int trials, NodeId n_min, NodeId n_max, std::uint64_t seed0,
                       Coord max_coord);

std::string bench_to_json(const BenchSummary& s);
std::string bench_to_text(const BenchSummary& s);

} // namespace spanner4
