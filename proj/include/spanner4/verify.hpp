#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spanner4/anchors.hpp"
#include "spanner4/edge_set.hpp"
#include "spanner4/geometry.hpp"
#include "spanner4/spanner.hpp"
#include "spanner4/yao.hpp"

namespace spanner4 {

struct Triangulation;

namespace bounds {
double sqrt2();
double one_plus_sqrt2();                       // Y4 vs T per-edge factor
double three_plus_sqrt2_pow6();                // 6-standard path factor
double h4_cutoff_factor();                     // (1+sqrt2)(3+sqrt2)^6
double h4_stretch_bound();                     // sqrt(4+2 sqrt2)(1+sqrt2)^2(3+sqrt2)^6
inline constexpr double kRelTol = 1e-9;
}   // namespace bounds

struct CrossingWitness {
    Edge e1{kNone, kNone};
    Edge e2{kNone, kNone};      // second edge, or (site, kNone) for site-on-edge
    bool site_on_edge = false;
};

/// Exact straight-line planarity certificate: no proper crossing, no site in
/// the open interior of an edge.
std::optional<CrossingWitness> check_planarity(const PointSet& ps, const std::vector<Edge>& edges);

struct StretchReport {
    std::string graph;
    double max_ratio = 1.0;
    Edge argmax{kNone, kNone};
};

/// Max over pairs of (graph distance / Euclidean distance), Dijkstra from
/// every source. Throws DisconnectedGraph.
StretchReport stretch_factor(const PointSet& ps, const std::vector<Edge>& edges,
                             const std::string& tag = "");

/// O(n^3) all-pairs reference for cross-checking at small n.
double stretch_factor_naive(const PointSet& ps, const std::vector<Edge>& edges);

struct PathViolation {
    Edge edge{kNone, kNone};
    double ratio = 0;
    double bound = 0;
    std::string note;
};

/// Every T edge must admit a Y path within (1+sqrt2) times its length.
std::vector<PathViolation> verify_yao_vs_t(const PointSet& ps, const Triangulation& t,
                                           const YaoGraph& y);

/// Every Y edge must admit a 6-standard path in the stage graph within
/// (3+sqrt2)^6 times its length, starting from an endpoint with a defined
/// anchor.
std::vector<PathViolation> verify_standard_path_bounds(const PointSet& ps, const YaoGraph& y,
                                                       const AnchorTable& a,
                                                       const SpannerGraph& stage);

/// Every cut-off node must stay within (1+sqrt2)(3+sqrt2)^6 times the
/// Euclidean distance of the fan owner it was cut off from.
std::vector<PathViolation> verify_h4_cutoff_bounds(const PointSet& ps, const SpannerGraph& h4);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Certificate {
    bool ok = false;
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;
    std::vector<int> degree_histogram_h4;     // index = degree
    int max_degree_h4 = 0;
    int max_cone_charge_h8 = 0;
    int charge2_cones_h8 = 0;
    double stretch_h4 = 0;
    std::optional<CrossingWitness> crossing;  // first H4 crossing, if any
    const CheckResult* find(const std::string& name) const;
};

/// Runs the whole pipeline and every structural check; failures are
/// recorded, degenerate inputs never escape as exceptions.
Certificate full_certificate(const PointSet& ps);

} // namespace spanner4
