#include "spanner4/pipeline.hpp"

namespace spanner4 {

Pipeline run_pipeline(PointSet ps) {
    Pipeline p;
    p.pts = std::move(ps);
    p.t = build_triangulation(p.pts);
    p.y = build_y4(p.pts, p.t);
    p.classes = classify_edges(p.pts, p.y);
    auto anchors = build_anchor_table(p.pts, p.y);
    p.anchors = std::move(anchors.table);
    p.chains = std::move(anchors.chains);
    p.h8 = build_h8(p.pts, p.y, p.classes, p.anchors);
    p.dup_chains = duplicate_chains(p.pts, p.y, p.classes, p.anchors, p.h8.graph);
    p.h6 = build_h6(p.h8.graph, p.dup_chains);
    p.pairs = find_edge_pairs(p.pts, p.y, p.classes, p.anchors, p.h6, p.h8.graph);
    p.h4 = build_h4(p.pts, p.h6, p.pairs);
    p.ledger4 = compute_charges(p.pts, p.y, p.classes, p.anchors, p.h4);
    return p;
}

} // namespace spanner4
