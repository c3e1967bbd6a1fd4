#pragma once

#include "spanner4/anchors.hpp"
#include "spanner4/delaunay.hpp"
#include "spanner4/spanner.hpp"
#include "spanner4/yao.hpp"

namespace spanner4 {

/// All stage snapshots of one construction run.
struct Pipeline {
    PointSet pts;
    Triangulation t;
    YaoGraph y;
    EdgeClassTable classes;
    AnchorTable anchors;
    std::vector<WeakAnchorChain> chains;
    H8Result h8;
    std::vector<DuplicateChain> dup_chains;
    SpannerGraph h6;
    std::vector<EdgePair> pairs;
    SpannerGraph h4;
    ChargeLedger ledger4;
};

Pipeline run_pipeline(PointSet ps);

} // namespace spanner4
