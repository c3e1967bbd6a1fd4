#pragma once

// The bundled 29-point reference instance (data/points29.json) with its
// expected construction data: the triangulation edge set, the per-cone
// orientation of every cone-graph edge, and per-node per-cone charge tables
// for the degree-8 and degree-4 stages.

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "spanner4/geometry.hpp"

namespace fixture {

using spanner4::NodeId;
using spanner4::Point;

inline const std::vector<Point> kPoints = {
    {396, 87},  {309, 180}, {316, 353}, {301, 441}, {127, 248}, {323, 305},
    {423, 410}, {204, 408}, {209, 80},  {50, 459},  {382, 366}, {48, 160},
    {377, 433}, {332, 72},  {217, 175}, {250, 350}, {289, 253}, {147, 312},
    {273, 211}, {375, 208}, {71, 270},  {392, 328}, {185, 305}, {247, 198},
    {276, 276}, {190, 132}, {105, 154}, {30, 100},  {84, 61}};

// Directed cone-graph edges (tail, head).
inline const std::vector<std::pair<NodeId, NodeId>> kDirected = {
    {0, 13},  {1, 14},  {2, 15},  {3, 15},  {4, 11},  {5, 24},  {6, 10},  {7, 17},
    {8, 28},  {9, 11},  {10, 5},  {11, 27}, {12, 2},  {13, 28}, {14, 25}, {15, 22},
    {16, 18}, {17, 4},  {18, 23}, {19, 1},  {20, 11}, {21, 5},  {22, 4},  {23, 14},
    {24, 18}, {25, 28}, {26, 27}, {1, 0},   {2, 5},   {3, 12},  {4, 14},  {5, 19},
    {7, 15},  {8, 13},  {9, 17},  {10, 21}, {11, 26}, {12, 6},  {14, 13}, {15, 5},
    {16, 1},  {17, 22}, {18, 1},  {19, 0},  {20, 4},  {21, 0},  {22, 24}, {23, 1},
    {24, 16}, {25, 8},  {26, 25}, {27, 28}, {0, 6},   {1, 19},  {2, 10},  {4, 22},
    {5, 10},  {7, 3},   {8, 14},  {10, 6},  {11, 4},  {13, 0},  {14, 23}, {15, 2},
    {16, 5},  {17, 7},  {18, 16}, {19, 21}, {20, 17}, {21, 6},  {22, 15}, {23, 18},
    {24, 5},  {25, 14}, {26, 4},  {27, 11}, {28, 26}, {0, 1},   {1, 18},  {2, 3},
    {3, 9},   {4, 20},  {5, 2},   {6, 12},  {7, 9},   {8, 25},  {10, 12}, {12, 3},
    {13, 1},  {14, 4},  {15, 7},  {16, 24}, {17, 9},  {18, 22}, {19, 16}, {20, 9},
    {21, 10}, {22, 17}, {23, 22}, {24, 15}, {25, 26}, {26, 11}, {28, 27}};

// Triangulation edges that carry no orientation (not in the cone graph).
inline const std::vector<std::pair<NodeId, NodeId>> kUnoriented = {
    {4, 23}, {26, 14}, {22, 7}};

// Per-node charge tables, cones 0..3.
inline const std::array<std::array<int, 4>, 29> kH8Charges = {{
    {1, 1, 1, 0}, {1, 1, 2, 1}, {0, 2, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1},
    {1, 1, 1, 2}, {0, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}, {0, 0, 0, 1},
    {1, 1, 1, 1}, {1, 0, 1, 1}, {0, 1, 2, 1}, {1, 0, 1, 0}, {1, 1, 1, 2},
    {1, 1, 1, 1}, {1, 1, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}, {2, 1, 1, 0},
    {1, 1, 0, 1}, {0, 1, 0, 2}, {1, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 1, 1},
    {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 0}}};

inline const std::array<std::array<int, 4>, 29> kH4Charges = {{
    {1, 1, 1, 0}, {1, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}, {1, 1, 1, 1},
    {1, 1, 1, 1}, {0, 1, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}, {0, 0, 0, 1},
    {1, 1, 1, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {1, 0, 1, 0}, {1, 1, 1, 0},
    {1, 1, 1, 1}, {0, 1, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1}, {1, 1, 1, 0},
    {1, 1, 0, 1}, {0, 1, 0, 1}, {1, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 1, 1},
    {1, 1, 0, 1}, {0, 1, 1, 1}, {1, 0, 0, 1}, {1, 1, 0, 0}}};

// Degree-8 stage edge set (derived once and frozen; consistent with the
// charge tables above at every node and cone).
inline const std::vector<std::pair<NodeId, NodeId>> kH8Edges = {
    {0, 1},   {0, 13},  {0, 21},  {1, 14},  {1, 18},  {1, 19},  {1, 23},  {2, 3},
    {2, 5},   {2, 12},  {2, 15},  {3, 7},   {3, 12},  {4, 11},  {4, 14},  {4, 20},
    {4, 22},  {5, 10},  {5, 16},  {5, 19},  {5, 24},  {6, 10},  {6, 12},  {7, 15},
    {7, 17},  {8, 13},  {8, 14},  {8, 25},  {9, 20},  {10, 12}, {10, 21}, {11, 26},
    {11, 27}, {14, 23}, {14, 25}, {15, 22}, {15, 24}, {16, 18}, {16, 19}, {16, 24},
    {17, 20}, {17, 22}, {18, 23}, {18, 24}, {19, 21}, {25, 26}, {26, 28}, {27, 28}};

// Edges dropped by the alternate-chain removal step.
inline const std::vector<std::pair<NodeId, NodeId>> kStep3Removed = {
    {1, 23}, {2, 12}, {5, 16}, {19, 21}};

inline spanner4::PointSet point_set() { return spanner4::PointSet{kPoints}; }

inline std::vector<std::pair<NodeId, NodeId>> triangulation_edges() {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (auto [a, b] : kDirected) out.push_back(a < b ? std::pair{a, b} : std::pair{b, a});
    for (auto [a, b] : kUnoriented) out.push_back(a < b ? std::pair{a, b} : std::pair{b, a});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<std::pair<NodeId, NodeId>> yao_edges() {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (auto [a, b] : kDirected) out.push_back(a < b ? std::pair{a, b} : std::pair{b, a});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace fixture
