#ifndef LOCC_DIAGRAM_HPP
#define LOCC_DIAGRAM_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "locc/states.hpp"

namespace locc {

// One product state drawn as the cell set A-support x B-support
// (row = A index, column = B index, both 1-based).
struct Tile {
    std::string label;
    int number = 0;  // construction order among drawn tiles
    std::set<std::pair<int, int>> cells;
    bool contiguous = false;
    std::string ket_expr;
};

struct Diagram {
    int n = 0;
    int m = 0;
    std::vector<Tile> tiles;
    bool stopper_omitted = false;
    std::string stopper_expr;
};

std::string ket_expr(const Ket& k);

// One tile per non-stopper state; a state whose supports cover both full
// local spaces is the stopper and is dropped (flagged instead).
Diagram layout(const StateSet& s);

enum class DiagramFormat { ascii, svg };

// Deterministic rendering; byte-identical across runs for equal diagrams.
std::string render(const Diagram& d, DiagramFormat format);

// Non-stopper tiles cover pairwise disjoint cell sets.
bool tiles_disjoint(const Diagram& d);

}  // namespace locc

#endif
