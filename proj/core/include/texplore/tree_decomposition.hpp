#pragma once

#include <string>
#include <vector>

#include "texplore/temporal_graph.hpp"
#include "texplore/types.hpp"

namespace texplore {

struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<std::pair<int, int>> tree;  // edges between bag ids

  int width() const;
};

struct TdCheck {
  bool ok = false;
  std::string problem;
};

// Verifies vertex coverage, edge coverage, tree shape, and the connected
// subtree property against an underlying edge set.
TdCheck validate_td(int n, const std::vector<Edge>& edges, const TreeDecomposition& td);

// Elimination-order heuristic decomposition (min-fill, ties by vertex id).
// Not optimal in general; width is whatever the ordering yields.
TreeDecomposition min_fill_decomposition(int n, const std::vector<Edge>& edges);

enum class NiceKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
  NiceKind kind = NiceKind::Leaf;
  std::vector<Vertex> bag;  // sorted
  int left = -1;
  int right = -1;
};

// Binary-tree normal form: leaves hold empty bags, interior nodes change the
// bag by one vertex (introduce/forget) or join two children with equal bags.
struct NiceTd {
  std::vector<NiceNode> nodes;
  int root = -1;
};

NiceTd to_nice(const TreeDecomposition& td);

// Separator selection over a nice decomposition: bags chosen in post-order
// when enough unmarked vertices sit below them or two selected bags would
// stack; chosen bags' vertices separate the rest into small components.
struct SeparatorPlan {
  struct Component {
    std::vector<Vertex> vertices;             // excludes separator vertices
    std::vector<Vertex> adjacent_separators;  // separator vertices with an edge into it
  };
  std::vector<int> selected_nodes;     // nice node ids in selection order
  std::vector<Vertex> separator_vertices;
  std::vector<Component> components;   // selection order; last one is the root leftover
  double bag_constant = 0.0;           // |selected| / sqrt(n)
};

SeparatorPlan build_separator_plan(const NiceTd& nice, int n, const std::vector<Edge>& edges);

}  // namespace texplore
