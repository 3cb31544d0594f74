#include "texplore/tree_decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "texplore/union_find.hpp"

namespace texplore {

int TreeDecomposition::width() const {
  size_t w = 0;
  for (auto& b : bags) w = std::max(w, b.size());
  return static_cast<int>(w) - 1;
}

TdCheck validate_td(int n, const std::vector<Edge>& edges, const TreeDecomposition& td) {
  const int nb = static_cast<int>(td.bags.size());
  if (nb == 0) return {false, "no bags"};
  if (static_cast<int>(td.tree.size()) != nb - 1) return {false, "tree must have bags-1 edges"};
  {
    UnionFind uf(nb);
    for (auto& [a, b] : td.tree) {
      if (a < 0 || a >= nb || b < 0 || b >= nb) return {false, "tree edge out of range"};
      if (!uf.unite(a, b)) return {false, "tree has a cycle"};
    }
    if (nb > 1 && uf.components() != 1) return {false, "tree not connected"};
  }
  std::vector<char> covered(n, 0);
  for (auto& bag : td.bags)
    for (Vertex v : bag) {
      if (v < 0 || v >= n) return {false, "bag vertex out of range"};
      covered[v] = 1;
    }
  for (Vertex v = 0; v < n; ++v)
    if (!covered[v]) return {false, "vertex " + std::to_string(v) + " in no bag"};

  std::vector<std::set<Vertex>> bagset(nb);
  for (int b = 0; b < nb; ++b) bagset[b] = {td.bags[b].begin(), td.bags[b].end()};
  for (auto& e : edges) {
    bool found = false;
    for (int b = 0; b < nb && !found; ++b)
      found = bagset[b].count(e.u) && bagset[b].count(e.v);
    if (!found)
      return {false, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} in no bag"};
  }

  // Connected subtree per vertex.
  std::vector<std::vector<int>> adj(nb);
  for (auto& [a, b] : td.tree) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (Vertex v = 0; v < n; ++v) {
    int first = -1, count = 0;
    for (int b = 0; b < nb; ++b)
      if (bagset[b].count(v)) {
        ++count;
        if (first < 0) first = b;
      }
    if (count <= 1) continue;
    std::vector<int> stack{first};
    std::vector<char> seen(nb, 0);
    seen[first] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      for (int c : adj[b])
        if (!seen[c] && bagset[c].count(v)) {
          seen[c] = 1;
          ++reached;
          stack.push_back(c);
        }
    }
    if (reached != count)
      return {false, "bags containing vertex " + std::to_string(v) + " are not connected"};
  }
  return {true, ""};
}

TreeDecomposition min_fill_decomposition(int n, const std::vector<Edge>& edges) {
  std::vector<std::set<Vertex>> adj(n);
  for (auto& e : edges) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> gone(n, 0);
  std::vector<int> order;
  std::vector<std::vector<Vertex>> bags(n);

  for (int round = 0; round < n; ++round) {
    int best = -1;
    long long best_fill = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      long long fill = 0;
      std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
      for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
          if (!adj[nb[i]].count(nb[j])) ++fill;
      if (best < 0 || fill < best_fill) {
        best = v;
        best_fill = fill;
      }
    }
    std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
    bags[best] = nb;
    bags[best].push_back(best);
    std::sort(bags[best].begin(), bags[best].end());
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }
    for (Vertex w : nb) adj[w].erase(best);
    adj[best].clear();
    gone[best] = 1;
    order.push_back(best);
  }

  // Bag for the i-th eliminated vertex attaches to the bag of its first
  // later-eliminated neighbor (standard elimination-tree construction).
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  TreeDecomposition td;
  std::vector<int> bag_id(n);
  for (int i = 0; i < n; ++i) {
    bag_id[order[i]] = static_cast<int>(td.bags.size());
    td.bags.push_back(bags[order[i]]);
  }
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    int attach = -1;
    for (Vertex w : bags[v])
      if (w != v && pos[w] > i && (attach < 0 || pos[w] < pos[attach])) attach = w;
    if (attach >= 0) td.tree.emplace_back(bag_id[v], bag_id[attach]);
  }
  // Isolated bags (e.g. the last eliminated vertex) chain to the final bag.
  {
    UnionFind uf(static_cast<int>(td.bags.size()));
    for (auto& [a, b] : td.tree) uf.unite(a, b);
    int root = bag_id[order[n - 1]];
    for (int b = 0; b < static_cast<int>(td.bags.size()); ++b)
      if (uf.unite(b, root)) td.tree.emplace_back(b, root);
  }
  return td;
}

// ---------------------------------------------------------------------------
// Nice form
// ---------------------------------------------------------------------------

namespace {

struct NiceBuilder {
  const TreeDecomposition& td;
  std::vector<std::vector<int>> adj;
  NiceTd out;

  explicit NiceBuilder(const TreeDecomposition& td_) : td(td_) {
    adj.resize(td.bags.size());
    for (auto& [a, b] : td.tree) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }

  int add(NiceKind kind, std::vector<Vertex> bag, int left = -1, int right = -1) {
    std::sort(bag.begin(), bag.end());
    out.nodes.push_back(NiceNode{kind, std::move(bag), left, right});
    return static_cast<int>(out.nodes.size()) - 1;
  }

  // Chain of forget/introduce nodes transforming `from` into `to`,
  // returning the node whose bag equals `to`; `below` is the subtree that
  // already realizes `from`.
  int morph(std::vector<Vertex> from, const std::vector<Vertex>& to, int below) {
    std::set<Vertex> target(to.begin(), to.end());
    std::set<Vertex> cur(from.begin(), from.end());
    int node = below;
    for (Vertex v : from)
      if (!target.count(v)) {
        cur.erase(v);
        node = add(NiceKind::Forget, {cur.begin(), cur.end()}, node);
      }
    for (Vertex v : to)
      if (!cur.count(v)) {
        cur.insert(v);
        node = add(NiceKind::Introduce, {cur.begin(), cur.end()}, node);
      }
    return node;
  }

  // Builds the nice subtree for bag b (parent p), rooted at a node whose bag
  // equals td.bags[b].
  int build(int b, int p) {
    std::vector<int> kids;
    for (int c : adj[b])
      if (c != p) kids.push_back(c);
    const auto& bag = td.bags[b];
    if (kids.empty()) {
      // Introduce the whole bag above an empty leaf.
      int node = add(NiceKind::Leaf, {});
      return morph({}, bag, node);
    }
    std::vector<int> tops;
    for (int c : kids) {
      int sub = build(c, b);
      tops.push_back(morph(td.bags[c], bag, sub));
    }
    int node = tops[0];
    for (size_t i = 1; i < tops.size(); ++i)
      node = add(NiceKind::Join, bag, node, tops[i]);
    return node;
  }
};

}  // namespace

NiceTd to_nice(const TreeDecomposition& td) {
  if (td.bags.empty()) throw ShapeError("empty decomposition");
  NiceBuilder b(td);
  b.out.root = b.build(0, -1);
  return std::move(b.out);
}

// ---------------------------------------------------------------------------
// Separator selection
// ---------------------------------------------------------------------------

namespace {

struct BitSet {
  std::vector<uint64_t> w;
  explicit BitSet(int n) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
  bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void or_with(const BitSet& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  // popcount of (this & ~a & ~b)
  long long count_excluding(const BitSet& a, const BitSet& b) const {
    long long c = 0;
    for (size_t i = 0; i < w.size(); ++i) c += std::popcount(w[i] & ~a.w[i] & ~b.w[i]);
    return c;
  }
};

}  // namespace

SeparatorPlan build_separator_plan(const NiceTd& nice, int n, const std::vector<Edge>& edges) {
  const int nn = static_cast<int>(nice.nodes.size());
  SeparatorPlan plan;
  BitSet marked(n);
  std::vector<char> is_sep(n, 0);

  // Iterative post-order.
  std::vector<int> post;
  {
    std::vector<std::pair<int, int>> stack{{nice.root, 0}};
    while (!stack.empty()) {
      auto& [node, phase] = stack.back();
      const NiceNode& nd = nice.nodes[node];
      int child = phase == 0 ? nd.left : (phase == 1 ? nd.right : -1);
      if (phase < 2) {
        ++phase;
        if (child >= 0) stack.emplace_back(child, 0);
        continue;
      }
      post.push_back(node);
      stack.pop_back();
    }
  }

  std::vector<BitSet> below(nn, BitSet(n));
  std::vector<char> selected(nn, 0);
  std::vector<int> topmost(nn, 0);

  auto select_node = [&](int node, const BitSet& bagbits) {
    const NiceNode& nd = nice.nodes[node];
    SeparatorPlan::Component comp;
    for (Vertex v = 0; v < n; ++v)
      if (below[node].get(v) && !marked.get(v) && !bagbits.get(v) && !is_sep[v])
        comp.vertices.push_back(v);
    if (!comp.vertices.empty()) plan.components.push_back(std::move(comp));
    marked.or_with(below[node]);
    marked.or_with(bagbits);
    for (Vertex v : nd.bag)
      if (!is_sep[v]) {
        is_sep[v] = 1;
        plan.separator_vertices.push_back(v);
      }
    plan.selected_nodes.push_back(node);
    selected[node] = 1;
  };

  const double sqrt_n = std::sqrt(static_cast<double>(n));
  for (int node : post) {
    const NiceNode& nd = nice.nodes[node];
    BitSet bagbits(n);
    for (Vertex v : nd.bag) bagbits.set(v);
    for (int c : {nd.left, nd.right}) {
      if (c < 0) continue;
      below[node].or_with(below[c]);
      for (Vertex v : nice.nodes[c].bag) below[node].set(v);
      topmost[node] += selected[c] ? 1 : topmost[c];
    }
    long long cnt = below[node].count_excluding(marked, bagbits);
    // Select when the unmarked weight below exceeds sqrt(n) or two selected
    // bags would stack beneath an unselected one.
    if (static_cast<double>(cnt) > sqrt_n || topmost[node] >= 2) select_node(node, bagbits);
  }

  // Leftover region at the root: force-select the root so that every vertex
  // lands in a component or in the separator set.
  {
    bool leftover = false;
    for (Vertex v = 0; v < n && !leftover; ++v) leftover = !marked.get(v) && !is_sep[v];
    if (leftover && !selected[nice.root]) {
      BitSet bagbits(n);
      for (Vertex v : nice.nodes[nice.root].bag) bagbits.set(v);
      // The root's "below" set may miss isolated bag-only vertices; fold in
      // everything unmarked.
      for (Vertex v = 0; v < n; ++v)
        if (!marked.get(v)) below[nice.root].set(v);
      select_node(nice.root, bagbits);
    }
  }

  // Adjacent separator vertices per component, against the full separator set.
  std::vector<int> comp_of(n, -1);
  for (size_t i = 0; i < plan.components.size(); ++i)
    for (Vertex v : plan.components[i].vertices) comp_of[v] = static_cast<int>(i);
  std::vector<std::set<Vertex>> adjs(plan.components.size());
  for (auto& e : edges) {
    if (is_sep[e.u] && comp_of[e.v] >= 0) adjs[comp_of[e.v]].insert(e.u);
    if (is_sep[e.v] && comp_of[e.u] >= 0) adjs[comp_of[e.u]].insert(e.v);
  }
  for (size_t i = 0; i < plan.components.size(); ++i)
    plan.components[i].adjacent_separators = {adjs[i].begin(), adjs[i].end()};
  std::sort(plan.separator_vertices.begin(), plan.separator_vertices.end());
  plan.bag_constant = plan.selected_nodes.empty()
                          ? 0.0
                          : static_cast<double>(plan.selected_nodes.size()) / sqrt_n;
  return plan;
}

}  // namespace texplore
