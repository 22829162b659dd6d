#pragma once

#include "treefree/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace treefree {

// One broom of a multibroom: a path of `length` edges from the shared root,
// with `bristles` extra leaves on its far end.
struct ArmSpec {
    int length = 1;
    int bristles = 0;
    bool operator==(const ArmSpec&) const = default;
};

using MultibroomSpec = std::vector<ArmSpec>;

// Total vertex count 1 + sum(length + bristles).
int multibroom_order(const MultibroomSpec& spec);

// A tree pattern on vertices 0..t-1.
class TreePattern {
public:
    TreePattern() = default;

    // Throws InputError unless the edges form a tree on t >= 1 vertices.
    static TreePattern from_edges(int t, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const;
    std::vector<Edge> edges() const;

    int distance(int u, int v) const { return dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
    int eccentricity(int v) const;
    int radius() const { return radius_; }
    // Lowest-index vertex whose eccentricity equals the radius.
    int center() const { return center_; }

    // Trees on at most two vertices are handled by shortcuts in the engines.
    bool degenerate() const { return order() <= 2; }

    // Set when the pattern was built as a multibroom; vertex numbering then
    // follows make_multibroom (root 0, arms in order, path before bristles).
    const std::optional<MultibroomSpec>& multibroom() const { return multibroom_; }
    const std::string& label() const { return label_; }

    Graph as_graph() const;

    TreePattern with_label(std::string label) const
    {
        TreePattern copy = *this;
        copy.label_ = std::move(label);
        return copy;
    }

private:
    friend TreePattern make_multibroom(const MultibroomSpec& spec);
    friend TreePattern parse_tree(std::string_view text);

    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> dist_;
    int radius_ = 0;
    int center_ = 0;
    std::optional<MultibroomSpec> multibroom_;
    std::string label_;
};

TreePattern make_broom(int length, int bristles);
TreePattern make_multibroom(const MultibroomSpec& spec);
TreePattern make_path(int vertices);
TreePattern make_star(int leaves);

// "broom:L,M", "multibroom:(L1,M1),(L2,M2),...", "path:N", "star:N".
TreePattern parse_tree(std::string_view text);

// Depth-first enumeration sigma_1..sigma_t of a tree from a root: each
// sigma_{i+1} has a neighbour on the tree path from sigma_1 to sigma_i.
struct DfsEnumeration {
    std::vector<int> order;    // order[i] = sigma_{i+1}
    std::vector<int> position; // position[v] = index of v in order
    std::vector<int> parent;   // parent in the rooted tree, -1 at the root
    std::vector<int> depth;    // distance from the root

    int root() const { return order.front(); }
    // Tree path from the root to order[i], root first.
    std::vector<int> active_path(int i) const;
    // For i >= 1: 1-based index on the previous active path of the vertex
    // that order[i] attaches to.
    int attach_index(int i) const { return depth[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]; }
};

// Children are visited by decreasing subtree height, ties by lowest index.
DfsEnumeration dfs_enumeration(const TreePattern& t, int root);
bool is_dfs_enumeration(const TreePattern& t, const std::vector<int>& order);

} // namespace treefree
