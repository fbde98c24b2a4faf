#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "dsr/graph.hpp"

namespace dsr {

enum class CotreeKind { Leaf, Union, Join };

struct CotreeNode {
    CotreeKind kind = CotreeKind::Leaf;
    Vertex leaf = -1;               // valid for Leaf only
    std::vector<int> children;      // node indices
};

/// Union/join construction tree of a cograph. Node 0 is not special; `root`
/// indexes the top node.
struct Cotree {
    std::vector<CotreeNode> nodes;
    int root = -1;

    const CotreeNode& node(int i) const { return nodes[static_cast<std::size_t>(i)]; }
    /// Leaves below node i in left-to-right order.
    std::vector<Vertex> leaves(int i) const;
    std::vector<Vertex> leaves() const { return root < 0 ? std::vector<Vertex>{} : leaves(root); }
};

/// Failure value: four vertices a-b-c-d inducing a path.
struct NotCograph {
    std::array<Vertex, 4> witness;
};

/// Canonical cotree (alternating node kinds, fan-out >= 2), or an induced P4.
std::variant<Cotree, NotCograph> cotree_decompose(const Graph& g);

/// Graph on `n` vertices produced by evaluating the cotree.
Graph evaluate_cotree(const Cotree& ct, Vertex n);

/// Checks every leaf appears exactly once, node fan-out >= 2 and kind alternation.
bool is_canonical_cotree(const Cotree& ct, Vertex n);

/// True iff evaluating ct reproduces g. Runs in O(n + m * depth).
bool cotree_matches(const Cotree& ct, const Graph& g);

/// Subtree rooted at `node`, leaves relabelled through `relabel` (global -> local).
Cotree extract_subtree(const Cotree& ct, int node, const std::vector<Vertex>& relabel);

/// Compact text form, e.g. `J(U(1 3) U(2 4))` with 1-based leaves.
std::string format_cotree(const Cotree& ct);
Cotree parse_cotree(const std::string& text);

}  // namespace dsr
