#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "graphschro/graph_model.hpp"

namespace graphschro {

/// Result of closing a vertex set under single-vertex extension steps.
/// `chain` lists the absorbed vertices in the order they were added; the
/// closure is independent of that order.
struct ExtensionResult {
    std::vector<int> closure;  // sorted
    std::vector<int> chain;
};

/// Decomposition of the complement of a maximal set into branches
/// (connected components) and clusters (per-root unions of adjacent
/// branches). Orders count cluster memberships minus one.
struct ClusterDecomposition {
    std::vector<std::vector<int>> branches;  // partition of complement, sorted
    std::vector<int> cluster_roots;          // roots with nonempty clusters
    std::vector<std::vector<int>> clusters;  // cluster_roots[i] -> vertex set
    std::vector<int> branch_orders;          // per branch
};

/// Finds the first vertex of B (smallest index) with exactly one neighbor
/// outside B; returns that (root, neighbor) pair, or nothing when B admits
/// no extension step.
std::optional<std::pair<int, int>> extend_once(const FiniteGraph& g,
                                               const std::vector<int>& B);

/// Iterates single-vertex extension to the fixed point [B]. With a seed,
/// each step picks uniformly among the currently eligible roots instead of
/// the smallest one; the resulting closure is the same for every seed.
ExtensionResult maximal_extension(const FiniteGraph& g, const std::vector<int>& B,
                                  std::optional<uint64_t> order_seed = std::nullopt);

/// Splits the complement of a maximal set into branches and clusters.
/// Throws NotMaximalError if `closure` still admits an extension step.
ClusterDecomposition decompose(const FiniteGraph& g, const std::vector<int>& closure);

}  // namespace graphschro
