#include "graphschro/extension.hpp"

#include <algorithm>
#include <queue>
#include <random>

namespace graphschro {

namespace {

std::vector<char> member_mask(int n, const std::vector<int>& set) {
    std::vector<char> in(static_cast<size_t>(n), 0);
    for (int v : set) {
        if (v < 0 || v >= n) throw Error("vertex " + std::to_string(v) + " out of range");
        in[static_cast<size_t>(v)] = 1;
    }
    return in;
}

// The unique outside neighbor of root, or -1 when root has zero or several.
int unique_outside_neighbor(const FiniteGraph& g, const std::vector<char>& in, int root) {
    int found = -1;
    for (int w = 0; w < g.size(); ++w) {
        if (!g.has_edge(root, w) || in[static_cast<size_t>(w)]) continue;
        if (found >= 0) return -1;
        found = w;
    }
    return found;
}

std::vector<int> eligible_roots(const FiniteGraph& g, const std::vector<char>& in) {
    std::vector<int> roots;
    for (int v = 0; v < g.size(); ++v)
        if (in[static_cast<size_t>(v)] && unique_outside_neighbor(g, in, v) >= 0)
            roots.push_back(v);
    return roots;
}

}  // namespace

std::optional<std::pair<int, int>> extend_once(const FiniteGraph& g,
                                               const std::vector<int>& B) {
    auto in = member_mask(g.size(), B);
    for (int v = 0; v < g.size(); ++v) {
        if (!in[static_cast<size_t>(v)]) continue;
        int w = unique_outside_neighbor(g, in, v);
        if (w >= 0) return std::make_pair(v, w);
    }
    return std::nullopt;
}

ExtensionResult maximal_extension(const FiniteGraph& g, const std::vector<int>& B,
                                  std::optional<uint64_t> order_seed) {
    auto in = member_mask(g.size(), B);
    std::optional<std::mt19937_64> rng;
    if (order_seed) rng.emplace(*order_seed);

    ExtensionResult result;
    // Eligibility is recomputed after every single addition; steps are never
    // batched, so any interleaving of roots is reachable via the seed.
    for (;;) {
        auto roots = eligible_roots(g, in);
        if (roots.empty()) break;
        int root = roots.front();
        if (rng) {
            std::uniform_int_distribution<size_t> pick(0, roots.size() - 1);
            root = roots[pick(*rng)];
        }
        int added = unique_outside_neighbor(g, in, root);
        in[static_cast<size_t>(added)] = 1;
        result.chain.push_back(added);
    }
    for (int v = 0; v < g.size(); ++v)
        if (in[static_cast<size_t>(v)]) result.closure.push_back(v);
    return result;
}

ClusterDecomposition decompose(const FiniteGraph& g, const std::vector<int>& closure) {
    auto in = member_mask(g.size(), closure);
    if (extend_once(g, closure)) throw NotMaximalError("set still admits an extension step");

    ClusterDecomposition dec;

    // Branches: connected components of the induced subgraph on the complement.
    std::vector<int> branch_of(static_cast<size_t>(g.size()), -1);
    for (int s = 0; s < g.size(); ++s) {
        if (in[static_cast<size_t>(s)] || branch_of[static_cast<size_t>(s)] >= 0) continue;
        int id = static_cast<int>(dec.branches.size());
        std::vector<int> verts;
        std::queue<int> q;
        q.push(s);
        branch_of[static_cast<size_t>(s)] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            verts.push_back(v);
            for (int w : g.neighbors(v)) {
                if (in[static_cast<size_t>(w)] || branch_of[static_cast<size_t>(w)] >= 0)
                    continue;
                branch_of[static_cast<size_t>(w)] = id;
                q.push(w);
            }
        }
        std::sort(verts.begin(), verts.end());
        dec.branches.push_back(std::move(verts));
    }

    // Cluster of a root: union of the branches holding a neighbor of the
    // root, in the original graph.
    dec.branch_orders.assign(dec.branches.size(), 0);
    std::vector<int> memberships(dec.branches.size(), 0);
    for (int root : closure) {
        std::vector<char> seen(dec.branches.size(), 0);
        for (int w : g.neighbors(root)) {
            int b = branch_of[static_cast<size_t>(w)];
            if (b >= 0) seen[static_cast<size_t>(b)] = 1;
        }
        std::vector<int> cluster;
        for (size_t b = 0; b < dec.branches.size(); ++b) {
            if (!seen[b]) continue;
            ++memberships[b];
            cluster.insert(cluster.end(), dec.branches[b].begin(), dec.branches[b].end());
        }
        if (cluster.empty()) continue;
        std::sort(cluster.begin(), cluster.end());
        dec.cluster_roots.push_back(root);
        dec.clusters.push_back(std::move(cluster));
    }
    // A branch in no cluster only happens for components disjoint from the
    // closure; it is unconstrained and carries order 0.
    for (size_t b = 0; b < dec.branches.size(); ++b)
        dec.branch_orders[b] = std::max(0, memberships[b] - 1);

    return dec;
}

}  // namespace graphschro
