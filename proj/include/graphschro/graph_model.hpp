#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "graphschro/errors.hpp"

namespace graphschro {

/// Finite interaction graph: a symmetric real matrix L over a dense vertex
/// index range. Edges are the nonzero off-diagonal entries. Values are
/// immutable after construction.
struct FiniteGraph {
    Eigen::MatrixXd L;
    std::vector<std::string> labels;  // optional, presentation only

    int size() const { return static_cast<int>(L.rows()); }

    bool has_edge(int i, int j) const { return i != j && L(i, j) != 0.0; }

    std::vector<int> neighbors(int v) const;
};

/// Connectivity / edge census of the nonzero pattern. Connectivity is
/// reported, never required.
struct GraphInfo {
    int n = 0;
    int edge_count = 0;
    int components = 0;
    bool connected = false;
};

/// One half-infinite channel: a chain nu(0), nu(1), ... attached to the core
/// at vertex `attach` = nu(0). Off-diagonal couplings are -b(k) between
/// nu(k) and nu(k+1), on-site values a(k) at nu(k). Stored values cover the
/// non-stabilized head; beyond K0 the sequences are b = 1, a = 2.
struct ChannelSpec {
    int attach = 0;
    int K0 = 0;
    std::vector<double> b;  // b(0..K0-1), all nonzero
    std::vector<double> a;  // a(1..K0)

    double b_at(int k) const {  // k >= 0
        return k < K0 ? b[static_cast<size_t>(k)] : 1.0;
    }
    double a_at(int k) const {  // k >= 1
        return k <= K0 ? a[static_cast<size_t>(k - 1)] : 2.0;
    }
};

/// Web graph: finite core plus channels. Each channel couples to the core
/// only through the pair (nu(0), nu(1)).
struct WebGraph {
    FiniteGraph core;
    std::vector<ChannelSpec> channels;

    int num_channels() const { return static_cast<int>(channels.size()); }
    int max_K0() const;
};

/// Index bookkeeping for a finite truncation of a web graph. Core vertices
/// keep their indices; channel c contributes sites k = 1..N at consecutive
/// rows after the core block.
struct TruncationMap {
    int core_size = 0;
    int depth = 0;  // N: sites 1..N per channel
    int num_channels = 0;

    int total() const { return core_size + num_channels * depth; }
    int site(int channel, int k) const {  // k in 1..N
        return core_size + channel * depth + (k - 1);
    }
    bool is_channel_site(int row) const { return row >= core_size; }
    int channel_of(int row) const { return (row - core_size) / depth; }
    int k_of(int row) const { return (row - core_size) % depth + 1; }
};

/// Checks squareness and exact symmetry of the matrix and wraps it.
/// Symmetry must hold as stored; readers that want repair must symmetrize
/// explicitly before calling.
FiniteGraph validate_finite_graph(const Eigen::MatrixXd& L,
                                  std::vector<std::string> labels = {});

GraphInfo graph_info(const FiniteGraph& g);

/// Validates channel data: b entries nonzero, K0 >= 0, stored lengths
/// consistent with K0.
void validate_channel(const ChannelSpec& ch, int core_size);

WebGraph make_web(FiniteGraph core, std::vector<ChannelSpec> channels);

/// Finite realization of a web graph with every channel cut at length N
/// (sites 1..N). Requires N >= K0+1 for every channel so that the stored
/// head is fully represented.
std::pair<FiniteGraph, TruncationMap> truncate(const WebGraph& web, int N);

}  // namespace graphschro
