#include "graphschro/graph_model.hpp"

#include <algorithm>
#include <queue>

namespace graphschro {

std::vector<int> FiniteGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int j = 0; j < size(); ++j)
        if (has_edge(v, j)) out.push_back(j);
    return out;
}

int WebGraph::max_K0() const {
    int m = 0;
    for (const auto& ch : channels) m = std::max(m, ch.K0);
    return m;
}

FiniteGraph validate_finite_graph(const Eigen::MatrixXd& L,
                                  std::vector<std::string> labels) {
    if (L.rows() != L.cols())
        throw NonSquareError("matrix is " + std::to_string(L.rows()) + "x" +
                             std::to_string(L.cols()));
    double defect = 0.0;
    for (int i = 0; i < L.rows(); ++i)
        for (int j = i + 1; j < L.cols(); ++j)
            defect = std::max(defect, std::abs(L(i, j) - L(j, i)));
    if (defect > 0.0)
        throw NonSymmetricError("max |L(a,b)-L(b,a)| = " + std::to_string(defect));
    if (!labels.empty() && static_cast<int>(labels.size()) != L.rows())
        throw Error("label count does not match vertex count");
    return FiniteGraph{L, std::move(labels)};
}

GraphInfo graph_info(const FiniteGraph& g) {
    GraphInfo info;
    info.n = g.size();
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (g.L(i, j) != 0.0) ++info.edge_count;

    std::vector<int> comp(static_cast<size_t>(g.size()), -1);
    int ncomp = 0;
    for (int s = 0; s < g.size(); ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp[static_cast<size_t>(s)] = ncomp;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = ncomp;
                    q.push(w);
                }
            }
        }
        ++ncomp;
    }
    info.components = ncomp;
    info.connected = (g.size() == 0) || ncomp == 1;
    return info;
}

void validate_channel(const ChannelSpec& ch, int core_size) {
    if (ch.attach < 0 || ch.attach >= core_size)
        throw Error("channel attach vertex " + std::to_string(ch.attach) +
                    " out of range");
    if (ch.K0 < 0) throw Error("channel K0 must be >= 0");
    if (static_cast<int>(ch.b.size()) != ch.K0)
        throw Error("channel stores " + std::to_string(ch.b.size()) +
                    " b-values, expected K0 = " + std::to_string(ch.K0));
    if (static_cast<int>(ch.a.size()) != ch.K0)
        throw Error("channel stores " + std::to_string(ch.a.size()) +
                    " a-values, expected K0 = " + std::to_string(ch.K0));
    for (double bk : ch.b)
        if (bk == 0.0) throw ZeroCoefficientError("channel has b(k) = 0");
}

WebGraph make_web(FiniteGraph core, std::vector<ChannelSpec> channels) {
    for (const auto& ch : channels) validate_channel(ch, core.size());
    return WebGraph{std::move(core), std::move(channels)};
}

std::pair<FiniteGraph, TruncationMap> truncate(const WebGraph& web, int N) {
    for (const auto& ch : web.channels)
        if (N < ch.K0 + 1)
            throw TruncationTooShortError("N = " + std::to_string(N) +
                                          " < K0+1 = " + std::to_string(ch.K0 + 1));
    TruncationMap map;
    map.core_size = web.core.size();
    map.depth = N;
    map.num_channels = web.num_channels();

    const int n = map.total();
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    L.topLeftCorner(map.core_size, map.core_size) = web.core.L;

    for (int c = 0; c < map.num_channels; ++c) {
        const ChannelSpec& ch = web.channels[static_cast<size_t>(c)];
        // coupling (nu(0), nu(1))
        int first = map.site(c, 1);
        L(ch.attach, first) = -ch.b_at(0);
        L(first, ch.attach) = -ch.b_at(0);
        for (int k = 1; k <= N; ++k) {
            int row = map.site(c, k);
            L(row, row) = ch.a_at(k);
            if (k < N) {
                int next = map.site(c, k + 1);
                L(row, next) = -ch.b_at(k);
                L(next, row) = -ch.b_at(k);
            }
        }
    }
    return {validate_finite_graph(L), map};
}

}  // namespace graphschro
