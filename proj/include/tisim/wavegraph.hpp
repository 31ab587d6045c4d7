// Copyright 2026 The tisim developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TISIM_WAVEGRAPH_HPP
#define TISIM_WAVEGRAPH_HPP

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace tisim {

enum class NodeKind { source, detector };
enum class WaveKind { offer, confirmation };

inline const char* to_string(NodeKind k) {
    return k == NodeKind::source ? "source" : "detector";
}

inline const char* to_string(WaveKind k) {
    return k == WaveKind::offer ? "offer" : "confirmation";
}

/// Which sources emit which particle lines, and which particle lines each
/// detector's outcome vectors superpose over. A detector measuring in an
/// entangled basis lists every line its basis vectors mix.
struct WaveLayout {
    struct Source {
        std::string id;
        std::vector<std::string> lines;
    };
    struct Detector {
        std::string id;
        std::vector<std::string> lines;
    };
    std::vector<Source> sources;
    std::vector<Detector> detectors;
};

/// Offer/confirmation wave pattern of a detector configuration. Offer edges
/// run source -> detector along each particle line a detector touches;
/// every confirmation edge is the exact reverse of an offer edge. Nodes and
/// edges are kept sorted so serialization is byte-stable.
class WaveGraph {
public:
    struct Node {
        std::string id;
        NodeKind kind = NodeKind::detector;
    };
    struct Edge {
        std::string from;
        std::string to;
        WaveKind wave = WaveKind::offer;
        std::string line;
    };

    WaveGraph(std::vector<Node> nodes, std::vector<Edge> offer_edges) : nodes_(std::move(nodes)) {
        std::sort(nodes_.begin(), nodes_.end(),
                  [](const Node& a, const Node& b) { return a.id < b.id; });
        for (std::size_t i = 1; i < nodes_.size(); ++i) {
            if (nodes_[i - 1].id == nodes_[i].id) {
                throw std::invalid_argument("WaveGraph: duplicate node id '" + nodes_[i].id + "'");
            }
        }
        for (const Edge& e : offer_edges) {
            if (e.wave != WaveKind::offer) {
                throw std::invalid_argument("WaveGraph: construct from offer edges only");
            }
            require_node(e.from);
            require_node(e.to);
            edges_.push_back(e);
            edges_.push_back(Edge{e.to, e.from, WaveKind::confirmation, e.line});
        }
        std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.from, a.to, a.line, a.wave) < std::tie(b.from, b.to, b.line, b.wave);
        });
    }

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_node(const std::string& id) const {
        return std::any_of(nodes_.begin(), nodes_.end(),
                           [&](const Node& n) { return n.id == id; });
    }

    void require_node(const std::string& id) const {
        if (!has_node(id)) {
            throw std::invalid_argument("WaveGraph: unknown node '" + id + "'");
        }
    }

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
};

/// Build the wave pattern for a wiring layout. Every emitted particle line
/// must end on exactly one detector; a dangling line means part of the offer
/// wave is never absorbed, the same failure completeness validation guards.
inline WaveGraph build_wave_graph(const WaveLayout& layout) {
    std::map<std::string, std::string> line_source;
    for (const auto& src : layout.sources) {
        for (const std::string& line : src.lines) {
            if (!line_source.emplace(line, src.id).second) {
                throw std::invalid_argument("build_wave_graph: particle line '" + line +
                                            "' emitted by more than one source");
            }
        }
    }
    std::map<std::string, std::string> line_detector;
    for (const auto& det : layout.detectors) {
        for (const std::string& line : det.lines) {
            if (line_source.find(line) == line_source.end()) {
                throw std::invalid_argument("build_wave_graph: detector '" + det.id +
                                            "' watches unknown particle line '" + line + "'");
            }
            if (!line_detector.emplace(line, det.id).second) {
                throw std::invalid_argument("build_wave_graph: particle line '" + line +
                                            "' absorbed by more than one detector");
            }
        }
    }
    for (const auto& [line, src] : line_source) {
        if (line_detector.find(line) == line_detector.end()) {
            throw std::invalid_argument("build_wave_graph: particle line '" + line +
                                        "' has no detector; the offer wave is never absorbed");
        }
    }

    std::vector<WaveGraph::Node> nodes;
    for (const auto& src : layout.sources) nodes.push_back({src.id, NodeKind::source});
    for (const auto& det : layout.detectors) nodes.push_back({det.id, NodeKind::detector});
    std::vector<WaveGraph::Edge> offers;
    for (const auto& [line, det] : line_detector) {
        offers.push_back({line_source.at(line), det, WaveKind::offer, line});
    }
    return WaveGraph(std::move(nodes), std::move(offers));
}

/// True iff x and y lie in the same weakly connected component. Offer and
/// confirmation edges are traversed in both directions: an unbroken link
/// may run against the arrows.
inline bool connected(const WaveGraph& g, const std::string& x, const std::string& y) {
    g.require_node(x);
    g.require_node(y);
    if (x == y) return true;
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& e : g.edges()) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::set<std::string> visited{x};
    std::queue<std::string> frontier;
    frontier.push(x);
    while (!frontier.empty()) {
        const std::string cur = frontier.front();
        frontier.pop();
        for (const std::string& next : adj[cur]) {
            if (next == y) return true;
            if (visited.insert(next).second) frontier.push(next);
        }
    }
    return false;
}

/// DOT serialization with stable ordering (nodes and edges sorted by id):
/// the same graph always produces the same bytes. Offer edges render solid,
/// confirmation edges dashed.
inline std::string to_dot(const WaveGraph& g) {
    std::ostringstream out;
    out << "digraph wave_graph {\n";
    for (const auto& n : g.nodes()) {
        out << "  \"" << n.id << "\" [kind=\"" << to_string(n.kind) << "\"];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [wave=\"" << to_string(e.wave)
            << "\", line=\"" << e.line << "\", style=\""
            << (e.wave == WaveKind::offer ? "solid" : "dashed") << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace tisim

#endif // TISIM_WAVEGRAPH_HPP
