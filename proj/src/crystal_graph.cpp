#include "crystal/crystal_graph.hpp"

#include <deque>
#include <sstream>

#include <json.hpp>

#include "crystal/errors.hpp"

namespace crystal {

std::size_t CrystalGraph::add_node(CrystalNode node) {
  nodes_.push_back(std::move(node));
  out_.emplace_back(n_);
  in_.emplace_back(n_);
  return nodes_.size() - 1;
}

void CrystalGraph::add_edge(std::size_t src, int color, std::size_t dst) {
  if (color < 1 || color > n_) throw InternalError("edge color out of range");
  auto& out = out_.at(src)[color - 1];
  auto& in = in_.at(dst)[color - 1];
  if (out || in)
    throw InternalError("duplicate " + std::to_string(color) + "-edge at " + nodes_[src].label + " -> " +
                        nodes_[dst].label);
  out = dst;
  in = src;
  edges_.push_back({src, color, dst});
}

std::optional<std::size_t> CrystalGraph::f(std::size_t node, int i) const { return out_.at(node).at(i - 1); }
std::optional<std::size_t> CrystalGraph::e(std::size_t node, int i) const { return in_.at(node).at(i - 1); }

std::optional<std::size_t> CrystalGraph::find_label(const std::string& label) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (nodes_[k].label == label) return k;
  return std::nullopt;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r;
}

}  // namespace

std::string CrystalGraph::to_dot(const std::string& name) const {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  if (wdims_) {
    os << "  graph [wdims=\"";
    for (std::size_t k = 0; k < wdims_->size(); ++k) os << (k ? "," : "") << (*wdims_)[k];
    os << "\"];\n";
  }
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    os << "  n" << k << " [label=\"" << dot_escape(nodes_[k].label) << "\", wt=\"" << nodes_[k].wt.to_string()
       << "\"];\n";
  for (const auto& edge : edges_)
    os << "  n" << edge.src << " -> n" << edge.dst << " [label=\"" << edge.color << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string CrystalGraph::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  if (wdims_) j["wdims"] = *wdims_;
  j["root"] = root_;
  j["nodes"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    nlohmann::ordered_json node;
    node["id"] = k;
    node["label"] = nodes_[k].label;
    node["wt"] = nodes_[k].wt.coords;
    node["eps"] = nodes_[k].eps;
    node["phi"] = nodes_[k].phi;
    j["nodes"].push_back(node);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& edge : edges_) j["edges"].push_back({{"src", edge.src}, {"color", edge.color}, {"dst", edge.dst}});
  return j.dump();
}

std::vector<std::string> check_crystal_axioms(const CrystalGraph& g, const RootDatum& d,
                                              const AxiomOptions& options) {
  std::vector<std::string> bad;
  auto fail = [&](std::size_t k, const std::string& what) { bad.push_back(g.node(k).label + ": " + what); };
  const int n = g.rank();
  for (std::size_t k = 0; k < g.nodes().size(); ++k) {
    const auto& x = g.node(k);
    if (static_cast<int>(x.eps.size()) != n || static_cast<int>(x.phi.size()) != n) {
      fail(k, "decoration length");
      continue;
    }
    for (int i = 1; i <= n; ++i) {
      if (x.phi[i - 1] - x.eps[i - 1] != pairing(d, i, x.wt)) fail(k, "phi - eps != <h_i, wt> for i=" + std::to_string(i));
      if (x.eps[i - 1] < 0) fail(k, "negative eps");
      int up = 0;
      for (auto y = g.e(k, i); y; y = g.e(*y, i)) ++up;
      if (up != x.eps[i - 1]) fail(k, "eps_" + std::to_string(i) + " is not the e-string length");
      if (options.closed_under_f) {
        int down = 0;
        for (auto y = g.f(k, i); y; y = g.f(*y, i)) ++down;
        if (down != x.phi[i - 1]) fail(k, "phi_" + std::to_string(i) + " is not the f-string length");
      }
      if (auto y = g.f(k, i)) {
        const auto& fy = g.node(*y);
        if (!(fy.wt == x.wt - simple_root(d, i))) fail(k, "wt(f_" + std::to_string(i) + " X) != wt X - alpha_i");
        if (fy.eps[i - 1] != x.eps[i - 1] + 1) fail(k, "eps does not increase along f_" + std::to_string(i));
        if (fy.phi[i - 1] != x.phi[i - 1] - 1) fail(k, "phi does not decrease along f_" + std::to_string(i));
        if (g.e(*y, i) != k) fail(k, "e_" + std::to_string(i) + " f_" + std::to_string(i) + " X != X");
      }
    }
  }
  std::vector<bool> seen(g.nodes().size(), false);
  std::deque<std::size_t> queue;
  if (!g.nodes().empty()) {
    queue.push_back(g.root());
    seen[g.root()] = true;
  }
  while (!queue.empty()) {
    const auto k = queue.front();
    queue.pop_front();
    for (int i = 1; i <= n; ++i)
      if (auto y = g.f(k, i); y && !seen[*y]) {
        seen[*y] = true;
        queue.push_back(*y);
      }
  }
  for (std::size_t k = 0; k < seen.size(); ++k)
    if (!seen[k]) fail(k, "not reachable from the root");
  return bad;
}

}  // namespace crystal
