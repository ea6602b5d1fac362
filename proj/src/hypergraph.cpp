#include "hyperpd/hypergraph.hpp"

#include <algorithm>
#include <sstream>

namespace hyperpd {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("Hypergraph: negative vertex count");
  incident_.assign(static_cast<std::size_t>(n), {});
  edge_sets_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& verts = edges_[e];
    if (verts.empty()) throw std::invalid_argument("Hypergraph: empty edge");
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
      throw std::invalid_argument("Hypergraph: duplicate vertex in edge");
    if (verts.front() < 0 || verts.back() >= n)
      throw std::invalid_argument("Hypergraph: vertex out of range in edge");
    VertexSet bits(n);
    for (int v : verts) {
      bits.insert(v);
      incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(e));
    }
    edge_sets_.push_back(std::move(bits));
  }
  neighbor_sets_.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    VertexSet nb(n);
    for (int e : incident_[static_cast<std::size_t>(v)]) nb |= edge_sets_[static_cast<std::size_t>(e)];
    if (!incident_[static_cast<std::size_t>(v)].empty()) nb.erase(v);
    neighbor_sets_.push_back(std::move(nb));
  }
}

void Hypergraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("Hypergraph: vertex out of range");
}

std::span<const int> Hypergraph::incident_edges(int v) const {
  check_vertex(v);
  return incident_[static_cast<std::size_t>(v)];
}

std::optional<int> Hypergraph::uniformity() const {
  if (edges_.empty()) return std::nullopt;
  std::size_t r = edges_.front().size();
  for (const auto& e : edges_)
    if (e.size() != r) return std::nullopt;
  return static_cast<int>(r);
}

const VertexSet& Hypergraph::neighbors(int v) const {
  check_vertex(v);
  return neighbor_sets_[static_cast<std::size_t>(v)];
}

VertexSet Hypergraph::closed_neighborhood(const VertexSet& s) const {
  VertexSet out = s;
  s.for_each([&](int v) { out |= neighbors(v); });
  return out;
}

bool Hypergraph::is_connected() const {
  if (n_ == 0) return false;
  if (n_ == 1) return true;
  VertexSet seen(n_);
  seen.insert(0);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    (neighbors(v) - seen).for_each([&](int u) {
      seen.insert(u);
      stack.push_back(u);
    });
  }
  return seen.count() == n_;
}

bool Hypergraph::has_isolated_vertex() const {
  for (int v = 0; v < n_; ++v)
    if (incident_[static_cast<std::size_t>(v)].empty()) return true;
  return false;
}

int Hypergraph::induced_component_count(const VertexSet& d) const {
  if (d.universe_size() != n_) throw std::invalid_argument("induced_component_count: universe mismatch");
  if (d.empty()) throw std::invalid_argument("induced_component_count: empty vertex set");
  VertexSet remaining = d;
  int components = 0;
  while (!remaining.empty()) {
    ++components;
    int start = remaining.first();
    remaining.erase(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      (neighbors(v) & remaining).for_each([&](int u) { stack.push_back(u); });
      remaining -= neighbors(v);
    }
  }
  return components;
}

namespace {

int parse_int_token(const std::string& tok, int line_no, const char* what) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
  }
  if (pos != tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": bad " + what + " '" + tok + "'");
  return value;
}

}  // namespace

Hypergraph parse_hgr(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0, m = 0;
  std::vector<std::vector<int>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      std::string fmt;
      ls >> fmt;
      if (fmt != "hpd") throw ParseError("line " + std::to_string(line_no) + ": expected 'p hpd <n> <m>'");
      std::string ntok, mtok, extra;
      if (!(ls >> ntok >> mtok)) throw ParseError("line " + std::to_string(line_no) + ": expected 'p hpd <n> <m>'");
      if (ls >> extra) throw ParseError("line " + std::to_string(line_no) + ": trailing tokens in header");
      n = parse_int_token(ntok, line_no, "vertex count");
      m = parse_int_token(mtok, line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError("line " + std::to_string(line_no) + ": negative header value");
      have_header = true;
      continue;
    }
    if (kind == "e") {
      if (!have_header) throw ParseError("line " + std::to_string(line_no) + ": edge before header");
      if (static_cast<int>(edges.size()) >= m)
        throw ParseError("line " + std::to_string(line_no) + ": more edges than declared");
      std::vector<int> verts;
      std::string tok;
      while (ls >> tok) {
        int v = parse_int_token(tok, line_no, "vertex index");
        if (v < 1 || v > n)
          throw ParseError("line " + std::to_string(line_no) + ": vertex index " + std::to_string(v) +
                           " outside 1.." + std::to_string(n));
        verts.push_back(v - 1);
      }
      if (verts.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty edge");
      std::vector<int> sorted = verts;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError("line " + std::to_string(line_no) + ": duplicate vertex in edge");
      edges.push_back(std::move(verts));
      continue;
    }
    throw ParseError("line " + std::to_string(line_no) + ": unknown line type '" + kind + "'");
  }
  if (!have_header) throw ParseError("missing header line 'p hpd <n> <m>'");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError("edge count mismatch: header declares " + std::to_string(m) + ", found " +
                     std::to_string(edges.size()));
  return Hypergraph(n, std::move(edges));
}

std::string serialize_hgr(const Hypergraph& h) {
  return serialize_hgr(h, {});
}

std::string serialize_hgr(const Hypergraph& h, const std::vector<std::string>& comments) {
  std::string out;
  for (const auto& c : comments) out += "c " + c + "\n";
  out += "p hpd " + std::to_string(h.vertex_count()) + " " + std::to_string(h.edge_count()) + "\n";
  for (int e = 0; e < h.edge_count(); ++e) {
    out += "e";
    for (int v : h.edge(e)) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  return out;
}

}  // namespace hyperpd
