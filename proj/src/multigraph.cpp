#include "kmatch/multigraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace kmatch {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : GraphError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                 ": " + what),
      line_(line),
      column_(column) {}

Multigraph::Multigraph(std::size_t vertex_count) : incidence_(vertex_count) {}

Multigraph::Multigraph(std::size_t vertex_count,
                       std::span<const std::pair<Vertex, Vertex>> edges)
    : incidence_(vertex_count) {
  edges_.reserve(edges.size());
  EdgeId id = 0;
  for (auto [a, b] : edges) {
    edges_.push_back(Edge{std::min(a, b), std::max(a, b), id++});
  }
  index();
}

Multigraph::Multigraph(std::size_t vertex_count,
                       std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Multigraph(vertex_count,
                 std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

Multigraph Multigraph::from_edges(std::size_t vertex_count, std::vector<Edge> edges) {
  Multigraph g(vertex_count);
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].id == edges[i - 1].id) {
      throw GraphError("duplicate edge id " + std::to_string(edges[i].id));
    }
  }
  g.edges_ = std::move(edges);
  g.index();
  return g;
}

void Multigraph::index() {
  for (auto& list : incidence_) list.clear();
  const auto n = incidence_.size();
  for (std::uint32_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw GraphError("loop at vertex " + std::to_string(e.u));
    if (e.v >= n) {
      throw GraphError("vertex " + std::to_string(e.v) + " out of range for n=" +
                       std::to_string(n));
    }
    incidence_[e.u].push_back(i);
    incidence_[e.v].push_back(i);
  }
}

void Multigraph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(vertex_count()));
  }
}

std::optional<std::size_t> Multigraph::position(EdgeId id) const noexcept {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

bool Multigraph::has_edge(EdgeId id) const noexcept { return position(id).has_value(); }

const Edge& Multigraph::edge(EdgeId id) const {
  auto pos = position(id);
  if (!pos) throw GraphError("unknown edge id " + std::to_string(id));
  return edges_[*pos];
}

std::span<const std::uint32_t> Multigraph::incident(Vertex v) const {
  check_vertex(v);
  return incidence_[v];
}

std::size_t Multigraph::degree(Vertex v) const {
  check_vertex(v);
  return incidence_[v].size();
}

std::size_t Multigraph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& list : incidence_) d = std::max(d, list.size());
  return d;
}

std::size_t Multigraph::min_degree() const noexcept {
  if (incidence_.empty()) return 0;
  std::size_t d = incidence_.front().size();
  for (const auto& list : incidence_) d = std::min(d, list.size());
  return d;
}

std::size_t Multigraph::multiplicity(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  const Vertex lo = std::min(a, b), hi = std::max(a, b);
  std::size_t count = 0;
  for (auto pos : incidence_[lo]) {
    if (edges_[pos].u == lo && edges_[pos].v == hi) ++count;
  }
  return count;
}

EdgeId Multigraph::next_edge_id() const noexcept {
  return edges_.empty() ? 0 : edges_.back().id + 1;
}

Multigraph Multigraph::with_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw GraphError("loop at vertex " + std::to_string(a));
  Multigraph g = *this;
  const auto pos = static_cast<std::uint32_t>(g.edges_.size());
  g.edges_.push_back(Edge{std::min(a, b), std::max(a, b), next_edge_id()});
  g.incidence_[a].push_back(pos);
  g.incidence_[b].push_back(pos);
  return g;
}

std::size_t degree(const Multigraph& g, Vertex v) { return g.degree(v); }

std::vector<std::size_t> component_index(const Multigraph& g) {
  const auto n = g.vertex_count();
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(n, unset);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (auto pos : g.incident(x)) {
        const Vertex y = g.edges()[pos].other(x);
        if (comp[y] == unset) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<std::vector<Vertex>> components(const Multigraph& g) {
  const auto comp = component_index(g);
  std::size_t count = 0;
  for (auto c : comp) count = std::max(count, c + 1);
  std::vector<std::vector<Vertex>> out(count);
  for (Vertex v = 0; v < comp.size(); ++v) out[comp[v]].push_back(v);
  return out;
}

Multigraph delete_edge(const Multigraph& g, EdgeId e) {
  const auto pos = g.position(e);
  if (!pos) throw GraphError("unknown edge id " + std::to_string(e));
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(*pos));
  return Multigraph::from_edges(g.vertex_count(), std::move(edges));
}

Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
  const auto shift = static_cast<Vertex>(a.vertex_count());
  const EdgeId id_shift = a.next_edge_id();
  std::vector<Edge> edges(a.edges().begin(), a.edges().end());
  for (const Edge& e : b.edges()) {
    edges.push_back(Edge{e.u + shift, e.v + shift, e.id + id_shift});
  }
  return Multigraph::from_edges(a.vertex_count() + b.vertex_count(), std::move(edges));
}

Multigraph permute(const Multigraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.push_back(Edge{perm[e.u], perm[e.v], e.id});
  return Multigraph::from_edges(g.vertex_count(), std::move(edges));
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-comment line; false at end of input.
  bool next(std::string_view& line) {
    while (offset_ < text_.size()) {
      auto end = text_.find('\n', offset_);
      if (end == std::string_view::npos) end = text_.size();
      line = text_.substr(offset_, end - offset_);
      offset_ = end + 1;
      ++line_no_;
      if (!line.empty() && line.front() == '#') continue;
      return true;
    }
    return false;
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t offset_ = 0;
  std::size_t line_no_ = 0;
};

// Reads a decimal at `pos`, advancing it. Leading zeros are allowed only for
// the single digit "0".
std::uint64_t read_number(std::string_view line, std::size_t& pos, std::size_t line_no) {
  if (pos >= line.size() || line[pos] < '0' || line[pos] > '9') {
    throw ParseError(line_no, pos + 1, "expected a decimal number");
  }
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
  if (ec != std::errc()) throw ParseError(line_no, pos + 1, "number out of range");
  const auto start = pos;
  pos = static_cast<std::size_t>(ptr - line.data());
  if (pos - start > 1 && line[start] == '0') {
    throw ParseError(line_no, start + 1, "leading zero in number");
  }
  return value;
}

void expect_space(std::string_view line, std::size_t& pos, std::size_t line_no) {
  if (pos >= line.size() || line[pos] != ' ') {
    throw ParseError(line_no, pos + 1, "expected a single space");
  }
  ++pos;
}

void expect_end(std::string_view line, std::size_t pos, std::size_t line_no) {
  if (pos != line.size()) throw ParseError(line_no, pos + 1, "unexpected trailing characters");
}

}  // namespace

Multigraph parse_graph(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) throw ParseError(1, 1, "missing 'mg <n> <m>' header");
  std::size_t pos = 0;
  if (line.substr(0, 2) != "mg") throw ParseError(reader.line_no(), 1, "expected 'mg'");
  pos = 2;
  expect_space(line, pos, reader.line_no());
  const auto n = read_number(line, pos, reader.line_no());
  expect_space(line, pos, reader.line_no());
  const auto m = read_number(line, pos, reader.line_no());
  expect_end(line, pos, reader.line_no());
  if (n > (1u << 24)) throw ParseError(reader.line_no(), 4, "vertex count too large");

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 20)));
  for (std::uint64_t i = 0; i < m; ++i) {
    if (!reader.next(line)) {
      throw ParseError(reader.line_no() + 1, 1,
                       "expected " + std::to_string(m) + " edge lines, got " +
                           std::to_string(i));
    }
    const auto line_no = reader.line_no();
    pos = 0;
    const auto u = read_number(line, pos, line_no);
    if (u >= n) throw ParseError(line_no, 1, "vertex index " + std::to_string(u) + " >= n");
    expect_space(line, pos, line_no);
    const auto v_col = pos + 1;
    const auto v = read_number(line, pos, line_no);
    expect_end(line, pos, line_no);
    if (v >= n) {
      throw ParseError(line_no, v_col, "vertex index " + std::to_string(v) + " >= n");
    }
    if (u == v) throw ParseError(line_no, 1, "loop edge " + std::to_string(u) + "-" + std::to_string(v));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  // Only an empty final line (a trailing LF) may follow.
  while (reader.next(line)) {
    if (!line.empty()) throw ParseError(reader.line_no(), 1, "unexpected content after edge list");
  }
  return Multigraph(static_cast<std::size_t>(n), edges);
}

std::string to_mg(const Multigraph& g) {
  std::string out = "mg " + std::to_string(g.vertex_count()) + " " +
                    std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

namespace graphs {

Multigraph k2() { return Multigraph(2, {{0, 1}}); }

Multigraph complete(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return Multigraph(n, edges);
}

Multigraph cycle(std::size_t n) {
  if (n < 2) throw GraphError("cycle needs at least 2 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Multigraph(n, edges);
}

Multigraph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Multigraph(n, edges);
}

Multigraph bundle(std::size_t count) {
  std::vector<std::pair<Vertex, Vertex>> edges(count, {0, 1});
  return Multigraph(2, edges);
}

Multigraph theta() { return bundle(3); }

}  // namespace graphs

}  // namespace kmatch
