#include "kmatch/canon.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

namespace kmatch {

namespace {

using Pair = std::pair<Vertex, Vertex>;
using Colors = std::vector<std::uint32_t>;

// One connected component as a dense multiplicity matrix.
struct Component {
  std::vector<Vertex> vertices;  // global ids, local index = position
  std::vector<std::uint32_t> mult;
  std::size_t size = 0;

  std::uint32_t at(std::size_t a, std::size_t b) const { return mult[a * size + b]; }
};

// Assigns each vertex the number of vertices with a strictly smaller key.
template <class Key>
Colors rank_by(const std::vector<Key>& keys) {
  std::vector<std::size_t> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  Colors colors(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && keys[order[i]] == keys[order[i - 1]]) {
      colors[order[i]] = colors[order[i - 1]];
    } else {
      colors[order[i]] = static_cast<std::uint32_t>(i);
    }
  }
  return colors;
}

std::size_t distinct(const Colors& colors) {
  Colors sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

class ComponentCanon {
 public:
  explicit ComponentCanon(const Component& c) : c_(c) {}

  void run() {
    const auto s = c_.size;
    std::vector<std::vector<std::uint32_t>> keys(s);
    for (std::size_t v = 0; v < s; ++v) {
      std::uint32_t degree = 0;
      std::vector<std::uint32_t> mults;
      for (std::size_t w = 0; w < s; ++w) {
        if (c_.at(v, w) == 0) continue;
        degree += c_.at(v, w);
        mults.push_back(c_.at(v, w));
      }
      std::sort(mults.begin(), mults.end());
      keys[v].push_back(degree);
      keys[v].insert(keys[v].end(), mults.begin(), mults.end());
    }
    search(refine(rank_by(keys)));
  }

  const std::vector<Pair>& best_edges() const { return best_; }
  const Colors& best_leaf() const { return best_leaf_; }
  std::uint64_t automorphisms() const { return automorphisms_; }

 private:
  Colors refine(Colors colors) const {
    const auto s = c_.size;
    std::size_t cells = distinct(colors);
    using Key = std::pair<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>>;
    std::vector<Key> keys(s);
    while (cells < s) {
      for (std::size_t v = 0; v < s; ++v) {
        keys[v].first = colors[v];
        keys[v].second.clear();
        for (std::size_t w = 0; w < s; ++w) {
          if (c_.at(v, w) != 0) keys[v].second.emplace_back(colors[w], c_.at(v, w));
        }
        std::sort(keys[v].second.begin(), keys[v].second.end());
      }
      Colors next = rank_by(keys);
      const auto next_cells = distinct(next);
      colors = std::move(next);
      if (next_cells == cells) break;
      cells = next_cells;
    }
    return colors;
  }

  void search(const Colors& colors) {
    const auto s = c_.size;
    // Target cell: the non-singleton cell with the smallest color.
    std::vector<std::uint32_t> cell_size(s, 0);
    for (auto col : colors) ++cell_size[col];
    std::uint32_t target = 0;
    bool discrete = true;
    for (std::uint32_t col = 0; col < s; ++col) {
      if (cell_size[col] > 1) {
        target = col;
        discrete = false;
        break;
      }
    }
    if (discrete) {
      leaf(colors);
      return;
    }
    for (std::size_t v = 0; v < s; ++v) {
      if (colors[v] != target) continue;
      Colors next = colors;
      for (std::size_t u = 0; u < s; ++u) {
        if (u != v && colors[u] == target) next[u] = target + 1;
      }
      search(refine(std::move(next)));
    }
  }

  void leaf(const Colors& colors) {
    std::vector<Pair> edges;
    const auto s = c_.size;
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = a + 1; b < s; ++b) {
        const auto mu = c_.at(a, b);
        if (mu == 0) continue;
        const Pair p{std::min(colors[a], colors[b]), std::max(colors[a], colors[b])};
        edges.insert(edges.end(), mu, p);
      }
    }
    std::sort(edges.begin(), edges.end());
    if (automorphisms_ == 0 || edges < best_) {
      best_ = std::move(edges);
      best_leaf_ = colors;
      automorphisms_ = 1;
    } else if (edges == best_) {
      ++automorphisms_;
    }
  }

  const Component& c_;
  std::vector<Pair> best_;
  Colors best_leaf_;
  std::uint64_t automorphisms_ = 0;
};

struct LabeledComponent {
  std::size_t size;
  std::vector<Pair> edges;
  std::vector<Vertex> vertices;
  Colors leaf;
  std::uint64_t automorphisms;
};

std::string mg_text(std::size_t n, const std::vector<Pair>& edges) {
  std::string out = "mg " + std::to_string(n) + " " + std::to_string(edges.size()) + "\n";
  for (auto [a, b] : edges) {
    out += std::to_string(a);
    out += ' ';
    out += std::to_string(b);
    out += '\n';
  }
  return out;
}

struct CanonResult {
  std::vector<Vertex> label;
  std::vector<Pair> edges;
  boost::multiprecision::cpp_int automorphisms;
};

CanonResult canonicalize(const Multigraph& g) {
  const auto n = g.vertex_count();
  if (n > kCanonMaxVertices) {
    throw GraphError("canonical labeling supports at most " + std::to_string(kCanonMaxVertices) +
                     " vertices, got " + std::to_string(n));
  }
  const auto comp_of = component_index(g);
  std::vector<Component> comps;
  std::vector<std::size_t> local(n);
  for (Vertex v = 0; v < n; ++v) {
    if (comp_of[v] >= comps.size()) comps.resize(comp_of[v] + 1);
    local[v] = comps[comp_of[v]].vertices.size();
    comps[comp_of[v]].vertices.push_back(v);
  }
  for (auto& c : comps) {
    c.size = c.vertices.size();
    c.mult.assign(c.size * c.size, 0);
  }
  for (const Edge& e : g.edges()) {
    auto& c = comps[comp_of[e.u]];
    ++c.mult[local[e.u] * c.size + local[e.v]];
    ++c.mult[local[e.v] * c.size + local[e.u]];
  }

  std::vector<LabeledComponent> labeled;
  labeled.reserve(comps.size());
  for (const auto& c : comps) {
    ComponentCanon canon(c);
    canon.run();
    labeled.push_back({c.size, canon.best_edges(), c.vertices, canon.best_leaf(),
                       canon.automorphisms()});
  }
  std::sort(labeled.begin(), labeled.end(), [](const auto& a, const auto& b) {
    return std::tie(a.size, a.edges) < std::tie(b.size, b.edges);
  });

  CanonResult out;
  out.label.assign(n, 0);
  out.automorphisms = 1;
  Vertex offset = 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < labeled.size(); ++i) {
    const auto& lc = labeled[i];
    for (std::size_t j = 0; j < lc.size; ++j) out.label[lc.vertices[j]] = offset + lc.leaf[j];
    for (auto [a, b] : lc.edges) out.edges.emplace_back(a + offset, b + offset);
    out.automorphisms *= lc.automorphisms;
    // Isomorphic components may be permuted among themselves.
    run = (i > 0 && lc.size == labeled[i - 1].size && lc.edges == labeled[i - 1].edges) ? run + 1 : 1;
    out.automorphisms *= run;
    offset += static_cast<Vertex>(lc.size);
  }
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Multigraph& g) {
  auto result = canonicalize(g);
  CanonicalLabeling out;
  out.label = std::move(result.label);
  out.form.text = mg_text(g.vertex_count(), result.edges);
  out.form.automorphisms = std::move(result.automorphisms);
  return out;
}

CanonicalForm canonical_form(const Multigraph& g) { return canonical_labeling(g).form; }

Multigraph canonical_graph(const Multigraph& g) {
  const auto result = canonicalize(g);
  return Multigraph(g.vertex_count(), result.edges);
}

bool is_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    // Still enforce the size limit so the contract does not depend on sizes.
    if (a.vertex_count() > kCanonMaxVertices || b.vertex_count() > kCanonMaxVertices) {
      throw GraphError("canonical labeling supports at most " +
                       std::to_string(kCanonMaxVertices) + " vertices");
    }
    return false;
  }
  return canonical_form(a).text == canonical_form(b).text;
}

std::string short_hash(const CanonicalForm& form) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : form.text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf, 12);
}

}  // namespace kmatch
