#include "kmatch/cli.hpp"

#include "kmatch/alternating.hpp"
#include "kmatch/canon.hpp"
#include "kmatch/family.hpp"
#include "kmatch/matching.hpp"
#include "kmatch/multigraph.hpp"
#include "kmatch/reduction.hpp"
#include "kmatch/report_json.hpp"
#include "kmatch/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace kmatch::cli {

namespace {

using json::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::string input = "-";
  unsigned k = 0;
  std::optional<std::uint64_t> cap;
  std::optional<std::size_t> limit;
  std::string cycle, cycle_edges, m, n, f;
  std::optional<std::size_t> max_vertices;
  std::optional<std::size_t> max_multiplicity;
  unsigned jobs = 1;
  std::uint64_t node_limit = SearchConfig{}.node_limit;
  std::string out_dir;
  std::string suite;
  std::uint64_t trials = verify::SuiteOptions{}.trials;
  std::uint64_t seed = verify::SuiteOptions{}.seed;
};

std::vector<std::uint32_t> parse_list(const std::string& text, const char* flag) {
  std::vector<std::uint32_t> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || text[i] == ' ') {
      ++i;
      continue;
    }
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + i) {
      throw UsageError(std::string(flag) + ": expected a list of non-negative integers, got '" +
                       text + "'");
    }
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - text.data());
  }
  return out;
}

PerfectMatching to_matching(std::vector<std::uint32_t> ids) {
  std::sort(ids.begin(), ids.end());
  return PerfectMatching{std::move(ids)};
}

Multigraph read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open input file '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  return parse_graph(buffer.str());
}

// Edge i of the cycle joins vertex i and vertex i+1. Pairs the cycle's
// m-edges with m; the remaining positions take the lowest unused edge id.
OrientedCycle build_cycle(const Multigraph& g, const std::vector<Vertex>& vertices,
                          const PerfectMatching& m) {
  const std::size_t len = vertices.size();
  if (len < 2) throw DomainError("cycle needs at least 2 vertices");
  for (Vertex v : vertices) {
    if (v >= g.vertex_count()) {
      throw DomainError("cycle vertex " + std::to_string(v) + " is not a vertex of the graph");
    }
  }
  auto m_edge = [&](std::size_t i) -> std::optional<EdgeId> {
    const Vertex a = vertices[i], b = vertices[(i + 1) % len];
    for (EdgeId id : m.edges) {
      if (!g.has_edge(id)) continue;
      const Edge& e = g.edge(id);
      if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return id;
    }
    return std::nullopt;
  };
  const std::size_t parity = m_edge(0) ? 0 : 1;
  std::vector<EdgeId> edges(len);
  std::vector<bool> fixed(len, false);
  for (std::size_t i = parity; i < len; i += 2) {
    if (auto id = m_edge(i)) {
      edges[i] = *id;
      fixed[i] = true;
    }
  }
  std::vector<EdgeId> used;
  for (std::size_t i = 0; i < len; ++i) {
    if (fixed[i]) used.push_back(edges[i]);
  }
  for (std::size_t i = 0; i < len; ++i) {
    if (fixed[i]) continue;
    const Vertex a = vertices[i], b = vertices[(i + 1) % len];
    std::optional<EdgeId> best;
    for (const Edge& e : g.edges()) {
      const bool joins = (e.u == a && e.v == b) || (e.u == b && e.v == a);
      if (joins && std::find(used.begin(), used.end(), e.id) == used.end()) {
        best = e.id;
        break;
      }
    }
    if (!best) {
      throw DomainError("no unused edge joins cycle vertices " + std::to_string(a) + " and " +
                        std::to_string(b));
    }
    edges[i] = *best;
    used.push_back(*best);
  }
  return OrientedCycle(vertices, edges);
}

void print_graph_block(std::ostream& out, const std::string& mg, const std::string& indent) {
  std::istringstream lines(mg);
  std::string line;
  while (std::getline(lines, line)) out << indent << line << '\n';
}

std::string join(const std::vector<std::uint32_t>& values, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(values[i]);
  }
  return s;
}

void text_verdict(std::ostream& out, const MinimalityVerdict& v, unsigned k) {
  out << "k-matchable (k=" << k << "): " << (v.is_k_matchable ? "yes" : "no") << '\n';
  out << "minimal: " << (v.is_minimal ? "yes" : "no") << '\n';
  out << "matchings: " << v.count << (v.count_capped ? "+" : "") << '\n';
  if (v.witness_edge) out << "witness edge: " << *v.witness_edge << '\n';
}

void text_trace(std::ostream& out, const ReductionTrace& t) {
  out << "base: " << t.base.vertex_count() << " vertices, " << t.base.edge_count()
      << " edges\n";
  print_graph_block(out, to_mg(t.base), "  ");
  out << "stripped K2 components: " << t.stripped_k2 << '\n';
  for (const auto& step : t.steps_in_original_names()) {
    if (const auto* s = std::get_if<StripStep>(&step)) {
      out << "strip K2 " << s->a << '-' << s->b << " (edge " << s->edge << ")\n";
    } else {
      const auto& sm = std::get<SmoothStep>(step);
      out << "smooth " << sm.w << '-' << sm.x << '-' << sm.y << '-' << sm.z << " (edges "
          << sm.wx << ',' << sm.xy << ',' << sm.yz << " -> " << sm.new_edge << ")\n";
    }
  }
}

int cmd_count(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = read_input(o.input, in);
  const auto count = count_matchings(g, o.cap);
  if (o.format == "json") {
    Json j;
    j["count"] = count;
    if (o.cap) j["cap"] = *o.cap;
    out << j.dump() << '\n';
  } else {
    out << count << '\n';
  }
  return kOk;
}

int cmd_enumerate(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = read_input(o.input, in);
  const auto set = enumerate_matchings(g, o.limit);
  if (o.format == "json") {
    out << json::matching_set(set).dump() << '\n';
  } else {
    for (const auto& m : set.matchings) out << join(m.edges) << '\n';
    out << set.matchings.size() << " perfect matchings" << (set.exhaustive ? "" : " (limit reached)")
        << '\n';
  }
  return kOk;
}

int cmd_minimal(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = read_input(o.input, in);
  const auto v = is_minimally_k_matchable(g, o.k);
  if (o.format == "json") {
    out << json::verdict(v, o.k).dump() << '\n';
  } else {
    text_verdict(out, v, o.k);
  }
  return kOk;
}

int cmd_reduce(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = read_input(o.input, in);
  const auto t = reduce(g);
  if (o.format == "json") {
    out << json::trace(t).dump() << '\n';
  } else {
    text_trace(out, t);
  }
  return kOk;
}

int cmd_classify(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = read_input(o.input, in);
  const auto c = classify(g, o.k);
  if (o.format == "json") {
    out << json::classification(c).dump() << '\n';
    return kOk;
  }
  text_verdict(out, c.verdict, o.k);
  if (c.base_form) {
    out << "base (canonical, hash " << short_hash(*c.base_form) << "):\n";
    print_graph_block(out, c.base_form->text, "  ");
    out << "stripped K2 components: " << c.stripped_k2 << '\n';
    out << "family member: " << c.member_name.value_or("unnamed") << '\n';
  }
  return kOk;
}

int cmd_chords(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = read_input(o.input, in);
  const auto vertices = parse_list(o.cycle, "--cycle");
  const auto m = to_matching(parse_list(o.m, "--m"));
  const auto n = to_matching(parse_list(o.n, "--n"));
  const auto f = parse_list(o.f, "--f");
  const auto cycle = o.cycle_edges.empty()
                         ? build_cycle(g, vertices, m)
                         : OrientedCycle(vertices, parse_list(o.cycle_edges, "--cycle-edges"));
  cycle.validate(g);
  const auto chords = find_chords(g, cycle, m, n, f);
  if (o.format == "json") {
    out << json::chord_report(cycle, chords).dump() << '\n';
    return kOk;
  }
  out << "cycle: " << join(cycle.vertices()) << " (edges " << join(cycle.edges()) << ")\n";
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const auto& c = chords[i];
    out << "chord " << i << ": " << c.a << " -> " << c.b << ' ' << to_string(c.kind)
        << (c.external ? " external" : "") << " path " << join(c.vertices) << '\n';
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (chords_cross(cycle, chords[i], chords[j])) {
        out << "chords " << i << " and " << j << " cross\n";
      }
    }
  }
  return kOk;
}

int cmd_chambers(const Options& o, std::istream& in, std::ostream& out) {
  const auto g = read_input(o.input, in);
  const auto parts = chambers(g);
  if (o.format == "json") {
    out << json::partition(parts).dump() << '\n';
  } else {
    for (const auto& p : parts) out << join(p) << '\n';
  }
  return kOk;
}

void write_family_dir(const FamilyReport& report, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DomainError("cannot create output directory '" + dir + "': " + ec.message());
  for (const auto& m : report.members) {
    std::ofstream file(fs::path(dir) / (m.hash + ".mg"), std::ios::binary);
    file << m.form.text;
    if (!file) throw DomainError("cannot write to output directory '" + dir + "'");
  }
  std::ofstream file(fs::path(dir) / "report.json", std::ios::binary);
  file << json::family_report(report).dump(2) << '\n';
  if (!file) throw DomainError("cannot write to output directory '" + dir + "'");
}

int cmd_search(const Options& o, std::ostream& out) {
  SearchConfig cfg;
  cfg.k = o.k;
  cfg.max_vertices = o.max_vertices.value_or(default_max_vertices(o.k));
  cfg.max_multiplicity = o.max_multiplicity;
  cfg.worker_count = o.jobs;
  cfg.node_limit = o.node_limit;
  const auto report = search_family(cfg);
  if (!o.out_dir.empty()) write_family_dir(report, o.out_dir);
  if (o.format == "json") {
    out << json::family_report(report).dump() << '\n';
    return kOk;
  }
  out << "k=" << report.k << ", complete up to " << report.max_vertices
      << " vertices, multiplicity <= " << report.max_multiplicity << '\n';
  out << "members: " << report.members.size() << '\n';
  for (const auto& m : report.members) {
    out << m.hash << ": " << m.graph.vertex_count() << " vertices, " << m.graph.edge_count()
        << " edges, " << m.matching_count << " matchings, |Aut| = " << m.form.automorphisms
        << '\n';
    print_graph_block(out, m.form.text, "  ");
  }
  const auto b = theorem1_bound(report.k, report);
  out << "theorem 1 bound: " << (b.value ? std::to_string(*b.value) : "n/a") << '\n';
  out << "generated " << report.stats.generated << " graphs\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  verify::SuiteOptions opt;
  opt.k = o.k;
  opt.max_vertices = o.max_vertices.value_or(opt.max_vertices);
  opt.trials = o.trials;
  opt.seed = o.seed;
  verify::SuiteReport report;
  if (o.suite == "lemma1") {
    report = verify::lemma1_suite(opt);
  } else if (o.suite == "lemma2") {
    report = verify::lemma2_suite(opt);
  } else if (o.suite == "oracle") {
    report = verify::oracle_suite(opt);
  } else {
    report = verify::claims_suite(opt);
  }
  if (o.format == "json") {
    out << json::suite(report).dump() << '\n';
  } else {
    out << "suite " << report.suite << " k=" << report.k << " max_vertices=" << report.max_vertices
        << ": " << report.instances << " instances\n";
    for (const auto& c : report.checks) {
      out << (c.failed ? "FAIL " : "ok   ") << c.name << ": " << c.passed << " passed, "
          << c.failed << " failed";
      if (!c.first_failure.empty()) out << " (first: " << c.first_failure << ')';
      out << '\n';
    }
  }
  return report.ok() ? kOk : kDomainError;
}

bool wants_json(const std::vector<std::string>& args) {
  bool json = true;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format" && i + 1 < args.size()) json = args[i + 1] == "json";
    if (args[i].rfind("--format=", 0) == 0) json = args[i].substr(9) == "json";
  }
  return json;
}

int report_error(bool json, const char* kind, const std::string& message, int code,
                 std::ostream& out, std::ostream& err) {
  if (json) {
    Json j;
    j["error"] = message;
    j["kind"] = kind;
    j["exit_code"] = code;
    out << j.dump() << '\n';
  } else {
    err << "error: " << message << '\n';
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Perfect matchings in multigraphs: counting, minimality, reduction, family search"};
  app.require_subcommand(1, 1);
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "mg-v1 file, or - for standard input")
        ->capture_default_str();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    return sub;
  };
  auto k_option = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Number of perfect matchings")
        ->required()
        ->check(CLI::PositiveNumber);
  };

  auto* count = with_input(app.add_subcommand("count", "Count perfect matchings"));
  count->add_option("--cap", o.cap, "Stop counting at this value");

  auto* enumerate = with_input(app.add_subcommand("enumerate", "List perfect matchings"));
  enumerate->add_option("--limit", o.limit, "Stop after this many matchings");

  auto* minimal = with_input(app.add_subcommand("minimal", "Test minimal k-matchability"));
  k_option(minimal);

  auto* reduce_cmd = with_input(app.add_subcommand("reduce", "Smooth and strip K2 components"));

  auto* classify_cmd =
      with_input(app.add_subcommand("classify", "Classify a minimally k-matchable graph"));
  k_option(classify_cmd);

  auto* chords_cmd = with_input(app.add_subcommand("chords", "Chords of an alternating cycle"));
  chords_cmd->add_option("--cycle", o.cycle, "Cycle vertices in order")->required();
  chords_cmd->add_option("--cycle-edges", o.cycle_edges, "Cycle edge ids (edge i follows vertex i)");
  chords_cmd->add_option("--m", o.m, "Edge ids of the perfect matching M")->required();
  chords_cmd->add_option("--n", o.n, "Edge ids of the perfect matching N")->required();
  chords_cmd->add_option("--f", o.f, "Edge ids of the designated set F");

  auto* chambers_cmd = with_input(app.add_subcommand("chambers", "Partition into chambers"));

  auto* search = app.add_subcommand("search", "Enumerate the irreducible family");
  search->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  k_option(search);
  search->add_option("--max-vertices", o.max_vertices, "Largest vertex count searched");
  search->add_option("--max-multiplicity", o.max_multiplicity, "Largest edge multiplicity");
  search->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_option("--node-limit", o.node_limit, "Abort after generating this many graphs")
      ->capture_default_str();
  search->add_option("--out-dir", o.out_dir, "Write members as mg-v1 files and report.json");

  auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
  verify_cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  verify_cmd->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"lemma1", "lemma2", "oracle", "claims"}));
  verify_cmd->add_option("--k", o.k, "Number of perfect matchings")
      ->check(CLI::PositiveNumber)
      ->default_val(verify::SuiteOptions{}.k);
  verify_cmd->add_option("--max-vertices", o.max_vertices, "Largest vertex count");
  verify_cmd->add_option("--trials", o.trials, "Random trials")->capture_default_str();
  verify_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();

  const bool json = wants_json(args);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report_error(json, "usage", e.what(), kUsageError, out, err);
  }

  try {
    if (count->parsed()) return cmd_count(o, in, out);
    if (enumerate->parsed()) return cmd_enumerate(o, in, out);
    if (minimal->parsed()) return cmd_minimal(o, in, out);
    if (reduce_cmd->parsed()) return cmd_reduce(o, in, out);
    if (classify_cmd->parsed()) return cmd_classify(o, in, out);
    if (chords_cmd->parsed()) return cmd_chords(o, in, out);
    if (chambers_cmd->parsed()) return cmd_chambers(o, in, out);
    if (search->parsed()) return cmd_search(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    return report_error(json, "usage", e.what(), kUsageError, out, err);
  } catch (const ResourceGuardError& e) {
    return report_error(json, "resource_guard", e.what(), kResourceGuard, out, err);
  } catch (const ParseError& e) {
    return report_error(json, "parse", e.what(), kDomainError, out, err);
  } catch (const std::exception& e) {
    return report_error(json, "domain", e.what(), kDomainError, out, err);
  }
}

}  // namespace kmatch::cli
