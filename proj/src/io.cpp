#include "pmt/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <queue>
#include <sstream>

namespace pmt {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int to_int(const std::string& tok, int line, const std::string& field) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, field, "expected an integer, got '" + tok + "'");
  return v;
}

std::string join(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += " " + std::to_string(v);
  return s;
}

struct Field {
  int line = 0;
  std::vector<std::string> values;
};

}  // namespace

Instance parse_instance(const std::string& text) {
  static const std::vector<std::string> known = {"vertices", "edges",        "transshipment",
                                                 "variant",  "kind",         "start",
                                                 "target",   "destinations", "marked",
                                                 "goal",     "subtree"};
  std::map<std::string, Field> fields;
  std::istringstream in(text);
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto toks = split(line);
    if (toks.empty()) continue;
    const std::string key = toks.front();
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ParseError(lineno, key, "unknown keyword");
    if (fields.count(key)) throw ParseError(lineno, key, "keyword given twice");
    fields[key] = {lineno, std::vector<std::string>(toks.begin() + 1, toks.end())};
  }
  const int end_line = lineno + 1;
  auto need = [&](const std::string& key) -> const Field& {
    auto it = fields.find(key);
    if (it == fields.end()) throw ParseError(end_line, key, "missing keyword");
    return it->second;
  };
  auto ints = [&](const std::string& key) {
    const Field& f = need(key);
    std::vector<Vertex> out;
    for (const auto& t : f.values) out.push_back(to_int(t, f.line, key));
    return out;
  };
  auto single = [&](const std::string& key) {
    const Field& f = need(key);
    if (f.values.size() != 1) throw ParseError(f.line, key, "expected exactly one value");
    return to_int(f.values[0], f.line, key);
  };
  auto word = [&](const std::string& key) {
    const Field& f = need(key);
    if (f.values.size() != 1) throw ParseError(f.line, key, "expected exactly one value");
    return f.values[0];
  };

  Instance inst;
  const int n = single("vertices");
  std::vector<Edge> edges;
  {
    const Field& f = need("edges");
    for (const auto& t : f.values) {
      auto dash = t.find('-');
      if (dash == std::string::npos) throw ParseError(f.line, "edges", "edge '" + t + "' is not u-v");
      edges.emplace_back(to_int(t.substr(0, dash), f.line, "edges"),
                         to_int(t.substr(dash + 1), f.line, "edges"));
    }
  }
  std::vector<Vertex> ts;
  if (fields.count("transshipment")) ts = ints("transshipment");
  // no variant line: ts exactly when trans-shipment vertices are listed
  const std::string variant = fields.count("variant") ? word("variant") : (ts.empty() ? "plain" : "ts");
  if (variant == "plain")
    inst.variant = Variant::Plain;
  else if (variant == "ts")
    inst.variant = Variant::TransShipment;
  else
    throw ParseError(fields["variant"].line, "variant", "expected plain or ts");
  try {
    inst.tree = Tree(n, edges, ts);
  } catch (const Error& e) {
    throw ParseError(fields["edges"].line, "edges", e.what());
  }

  const std::string kind = word("kind");
  if (kind == "pmt")
    inst.kind = ProblemKind::Pmt;
  else if (kind == "unlabeled")
    inst.kind = ProblemKind::Unlabeled;
  else if (kind == "motion")
    inst.kind = ProblemKind::Motion;
  else if (kind == "gather")
    inst.kind = ProblemKind::Gather;
  else
    throw ParseError(fields["kind"].line, "kind", "expected pmt, unlabeled, motion or gather");

  auto config = [&](const std::string& key) {
    try {
      return Configuration(n, ints(key));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(fields[key].line, key, e.what());
    }
  };
  inst.start = config("start");
  switch (inst.kind) {
    case ProblemKind::Pmt: inst.target = config("target"); break;
    case ProblemKind::Unlabeled: inst.destinations = ints("destinations"); break;
    case ProblemKind::Motion:
      inst.marked = single("marked");
      inst.goal = single("goal");
      break;
    case ProblemKind::Gather: inst.subtree = ints("subtree"); break;
  }
  try {
    validate_instance(inst);
  } catch (const Error& e) {
    throw ParseError(fields["start"].line, "start", e.what());
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "vertices " << inst.tree.size() << "\n";
  out << "edges";
  for (auto [a, b] : inst.tree.edges()) out << " " << a << "-" << b;
  out << "\n";
  out << "transshipment" << join(inst.tree.transshipment_vertices()) << "\n";
  out << "variant " << to_string(inst.variant) << "\n";
  out << "kind " << to_string(inst.kind) << "\n";
  out << "start" << join(inst.start.positions()) << "\n";
  switch (inst.kind) {
    case ProblemKind::Pmt: out << "target" << join(inst.target.positions()) << "\n"; break;
    case ProblemKind::Unlabeled: out << "destinations" << join(inst.destinations) << "\n"; break;
    case ProblemKind::Motion:
      out << "marked " << inst.marked << "\n";
      out << "goal " << inst.goal << "\n";
      break;
    case ProblemKind::Gather: out << "subtree" << join(inst.subtree) << "\n"; break;
  }
  return out.str();
}

Plan parse_plan(const std::string& text) {
  Plan plan;
  std::istringstream in(text);
  int lineno = 0;
  bool have_count = false, have_hist = false;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    auto toks = split(line);
    if (toks.empty()) continue;
    if (toks[0] == "moves") {
      if (toks.size() != 2) throw ParseError(lineno, "moves", "expected a count");
      if (to_int(toks[1], lineno, "moves") != static_cast<int>(plan.size()))
        throw ParseError(lineno, "moves", "count does not match the move list");
      have_count = true;
    } else if (toks[0] == "crossings") {
      if (!have_count) throw ParseError(lineno, "crossings", "trailer out of order");
      std::map<Vertex, int> expect;
      for (const Move& m : plan.moves) ++expect[m.to];
      std::map<Vertex, int> got;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto colon = toks[i].find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "crossings", "expected v:k");
        got[to_int(toks[i].substr(0, colon), lineno, "crossings")] =
            to_int(toks[i].substr(colon + 1), lineno, "crossings");
      }
      if (got != expect) throw ParseError(lineno, "crossings", "histogram does not match the moves");
      have_hist = true;
    } else {
      if (have_count) throw ParseError(lineno, "move", "move after the trailer");
      if (toks.size() != 3 || toks[1] != "->") throw ParseError(lineno, "move", "expected 'u -> v'");
      plan.push_back(to_int(toks[0], lineno, "move"), to_int(toks[2], lineno, "move"));
    }
  }
  if (!have_count || !have_hist) throw ParseError(lineno + 1, "trailer", "missing moves/crossings trailer");
  return plan;
}

std::string serialize_plan(const Plan& plan) {
  std::string out;
  for (const Move& m : plan.moves) out += std::to_string(m.from) + " -> " + std::to_string(m.to) + "\n";
  out += "moves " + std::to_string(plan.size()) + "\n";
  std::map<Vertex, int> hist;
  for (const Move& m : plan.moves) ++hist[m.to];
  out += "crossings";
  for (auto [v, k] : hist) out += " " + std::to_string(v) + ":" + std::to_string(k);
  out += "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Tree random_tree(int n, std::mt19937_64& rng, double ts_probability) {
  std::vector<Edge> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2), degree(n, 1);
    for (int& x : code) {
      x = pick(rng);
      ++degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (int x : code) {
      int leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
      if (--degree[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(a, b);
  }
  std::vector<Vertex> ts;
  if (ts_probability > 0) {
    Tree plain(n, edges);
    std::vector<Vertex> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> mark(n, 0);
    std::bernoulli_distribution coin(ts_probability);
    for (Vertex v : order) {
      if (plain.degree(v) < 2 || !coin(rng)) continue;
      bool clash = false;
      for (Vertex w : plain.neighbors(v)) clash = clash || mark[w];
      if (clash) continue;
      mark[v] = 1;
      ts.push_back(v);
    }
  }
  return Tree(n, edges, ts);
}

Instance generate_random_instance(std::uint64_t seed, int n, int p, Variant variant,
                                  ProblemKind kind, const GeneratorOptions& options) {
  if (n < 2 || p < 0 || p >= n)
    throw Error(ErrorCode::AssumptionUnsatisfiable, "need n >= 2 and 0 <= p < n");
  if (kind == ProblemKind::Motion && p < 1)
    throw Error(ErrorCode::AssumptionUnsatisfiable, "motion planning needs a pebble");
  std::mt19937_64 rng(seed);
  const double tsp = variant == Variant::TransShipment ? options.ts_probability : 0.0;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    Instance inst;
    inst.variant = variant;
    inst.kind = kind;
    inst.tree = random_tree(n, rng, tsp);
    TreeView view(inst.tree, variant);
    std::vector<Vertex> regular;
    for (Vertex v = 0; v < n; ++v)
      if (view.is_regular(v)) regular.push_back(v);
    const int required = analyze(view).required_regular_holes();
    if (static_cast<int>(regular.size()) - p < required) continue;

    std::shuffle(regular.begin(), regular.end(), rng);
    inst.start = Configuration(n, std::vector<Vertex>(regular.begin(), regular.begin() + p));
    switch (kind) {
      case ProblemKind::Pmt:
        std::shuffle(regular.begin(), regular.end(), rng);
        inst.target = Configuration(n, std::vector<Vertex>(regular.begin(), regular.begin() + p));
        break;
      case ProblemKind::Unlabeled:
        std::shuffle(regular.begin(), regular.end(), rng);
        inst.destinations.assign(regular.begin(), regular.begin() + p);
        std::sort(inst.destinations.begin(), inst.destinations.end());
        break;
      case ProblemKind::Motion:
        inst.marked = std::uniform_int_distribution<int>(0, p - 1)(rng);
        inst.goal = regular[std::uniform_int_distribution<std::size_t>(0, regular.size() - 1)(rng)];
        break;
      case ProblemKind::Gather: {
        const int holes = static_cast<int>(regular.size()) - p;
        if (holes == 0) continue;
        const int q = std::uniform_int_distribution<int>(1, holes)(rng);
        std::vector<char> in(n, 0);
        Vertex seed_vertex = regular[std::uniform_int_distribution<std::size_t>(0, regular.size() - 1)(rng)];
        in[seed_vertex] = 1;
        inst.subtree = {seed_vertex};
        int count = 1;
        while (count < q) {
          std::vector<Vertex> frontier;
          for (Vertex v : inst.subtree)
            for (Vertex w : inst.tree.neighbors(v))
              if (!in[w]) frontier.push_back(w);
          std::sort(frontier.begin(), frontier.end());
          frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
          Vertex w = frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)];
          in[w] = 1;
          inst.subtree.push_back(w);
          count += view.is_regular(w) ? 1 : 0;
        }
        std::sort(inst.subtree.begin(), inst.subtree.end());
        break;
      }
    }
    return inst;
  }
  throw Error(ErrorCode::AssumptionUnsatisfiable,
              "no instance with n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                  " satisfied the hole assumption within the attempt cap");
}

}  // namespace pmt
