#include "yw/graph.hpp"

#include <array>
#include <sstream>

#include "json.hpp"

namespace yw {

namespace {

struct Adjacency {
  // out[v][i] and in[v][i] hold the neighbour index or -1. Returns an error
  // string when some colour repeats at a node, which no crystal allows.
  std::vector<std::array<int, kRank>> out, in;

  static std::string build(const CrystalGraph& g, Adjacency& adj) {
    std::array<int, kRank> none;
    none.fill(-1);
    adj.out.assign(g.nodes.size(), none);
    adj.in.assign(g.nodes.size(), none);
    for (const GraphArrow& a : g.arrows) {
      if (adj.out[a.from][a.i] != -1) {
        return "two colour-" + std::to_string(a.i) + " arrows out of \"" +
               g.nodes[a.from].key + "\"";
      }
      if (adj.in[a.to][a.i] != -1) {
        return "two colour-" + std::to_string(a.i) + " arrows into \"" +
               g.nodes[a.to].key + "\"";
      }
      adj.out[a.from][a.i] = a.to;
      adj.in[a.to][a.i] = a.from;
    }
    return {};
  }
};

}  // namespace

IsoResult anchoredIsomorphic(const CrystalGraph& a, const CrystalGraph& b) {
  auto fail = [](std::string detail) { return IsoResult{false, std::move(detail)}; };

  if (a.nodes.size() != b.nodes.size()) {
    return fail("node counts differ: " + std::to_string(a.nodes.size()) +
                " vs " + std::to_string(b.nodes.size()));
  }
  if (a.arrows.size() != b.arrows.size()) {
    return fail("arrow counts differ: " + std::to_string(a.arrows.size()) +
                " vs " + std::to_string(b.arrows.size()));
  }

  Adjacency adjA, adjB;
  if (std::string err = Adjacency::build(a, adjA); !err.empty()) {
    return fail("left graph is not a crystal graph: " + err);
  }
  if (std::string err = Adjacency::build(b, adjB); !err.empty()) {
    return fail("right graph is not a crystal graph: " + err);
  }

  int rootA = a.indexOf(a.anchor);
  int rootB = b.indexOf(b.anchor);
  if (rootA < 0 || rootB < 0) return fail("anchor node missing");

  std::vector<int> match(a.nodes.size(), -1), rmatch(b.nodes.size(), -1);
  std::deque<int> queue;
  auto bind = [&](int x, int y) -> std::string {
    if (match[x] == y) return {};
    if (match[x] != -1 || rmatch[y] != -1) {
      return "\"" + a.nodes[x].key + "\" and \"" + b.nodes[y].key +
             "\" conflict with an earlier pairing";
    }
    match[x] = y;
    rmatch[y] = x;
    queue.push_back(x);
    return {};
  };
  if (std::string err = bind(rootA, rootB); !err.empty()) return fail(err);

  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    int y = match[x];
    if (a.nodes[x].wt != b.nodes[y].wt) {
      return fail("weights differ at \"" + a.nodes[x].key + "\" (" +
                  a.nodes[x].wt.toString() + ") vs \"" + b.nodes[y].key +
                  "\" (" + b.nodes[y].wt.toString() + ")");
    }
    for (int i = 0; i < kRank; ++i) {
      for (auto [nx, ny] :
           {std::pair{adjA.out[x][i], adjB.out[y][i]},
            std::pair{adjA.in[x][i], adjB.in[y][i]}}) {
        if ((nx == -1) != (ny == -1)) {
          return fail("colour-" + std::to_string(i) + " arrow at \"" +
                      a.nodes[x].key + "\" has no counterpart at \"" +
                      b.nodes[y].key + "\"");
        }
        if (nx != -1) {
          if (std::string err = bind(nx, ny); !err.empty()) return fail(err);
        }
      }
    }
  }

  for (std::size_t x = 0; x < match.size(); ++x) {
    if (match[x] == -1) {
      return fail("\"" + a.nodes[x].key + "\" is not reachable from the anchor");
    }
  }
  return {};
}

std::string toDot(const CrystalGraph& g) {
  static constexpr std::array<const char*, kRank> kColour{
      "red", "black", "blue", "green", "purple"};
  std::ostringstream out;
  out << "digraph \"" << g.type << "\" {\n"
      << "  rankdir=TB;\n"
      << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const GraphNode& n : g.nodes) {
    out << "  \"" << n.key << "\" [label=\"" << n.key << "\\n"
        << n.wt.toString() << "\"";
    if (n.key == g.anchor) out << ", peripheries=2";
    out << "];\n";
  }
  for (const GraphArrow& a : g.arrows) {
    out << "  \"" << g.nodes[a.from].key << "\" -> \"" << g.nodes[a.to].key
        << "\" [color=" << kColour[a.i] << ", label=\"" << a.i << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string toJson(const CrystalGraph& g) {
  nlohmann::ordered_json j;
  j["type"] = g.type;
  j["anchor"] = g.anchor;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const GraphNode& n : g.nodes) {
    nlohmann::ordered_json wt;
    wt["lambda"] = n.wt.classical.lambda;
    wt["delta"] = n.wt.delta;
    j["nodes"].push_back({{"key", n.key}, {"wt", wt}});
  }
  j["arrows"] = nlohmann::ordered_json::array();
  for (const GraphArrow& a : g.arrows) {
    j["arrows"].push_back({{"from", a.from}, {"i", a.i}, {"to", a.to}});
  }
  return j.dump(2) + "\n";
}

CrystalGraph graphFromJson(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad graph json: ") + e.what());
  }
  try {
    CrystalGraph g;
    g.type = j.at("type").get<std::string>();
    g.anchor = j.at("anchor").get<std::string>();
    for (const auto& n : j.at("nodes")) {
      GraphNode node;
      node.key = n.at("key").get<std::string>();
      const auto& wt = n.at("wt");
      auto lambda = wt.at("lambda").get<std::vector<int>>();
      if (lambda.size() != kRank) throw DataError("bad weight length");
      std::copy(lambda.begin(), lambda.end(), node.wt.classical.lambda.begin());
      node.wt.delta = wt.at("delta").get<int>();
      g.nodes.push_back(std::move(node));
    }
    int n = static_cast<int>(g.nodes.size());
    for (const auto& a : j.at("arrows")) {
      GraphArrow arrow{a.at("from").get<int>(), a.at("i").get<int>(),
                       a.at("to").get<int>()};
      if (arrow.from < 0 || arrow.from >= n || arrow.to < 0 || arrow.to >= n ||
          arrow.i < 0 || arrow.i >= kRank) {
        throw DataError("arrow out of range");
      }
      g.arrows.push_back(arrow);
    }
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("bad graph json: ") + e.what());
  }
}

}  // namespace yw
