#include "k3chambers/ade.hpp"

#include <algorithm>
#include <array>

#include "k3chambers/error.hpp"

namespace k3chambers {

namespace {

using Adjacency = std::vector<std::vector<std::size_t>>;

[[noreturn]] void unrecognized(const std::string& why) {
  throw Error(ErrorCode::UnrecognizedDiagram, why);
}

// Length of the path hanging off `start`, coming from `from`.
std::size_t branch_length(const Adjacency& adj, std::size_t from, std::size_t start) {
  std::size_t length = 1;
  std::size_t prev = from, cur = start;
  while (adj[cur].size() == 2) {
    const std::size_t next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++length;
  }
  if (adj[cur].size() > 2) unrecognized("diagram has more than one branch point");
  return length;
}

AdeType classify_tree(const Adjacency& adj, const std::vector<std::size_t>& nodes) {
  std::size_t edges = 0;
  std::vector<std::size_t> branch_points;
  for (std::size_t v : nodes) {
    edges += adj[v].size();
    if (adj[v].size() > 3) unrecognized("node of degree > 3");
    if (adj[v].size() == 3) branch_points.push_back(v);
  }
  edges /= 2;
  if (edges + 1 != nodes.size()) unrecognized("diagram contains a cycle");
  const std::size_t n = nodes.size();
  if (branch_points.empty()) return {AdeFamily::A, n};
  if (branch_points.size() > 1) unrecognized("diagram has more than one branch point");

  const std::size_t center = branch_points.front();
  std::array<std::size_t, 3> arms{};
  for (std::size_t a = 0; a < 3; ++a) arms[a] = branch_length(adj, center, adj[center][a]);
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {AdeFamily::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {AdeFamily::E, n};
  unrecognized("branched diagram with arms " + std::to_string(arms[0]) + "," +
               std::to_string(arms[1]) + "," + std::to_string(arms[2]));
}

}  // namespace

std::string AdeType::name() const {
  const char letter = family == AdeFamily::A ? 'A' : family == AdeFamily::D ? 'D' : 'E';
  return letter + std::to_string(rank);
}

std::vector<AdeType> classify_simply_laced(const RatMatrix& gram) {
  const std::size_t n = gram.dim();
  Adjacency adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (gram(i, j) != gram(j, i)) unrecognized("asymmetric intersection matrix");
      if (gram(i, j) == 1) {
        adj[i].push_back(j);
      } else if (gram(i, j) != 0) {
        unrecognized("intersection number " + to_string(gram(i, j)) + " is not 0 or 1");
      }
    }
  }
  std::vector<AdeType> out;
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::size_t> component{root};
    seen[root] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      for (std::size_t w : adj[component[head]]) {
        if (!seen[w]) {
          seen[w] = true;
          component.push_back(w);
        }
      }
    }
    out.push_back(classify_tree(adj, component));
  }
  return out;
}

RatMatrix dynkin_gram(const AdeType& type) {
  const std::size_t n = type.rank;
  const bool valid = n >= 1 && (type.family == AdeFamily::A ||
                                (type.family == AdeFamily::D && n >= 4) ||
                                (type.family == AdeFamily::E && n >= 6 && n <= 8));
  if (!valid) throw Error(ErrorCode::InvalidArgument, "no Dynkin diagram " + type.name());
  RatMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = -2;
  auto link = [&g](std::size_t a, std::size_t b) { g(a, b) = g(b, a) = 1; };
  if (type.family == AdeFamily::A) {
    for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
    return g;
  }
  for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
  link(n - 1, type.family == AdeFamily::D ? n - 3 : 2);
  return g;
}

}  // namespace k3chambers
