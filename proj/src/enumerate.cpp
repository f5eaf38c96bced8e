#include "fsp/enumerate.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "fsp/error.hpp"
#include "fsp/presentation.hpp"

namespace fsp {

std::vector<std::vector<int>> double_occurrence_words(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> word, count(n, 0);
  std::function<void(int)> grow = [&](int next_new) {
    if (static_cast<int>(word.size()) == 2 * n) {
      out.push_back(word);
      return;
    }
    for (int v = 0; v < next_new; ++v)
      if (count[v] == 1) {
        ++count[v];
        word.push_back(v);
        grow(next_new);
        word.pop_back();
        --count[v];
      }
    if (next_new < n) {
      ++count[next_new];
      word.push_back(next_new);
      grow(next_new + 1);
      word.pop_back();
      --count[next_new];
    }
  };
  grow(0);
  return out;
}

namespace {

using Multigraph = std::vector<std::pair<int, int>>;

// Edge multiset of the singular-set graph traced by a word.
Multigraph multigraph_of(const std::vector<int>& w) {
  Multigraph g;
  for (size_t k = 0; k < w.size(); ++k) {
    int a = w[k], b = w[(k + 1) % w.size()];
    g.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.begin(), g.end());
  return g;
}

struct Found {
  CanonicalCode code;
  FlowCode flow;
};

// Every inside/outside choice per letter, all vertices of l-type.
void complete_circuit(const std::vector<int>& w, std::vector<Found>& out) {
  const int n = static_cast<int>(w.size()) / 2;
  std::vector<std::array<int, 2>> occ(n, {-1, -1});
  for (int k = 0; k < 2 * n; ++k) (occ[w[k]][0] == -1 ? occ[w[k]][0] : occ[w[k]][1]) = k;
  for (int bits = 0; bits < (1 << n); ++bits) {
    FlowCode c;
    c.word = w;
    c.inward.assign(2 * n, false);
    c.types.assign(n, VertexType::l);
    for (int v = 0; v < n; ++v) c.inward[occ[v][(bits >> v) & 1]] = true;
    DsDiagram d;
    try {
      d = build_diagram(c);
    } catch (const Error&) {
      continue;
    }
    out.push_back({canonical_code(d), std::move(c)});
  }
}

bool flow_less(const FlowCode& a, const FlowCode& b) {
  if (a.word != b.word) return a.word < b.word;
  return a.inward < b.inward;
}

}  // namespace

std::vector<CensusEntry> enumerate_positive(int n_max, const EnumerateOptions& options) {
  if (n_max < 1 || n_max > 4) throw Error("n_max must be between 1 and 4");

  // Candidate singular sets, each with its Eulerian circuits.
  std::map<Multigraph, std::vector<std::vector<int>>> by_graph;
  for (int n = 1; n <= n_max; ++n)
    for (auto& w : double_occurrence_words(n)) by_graph[multigraph_of(w)].push_back(std::move(w));
  std::vector<std::vector<std::vector<int>>> parts;
  for (auto& [g, ws] : by_graph) parts.push_back(std::move(ws));
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(parts.begin(), parts.end(), rng);
    for (auto& p : parts) std::shuffle(p.begin(), p.end(), rng);
  }

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(parts.size()));
  std::vector<std::vector<Found>> results(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (size_t i = t; i < parts.size(); i += threads)
        for (const auto& w : parts[i]) complete_circuit(w, results[t]);
    });
  for (auto& th : pool) th.join();

  // Single-owner dedupe; the least flow code represents each class.
  std::map<CanonicalCode, FlowCode> unique;
  for (auto& r : results)
    for (auto& f : r) {
      auto [it, fresh] = unique.emplace(f.code, f.flow);
      if (!fresh && flow_less(f.flow, it->second)) it->second = f.flow;
    }

  std::vector<CensusEntry> out;
  for (auto& [code, flow] : unique) {
    CensusEntry e;
    e.code = code;
    e.flow = flow;
    e.diagram = build_diagram(flow);
    e.vertices = flow.spine_vertices();
    e.positive = is_positive(e.diagram);
    SpinePresentation p = derive_presentation(e.diagram);
    e.homology = h1(p);
    e.admissibility = decide(build_system(p, false));
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.vertices != b.vertices ? a.vertices < b.vertices : a.code < b.code;
  });
  return out;
}

CensusReport census_report(const std::vector<CensusEntry>& entries) {
  CensusReport r;
  std::map<std::string, CensusRow> rows;
  for (const CensusEntry& e : entries) {
    const std::string h = e.homology.h1_string();
    CensusRow& row = rows[h];
    row.h1 = h;
    ++row.count_by_vertices[e.vertices];
    row.min_vertices = row.count_by_vertices.begin()->first;
    r.h1_by_vertices[e.vertices].push_back(h);
  }
  for (auto& [n, hs] : r.h1_by_vertices) std::sort(hs.begin(), hs.end());
  for (auto& [h, row] : rows) r.rows.push_back(row);
  std::sort(r.rows.begin(), r.rows.end(), [](const auto& a, const auto& b) {
    return a.min_vertices != b.min_vertices ? a.min_vertices < b.min_vertices : a.h1 < b.h1;
  });
  return r;
}

CatalogMatch match_catalog(std::vector<CensusEntry>& entries,
                           const std::vector<std::pair<std::string, DsDiagram>>& catalog,
                           const std::map<std::string, std::string>& labels) {
  CatalogMatch m;
  std::map<CanonicalCode, std::string> names;
  for (const auto& [name, d] : catalog) names.emplace(canonical_code(d), name);
  std::set<std::string> used;
  for (CensusEntry& e : entries) {
    auto it = names.find(e.code);
    if (it == names.end()) {
      m.unmatched_entries.push_back(e.code.hex());
      continue;
    }
    e.name = it->second;
    if (auto l = labels.find(it->second); l != labels.end()) e.label = l->second;
    m.matched.emplace_back(e.code.hex(), it->second);
    used.insert(it->second);
  }
  for (const auto& [name, d] : catalog)
    if (!used.count(name)) m.unmatched_catalog.push_back(name);
  return m;
}

}  // namespace fsp
