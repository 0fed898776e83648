#include "caygraph/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include <nlohmann/json.hpp>

namespace caygraph {

namespace {

using Clock = std::chrono::steady_clock;

struct DenseGraph {
  int n = 0;
  int words = 0;
  std::vector<std::uint64_t> adj;

  explicit DenseGraph(int n_) : n(n_), words((n_ + 63) / 64), adj(std::size_t(n_) * words, 0) {}
  const std::uint64_t* row(int v) const { return adj.data() + std::size_t(v) * words; }
  std::uint64_t* row(int v) { return adj.data() + std::size_t(v) * words; }
  void set_edge(int u, int v) {
    row(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    row(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
  }
};

inline bool words_empty(const std::uint64_t* w, int n) {
  for (int i = 0; i < n; ++i)
    if (w[i]) return false;
  return true;
}

/// Branch and bound with greedy sequential coloring (Tomita-style).
/// Vertices are handled in ascending index order throughout, so the search
/// tree is a pure function of the graph and the initial bound.
class BBSolver {
 public:
  BBSolver(const DenseGraph& g, Clock::time_point deadline, bool has_deadline,
           std::atomic<int>* shared_best)
      : g_(g), deadline_(deadline), has_deadline_(has_deadline),
        shared_best_(shared_best) {
    const int depth = g.n + 1;
    p_arena_.assign(std::size_t(depth) * g_.words, 0);
    scratch_.assign(std::size_t(3) * g_.words, 0);
    order_arena_.assign(std::size_t(depth) * g_.n, 0);
    color_arena_.assign(std::size_t(depth) * g_.n, 0);
  }

  int best_size = 0;
  int target = -1;  // >0: stop at the first clique of this size
  bool found_target = false;
  bool timed_out = false;
  std::uint64_t nodes = 0;
  std::vector<int> best;

  void run(const std::uint64_t* initial, std::vector<int> seed_clique) {
    std::uint64_t* P = level_set(0);
    std::copy(initial, initial + g_.words, P);
    std::vector<int> r = std::move(seed_clique);
    expand(P, r, 0);
  }

 private:
  std::uint64_t* level_set(int depth) { return p_arena_.data() + std::size_t(depth) * g_.words; }

  int pruning_bound() {
    if (shared_best_) {
      int s = shared_best_->load(std::memory_order_relaxed);
      if (s > best_size) best_size = s;
    }
    return best_size;
  }

  void record(const std::vector<int>& r) {
    best = r;
    best_size = static_cast<int>(r.size());
    if (shared_best_) {
      int cur = shared_best_->load(std::memory_order_relaxed);
      while (cur < best_size &&
             !shared_best_->compare_exchange_weak(cur, best_size)) {
      }
    }
    if (target > 0 && best_size >= target) found_target = true;
  }

  void expand(std::uint64_t* P, std::vector<int>& r, int depth) {
    if (++nodes % 4096 == 0 && has_deadline_ && Clock::now() > deadline_) {
      timed_out = true;
      return;
    }
    const int W = g_.words;
    // Greedy sequential coloring of P in ascending index order; order_ lists
    // the vertices sorted by color, colors_ the matching bound values.
    int* order = order_arena_.data() + std::size_t(depth) * g_.n;
    int* colors = color_arena_.data() + std::size_t(depth) * g_.n;
    std::uint64_t* uncolored = scratch_.data();
    std::uint64_t* avail = scratch_.data() + W;
    int count = 0, c = 0;
    std::copy(P, P + W, uncolored);
    while (!words_empty(uncolored, W)) {
      ++c;
      std::copy(uncolored, uncolored + W, avail);
      while (true) {
        int v = -1;
        for (int i = 0; i < W; ++i)
          if (avail[i]) {
            v = (i << 6) + std::countr_zero(avail[i]);
            break;
          }
        if (v < 0) break;
        const std::uint64_t* nv = g_.row(v);
        for (int i = 0; i < W; ++i) avail[i] &= ~nv[i];
        avail[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        order[count] = v;
        colors[count] = c;
        ++count;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (static_cast<int>(r.size()) + colors[i] <= pruning_bound()) return;
      const int v = order[i];
      r.push_back(v);
      std::uint64_t* newP = level_set(depth + 1);
      const std::uint64_t* nv = g_.row(v);
      bool empty = true;
      for (int w = 0; w < W; ++w) {
        newP[w] = P[w] & nv[w];
        if (newP[w]) empty = false;
      }
      if (empty) {
        if (static_cast<int>(r.size()) > pruning_bound()) record(r);
      } else {
        expand(newP, r, depth + 1);
      }
      r.pop_back();
      P[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      if (timed_out || found_target) return;
    }
  }

  const DenseGraph& g_;
  Clock::time_point deadline_;
  bool has_deadline_;
  std::atomic<int>* shared_best_;
  std::vector<std::uint64_t> p_arena_;
  std::vector<std::uint64_t> scratch_;
  std::vector<int> order_arena_;
  std::vector<int> color_arena_;
};

std::vector<int> greedy_clique(const DenseGraph& g) {
  std::vector<int> clique;
  std::vector<std::uint64_t> cand(g.words, ~std::uint64_t{0});
  if (g.n % 64) cand[g.words - 1] = (std::uint64_t{1} << (g.n % 64)) - 1;
  while (true) {
    int v = -1;
    for (int i = 0; i < g.words; ++i)
      if (cand[i]) {
        v = (i << 6) + std::countr_zero(cand[i]);
        break;
      }
    if (v < 0) break;
    clique.push_back(v);
    const std::uint64_t* nv = g.row(v);
    for (int i = 0; i < g.words; ++i) cand[i] &= nv[i];
  }
  return clique;
}

struct SubProblem {
  DenseGraph g;
  std::vector<vertex_t> to_original;
  int offset = 0;  // added to the subproblem's omega for the final answer
  std::vector<vertex_t> fixed;  // vertices implied by the reduction
};

SubProblem build_dense(const CayleyGraph& graph, const SolverConfig& config) {
  const BitMatrix& adj = graph.materialize(config.materialize_cap);
  const int q = static_cast<int>(graph.vertex_count());
  if (!config.use_transitivity) {
    SubProblem sp{DenseGraph(q), {}, 0, {}};
    sp.to_original.resize(q);
    for (int v = 0; v < q; ++v) sp.to_original[v] = static_cast<vertex_t>(v);
    for (int u = 0; u < q; ++u)
      for (int v = u + 1; v < q; ++v)
        if (adj.get(u, v)) sp.g.set_edge(u, v);
    return sp;
  }
  // Cayley graphs are vertex transitive: omega(X) = 1 + omega(X[N(0)]).
  std::vector<vertex_t> nbrs;
  for (int v = 1; v < q; ++v)
    if (adj.get(0, v)) nbrs.push_back(static_cast<vertex_t>(v));
  SubProblem sp{DenseGraph(static_cast<int>(nbrs.size())), nbrs, 1, {0}};
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (adj.get(nbrs[i], nbrs[j])) sp.g.set_edge(static_cast<int>(i), static_cast<int>(j));
  return sp;
}

struct SearchOutcome {
  int best_size = 0;
  std::vector<int> best;
  std::uint64_t nodes = 0;
  bool timed_out = false;
};

SearchOutcome search_omega(const DenseGraph& g, const SolverConfig& config,
                           Clock::time_point deadline, bool has_deadline) {
  SearchOutcome out;
  std::vector<int> seed = greedy_clique(g);
  std::vector<std::uint64_t> full(g.words, ~std::uint64_t{0});
  if (g.n % 64) full[g.words - 1] = (std::uint64_t{1} << (g.n % 64)) - 1;
  if (g.n == 0) return out;

  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    BBSolver solver(g, deadline, has_deadline, nullptr);
    solver.best_size = static_cast<int>(seed.size()) - 1;
    solver.run(full.data(), {});
    out.nodes = solver.nodes;
    out.timed_out = solver.timed_out;
    if (static_cast<int>(solver.best.size()) >= static_cast<int>(seed.size())) {
      out.best = solver.best;
    } else {
      out.best = seed;
    }
    out.best_size = static_cast<int>(out.best.size());
    return out;
  }

  // Top-level subproblem distribution: root branches on each vertex v with
  // candidate set N(v) restricted to smaller indices; only the incumbent
  // size is shared, so the computed omega is independent of scheduling.
  std::atomic<int> shared_best(static_cast<int>(seed.size()) - 1);
  std::atomic<int> next_task(g.n - 1);
  std::atomic<std::uint64_t> total_nodes(0);
  std::atomic<bool> any_timeout(false);
  std::vector<std::vector<int>> bests(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      BBSolver solver(g, deadline, has_deadline, &shared_best);
      std::vector<std::uint64_t> P(g.words);
      while (true) {
        int v = next_task.fetch_sub(1);
        if (v < 0) break;
        const std::uint64_t* nv = g.row(v);
        for (int w = 0; w < g.words; ++w) {
          std::uint64_t prefix = ~std::uint64_t{0};
          if ((v >> 6) == w) prefix = (std::uint64_t{1} << (v & 63)) - 1;
          else if ((v >> 6) < w) prefix = 0;
          P[w] = nv[w] & prefix;
        }
        solver.run(P.data(), {v});
        if (solver.timed_out) {
          any_timeout = true;
          break;
        }
      }
      total_nodes += solver.nodes;
      bests[t] = solver.best;
    });
  }
  for (auto& th : pool) th.join();
  out.nodes = total_nodes.load();
  out.timed_out = any_timeout.load();
  out.best = seed;
  for (auto& b : bests)
    if (b.size() > out.best.size()) out.best = b;
  out.best_size = static_cast<int>(out.best.size());
  return out;
}

// Deterministic witness: the first clique of size omega in canonical DFS
// order, independent of how omega itself was computed.
std::vector<int> canonical_witness(const DenseGraph& g, int omega,
                                   Clock::time_point deadline, bool has_deadline,
                                   std::uint64_t& nodes, bool& timed_out) {
  BBSolver solver(g, deadline, has_deadline, nullptr);
  solver.best_size = omega - 1;
  solver.target = omega;
  std::vector<std::uint64_t> full(g.words, ~std::uint64_t{0});
  if (g.n % 64) full[g.words - 1] = (std::uint64_t{1} << (g.n % 64)) - 1;
  solver.run(full.data(), {});
  nodes += solver.nodes;
  timed_out = solver.timed_out;
  return solver.best;
}

}  // namespace

bool is_clique(const CayleyGraph& graph, const std::vector<vertex_t>& vertices) {
  std::vector<vertex_t> v = vertices;
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw std::invalid_argument("duplicate vertices");
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!graph.adjacent(v[i], v[j])) return false;
  return true;
}

MaximalityResult is_maximal_clique(const CayleyGraph& graph,
                                   const std::vector<vertex_t>& vertices) {
  if (!is_clique(graph, vertices))
    throw std::invalid_argument("input is not a clique");
  std::vector<bool> member(graph.vertex_count(), false);
  for (vertex_t v : vertices) member[v] = true;
  for (vertex_t w = 0; w < graph.vertex_count(); ++w) {
    if (member[w]) continue;
    bool extends = true;
    for (vertex_t v : vertices)
      if (!graph.adjacent(w, v)) {
        extends = false;
        break;
      }
    if (extends) return {false, w};
  }
  return {true, std::nullopt};
}

CliqueCertificate max_clique(const CayleyGraph& graph, const SolverConfig& config) {
  const auto t0 = Clock::now();
  const bool has_deadline = config.time_limit_seconds > 0;
  const auto deadline =
      t0 + std::chrono::duration_cast<Clock::duration>(
               std::chrono::duration<double>(config.time_limit_seconds));

  SubProblem sp = build_dense(graph, config);
  SearchOutcome phase1 = search_omega(sp.g, config, deadline, has_deadline);

  CliqueCertificate cert;
  cert.nodes_explored = phase1.nodes;

  std::vector<int> witness = phase1.best;
  if (!phase1.timed_out && phase1.best_size > 0) {
    bool wto = false;
    witness = canonical_witness(sp.g, phase1.best_size, deadline, has_deadline,
                                cert.nodes_explored, wto);
    if (wto) {
      phase1.timed_out = true;
      witness = phase1.best;
    }
  }

  cert.vertices = sp.fixed;
  for (int v : witness) cert.vertices.push_back(sp.to_original[v]);
  std::sort(cert.vertices.begin(), cert.vertices.end());
  cert.size = static_cast<int>(cert.vertices.size());
  cert.verified_clique = is_clique(graph, cert.vertices);
  cert.complete = !phase1.timed_out;
  if (cert.complete) {
    cert.verified_maximum = true;
    cert.verified_maximal = true;
    cert.matched_upper_bound = cert.size;
    cert.bound_source = "exhaustive-search";
  }
  cert.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return cert;
}

namespace {

void naive_extend(const CayleyGraph& graph, std::vector<vertex_t>& current,
                  vertex_t start, std::vector<vertex_t>& best) {
  if (current.size() > best.size()) best = current;
  for (vertex_t v = start; v < graph.vertex_count(); ++v) {
    bool ok = true;
    for (vertex_t u : current)
      if (!graph.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    current.push_back(v);
    naive_extend(graph, current, v + 1, best);
    current.pop_back();
  }
}

}  // namespace

CliqueCertificate naive_max_clique(const CayleyGraph& graph) {
  if (graph.vertex_count() > 150)
    throw std::invalid_argument("naive oracle capped at q <= 150");
  const auto t0 = Clock::now();
  std::vector<vertex_t> current, best;
  naive_extend(graph, current, 0, best);
  CliqueCertificate cert;
  cert.vertices = best;
  std::sort(cert.vertices.begin(), cert.vertices.end());
  cert.size = static_cast<int>(cert.vertices.size());
  cert.verified_clique = is_clique(graph, cert.vertices);
  cert.verified_maximum = true;
  cert.verified_maximal = true;
  cert.matched_upper_bound = cert.size;
  cert.bound_source = "exhaustive-enumeration";
  cert.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return cert;
}

namespace {

void bron_kerbosch(const DenseGraph& g, std::vector<std::uint64_t>& P,
                   std::vector<std::uint64_t>& X, int r_size,
                   std::set<int>& sizes) {
  const int W = g.words;
  if (words_empty(P.data(), W) && words_empty(X.data(), W)) {
    sizes.insert(r_size);
    return;
  }
  // pivot: vertex of P|X with most neighbors in P
  int pivot = -1, best_deg = -1;
  for (int w = 0; w < W; ++w) {
    std::uint64_t both = P[w] | X[w];
    while (both) {
      int v = (w << 6) + std::countr_zero(both);
      both &= both - 1;
      int deg = 0;
      const std::uint64_t* nv = g.row(v);
      for (int i = 0; i < W; ++i) deg += std::popcount(P[i] & nv[i]);
      if (deg > best_deg) {
        best_deg = deg;
        pivot = v;
      }
    }
  }
  std::vector<std::uint64_t> cand(W);
  const std::uint64_t* np = g.row(pivot);
  for (int w = 0; w < W; ++w) cand[w] = P[w] & ~np[w];
  for (int w = 0; w < W; ++w) {
    while (cand[w]) {
      int v = (w << 6) + std::countr_zero(cand[w]);
      cand[w] &= cand[w] - 1;
      const std::uint64_t* nv = g.row(v);
      std::vector<std::uint64_t> newP(W), newX(W);
      for (int i = 0; i < W; ++i) {
        newP[i] = P[i] & nv[i];
        newX[i] = X[i] & nv[i];
      }
      bron_kerbosch(g, newP, newX, r_size + 1, sizes);
      P[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      X[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
  }
}

}  // namespace

std::set<int> enumerate_maximal_clique_sizes(const CayleyGraph& graph,
                                             std::uint64_t size_cap) {
  if (graph.vertex_count() > size_cap)
    throw std::invalid_argument("maximal-clique enumeration cap exceeded");
  SolverConfig cfg;
  cfg.use_transitivity = false;
  cfg.materialize_cap = std::max<std::uint64_t>(size_cap, CayleyGraph::kDefaultMaterializeCap);
  SubProblem sp = build_dense(graph, cfg);
  std::vector<std::uint64_t> P(sp.g.words, ~std::uint64_t{0});
  if (sp.g.n % 64) P[sp.g.words - 1] = (std::uint64_t{1} << (sp.g.n % 64)) - 1;
  std::vector<std::uint64_t> X(sp.g.words, 0);
  std::set<int> sizes;
  bron_kerbosch(sp.g, P, X, 0, sizes);
  return sizes;
}

nlohmann::json CliqueCertificate::to_json(const CayleyGraph& graph) const {
  return nlohmann::json{
      {"graph", graph.descriptor()},
      {"omega", size},
      {"witness", vertices},
      {"status",
       {{"verified_clique", verified_clique},
        {"verified_maximal", verified_maximal},
        {"verified_maximum", verified_maximum},
        {"complete", complete},
        {"matched_upper_bound",
         matched_upper_bound ? nlohmann::json(*matched_upper_bound)
                             : nlohmann::json()},
        {"bound_source", bound_source}}},
      {"elapsed_ms", elapsed_ms},
      {"nodes_explored", nodes_explored}};
}

}  // namespace caygraph
