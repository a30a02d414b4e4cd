#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "longcycle/error.hpp"
#include "longcycle/hamilton.hpp"
#include "longcycle/path_sequence.hpp"

namespace longcycle {
namespace {

constexpr std::uint32_t kFromRoot = static_cast<std::uint32_t>(-1);

struct Step {
  Vertex parent = kNoVertex;
  std::uint32_t pivot = kFromRoot;  // rotation index j that produced the endpoint
};

// Endpoints reached from one fixed end, each with the rotation that first
// produced it. Cleared in O(1) by bumping the generation.
class Frontier {
 public:
  explicit Frontier(std::size_t n) : stamp_(n, 0), step_(n) {}

  void reset() {
    ++generation_;
    order_.clear();
  }
  [[nodiscard]] bool has(Vertex v) const { return stamp_[v] == generation_; }
  void add(Vertex v, Step s) {
    stamp_[v] = generation_;
    step_[v] = s;
    order_.push_back(v);
  }
  [[nodiscard]] const Step& step(Vertex v) const { return step_[v]; }
  [[nodiscard]] const std::vector<Vertex>& order() const { return order_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<Step> step_;
  std::vector<Vertex> order_;
  std::uint32_t generation_ = 0;
};

using SavedFrontier = std::unordered_map<Vertex, Step>;

enum class Outcome { Exhausted, ConnectorRemoved, Closed };

class Engine {
 public:
  Engine(const HamiltonInstance& inst, const std::vector<std::vector<Vertex>>& paths, Seed seed,
         const PosaOptions& options)
      : inst_(inst),
        h_(inst.h_prime),
        n_(h_.order()),
        seq_(n_, chain(paths)),
        forced_mate_(n_, kNoVertex),
        salt_(mix64(seed.master)),
        options_(options),
        main_(n_),
        aux_(n_) {
    for (const Edge& e : inst.forced) {
      forced_mate_[e.u] = e.v;
      forced_mate_[e.v] = e.u;
    }
  }

  PosaResult run() {
    PosaResult result;
    result.connectors = connectors_.size();
    if (seq_.size() != n_) throw InternalInvariant("path set does not cover every vertex");
    if (n_ < 3) return fail(result, 0);
    for (std::size_t iteration = 0;; ++iteration) {
      result.iterations = iteration + 1;
      emit({{"event", "iteration"}, {"index", iteration}, {"connectors", connectors_.size()}});
      Outcome o = explore(main_);
      if (o == Outcome::Exhausted) o = fixed_end_sweep();
      if (o == Outcome::Exhausted) o = reveal_until_progress();
      if (o == Outcome::Exhausted) return fail(result, iteration);
      if (o == Outcome::Closed && close_cycle()) break;
    }
    result.cycle = seq_.to_vector();
    validate(result.cycle);
    result.success = true;
    result.rotations = rotations_;
    result.reservoir_used = next_reveal_;
    return result;
  }

 private:
  std::vector<Vertex> chain(const std::vector<std::vector<Vertex>>& paths) {
    std::vector<Vertex> order;
    for (const auto& p : paths) {
      if (!order.empty() && !h_.has_edge(order.back(), p.front())) {
        connectors_.insert(Edge(order.back(), p.front()).key());
      }
      order.insert(order.end(), p.begin(), p.end());
    }
    return order;
  }

  void emit(const nlohmann::json& event) const {
    if (options_.trace) options_.trace(event);
  }

  bool closable(Vertex a, Vertex b) const {
    return h_.has_edge(a, b) || (!revealed_.empty() && revealed_.contains(Edge(a, b).key()));
  }

  std::size_t offset(Vertex x, std::size_t deg) const { return mix64(salt_ ^ x) % deg; }

  // Depth-first search over rotations that keep seq_[0] fixed. Stops as
  // soon as a rotation deletes a connector or the path closes into a cycle,
  // leaving seq_ in that state; otherwise every rotation is undone.
  Outcome explore(Frontier& fr) {
    struct Frame {
      Vertex x;
      std::uint32_t pivot;
      std::uint32_t next;
    };
    fr.reset();
    const std::size_t last = seq_.size() - 1;
    const Vertex fixed = seq_.at(0);
    const Vertex root = seq_.at(last);
    fr.add(root, {});
    if (closable(root, fixed)) return Outcome::Closed;
    std::vector<Frame> stack{{root, kFromRoot, 0}};
    while (!stack.empty()) {
      const Vertex x = stack.back().x;
      const auto nbrs = h_.neighbors(x);
      if (stack.back().next == nbrs.size()) {
        if (stack.back().pivot != kFromRoot) seq_.reverse(stack.back().pivot + 1, last);
        stack.pop_back();
        continue;
      }
      const Vertex y = nbrs[(offset(x, nbrs.size()) + stack.back().next++) % nbrs.size()];
      const std::size_t j = seq_.index_of(y);
      if (j + 1 >= last) continue;
      const Vertex z = seq_.at(j + 1);
      if (forced_mate_[y] == z) continue;
      ++rotations_;
      if (connectors_.erase(Edge(y, z).key()) != 0) {
        seq_.reverse(j + 1, last);
        emit({{"event", "connector_removed"}, {"by", "rotation"}, {"left", connectors_.size()}});
        return Outcome::ConnectorRemoved;
      }
      if (fr.has(z)) continue;
      seq_.reverse(j + 1, last);
      fr.add(z, {x, static_cast<std::uint32_t>(j)});
      stack.push_back({z, static_cast<std::uint32_t>(j), 0});
      if (closable(z, fixed)) return Outcome::Closed;
    }
    return Outcome::Exhausted;
  }

  template <class Lookup>
  std::vector<std::uint32_t> replay(Lookup&& lookup, Vertex v) {
    std::vector<std::uint32_t> pivots;
    for (Step s = lookup(v); s.pivot != kFromRoot; s = lookup(s.parent)) pivots.push_back(s.pivot);
    std::reverse(pivots.begin(), pivots.end());
    const std::size_t last = seq_.size() - 1;
    for (std::uint32_t j : pivots) seq_.reverse(j + 1, last);
    return pivots;
  }

  void undo(const std::vector<std::uint32_t>& pivots) {
    const std::size_t last = seq_.size() - 1;
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) seq_.reverse(*it + 1, last);
  }

  std::vector<std::uint32_t> replay_main(Vertex v) {
    return replay([this](Vertex u) { return main_.step(u); }, v);
  }

  // Makes endpoint w of the main frontier the fixed end.
  std::vector<std::uint32_t> pin(Vertex w) {
    auto pivots = replay_main(w);
    seq_.reverse(0, seq_.size() - 1);
    return pivots;
  }

  void unpin(const std::vector<std::uint32_t>& pivots) {
    seq_.reverse(0, seq_.size() - 1);
    undo(pivots);
  }

  Outcome fixed_end_sweep() {
    const auto ends = main_.order();
    const std::size_t budget = std::min(options_.endpoint_budget, ends.size());
    for (std::size_t i = 0; i < budget; ++i) {
      const auto pivots = pin(ends[i]);
      const Outcome o = explore(aux_);
      if (o != Outcome::Exhausted) return o;
      unpin(pivots);
    }
    return Outcome::Exhausted;
  }

  Outcome reveal_until_progress() {
    std::unordered_map<Vertex, SavedFrontier> cache;
    while (next_reveal_ < inst_.reservoir.size()) {
      const Edge e = inst_.reservoir[next_reveal_];
      emit({{"event", "reveal"}, {"index", next_reveal_}, {"u", e.u}, {"v", e.v}});
      ++next_reveal_;
      revealed_.insert(e.key());
      if (connectors_.erase(e.key()) != 0) {
        emit({{"event", "connector_removed"}, {"by", "reveal"}, {"left", connectors_.size()}});
        return Outcome::ConnectorRemoved;
      }
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        if (!main_.has(a)) continue;
        auto it = cache.find(a);
        if (it == cache.end()) {
          const auto pivots = pin(a);
          const Outcome o = explore(aux_);
          if (o != Outcome::Exhausted) return o;
          SavedFrontier saved;
          for (Vertex v : aux_.order()) saved.emplace(v, aux_.step(v));
          unpin(pivots);
          it = cache.emplace(a, std::move(saved)).first;
        }
        if (!it->second.contains(b)) continue;
        pin(a);
        const auto& saved = it->second;
        replay([&saved](Vertex u) { return saved.at(u); }, b);
        emit({{"event", "closure"}, {"via", "reservoir"}});
        return Outcome::Closed;
      }
    }
    return Outcome::Exhausted;
  }

  // seq_ closes into a cycle. Returns true when no connector is left;
  // otherwise reopens the cycle at a connector.
  bool close_cycle() {
    if (connectors_.empty()) return true;
    const Edge r = Edge(static_cast<Vertex>(*connectors_.begin() >> 32), static_cast<Vertex>(*connectors_.begin()));
    connectors_.erase(connectors_.begin());
    const std::size_t i = seq_.index_of(r.u);
    const std::size_t k = seq_.index_of(r.v);
    const std::size_t lo = std::min(i, k);
    const std::size_t hi = std::max(i, k);
    if (hi - lo != 1) throw InternalInvariant("connector is not a path edge");
    seq_.rotate(hi);
    emit({{"event", "connector_removed"}, {"by", "closure"}, {"left", connectors_.size()}});
    return false;
  }

  PosaResult fail(PosaResult& result, std::size_t iteration) {
    PosaFailure f;
    f.iteration = iteration;
    f.connectors_left = connectors_.size();
    f.frontier_size = main_.order().size();
    f.reservoir_used = next_reveal_;
    emit({{"event", "failure"},
          {"iteration", iteration},
          {"connectors", f.connectors_left},
          {"frontier", f.frontier_size},
          {"reservoir_used", f.reservoir_used}});
    result.failure = f;
    result.rotations = rotations_;
    result.reservoir_used = next_reveal_;
    return result;
  }

  void validate(const std::vector<Vertex>& cycle) const {
    if (!connectors_.empty()) throw InternalInvariant("cycle still contains connectors");
    if (cycle.size() != n_) throw InternalInvariant("cycle does not span the working graph");
    std::vector<char> seen(n_, 0);
    std::size_t forced_hits = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Vertex a = cycle[i];
      const Vertex b = cycle[(i + 1) % cycle.size()];
      if (seen[a]) throw InternalInvariant("cycle repeats a vertex");
      seen[a] = 1;
      if (forced_mate_[a] == b) {
        ++forced_hits;
      } else if (!closable(a, b)) {
        throw InternalInvariant("cycle uses an edge outside H' and the revealed reservoir");
      }
    }
    if (forced_hits != inst_.forced.size()) throw InternalInvariant("cycle misses a forced edge");
  }

  const HamiltonInstance& inst_;
  const Graph& h_;
  std::size_t n_;
  std::set<std::uint64_t> connectors_;
  PathSequence seq_;
  std::vector<Vertex> forced_mate_;
  std::uint64_t salt_;
  const PosaOptions& options_;
  Frontier main_;
  Frontier aux_;
  std::unordered_set<std::uint64_t> revealed_;
  std::size_t next_reveal_ = 0;
  std::size_t rotations_ = 0;
};

}  // namespace

PosaResult posa_merge(const HamiltonInstance& inst, const std::vector<std::vector<Vertex>>& paths, Seed seed,
                      const PosaOptions& options) {
  return Engine(inst, paths, seed, options).run();
}

}  // namespace longcycle
