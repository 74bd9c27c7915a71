#include "udgdom/exact.hpp"

#include <algorithm>

namespace udgdom {

namespace {

void check_limit(const UnitDiskGraph& g, std::size_t limit) {
  if (g.size() > limit) throw SizeLimitError(g.size(), limit);
}

std::size_t max_degree(const UnitDiskGraph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.size(); ++v) d = std::max(d, g.degree(v));
  return d;
}

// Shared search for dominating and total dominating sets. A vertex v is
// satisfied once the chosen set meets its closed (ds) or open (tds)
// neighborhood. Each node branches on the lowest unsatisfied vertex; in the
// k-th branch the first k-1 candidates are forbidden, so every set is reached
// at most once.
class SetSearch {
 public:
  SetSearch(const UnitDiskGraph& g, bool closed, std::size_t upper_bound)
      : g_(g),
        closed_(closed),
        hits_(g.size(), 0),
        forbidden_(g.size(), 0),
        best_size_(upper_bound) {
    reach_ = max_degree(g) + (closed ? 1 : 0);
    unsatisfied_ = g.size();
  }

  ExactResult run() {
    search();
    ExactResult r;
    r.objective = static_cast<std::int64_t>(best_.size());
    r.members = best_;
    r.explored = explored_;
    return r;
  }

 private:
  // Vertices whose neighborhood contains u.
  template <typename F>
  void for_each_watcher(Vertex u, F&& f) {
    if (closed_) f(u);
    for (Vertex w : g_.neighbors(u)) f(w);
  }

  void choose(Vertex u) {
    chosen_.push_back(u);
    for_each_watcher(u, [&](Vertex w) {
      if (hits_[w]++ == 0) --unsatisfied_;
    });
  }

  void unchoose(Vertex u) {
    for_each_watcher(u, [&](Vertex w) {
      if (--hits_[w] == 0) ++unsatisfied_;
    });
    chosen_.pop_back();
  }

  void offer_leaf() {
    std::vector<Vertex> sorted = chosen_;
    std::sort(sorted.begin(), sorted.end());
    if (best_.empty() || sorted.size() < best_.size() ||
        (sorted.size() == best_.size() && sorted < best_)) {
      best_ = std::move(sorted);
      best_size_ = best_.size();
    }
  }

  void search() {
    ++explored_;
    if (unsatisfied_ == 0) {
      offer_leaf();
      return;
    }
    const std::size_t lower = reach_ == 0 ? unsatisfied_ : (unsatisfied_ + reach_ - 1) / reach_;
    if (chosen_.size() + lower > best_size_) return;

    Vertex v = 0;
    while (hits_[v] != 0) ++v;

    std::vector<Vertex> candidates;
    if (closed_) candidates.push_back(v);
    for (Vertex u : g_.neighbors(v)) candidates.push_back(u);
    std::sort(candidates.begin(), candidates.end());

    std::vector<Vertex> newly_forbidden;
    for (Vertex u : candidates) {
      if (forbidden_[u]) continue;
      choose(u);
      search();
      unchoose(u);
      forbidden_[u] = 1;
      newly_forbidden.push_back(u);
    }
    for (Vertex u : newly_forbidden) forbidden_[u] = 0;
  }

  const UnitDiskGraph& g_;
  bool closed_;
  std::size_t reach_ = 1;
  std::vector<std::size_t> hits_;
  std::vector<char> forbidden_;
  std::size_t unsatisfied_ = 0;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
  std::size_t best_size_;
  std::uint64_t explored_ = 0;
};

// Vertex-by-vertex labelling search for (total) Roman dominating functions.
class RomanSearch {
 public:
  struct Bound {
    std::int64_t weight;
    std::size_t ones;
  };

  RomanSearch(const UnitDiskGraph& g, bool total, bool min_ones, Bound seed)
      : g_(g),
        total_(total),
        min_ones_(min_ones),
        n_(g.size()),
        labels_(g.size(), kUnset),
        twos_near_(g.size(), 0),
        positive_near_(g.size(), 0),
        best_(seed) {
    reach_ = max_degree(g) + 1;
    // Vertex w can be checked once every member of N[w] is labelled.
    finalized_at_.resize(n_);
    for (Vertex w = 0; w < n_; ++w) {
      Vertex last = w;
      for (Vertex u : g.neighbors(w)) last = std::max(last, u);
      finalized_at_[last].push_back(w);
    }
  }

  ExactResult run() {
    search(0);
    ExactResult r;
    r.objective = best_.weight;
    r.assignment.values.assign(witness_.begin(), witness_.end());
    r.explored = explored_;
    return r;
  }

 private:
  static constexpr std::uint8_t kUnset = 0xff;

  bool cannot_improve(std::int64_t weight_floor, std::size_t ones) const {
    if (weight_floor != best_.weight) return weight_floor > best_.weight;
    return !min_ones_ || ones >= best_.ones;
  }

  // Remaining weight needed for vertices not yet Roman-dominated. A label 2
  // serves at most reach_ of them for cost 2, a label 1 serves one.
  std::int64_t remaining_lower_bound(Vertex next) const {
    std::size_t open = 0;
    for (Vertex w = 0; w < n_; ++w) {
      if (twos_near_[w] > 0) continue;
      if (w >= next || labels_[w] == 0) ++open;
    }
    if (reach_ < 2) return static_cast<std::int64_t>(open);
    return static_cast<std::int64_t>((2 * open + reach_ - 1) / reach_);
  }

  bool satisfied(Vertex w) const {
    if (labels_[w] == 0) return twos_near_[w] > 0;
    return !total_ || positive_near_[w] > 0;
  }

  void apply(Vertex v, std::uint8_t label, int sign) {
    for (Vertex w : g_.neighbors(v)) {
      if (label == 2) twos_near_[w] += sign;
      if (label >= 1) positive_near_[w] += sign;
    }
  }

  void search(Vertex v) {
    ++explored_;
    if (v == n_) {
      // prune() already rejected anything that cannot beat the incumbent.
      if (witness_.empty() || !cannot_improve(weight_, ones_)) {
        best_ = {weight_, ones_};
        witness_ = labels_;
      }
      return;
    }
    for (std::uint8_t label = 0; label <= 2; ++label) {
      labels_[v] = label;
      weight_ += label;
      ones_ += label == 1 ? 1 : 0;
      apply(v, label, +1);

      bool feasible = true;
      for (Vertex w : finalized_at_[v]) {
        if (!satisfied(w)) {
          feasible = false;
          break;
        }
      }
      if (feasible && !prune(v + 1)) search(v + 1);

      apply(v, label, -1);
      ones_ -= label == 1 ? 1 : 0;
      weight_ -= label;
    }
    labels_[v] = kUnset;
  }

  bool prune(Vertex next) const {
    const std::int64_t floor = weight_ + remaining_lower_bound(next);
    if (witness_.empty()) {
      // The seed bound is achievable but carries no witness, so ties with it
      // must still be explored.
      if (floor != best_.weight) return floor > best_.weight;
      return min_ones_ && ones_ > best_.ones;
    }
    return cannot_improve(floor, ones_);
  }

  const UnitDiskGraph& g_;
  bool total_;
  bool min_ones_;
  Vertex n_;
  std::size_t reach_ = 1;
  std::vector<std::uint8_t> labels_;
  std::vector<std::int32_t> twos_near_;
  std::vector<std::int32_t> positive_near_;
  std::vector<std::vector<Vertex>> finalized_at_;
  std::int64_t weight_ = 0;
  std::size_t ones_ = 0;
  Bound best_;
  std::vector<std::uint8_t> witness_;
  std::uint64_t explored_ = 0;
};

}  // namespace

ExactResult exact_min_ds(const UnitDiskGraph& g, std::size_t limit) {
  check_limit(g, limit);
  const std::size_t seed = maximal_independent_set(g).members.size();
  return SetSearch(g, /*closed=*/true, seed).run();
}

ExactResult exact_min_tds(const UnitDiskGraph& g, std::size_t limit) {
  require_no_isolated(g);
  check_limit(g, limit);
  const std::size_t seed = tds_udg_sc(g).members.size();
  return SetSearch(g, /*closed=*/false, seed).run();
}

ExactResult exact_min_trdf(const UnitDiskGraph& g, bool tie_break_min_v1, std::size_t limit) {
  require_no_isolated(g);
  check_limit(g, limit);
  const RomanAssignment seed = trdf_udg_sc(g);
  return RomanSearch(g, /*total=*/true, tie_break_min_v1, {seed.weight(), seed.count(1)}).run();
}

ExactResult exact_min_rdf(const UnitDiskGraph& g, std::size_t limit) {
  check_limit(g, limit);
  // Label 2 on a maximal independent set is always a Roman dominating function.
  const auto twos = static_cast<std::int64_t>(maximal_independent_set(g).members.size());
  const std::int64_t seed = std::min<std::int64_t>(2 * twos, static_cast<std::int64_t>(g.size()));
  return RomanSearch(g, /*total=*/false, false, {seed, g.size()}).run();
}

}  // namespace udgdom
