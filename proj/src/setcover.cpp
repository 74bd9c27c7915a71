#include "udgdom/setcover.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

namespace udgdom {

std::size_t SetCoverInstance::max_subset_size() const {
  std::size_t m = 0;
  for (const auto& s : subsets) m = std::max(m, s.members.size());
  return m;
}

namespace {

// Instance rewritten over dense element indices 0..k-1.
struct DenseInstance {
  std::size_t elements = 0;
  std::vector<std::vector<std::size_t>> subset_elems;
  std::vector<std::vector<std::size_t>> elem_subsets;
};

DenseInstance densify(const SetCoverInstance& inst) {
  std::unordered_map<Vertex, std::size_t> index;
  index.reserve(inst.universe.size());
  for (Vertex e : inst.universe) {
    if (!index.emplace(e, index.size()).second) {
      throw InvalidInputError("duplicate universe element " + std::to_string(e));
    }
  }
  DenseInstance d;
  d.elements = inst.universe.size();
  d.subset_elems.resize(inst.subsets.size());
  d.elem_subsets.resize(d.elements);
  for (std::size_t s = 0; s < inst.subsets.size(); ++s) {
    for (Vertex e : inst.subsets[s].members) {
      auto it = index.find(e);
      if (it == index.end()) {
        throw UncoverableError("subset " + std::to_string(s) + " holds element " +
                               std::to_string(e) + " outside the universe");
      }
      auto& elems = d.subset_elems[s];
      if (std::find(elems.begin(), elems.end(), it->second) != elems.end()) continue;
      elems.push_back(it->second);
      d.elem_subsets[it->second].push_back(s);
    }
  }
  for (std::size_t e = 0; e < d.elements; ++e) {
    if (d.elem_subsets[e].empty()) {
      throw UncoverableError("element " + std::to_string(inst.universe[e]) +
                             " is in no subset");
    }
  }
  return d;
}

CoverSelection make_selection(const SetCoverInstance& inst, std::vector<std::size_t> chosen) {
  std::sort(chosen.begin(), chosen.end());
  CoverSelection out;
  out.owners.reserve(chosen.size());
  for (std::size_t s : chosen) out.owners.push_back(inst.subsets[s].owner);
  out.chosen = std::move(chosen);
  return out;
}

}  // namespace

SetCoverInstance build_cover_instance(const UnitDiskGraph& g, const IndependentSet& d) {
  std::vector<char> in_d(g.size(), 0);
  for (Vertex v : d.members) {
    if (g.degree(v) == 0) throw IsolatedMemberError(v);
    in_d[v] = 1;
  }
  SetCoverInstance inst;
  inst.universe = d.members;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (in_d[u]) continue;
    CoverSubset s{u, {}};
    for (Vertex w : g.neighbors(u)) {
      if (in_d[w]) s.members.push_back(w);
    }
    inst.subsets.push_back(std::move(s));
  }
  return inst;
}

CoverSelection greedy_set_cover(const SetCoverInstance& inst) {
  const DenseInstance d = densify(inst);

  std::vector<std::size_t> gain(d.subset_elems.size());
  // Ordered by (largest gain, lowest position).
  auto better = [&](std::size_t a, std::size_t b) {
    return gain[a] != gain[b] ? gain[a] > gain[b] : a < b;
  };
  std::set<std::size_t, decltype(better)> queue(better);
  for (std::size_t s = 0; s < gain.size(); ++s) {
    gain[s] = d.subset_elems[s].size();
    if (gain[s] > 0) queue.insert(s);
  }

  std::vector<char> covered(d.elements, 0);
  std::size_t remaining = d.elements;
  std::vector<std::size_t> chosen;
  while (remaining > 0) {
    const std::size_t best = *queue.begin();
    queue.erase(queue.begin());
    chosen.push_back(best);
    for (std::size_t e : d.subset_elems[best]) {
      if (covered[e]) continue;
      covered[e] = 1;
      --remaining;
      for (std::size_t s : d.elem_subsets[e]) {
        if (s == best) continue;
        queue.erase(s);
        if (--gain[s] > 0) queue.insert(s);
      }
    }
    gain[best] = 0;
  }
  return make_selection(inst, std::move(chosen));
}

namespace {

// Include-first depth-first search over positions in ascending order. The
// first cover found at each size is the lexicographically smallest one, so
// accepting only strict improvements yields the lexicographic tie-break.
class CoverSearch {
 public:
  explicit CoverSearch(const DenseInstance& d)
      : d_(d), count_(d.elements, 0), last_(d.elements, 0) {
    for (std::size_t e = 0; e < d.elements; ++e) last_[e] = d.elem_subsets[e].back();
    for (const auto& s : d.subset_elems) max_size_ = std::max(max_size_, s.size());
    best_size_ = d.subset_elems.size() + 1;
  }

  std::vector<std::size_t> run() {
    uncovered_ = d_.elements;
    search(0);
    return best_;
  }

 private:
  void search(std::size_t pos) {
    if (uncovered_ == 0) {
      if (current_.size() < best_size_) {
        best_size_ = current_.size();
        best_ = current_;
      }
      return;
    }
    if (pos == d_.subset_elems.size()) return;
    const std::size_t lower = (uncovered_ + max_size_ - 1) / max_size_;
    if (current_.size() + lower >= best_size_) return;
    for (std::size_t e = 0; e < d_.elements; ++e) {
      if (count_[e] == 0 && last_[e] < pos) return;
    }

    current_.push_back(pos);
    for (std::size_t e : d_.subset_elems[pos]) {
      if (count_[e]++ == 0) --uncovered_;
    }
    search(pos + 1);
    for (std::size_t e : d_.subset_elems[pos]) {
      if (--count_[e] == 0) ++uncovered_;
    }
    current_.pop_back();

    search(pos + 1);
  }

  const DenseInstance& d_;
  std::vector<std::size_t> count_;
  std::vector<std::size_t> last_;
  std::size_t max_size_ = 1;
  std::size_t uncovered_ = 0;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
};

}  // namespace

CoverSelection exact_set_cover(const SetCoverInstance& inst, std::size_t max_subsets) {
  if (inst.subsets.size() > max_subsets) {
    throw SizeLimitError(inst.subsets.size(), max_subsets);
  }
  const DenseInstance d = densify(inst);
  return make_selection(inst, CoverSearch(d).run());
}

bool covers_universe(const SetCoverInstance& inst, const std::vector<std::size_t>& chosen) {
  std::set<Vertex> covered;
  for (std::size_t s : chosen) {
    if (s >= inst.subsets.size()) return false;
    covered.insert(inst.subsets[s].members.begin(), inst.subsets[s].members.end());
  }
  return std::all_of(inst.universe.begin(), inst.universe.end(),
                     [&](Vertex e) { return covered.count(e) > 0; });
}

Fraction harmonic_number(unsigned m) {
  Fraction h{0, 1};
  for (std::int64_t k = 1; k <= static_cast<std::int64_t>(m); ++k) {
    h.num = h.num * k + h.den;
    h.den *= k;
    const auto g = std::gcd(h.num, h.den);
    h.num /= g;
    h.den /= g;
  }
  return h;
}

}  // namespace udgdom
