#include "subset_search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <numeric>
#include <optional>

#include "gpnum/error.hpp"

namespace gpnum::detail {

using bits::Word;

ForbiddenStructure::ForbiddenStructure(std::size_t n)
    : n_(n), words_(bits::words_for(n)), pairs_(n * words_, 0) {
  if (n > kMaxSearchOrder)
    throw InputError("exact search supports at most " + std::to_string(kMaxSearchOrder) +
                     " vertices, got " + std::to_string(n));
}

void ForbiddenStructure::forbid_pair(Vertex a, Vertex b) {
  bits::set(mutable_pair_row(a), b);
  bits::set(mutable_pair_row(b), a);
}

void ForbiddenStructure::forbid_triple(Vertex a, Vertex b, Vertex c) {
  if (triples_.empty()) triples_.assign(n_ * n_ * words_, 0);
  bits::set(mutable_triple_row(a, b), c);
  bits::set(mutable_triple_row(b, a), c);
  bits::set(mutable_triple_row(a, c), b);
  bits::set(mutable_triple_row(c, a), b);
  bits::set(mutable_triple_row(b, c), a);
  bits::set(mutable_triple_row(c, b), a);
}

void ForbiddenStructure::set_triple_row(Vertex a, Vertex b, std::span<const Word> row) {
  if (triples_.empty()) triples_.assign(n_ * n_ * words_, 0);
  std::copy(row.begin(), row.end(), mutable_triple_row(a, b).begin());
}

bool ForbiddenStructure::feasible(std::span<const Vertex> s) const {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (pair_forbidden(s[i], s[j])) return false;
      if (!has_triples()) continue;
      for (std::size_t k = j + 1; k < s.size(); ++k)
        if (triple_forbidden(s[i], s[j], s[k])) return false;
    }
  return true;
}

std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  return order;
}

namespace {

using Clock = std::chrono::steady_clock;

class Engine {
 public:
  explicit Engine(const SearchRequest& req)
      : req_(req),
        fs_(*req.structure),
        n_(fs_.order()),
        w_(fs_.words()),
        rank_of_(n_, 0) {
    if (req.original.size() != n_) throw InputError("search order does not cover every vertex");
    for (Vertex r = 0; r < n_; ++r) rank_of_[req.original[r]] = r;
    if (req.budget.max_ms > 0)
      deadline_ = Clock::now() + std::chrono::milliseconds(req.budget.max_ms);
  }

  SearchOutcome run() {
    install_seed();
    if (n_ > 0) {
      Level& root = level(0);
      for (Vertex a = 0; a < n_; ++a) std::copy_n(fs_.pair_row(a).data(), w_, root.conf.data() + a * w_);
      std::vector<Word> all(w_, 0);
      for (Vertex a = 0; a < n_; ++a) bits::set(all, a);
      expand(0, all);
    }
    SearchOutcome out;
    out.best = to_original(best_);
    out.complete = !stopped_;
    out.nodes = nodes_;
    return out;
  }

 private:
  struct Level {
    std::vector<Word> conf;       // per candidate: vertices it can no longer join
    std::vector<Word> group_mem;  // partition scratch
    std::vector<Word> remaining;
    std::vector<Word> prefix;
    std::vector<Word> next;
    std::vector<Vertex> order;
    std::vector<std::uint32_t> cum;
    struct Group {
      std::uint32_t first;  // index into members
      std::uint32_t size;
      bool pairwise;
    };
    std::vector<Group> groups;
    std::vector<std::vector<Vertex>> members;
  };

  Level& level(std::size_t depth) {
    while (levels_.size() <= depth) {
      Level l;
      l.conf.assign(n_ * w_, 0);
      l.group_mem.assign(n_ * w_, 0);
      l.remaining.assign(w_, 0);
      l.prefix.assign(w_, 0);
      l.next.assign(w_, 0);
      levels_.push_back(std::move(l));
    }
    return levels_[depth];
  }

  std::span<const Word> conf(const Level& l, Vertex a) const { return {l.conf.data() + a * w_, w_}; }

  std::vector<Vertex> to_original(std::span<const Vertex> ranks) const {
    std::vector<Vertex> out;
    out.reserve(ranks.size());
    for (Vertex r : ranks) out.push_back(req_.original[r]);
    std::sort(out.begin(), out.end());
    return out;
  }

  void install_seed() {
    if (req_.seed.empty()) return;
    std::vector<Vertex> ranks;
    for (Vertex v : req_.seed) {
      if (v >= n_) throw InputError("warm-start vertex out of range");
      ranks.push_back(rank_of_[v]);
    }
    std::sort(ranks.begin(), ranks.end());
    if (std::adjacent_find(ranks.begin(), ranks.end()) != ranks.end())
      throw InputError("warm-start set repeats a vertex");
    if (!fs_.feasible(ranks) || (req_.accept && !req_.accept(to_original(ranks))))
      throw InputError("warm-start set is not feasible for this problem");
    best_ = std::move(ranks);
  }

  void record() {
    if (chosen_.size() < best_.size()) return;
    if (chosen_.size() == best_.size() && best_.size() > 0) {
      // keep the lexicographically least optimum among those found
      auto cand = to_original(chosen_);
      if (!(cand < to_original(best_))) return;
      if (req_.accept && !req_.accept(cand)) return;
      best_ = chosen_;
      return;
    }
    if (req_.accept && !req_.accept(to_original(chosen_))) return;
    best_ = chosen_;
  }

  bool out_of_budget() {
    if (stopped_) return true;
    if (req_.budget.max_nodes > 0 && nodes_ >= req_.budget.max_nodes) stopped_ = true;
    if (deadline_ && (nodes_ & 255) == 0 && Clock::now() >= *deadline_) stopped_ = true;
    return stopped_;
  }

  // Every triple in group ∪ {v} is infeasible given the current conflicts.
  bool triple_closed(const Level& l, const Level::Group& g, Vertex v) const {
    const auto cv = conf(l, v);
    for (std::uint32_t i = 0; i < g.size; ++i) {
      const Vertex a = l.members[g.first][i];
      if (bits::test(cv, a)) continue;
      const auto ca = conf(l, a);
      const auto bad = fs_.triple_row(a, v);
      const Word* mem = l.group_mem.data() + g.first * w_;
      for (std::size_t k = 0; k < w_; ++k) {
        Word open = mem[k] & ~ca[k] & ~cv[k] & ~bad[k];
        if (k == (a >> 6)) open &= ~(Word{1} << (a & 63));
        if (open) return false;
      }
    }
    return true;
  }

  void partition(Level& l, std::span<const Word> cand) {
    l.order.clear();
    l.cum.clear();
    if (req_.bound == BoundKind::count) {
      bits::for_each(cand, [&](std::size_t v) {
        l.order.push_back(static_cast<Vertex>(v));
        l.cum.push_back(static_cast<std::uint32_t>(l.order.size()));
      });
      return;
    }

    l.groups.clear();
    std::copy(cand.begin(), cand.end(), l.remaining.begin());
    const bool triples = fs_.has_triples();
    auto add = [&](Level::Group& g, Vertex v) {
      bits::set({l.group_mem.data() + g.first * w_, w_}, v);
      l.members[g.first].push_back(v);
      ++g.size;
    };

    bits::for_each(cand, [&](std::size_t vi) {
      const auto v = static_cast<Vertex>(vi);
      bits::reset(l.remaining, v);
      const auto cv = conf(l, v);
      for (auto& g : l.groups) {
        const std::span<const Word> mem{l.group_mem.data() + g.first * w_, w_};
        if (g.pairwise ? bits::subset_of(mem, cv) : triple_closed(l, g, v)) {
          add(g, v);
          return;
        }
      }
      if (triples) {
        // Pair v with a singleton when some later candidate closes a forbidden
        // triple with both, so the group can keep absorbing vertices.
        for (auto& g : l.groups) {
          if (g.size != 1 || !g.pairwise) continue;
          const Vertex s = l.members[g.first][0];
          if (bits::intersects(fs_.triple_row(s, v), l.remaining)) {
            g.pairwise = false;
            add(g, v);
            return;
          }
        }
      }
      const auto idx = static_cast<std::uint32_t>(l.groups.size());
      if (l.members.size() <= idx) l.members.emplace_back();
      l.members[idx].clear();
      std::fill_n(l.group_mem.data() + idx * w_, w_, Word{0});
      l.groups.push_back({idx, 0, true});
      add(l.groups.back(), v);
    });

    std::uint32_t bound = 0;
    for (const auto& g : l.groups)
      for (std::uint32_t i = 0; i < g.size; ++i) {
        l.order.push_back(l.members[g.first][i]);
        if (i == 0 || (i == 1 && !g.pairwise)) ++bound;
        l.cum.push_back(bound);
      }
  }

  void expand(std::size_t depth, std::span<const Word> cand) {
    level(depth + 1);
    Level& cur = levels_[depth];
    Level& nxt = levels_[depth + 1];

    partition(cur, cand);
    std::copy(cand.begin(), cand.end(), cur.prefix.begin());
    for (std::size_t i = cur.order.size(); i-- > 0;) {
      if (chosen_.size() + cur.cum[i] <= best_.size()) return;
      if (out_of_budget()) return;
      const Vertex v = cur.order[i];
      bits::reset(cur.prefix, v);
      const auto cv = conf(cur, v);
      bool any = false;
      for (std::size_t k = 0; k < w_; ++k) {
        cur.next[k] = cur.prefix[k] & ~cv[k];
        any |= cur.next[k] != 0;
      }
      ++nodes_;
      chosen_.push_back(v);
      record();
      if (any) {
        if (fs_.has_triples()) {
          bits::for_each(cur.next, [&](std::size_t a) {
            const auto ca = conf(cur, static_cast<Vertex>(a));
            const auto bad = fs_.triple_row(static_cast<Vertex>(a), v);
            Word* out = nxt.conf.data() + a * w_;
            for (std::size_t k = 0; k < w_; ++k) out[k] = ca[k] | bad[k];
          });
        } else {
          bits::for_each(cur.next, [&](std::size_t a) {
            std::copy_n(cur.conf.data() + a * w_, w_, nxt.conf.data() + a * w_);
          });
        }
        expand(depth + 1, cur.next);
      }
      chosen_.pop_back();
    }
  }

  const SearchRequest& req_;
  const ForbiddenStructure& fs_;
  std::size_t n_;
  std::size_t w_;
  std::vector<Vertex> rank_of_;
  std::deque<Level> levels_;  // stable addresses while recursing
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  std::optional<Clock::time_point> deadline_;
};

}  // namespace

SearchOutcome maximum_feasible_subset(const SearchRequest& request) {
  if (request.structure == nullptr) throw InputError("search request without a structure");
  return Engine(request).run();
}

}  // namespace gpnum::detail
