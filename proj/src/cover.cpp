#include "eqw/cover.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace eqw {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<Bits> member_bits(const HomogeneousSetCollection& c) {
  std::vector<Bits> bits(c.sets.size(), Bits(c.universe_size));
  for (std::size_t s = 0; s < c.sets.size(); ++s)
    for (std::size_t e : c.sets[s].members) {
      if (e >= c.universe_size) throw std::invalid_argument("set member outside the universe");
      bits[s].set(e);
    }
  return bits;
}

Bits full_universe(std::size_t n) {
  Bits u(n);
  u.set();
  return u;
}

void require_coverable(const std::vector<Bits>& bits, std::size_t n) {
  Bits all(n);
  for (const Bits& b : bits) all |= b;
  if (all.count() != n) {
    const std::size_t missing = (~all).find_first();
    throw std::runtime_error("element " + std::to_string(missing) +
                             " belongs to no homogeneous set; cover infeasible");
  }
}

Cover materialize(const HomogeneousSetCollection& c, std::vector<std::size_t> indices) {
  Cover cover;
  cover.universe_size = c.universe_size;
  cover.chosen_indices = std::move(indices);
  cover.chosen.reserve(cover.chosen_indices.size());
  for (std::size_t s : cover.chosen_indices) cover.chosen.push_back(c.sets[s]);
  return cover;
}

// Shared search state for exact covering and enumeration. The recursion
// branches on the uncovered element with the fewest usable sets; child i
// commits set i and bans the sets tried before it, so every cover is reached
// exactly once.
class CoverSearch {
 public:
  CoverSearch(const HomogeneousSetCollection& c, Deadline deadline)
      : collection_(c),
        deadline_(deadline),
        n_(c.universe_size),
        bits_(member_bits(c)),
        containing_(c.universe_size),
        co_coverage_(c.universe_size, Bits(c.universe_size)) {
    require_coverable(bits_, n_);
    for (std::size_t s = 0; s < bits_.size(); ++s)
      for (std::size_t e = bits_[s].find_first(); e != Bits::npos; e = bits_[s].find_next(e)) {
        containing_[e].push_back(s);
        co_coverage_[e] |= bits_[s];
      }
  }

  // Greedy packing of elements that pairwise share no set; each such
  // element needs its own set, so the pack size bounds the remaining cost.
  std::size_t lower_bound(const Bits& uncovered) const {
    Bits picked(n_);
    std::size_t count = 0;
    for (std::size_t e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e))
      if (!co_coverage_[e].intersects(picked)) {
        picked.set(e);
        ++count;
      }
    return count;
  }

  CoverSolution solve_min(std::vector<std::size_t> greedy_seed) {
    best_indices_ = std::move(greedy_seed);
    best_size_ = best_indices_.size();
    enumerating_ = false;
    timed_out_ = false;
    chosen_.clear();
    Bits banned(bits_.size());
    descend(full_universe(n_), banned);
    std::sort(best_indices_.begin(), best_indices_.end());
    return {materialize(collection_, best_indices_), !timed_out_};
  }

  // Collects every cover of cardinality exactly `optimum`, up to `limit`.
  std::vector<std::vector<std::size_t>> enumerate(std::size_t optimum, std::size_t limit,
                                                  bool& complete) {
    best_size_ = optimum;
    enum_limit_ = limit;
    enumerating_ = true;
    limit_hit_ = false;
    timed_out_ = false;
    found_.clear();
    chosen_.clear();
    Bits banned(bits_.size());
    descend(full_universe(n_), banned);
    std::sort(found_.begin(), found_.end());
    complete = !limit_hit_ && !timed_out_;
    return std::move(found_);
  }

  bool timed_out() const { return timed_out_; }

 private:
  bool record() {
    if (enumerating_) {
      if (found_.size() >= enum_limit_) {
        limit_hit_ = true;
        return false;
      }
      std::vector<std::size_t> cover = chosen_;
      std::sort(cover.begin(), cover.end());
      found_.push_back(std::move(cover));
      return true;
    }
    best_indices_ = chosen_;
    best_size_ = chosen_.size();
    return true;
  }

  // Returns false to abort the whole search (cap or deadline).
  bool descend(const Bits& uncovered, const Bits& banned) {
    if (deadline_.expired()) {
      timed_out_ = true;
      return false;
    }
    if (uncovered.none()) return record();

    const std::size_t depth = chosen_.size();
    if (enumerating_) {
      if (depth + lower_bound(uncovered) > best_size_) return true;
    } else {
      if (depth + lower_bound(uncovered) >= best_size_) return true;
    }

    // Fail-first: the uncovered element with the fewest usable sets.
    std::size_t element = Bits::npos;
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t e = uncovered.find_first(); e != Bits::npos; e = uncovered.find_next(e)) {
      std::size_t usable = 0;
      for (std::size_t s : containing_[e])
        if (!banned.test(s)) ++usable;
      if (usable < fewest) {
        fewest = usable;
        element = e;
      }
    }
    if (fewest == 0) return true;  // dead branch: the element is unreachable here

    std::vector<std::size_t> candidates;
    for (std::size_t s : containing_[element])
      if (!banned.test(s)) candidates.push_back(s);
    std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
      return (bits_[a] & uncovered).count() > (bits_[b] & uncovered).count();
    });

    Bits child_banned = banned;
    for (std::size_t s : candidates) {
      chosen_.push_back(s);
      if (!descend(uncovered - bits_[s], child_banned)) return false;
      chosen_.pop_back();
      child_banned.set(s);  // later children may not reuse this set
    }
    return true;
  }

  const HomogeneousSetCollection& collection_;
  Deadline deadline_;
  std::size_t n_;
  std::vector<Bits> bits_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<Bits> co_coverage_;

  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_indices_;
  std::size_t best_size_ = 0;
  bool enumerating_ = false;
  bool timed_out_ = false;
  bool limit_hit_ = false;
  std::size_t enum_limit_ = 0;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

Cover greedy_cover(const HomogeneousSetCollection& c) {
  const auto bits = member_bits(c);
  require_coverable(bits, c.universe_size);

  Bits uncovered = full_universe(c.universe_size);
  std::vector<std::size_t> picked;
  while (uncovered.any()) {
    std::size_t best = bits.size();
    std::size_t best_gain = 0;
    std::size_t best_first = 0;
    for (std::size_t s = 0; s < bits.size(); ++s) {
      const std::size_t gain = (bits[s] & uncovered).count();
      if (gain == 0) continue;
      const std::size_t first = c.sets[s].members.front();
      if (best == bits.size() || gain > best_gain ||
          (gain == best_gain && first < best_first)) {
        best = s;
        best_gain = gain;
        best_first = first;
      }
    }
    picked.push_back(best);
    uncovered -= bits[best];
  }
  return materialize(c, std::move(picked));
}

CoverSolution exact_min_cover(const HomogeneousSetCollection& c, Deadline deadline) {
  if (c.truncated)
    throw std::invalid_argument(
        "collection is truncated; exact covering cannot certify optimality");
  Cover seed = greedy_cover(c);
  CoverSearch search(c, deadline);
  return search.solve_min(std::move(seed.chosen_indices));
}

CoverEnumeration enumerate_min_covers(const HomogeneousSetCollection& c, std::size_t limit,
                                      Deadline deadline) {
  CoverSolution optimum = exact_min_cover(c, deadline);
  CoverEnumeration result;
  if (!optimum.proven) {
    result.covers.push_back(std::move(optimum.cover));
    return result;
  }

  CoverSearch search(c, deadline);
  bool complete = false;
  auto index_lists =
      search.enumerate(optimum.cover.chosen_indices.size(), limit, complete);
  result.covers.reserve(index_lists.size());
  for (auto& indices : index_lists)
    result.covers.push_back(materialize(c, std::move(indices)));
  result.proven = true;  // the optimum cardinality was certified above
  result.complete = complete;
  if (result.covers.empty())  // deadline hit before re-finding any optimum
    result.covers.push_back(std::move(optimum.cover));
  return result;
}

namespace {

double cover_objective(const Cover& cover, const DissimilarityMatrix& d, SubObjective sub) {
  const bool radius_sets =
      !cover.chosen.empty() && cover.chosen.front().center.has_value();
  switch (sub) {
    case SubObjective::MaxWidth: {
      double worst = 0.0;
      for (const auto& set : cover.chosen)
        worst = std::max(worst, width_of(set.members, d,
                                         radius_sets ? ConstraintKind::Radius
                                                     : ConstraintKind::Diameter));
      return worst;
    }
    case SubObjective::Wcsd: {
      double total = 0.0;
      for (const auto& set : cover.chosen) {
        if (set.center) {
          for (std::size_t m : set.members) total += d(*set.center, m);
        } else {
          for (std::size_t a = 0; a < set.members.size(); ++a)
            for (std::size_t b = a + 1; b < set.members.size(); ++b)
              total += d(set.members[a], set.members[b]);
        }
      }
      return total;
    }
    case SubObjective::SizeVariance: {
      double total = 0.0;
      for (const auto& set : cover.chosen)
        total -= static_cast<double>(set.members.size()) *
                 static_cast<double>(set.members.size());
      return total;  // negated: smaller is better below
    }
    case SubObjective::None:
      return 0.0;
  }
  return 0.0;
}

}  // namespace

const Cover& select_cover(std::span<const Cover> covers, const DissimilarityMatrix& d,
                          SubObjective sub) {
  if (covers.empty()) throw std::invalid_argument("select_cover needs at least one cover");
  if (sub == SubObjective::None) return covers.front();

  std::size_t best = 0;
  double best_value = cover_objective(covers[0], d, sub);
  for (std::size_t i = 1; i < covers.size(); ++i) {
    const double value = cover_objective(covers[i], d, sub);
    if (value < best_value) {
      best = i;
      best_value = value;
    }
  }
  return covers[best];
}

}  // namespace eqw
