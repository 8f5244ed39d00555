#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "kripkelab/kripke.hpp"

namespace kripkelab {

namespace {

using Masks = std::vector<std::uint64_t>;  // up-set of each world

bool is_up_closed(const Masks& up, std::uint64_t s) {
  for (std::size_t x = 0; x < up.size(); ++x) {
    if (((s >> x) & 1U) != 0 && (up[x] & ~s) != 0) return false;
  }
  return true;
}

// Labeled posets on k+1 worlds are exactly the posets on k worlds extended by
// a new top-index world w, chosen by the set U of old worlds above w (an
// upset) and the set D below it (a downset disjoint from U with every d in D
// already below every u in U). U varies slowest so that, for instance, the
// chain 0 < 1 precedes 1 < 0.
class LabeledGenerator {
 public:
  LabeledGenerator(std::size_t n, const std::function<bool(const Masks&)>& emit)
      : n_(n), emit_(emit) {}

  void run() {
    Masks up{1};
    stopped_ = false;
    extend(up);
  }

 private:
  void extend(Masks& up) {
    if (stopped_) return;
    const std::size_t k = up.size();
    if (k == n_) {
      if (!emit_(up)) stopped_ = true;
      return;
    }
    const std::uint64_t all = (std::uint64_t{1} << k) - 1;
    std::vector<std::uint64_t> ups;
    for (std::uint64_t s = 0; s <= all; ++s) {
      if (is_up_closed(up, s)) ups.push_back(s);
    }
    const std::uint64_t bit = std::uint64_t{1} << k;
    for (std::uint64_t above : ups) {
      for (std::uint64_t outside_below : ups) {
        const std::uint64_t below = all & ~outside_below;  // complement of an upset is a downset
        if ((below & above) != 0) continue;
        bool consistent = true;
        for (std::size_t d = 0; d < k && consistent; ++d) {
          if (((below >> d) & 1U) != 0) consistent = (above & ~up[d]) == 0;
        }
        if (!consistent) continue;

        Masks next = up;
        for (std::size_t d = 0; d < k; ++d) {
          if (((below >> d) & 1U) != 0) next[d] |= bit;
        }
        next.push_back(above | bit);
        extend(next);
        if (stopped_) return;
      }
    }
  }

  std::size_t n_;
  const std::function<bool(const Masks&)>& emit_;
  bool stopped_ = false;
};

Frame to_frame(const Masks& up) {
  std::vector<WorldSet> sets;
  sets.reserve(up.size());
  for (std::uint64_t m : up) sets.emplace_back(m);
  return Frame::from_order(std::move(sets));
}

}  // namespace

std::uint64_t canonical_code(const Frame& fr) {
  const std::size_t n = fr.size();
  if (n > 8) throw std::invalid_argument("canonical_code supports at most 8 worlds");

  // Only relabelings that sort worlds by (|down|, |up|) are tried; that key is
  // invariant, so isomorphic frames see the same candidate codes.
  auto key = [&fr](World w) { return std::pair(fr.down(w).count(), fr.up(w).count()); };
  std::vector<World> order(n);
  for (World w = 0; w < n; ++w) order[w] = w;
  std::sort(order.begin(), order.end(), [&](World a, World b) {
    return key(a) != key(b) ? key(a) < key(b) : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    while (j < n && key(order[j]) == key(order[i])) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  auto encode = [&]() {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && fr.le(order[i], order[j])) code |= std::uint64_t{1} << (i * n + j);
      }
    }
    return code;
  };
  auto permute = [&](auto& self, std::size_t cell) -> void {
    if (cell == cells.size()) {
      best = std::min(best, encode());
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(cells[cell].second);
    std::sort(first, last);
    do {
      self(self, cell + 1);
    } while (std::next_permutation(first, last));
  };
  permute(permute, 0);
  return best;
}

void for_each_frame(std::size_t n, bool dedup, const std::function<bool(const Frame&)>& visit) {
  if (n < 1 || n > kMaxEnumerationWorlds) {
    throw std::invalid_argument("frame enumeration needs 1 <= n <= " +
                                std::to_string(kMaxEnumerationWorlds));
  }
  std::unordered_set<std::uint64_t> seen;
  const std::function<bool(const Masks&)> emit = [&](const Masks& up) {
    Frame fr = to_frame(up);
    if (dedup && !seen.insert(canonical_code(fr)).second) return true;
    return visit(fr);
  };
  LabeledGenerator(n, emit).run();
}

std::vector<Frame> enumerate_frames(std::size_t n, bool dedup) {
  std::vector<Frame> out;
  for_each_frame(n, dedup, [&out](const Frame& fr) {
    out.push_back(fr);
    return true;
  });
  return out;
}

}  // namespace kripkelab
