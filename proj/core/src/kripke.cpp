#include "kripkelab/kripke.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kripkelab/error.hpp"

namespace kripkelab {

std::vector<World> WorldSet::to_vector() const {
  std::vector<World> out;
  out.reserve(count());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<World>(std::countr_zero(rest)));
  }
  return out;
}

std::string to_string(WorldSet s) {
  std::string out = "{";
  bool first = true;
  for (World w : s.to_vector()) {
    if (!first) out += ", ";
    first = false;
    out += "w" + std::to_string(w);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Frame

Frame Frame::from_order(std::vector<WorldSet> up) {
  Frame fr;
  fr.down_.assign(up.size(), WorldSet{});
  for (World x = 0; x < up.size(); ++x) {
    for (World y : up[x].to_vector()) fr.down_[y].insert(x);
  }
  fr.up_ = std::move(up);
  return fr;
}

bool Frame::is_upset(WorldSet s) const {
  if (!s.subset_of(worlds())) return false;
  for (World x : s.to_vector()) {
    if (!up_[x].subset_of(s)) return false;
  }
  return true;
}

WorldSet Frame::upward_closure(WorldSet s) const {
  WorldSet out;
  for (World x : (s & worlds()).to_vector()) out = out | up_[x];
  return out;
}

std::vector<std::pair<World, World>> Frame::covering_pairs() const {
  std::vector<std::pair<World, World>> out;
  for (World x = 0; x < size(); ++x) {
    const WorldSet above = up_[x] - WorldSet::single(x);
    for (World y : above.to_vector()) {
      const WorldSet between = above & (down_[y] - WorldSet::single(y));
      if (between.empty()) out.emplace_back(x, y);
    }
  }
  return out;
}

Frame make_frame(std::size_t size, std::span<const std::pair<World, World>> pairs) {
  if (size == 0) throw InvalidFrame("a frame needs at least one world");
  if (size > kMaxWorlds) {
    throw InvalidFrame("frames are limited to " + std::to_string(kMaxWorlds) + " worlds");
  }
  std::vector<WorldSet> up(size);
  for (World x = 0; x < size; ++x) up[x] = WorldSet::single(x);
  for (auto [x, y] : pairs) {
    if (x >= size) throw UnknownWorld(x, size);
    if (y >= size) throw UnknownWorld(y, size);
    up[x].insert(y);
  }
  // Warshall's closure over successor masks.
  for (World k = 0; k < size; ++k) {
    for (World x = 0; x < size; ++x) {
      if (up[x].contains(k)) up[x] = up[x] | up[k];
    }
  }
  for (World x = 0; x < size; ++x) {
    for (World y = x + 1; y < size; ++y) {
      if (up[x].contains(y) && up[y].contains(x)) throw AntisymmetryViolation(x, y);
    }
  }
  return Frame::from_order(std::move(up));
}

Frame make_frame(std::size_t size, std::initializer_list<std::pair<World, World>> pairs) {
  return make_frame(size, std::span<const std::pair<World, World>>(pairs.begin(), pairs.size()));
}

// ---------------------------------------------------------------------------
// Valuations and models

WorldSet Valuation::at(const std::string& atom) const {
  auto it = sets_.find(atom);
  return it == sets_.end() ? WorldSet{} : it->second;
}

Model::Model(Frame frame, Valuation valuation)
    : frame_(std::move(frame)), valuation_(std::move(valuation)) {
  for (const auto& [atom, worlds] : valuation_.sets()) {
    if (!worlds.subset_of(frame_.worlds())) {
      throw InvalidValuation("valuation of '" + atom + "' mentions worlds outside the frame");
    }
    if (!frame_.is_upset(worlds)) {
      throw InvalidValuation("valuation of '" + atom + "' is not upward closed: " +
                             to_string(worlds) + " should be " +
                             to_string(frame_.upward_closure(worlds)));
    }
  }
}

// ---------------------------------------------------------------------------
// Forcing
//
// A formula is flattened into its post-order subformula list; each entry is
// then evaluated to the set of worlds forcing it, operands first.

namespace {

struct Instruction {
  Formula::Kind kind;
  std::size_t left = 0;   // operand slot, or atom index for kAtom
  std::size_t right = 0;
};

class Program {
 public:
  Program(const Formula& f, const std::vector<std::string>& atom_order) {
    const std::vector<Formula> subs = subformulas(f);
    auto slot_of = [&subs](const Formula& g) {
      return static_cast<std::size_t>(std::find(subs.begin(), subs.end(), g) - subs.begin());
    };
    code_.reserve(subs.size());
    for (const Formula& g : subs) {
      Instruction ins{g.kind()};
      if (g.kind() == Formula::Kind::kAtom) {
        ins.left = static_cast<std::size_t>(
            std::find(atom_order.begin(), atom_order.end(), g.name()) - atom_order.begin());
      } else if (g.is_binary()) {
        ins.left = slot_of(g.left());
        ins.right = slot_of(g.right());
      }
      code_.push_back(ins);
    }
    slots_.resize(code_.size());
  }

  // atom_sets[i] is the extension of atom_order[i].
  WorldSet run(const Frame& fr, std::span<const WorldSet> atom_sets) {
    const WorldSet all = fr.worlds();
    for (std::size_t i = 0; i < code_.size(); ++i) {
      const Instruction& ins = code_[i];
      switch (ins.kind) {
        case Formula::Kind::kTop:
          slots_[i] = all;
          break;
        case Formula::Kind::kBottom:
          slots_[i] = WorldSet{};
          break;
        case Formula::Kind::kAtom:
          slots_[i] = atom_sets[ins.left];
          break;
        case Formula::Kind::kAnd:
          slots_[i] = slots_[ins.left] & slots_[ins.right];
          break;
        case Formula::Kind::kOr:
          slots_[i] = slots_[ins.left] | slots_[ins.right];
          break;
        case Formula::Kind::kImp: {
          // x forces A -> B iff every y >= x forcing A also forces B.
          const WorldSet ante = slots_[ins.left];
          const WorldSet cons = slots_[ins.right];
          WorldSet result;
          for (World x = 0; x < fr.size(); ++x) {
            if ((fr.up(x) & ante).subset_of(cons)) result.insert(x);
          }
          slots_[i] = result;
          break;
        }
      }
    }
    return slots_.back();
  }

 private:
  std::vector<Instruction> code_;
  std::vector<WorldSet> slots_;
};

}  // namespace

WorldSet truth_set(const Model& m, const Formula& f) {
  const std::set<std::string> names = atoms(f);
  const std::vector<std::string> order(names.begin(), names.end());
  std::vector<WorldSet> sets;
  sets.reserve(order.size());
  for (const auto& a : order) sets.push_back(m.valuation().at(a));
  return Program(f, order).run(m.frame(), sets);
}

bool forces(const Model& m, World x, const Formula& f) {
  if (x >= m.frame().size()) throw UnknownWorld(x, m.frame().size());
  return truth_set(m, f).contains(x);
}

Countermodel::Countermodel(Model model, World world, Formula formula)
    : model_(std::move(model)), world_(world), formula_(std::move(formula)) {
  if (forces(model_, world_, formula_)) {
    throw PreconditionFailed("not a countermodel: w" + std::to_string(world_) + " forces " +
                             render(formula_));
  }
}

// ---------------------------------------------------------------------------
// Validity

std::vector<WorldSet> upsets(const Frame& fr) {
  // Visit worlds top-down (a linear extension of >=): a world may join the
  // set only once all of its strict successors are in it.
  std::vector<World> order(fr.size());
  std::iota(order.begin(), order.end(), World{0});
  std::stable_sort(order.begin(), order.end(),
                   [&fr](World a, World b) { return fr.up(a).count() < fr.up(b).count(); });

  std::vector<WorldSet> out;
  auto extend = [&](auto& self, std::size_t i, WorldSet current) -> void {
    if (i == order.size()) {
      out.push_back(current);
      return;
    }
    const World w = order[i];
    self(self, i + 1, current);
    if ((fr.up(w) - WorldSet::single(w)).subset_of(current)) {
      WorldSet with = current;
      with.insert(w);
      self(self, i + 1, with);
    }
  };
  extend(extend, 0, WorldSet{});
  std::sort(out.begin(), out.end());
  return out;
}

ValidityResult frame_valid(const Frame& fr, const Formula& f) {
  const std::set<std::string> names = atoms(f);
  const std::vector<std::string> order(names.begin(), names.end());
  const std::vector<WorldSet> candidates = upsets(fr);
  Program program(f, order);

  // Odometer over atom extensions; the last atom varies fastest.
  std::vector<std::size_t> index(order.size(), 0);
  std::vector<WorldSet> sets(order.size(), candidates.front());
  const WorldSet all = fr.worlds();
  while (true) {
    const WorldSet forced = program.run(fr, sets);
    if (forced != all) {
      Valuation v;
      for (std::size_t i = 0; i < order.size(); ++i) v.assign(order[i], sets[i]);
      const World refuted = (all - forced).first();
      return Countermodel(Model(fr, std::move(v)), refuted, f);
    }
    std::size_t pos = order.size();
    while (pos > 0) {
      --pos;
      if (++index[pos] < candidates.size()) {
        sets[pos] = candidates[index[pos]];
        break;
      }
      index[pos] = 0;
      sets[pos] = candidates.front();
      if (pos == 0) return Valid{};
    }
    if (order.empty()) return Valid{};
  }
}

// ---------------------------------------------------------------------------
// Structure

Cone cone(const Frame& fr, World root) {
  if (root >= fr.size()) throw UnknownWorld(root, fr.size());
  std::vector<World> embedding = fr.up(root).to_vector();
  std::vector<World> index_of(fr.size(), 0);
  for (World i = 0; i < embedding.size(); ++i) index_of[embedding[i]] = i;

  std::vector<WorldSet> up(embedding.size());
  for (World i = 0; i < embedding.size(); ++i) {
    for (World y : fr.up(embedding[i]).to_vector()) up[i].insert(index_of[y]);
  }
  return Cone{Frame::from_order(std::move(up)), std::move(embedding)};
}

std::size_t depth(const Frame& fr) {
  // Successors have strictly smaller up-sets, so this order visits them first.
  std::vector<World> order(fr.size());
  std::iota(order.begin(), order.end(), World{0});
  std::sort(order.begin(), order.end(),
            [&fr](World a, World b) { return fr.up(a).count() < fr.up(b).count(); });

  std::vector<std::size_t> longest(fr.size(), 1);
  std::size_t best = 0;
  for (World x : order) {
    for (World y : (fr.up(x) - WorldSet::single(x)).to_vector()) {
      longest[x] = std::max(longest[x], longest[y] + 1);
    }
    best = std::max(best, longest[x]);
  }
  return best;
}

std::size_t width(const Frame& fr) {
  // Dilworth: the largest antichain equals the minimum chain cover, which is
  // size minus a maximum matching of the strict order viewed as bipartite.
  const std::size_t n = fr.size();
  std::vector<std::size_t> match_right(n, n);

  auto augment = [&](auto& self, World x, std::vector<bool>& seen) -> bool {
    for (World y : (fr.up(x) - WorldSet::single(x)).to_vector()) {
      if (seen[y]) continue;
      seen[y] = true;
      if (match_right[y] == n || self(self, match_right[y], seen)) {
        match_right[y] = x;
        return true;
      }
    }
    return false;
  };

  std::size_t matching = 0;
  for (World x = 0; x < n; ++x) {
    std::vector<bool> seen(n, false);
    if (augment(augment, x, seen)) ++matching;
  }
  return n - matching;
}

}  // namespace kripkelab
