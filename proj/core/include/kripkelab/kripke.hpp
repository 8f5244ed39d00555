#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kripkelab/formula.hpp"

namespace kripkelab {

using World = std::size_t;

/// Frames are bounded so that a set of worlds fits in one machine word.
inline constexpr std::size_t kMaxWorlds = 64;

/// A set of worlds stored as a bit mask; bit i is world i.
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr WorldSet first_n(std::size_t n) {
    return WorldSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr WorldSet single(World w) { return WorldSet(std::uint64_t{1} << w); }
  static WorldSet of(std::initializer_list<World> worlds) {
    WorldSet s;
    for (World w : worlds) s.insert(w);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(World w) const { return w < 64 && ((bits_ >> w) & 1U) != 0; }
  constexpr bool subset_of(WorldSet other) const { return (bits_ & ~other.bits_) == 0; }
  /// Lowest world in the set. The set must be nonempty.
  constexpr World first() const { return static_cast<World>(std::countr_zero(bits_)); }

  constexpr void insert(World w) { bits_ |= std::uint64_t{1} << w; }
  constexpr void erase(World w) { bits_ &= ~(std::uint64_t{1} << w); }

  std::vector<World> to_vector() const;

  friend constexpr WorldSet operator&(WorldSet a, WorldSet b) { return WorldSet(a.bits_ & b.bits_); }
  friend constexpr WorldSet operator|(WorldSet a, WorldSet b) { return WorldSet(a.bits_ | b.bits_); }
  friend constexpr WorldSet operator-(WorldSet a, WorldSet b) { return WorldSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(WorldSet, WorldSet) = default;
  friend constexpr auto operator<=>(WorldSet, WorldSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// "{w0, w2}"
std::string to_string(WorldSet s);

/// Finite Kripke frame: worlds 0..size()-1 with a partial order.
///
/// Every world's successor set {y : x <= y} and predecessor set are held
/// as masks, so order queries are constant time.
class Frame {
 public:
  std::size_t size() const noexcept { return up_.size(); }
  WorldSet worlds() const noexcept { return WorldSet::first_n(size()); }

  bool le(World x, World y) const { return up_[x].contains(y); }
  bool lt(World x, World y) const { return x != y && le(x, y); }
  /// {y : x <= y}
  WorldSet up(World x) const { return up_[x]; }
  /// {y : y <= x}
  WorldSet down(World x) const { return down_[x]; }

  bool is_upset(WorldSet s) const;
  /// Smallest upset containing s.
  WorldSet upward_closure(WorldSet s) const;

  /// Pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<World, World>> covering_pairs() const;

  friend bool operator==(const Frame&, const Frame&) = default;

  // Builds from successor masks that already form a partial order.
  static Frame from_order(std::vector<WorldSet> up);

 private:
  Frame() = default;

  std::vector<WorldSet> up_;
  std::vector<WorldSet> down_;
};

/// Reflexive-transitive closure of `pairs` on `size` worlds.
///
/// Throws InvalidFrame when size is 0 or above kMaxWorlds, UnknownWorld for
/// an out-of-range index, and AntisymmetryViolation (naming the lowest
/// offending pair) when the closure is not antisymmetric.
Frame make_frame(std::size_t size, std::span<const std::pair<World, World>> pairs);
Frame make_frame(std::size_t size, std::initializer_list<std::pair<World, World>> pairs);

/// Atom -> set of worlds. Unassigned atoms are false everywhere.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const std::string, WorldSet>> init) : sets_(init) {}

  void assign(std::string atom, WorldSet worlds) { sets_[std::move(atom)] = worlds; }
  WorldSet at(const std::string& atom) const;
  const std::map<std::string, WorldSet>& sets() const noexcept { return sets_; }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::map<std::string, WorldSet> sets_;
};

/// Frame plus monotone valuation. Construction throws InvalidValuation if
/// some assigned set mentions a missing world or is not upward closed.
class Model {
 public:
  Model(Frame frame, Valuation valuation);

  const Frame& frame() const noexcept { return frame_; }
  const Valuation& valuation() const noexcept { return valuation_; }

  friend bool operator==(const Model&, const Model&) = default;

 private:
  Frame frame_;
  Valuation valuation_;
};

/// Worlds of the model forcing f.
WorldSet truth_set(const Model& m, const Formula& f);

/// Intuitionistic forcing m, x ||- f. Throws UnknownWorld.
bool forces(const Model& m, World x, const Formula& f);

/// A model and a world where the formula is not forced. The constructor
/// re-checks the refutation and throws PreconditionFailed if f is forced.
class Countermodel {
 public:
  Countermodel(Model model, World world, Formula formula);

  const Model& model() const noexcept { return model_; }
  const Frame& frame() const noexcept { return model_.frame(); }
  const Valuation& valuation() const noexcept { return model_.valuation(); }
  World world() const noexcept { return world_; }
  const Formula& formula() const noexcept { return formula_; }

  friend bool operator==(const Countermodel&, const Countermodel&) = default;

 private:
  Model model_;
  World world_;
  Formula formula_;
};

struct Valid {
  friend bool operator==(Valid, Valid) = default;
};

using ValidityResult = std::variant<Valid, Countermodel>;

inline bool is_valid(const ValidityResult& r) { return std::holds_alternative<Valid>(r); }

/// All upward-closed subsets of the frame in increasing mask order, so the
/// empty set comes first and the full set last.
std::vector<WorldSet> upsets(const Frame& fr);

/// Decides whether f is forced at every world under every monotone
/// valuation of its atoms. Valuations are searched with atoms in sorted
/// order, the first atom varying slowest, each over upsets(fr); the first
/// refuting valuation and its lowest refuting world are returned.
ValidityResult frame_valid(const Frame& fr, const Formula& f);

/// Generated subframe on {y : root <= y}. embedding[i] is the original
/// index of new world i; original order of indices is preserved, so the
/// root becomes world 0.
struct Cone {
  Frame frame;
  std::vector<World> embedding;
};

Cone cone(const Frame& fr, World root);

/// Number of worlds in the longest chain.
std::size_t depth(const Frame& fr);

/// Size of the largest antichain.
std::size_t width(const Frame& fr);

/// Largest n accepted by the enumerators.
inline constexpr std::size_t kMaxEnumerationWorlds = 6;

/// Calls visit for every partial order on exactly n labeled worlds, in a
/// fixed order. With dedup, only the first member of each isomorphism class
/// is visited. Stops early when visit returns false. Throws
/// std::invalid_argument unless 1 <= n <= kMaxEnumerationWorlds.
void for_each_frame(std::size_t n, bool dedup, const std::function<bool(const Frame&)>& visit);

std::vector<Frame> enumerate_frames(std::size_t n, bool dedup);

/// Isomorphism-invariant code; equal codes iff isomorphic frames.
/// Only defined for frames with at most 8 worlds.
std::uint64_t canonical_code(const Frame& fr);

}  // namespace kripkelab
