#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kripkelab/formula.hpp"
#include "kripkelab/kripke.hpp"

namespace kripkelab {

/// (p -> q) | (q -> p)
Formula gl_schema();
/// p | (p -> (q | ~q))
Formula bd2_schema();

/// A built-in first-order frame condition.
///
///   LIN            x<=y & x<=z  =>  y<=z | z<=y
///   BD2_PAPER      x<=y & x<=z & y<=z  =>  y=x | z=x
///   BD2_CHAIN      x<=y & y<=z  =>  x=y | y=z
///   DEPTH_LE(k)    depth <= k
///   CONE_SIZE_LE(k) every cone has at most k worlds
///   DISCRETE       x<=y  =>  x=y
///
/// BD2_PAPER is kept verbatim for comparison only: it rejects the two-world
/// chain, which validates the BD2 schema, and agrees with DISCRETE on every
/// enumerated frame. BD2_CHAIN (no three-world chain) is the condition the
/// witness construction and soundness checks use.
class FrameCondition {
 public:
  enum class Kind { kLin, kBd2Paper, kBd2Chain, kDepthLe, kConeSizeLe, kDiscrete };

  static FrameCondition Lin() { return FrameCondition(Kind::kLin, 0); }
  static FrameCondition Bd2Paper() { return FrameCondition(Kind::kBd2Paper, 0); }
  static FrameCondition Bd2Chain() { return FrameCondition(Kind::kBd2Chain, 0); }
  static FrameCondition DepthLe(std::size_t k) { return FrameCondition(Kind::kDepthLe, k); }
  static FrameCondition ConeSizeLe(std::size_t k) { return FrameCondition(Kind::kConeSizeLe, k); }
  static FrameCondition Discrete() { return FrameCondition(Kind::kDiscrete, 0); }

  /// Accepts lin, bd2-paper, bd2-chain, discrete, depth-le-K, cone-size-le-K.
  static std::optional<FrameCondition> from_name(std::string_view name);

  Kind kind() const noexcept { return kind_; }
  std::size_t bound() const noexcept { return bound_; }

  /// "LIN", "DEPTH_LE(2)", ...
  std::string id() const;
  /// Inverse of from_name.
  std::string name() const;

  bool operator()(const Frame& fr) const;

  friend bool operator==(const FrameCondition&, const FrameCondition&) = default;

 private:
  FrameCondition(Kind kind, std::size_t bound) : kind_(kind), bound_(bound) {}

  Kind kind_;
  std::size_t bound_;
};

bool eval_condition(const FrameCondition& c, const Frame& fr);

struct SizeTally {
  std::size_t worlds = 0;
  std::size_t frames = 0;
  std::size_t schema_valid = 0;
  std::size_t condition_true = 0;
  std::size_t mismatches = 0;

  friend bool operator==(const SizeTally&, const SizeTally&) = default;
};

enum class MismatchDirection {
  kSchemaValidConditionFalse,
  kConditionTrueSchemaInvalid,
};

std::string_view to_string(MismatchDirection d);

struct Mismatch {
  Frame frame;
  MismatchDirection direction;
  /// Present when the schema fails on the frame.
  std::optional<Countermodel> countermodel;
};

struct CorrespondenceReport {
  Formula schema;
  FrameCondition condition;
  std::size_t max_n = 0;
  bool dedup = false;
  std::vector<SizeTally> tallies;  // one per size 1..max_n
  /// Smallest frame size first, then enumeration order.
  std::optional<Mismatch> first_mismatch;

  std::size_t total_mismatches() const;
  bool equivalent() const { return !first_mismatch.has_value(); }
};

/// Compares schema validity with the condition on every frame of size
/// 1..max_n. Throws std::invalid_argument for max_n outside the enumerable
/// range.
CorrespondenceReport check_correspondence(const Formula& schema, const FrameCondition& c,
                                          std::size_t max_n, bool dedup);

/// Countermodel to gl_schema() built from the first branching triple
/// x<=y, x<=z with y, z incomparable: V(p) = up(y), V(q) = up(z), refuted at
/// x. Throws PreconditionFailed on a locally linear frame.
Countermodel gl_witness(const Frame& fr);

/// Countermodel to bd2_schema() built from the first strict chain x<y<z:
/// V(p) = up(y), V(q) = up(z), refuted at x. Throws PreconditionFailed when
/// the frame has depth at most 2.
Countermodel bd2_witness(const Frame& fr);

struct CollapseViolation {
  enum class Kind {
    // LIN and BD2_CHAIN disagree with CONE_SIZE_LE(2).
    kClassMismatch,
    // A one- or two-world frame refutes one of the schemas.
    kSmallFrameRefutes,
  };
  Kind kind;
  Frame frame;
  std::string detail;
};

struct CollapseReport {
  std::size_t max_n = 0;
  std::size_t frames_checked = 0;
  std::size_t small_frames_checked = 0;
  std::vector<CollapseViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks, on every labeled frame up to max_n worlds, that LIN and BD2_CHAIN
/// hold together exactly when every cone has at most two worlds, and that
/// every one- and two-world frame validates both gl_schema() and
/// bd2_schema().
CollapseReport collapse_check(std::size_t max_n);

}  // namespace kripkelab
