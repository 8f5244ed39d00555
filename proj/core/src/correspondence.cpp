#include "kripkelab/correspondence.hpp"

#include <charconv>
#include <stdexcept>

#include "kripkelab/error.hpp"

namespace kripkelab {

Formula gl_schema() {
  const Formula p = Formula::Atom("p");
  const Formula q = Formula::Atom("q");
  return Formula::Or(Formula::Imp(p, q), Formula::Imp(q, p));
}

Formula bd2_schema() {
  const Formula p = Formula::Atom("p");
  const Formula q = Formula::Atom("q");
  return Formula::Or(p, Formula::Imp(p, Formula::Or(q, Formula::Not(q))));
}

// ---------------------------------------------------------------------------
// Conditions

namespace {

std::optional<std::size_t> parse_suffix(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return value;
}

bool locally_linear(const Frame& fr) {
  for (World x = 0; x < fr.size(); ++x) {
    for (World y : fr.up(x).to_vector()) {
      for (World z : fr.up(x).to_vector()) {
        if (!fr.le(y, z) && !fr.le(z, y)) return false;
      }
    }
  }
  return true;
}

bool bd2_as_printed(const Frame& fr) {
  for (World x = 0; x < fr.size(); ++x) {
    for (World y : fr.up(x).to_vector()) {
      for (World z : fr.up(x).to_vector()) {
        if (fr.le(y, z) && y != x && z != x) return false;
      }
    }
  }
  return true;
}

bool no_three_chain(const Frame& fr) {
  for (World x = 0; x < fr.size(); ++x) {
    for (World y : fr.up(x).to_vector()) {
      for (World z : fr.up(y).to_vector()) {
        if (x != y && y != z) return false;
      }
    }
  }
  return true;
}

bool cones_at_most(const Frame& fr, std::size_t k) {
  for (World x = 0; x < fr.size(); ++x) {
    if (fr.up(x).count() > k) return false;
  }
  return true;
}

bool discrete(const Frame& fr) {
  for (World x = 0; x < fr.size(); ++x) {
    if (fr.up(x) != WorldSet::single(x)) return false;
  }
  return true;
}

}  // namespace

std::optional<FrameCondition> FrameCondition::from_name(std::string_view name) {
  if (name == "lin") return Lin();
  if (name == "bd2-paper") return Bd2Paper();
  if (name == "bd2-chain") return Bd2Chain();
  if (name == "discrete") return Discrete();
  if (auto k = parse_suffix(name, "depth-le-")) return DepthLe(*k);
  if (auto k = parse_suffix(name, "cone-size-le-")) return ConeSizeLe(*k);
  return std::nullopt;
}

std::string FrameCondition::id() const {
  switch (kind_) {
    case Kind::kLin:
      return "LIN";
    case Kind::kBd2Paper:
      return "BD2_PAPER";
    case Kind::kBd2Chain:
      return "BD2_CHAIN";
    case Kind::kDepthLe:
      return "DEPTH_LE(" + std::to_string(bound_) + ")";
    case Kind::kConeSizeLe:
      return "CONE_SIZE_LE(" + std::to_string(bound_) + ")";
    case Kind::kDiscrete:
      return "DISCRETE";
  }
  return {};
}

std::string FrameCondition::name() const {
  switch (kind_) {
    case Kind::kLin:
      return "lin";
    case Kind::kBd2Paper:
      return "bd2-paper";
    case Kind::kBd2Chain:
      return "bd2-chain";
    case Kind::kDepthLe:
      return "depth-le-" + std::to_string(bound_);
    case Kind::kConeSizeLe:
      return "cone-size-le-" + std::to_string(bound_);
    case Kind::kDiscrete:
      return "discrete";
  }
  return {};
}

bool FrameCondition::operator()(const Frame& fr) const {
  switch (kind_) {
    case Kind::kLin:
      return locally_linear(fr);
    case Kind::kBd2Paper:
      return bd2_as_printed(fr);
    case Kind::kBd2Chain:
      return no_three_chain(fr);
    case Kind::kDepthLe:
      return depth(fr) <= bound_;
    case Kind::kConeSizeLe:
      return cones_at_most(fr, bound_);
    case Kind::kDiscrete:
      return discrete(fr);
  }
  return false;
}

bool eval_condition(const FrameCondition& c, const Frame& fr) { return c(fr); }

// ---------------------------------------------------------------------------
// Correspondence checking

std::string_view to_string(MismatchDirection d) {
  switch (d) {
    case MismatchDirection::kSchemaValidConditionFalse:
      return "schema valid, condition false";
    case MismatchDirection::kConditionTrueSchemaInvalid:
      return "condition true, schema invalid";
  }
  return {};
}

std::size_t CorrespondenceReport::total_mismatches() const {
  std::size_t total = 0;
  for (const SizeTally& t : tallies) total += t.mismatches;
  return total;
}

CorrespondenceReport check_correspondence(const Formula& schema, const FrameCondition& c,
                                          std::size_t max_n, bool dedup) {
  if (max_n < 1 || max_n > kMaxEnumerationWorlds) {
    throw std::invalid_argument("max_n must be between 1 and " +
                                std::to_string(kMaxEnumerationWorlds));
  }
  CorrespondenceReport report{schema, c, max_n, dedup, {}, std::nullopt};
  for (std::size_t n = 1; n <= max_n; ++n) {
    SizeTally tally;
    tally.worlds = n;
    for_each_frame(n, dedup, [&](const Frame& fr) {
      ++tally.frames;
      ValidityResult verdict = frame_valid(fr, schema);
      const bool schema_holds = is_valid(verdict);
      const bool condition_holds = c(fr);
      tally.schema_valid += schema_holds ? 1 : 0;
      tally.condition_true += condition_holds ? 1 : 0;
      if (schema_holds != condition_holds) {
        ++tally.mismatches;
        if (!report.first_mismatch) {
          Mismatch m{fr,
                     schema_holds ? MismatchDirection::kSchemaValidConditionFalse
                                  : MismatchDirection::kConditionTrueSchemaInvalid,
                     std::nullopt};
          if (!schema_holds) m.countermodel = std::get<Countermodel>(std::move(verdict));
          report.first_mismatch = std::move(m);
        }
      }
      return true;
    });
    report.tallies.push_back(tally);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Witnesses

Countermodel gl_witness(const Frame& fr) {
  for (World x = 0; x < fr.size(); ++x) {
    for (World y : fr.up(x).to_vector()) {
      for (World z : fr.up(x).to_vector()) {
        if (fr.le(y, z) || fr.le(z, y)) continue;
        Valuation v;
        v.assign("p", fr.up(y));
        v.assign("q", fr.up(z));
        return Countermodel(Model(fr, std::move(v)), x, gl_schema());
      }
    }
  }
  throw PreconditionFailed("frame is locally linear; (p -> q) | (q -> p) is valid on it");
}

Countermodel bd2_witness(const Frame& fr) {
  for (World x = 0; x < fr.size(); ++x) {
    for (World y : (fr.up(x) - WorldSet::single(x)).to_vector()) {
      for (World z : (fr.up(y) - WorldSet::single(y)).to_vector()) {
        Valuation v;
        v.assign("p", fr.up(y));
        v.assign("q", fr.up(z));
        return Countermodel(Model(fr, std::move(v)), x, bd2_schema());
      }
    }
  }
  throw PreconditionFailed("frame has depth at most 2; no chain x < y < z exists");
}

// ---------------------------------------------------------------------------
// Collapse

CollapseReport collapse_check(std::size_t max_n) {
  if (max_n < 1 || max_n > kMaxEnumerationWorlds) {
    throw std::invalid_argument("max_n must be between 1 and " +
                                std::to_string(kMaxEnumerationWorlds));
  }
  CollapseReport report;
  report.max_n = max_n;
  const FrameCondition lin = FrameCondition::Lin();
  const FrameCondition chain = FrameCondition::Bd2Chain();
  const FrameCondition small_cones = FrameCondition::ConeSizeLe(2);
  const Formula schemas[] = {gl_schema(), bd2_schema()};

  for (std::size_t n = 1; n <= max_n; ++n) {
    for_each_frame(n, false, [&](const Frame& fr) {
      ++report.frames_checked;
      const bool both = lin(fr) && chain(fr);
      if (both != small_cones(fr)) {
        report.violations.push_back(
            {CollapseViolation::Kind::kClassMismatch, fr,
             both ? "LIN and BD2_CHAIN hold but some cone has more than 2 worlds"
                  : "every cone has at most 2 worlds but LIN or BD2_CHAIN fails"});
      }
      if (n <= 2) {
        ++report.small_frames_checked;
        for (const Formula& s : schemas) {
          if (!is_valid(frame_valid(fr, s))) {
            report.violations.push_back(
                {CollapseViolation::Kind::kSmallFrameRefutes, fr, "refutes " + render(s)});
          }
        }
      }
      return true;
    });
  }
  return report;
}

}  // namespace kripkelab
