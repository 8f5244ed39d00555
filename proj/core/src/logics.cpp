#include "kripkelab/logics.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

#include "kripkelab/correspondence.hpp"

namespace kripkelab {

Formula excluded_middle_axiom() {
  const Formula a = Formula::Atom("A");
  return Formula::Or(a, Formula::Not(a));
}

Formula gl_axiom() {
  const Formula a = Formula::Atom("A");
  const Formula b = Formula::Atom("B");
  return Formula::Or(Formula::Imp(a, b), Formula::Imp(b, a));
}

Formula bd2_axiom() {
  const Formula a = Formula::Atom("A");
  const Formula b = Formula::Atom("B");
  return Formula::Or(a, Formula::Imp(a, Formula::Or(b, Formula::Not(b))));
}

namespace {

std::array<LogicSpec, 5> build_registry() {
  const FrameCondition lin = FrameCondition::Lin();
  const FrameCondition chain = FrameCondition::Bd2Chain();
  return {{
      {LogicName::kIpc, {}, [](const Frame&) { return true; }, std::nullopt},
      {LogicName::kCpc,
       {excluded_middle_axiom()},
       [](const Frame& fr) { return fr.size() == 1; },
       1},
      {LogicName::kGl, {gl_axiom()}, lin, std::nullopt},
      {LogicName::kBd2, {bd2_axiom()}, chain, std::nullopt},
      // Cones of frames in this class have at most two worlds; searching
      // frames of one or two worlds is therefore complete.
      {LogicName::kGlBd2,
       {gl_axiom(), bd2_axiom()},
       [lin, chain](const Frame& fr) { return lin(fr) && chain(fr); },
       2},
  }};
}

}  // namespace

const LogicSpec& logic(LogicName name) {
  static const std::array<LogicSpec, 5> registry = build_registry();
  return registry[static_cast<std::size_t>(name)];
}

std::optional<LogicName> parse_logic_name(std::string_view name) {
  for (LogicName n : {LogicName::kIpc, LogicName::kCpc, LogicName::kGl, LogicName::kBd2,
                      LogicName::kGlBd2}) {
    if (to_string(n) == name) return n;
  }
  return std::nullopt;
}

std::string_view to_string(LogicName name) {
  switch (name) {
    case LogicName::kIpc:
      return "ipc";
    case LogicName::kCpc:
      return "cpc";
    case LogicName::kGl:
      return "gl";
    case LogicName::kBd2:
      return "bd2";
    case LogicName::kGlBd2:
      return "gl+bd2";
  }
  return {};
}

std::string_view to_string(Decision::Verdict v) {
  switch (v) {
    case Decision::Verdict::kValid:
      return "valid";
    case Decision::Verdict::kRefuted:
      return "refuted";
    case Decision::Verdict::kNoCountermodelUpTo:
      return "no-countermodel";
  }
  return {};
}

Decision decide(const LogicSpec& spec, const Formula& f, std::size_t bound) {
  if (bound < 1 || bound > kMaxEnumerationWorlds) {
    throw std::invalid_argument("bound must be between 1 and " +
                                std::to_string(kMaxEnumerationWorlds));
  }
  const std::size_t limit = spec.exact_bound ? std::min(bound, *spec.exact_bound) : bound;
  for (std::size_t n = 1; n <= limit; ++n) {
    std::optional<Countermodel> found;
    // The dedup representative is the first labeled frame of its class, and
    // refutability is isomorphism-invariant, so this finds the same minimal
    // countermodel as a labeled search.
    for_each_frame(n, true, [&](const Frame& fr) {
      if (!spec.frame_class(fr)) return true;
      ValidityResult r = frame_valid(fr, f);
      if (is_valid(r)) return true;
      found = std::get<Countermodel>(std::move(r));
      return false;
    });
    if (found) return Decision{Decision::Verdict::kRefuted, n, std::move(found)};
  }
  if (spec.exact_bound && limit >= *spec.exact_bound) {
    return Decision{Decision::Verdict::kValid, limit, std::nullopt};
  }
  return Decision{Decision::Verdict::kNoCountermodelUpTo, limit, std::nullopt};
}

bool classical_taut(const Formula& f) {
  const std::set<std::string> names = atoms(f);
  const std::vector<std::string> order(names.begin(), names.end());
  std::map<std::string, bool, std::less<>> value;

  auto eval = [&](auto& self, const Formula& g) -> bool {
    switch (g.kind()) {
      case Formula::Kind::kTop:
        return true;
      case Formula::Kind::kBottom:
        return false;
      case Formula::Kind::kAtom:
        return value.at(g.name());
      case Formula::Kind::kAnd:
        return self(self, g.left()) && self(self, g.right());
      case Formula::Kind::kOr:
        return self(self, g.left()) || self(self, g.right());
      case Formula::Kind::kImp:
        return !self(self, g.left()) || self(self, g.right());
    }
    return false;
  };

  if (order.size() >= 63) throw std::invalid_argument("too many atoms for a truth table");
  const std::uint64_t rows = std::uint64_t{1} << order.size();
  for (std::uint64_t row = 0; row < rows; ++row) {
    for (std::size_t i = 0; i < order.size(); ++i) value[order[i]] = ((row >> i) & 1U) != 0;
    if (!eval(eval, f)) return false;
  }
  return true;
}

}  // namespace kripkelab
