#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kripkelab/formula.hpp"
#include "kripkelab/kripke.hpp"

namespace kripkelab {

enum class LogicName { kIpc, kCpc, kGl, kBd2, kGlBd2 };

/// An intermediate logic described by its extra axiom schemas (over the
/// schema atoms A and B) and the class of finite frames it is complete for.
struct LogicSpec {
  LogicName name;
  std::vector<Formula> axiom_schemas;
  std::function<bool(const Frame&)> frame_class;
  /// Frame size up to which countermodel search decides the logic exactly.
  /// Only CPC (the one-world frame) and GL+BD2 (frames of one or two
  /// worlds) have one.
  std::optional<std::size_t> exact_bound;
};

const LogicSpec& logic(LogicName name);

/// ipc, cpc, gl, bd2, gl+bd2
std::optional<LogicName> parse_logic_name(std::string_view name);
std::string_view to_string(LogicName name);

/// A ∨ ¬A
Formula excluded_middle_axiom();
/// (A → B) ∨ (B → A)
Formula gl_axiom();
/// A ∨ (A → (B ∨ ¬B))
Formula bd2_axiom();

struct Decision {
  enum class Verdict { kValid, kRefuted, kNoCountermodelUpTo };

  Verdict verdict;
  /// Largest frame size searched.
  std::size_t searched_up_to = 0;
  std::optional<Countermodel> countermodel;
};

std::string_view to_string(Decision::Verdict v);

/// Bounded countermodel search over the logic's frame class, smallest frames
/// first. Returns kValid only when the logic has an exact bound and the
/// search reached it; otherwise a clean search yields kNoCountermodelUpTo.
/// Throws std::invalid_argument unless 1 <= bound <= kMaxEnumerationWorlds.
Decision decide(const LogicSpec& logic, const Formula& f, std::size_t bound);

/// Truth-table check over all classical assignments to atoms(f).
bool classical_taut(const Formula& f);

}  // namespace kripkelab
