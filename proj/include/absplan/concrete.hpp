#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absplan/cost.hpp"
#include "absplan/model.hpp"

namespace absplan {

// Strict evaluation of a well-typed expression against a total state.
// Deterministic, side-effect free; never fails on typechecked input.
Value eval(const Expr& e, const ConcreteState& state, const Problem& problem);

// True iff every precondition conjunct evaluates to true.
bool applicable(const Action& action, const ConcreteState& state, const Problem& problem);

// Parallel-assignment successor: all right-hand sides are evaluated against
// the input state, then assigned simultaneously. Calling this on an
// inapplicable action is a contract violation; search must gate on
// applicable().
ConcreteState apply(const Action& action, const ConcreteState& state, const Problem& problem);

bool satisfies_goal(const ConcreteState& state, const Problem& problem);

struct PlanValidation {
  enum class Outcome { Valid, StepFailed, GoalFailed, UnknownAction };

  Outcome outcome = Outcome::Valid;
  std::uint64_t cost = 0;                 // plan length (unit costs)
  std::size_t failure_index = 0;          // first inapplicable step
  std::string unknown_name;               // set for UnknownAction

  bool valid() const { return outcome == Outcome::Valid; }
};

PlanValidation validate_plan(const Problem& problem, std::span<const std::string> plan);

// Breadth-first optimal plan length from `state` under unit costs.
// Cost::infinity() when the goal is unreachable within the explored component;
// nullopt when more than state_cap distinct states were generated.
std::optional<Cost> optimal_cost_oracle(const Problem& problem, const ConcreteState& state,
                                        std::size_t state_cap);

}  // namespace absplan
