#pragma once

// Layered operational semantics: internal choices resolve first
// (non-deterministic layer), then probabilistic choices, then timed actions.
//
// Operations look through process variables lazily. `budget` bounds how many
// variable replacements may be nested on one recursion path; exceeding it
// raises UnguardedRecursion.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "rosa/ast.hpp"

namespace rosa {

inline constexpr std::size_t kDefaultMaxUnfold = 1024;

/// Which internal-choice branch was taken, as a congruence path ("L", "R.L", ...).
struct NdBranch {
    std::string path;
    friend bool operator==(const NdBranch&, const NdBranch&) = default;
};

struct ProbLabel {
    double p;
    friend bool operator==(const ProbLabel&, const ProbLabel&) = default;
};

struct ActionLabel {
    ActionName name;
    Rate rate;
    friend bool operator==(const ActionLabel&, const ActionLabel&) = default;
};

using TransitionLabel = std::variant<NdBranch, ProbLabel, ActionLabel>;

enum class NodeKind { NdUnstable, ProbUnstable, ActionEnabled, Deadlock, Success };

std::string_view to_string(NodeKind kind);

struct NdStep {
    std::string path;
    Process target;
};

struct ProbStep {
    double p;
    Process target;
};

struct ActionStep {
    ActionName name;
    Rate rate;
    Process target;
};

struct Step {
    TransitionLabel label;
    Process target;
};

/// Replaces a root-position variable by its binding until the root is not a
/// variable. Throws UnguardedRecursion once `budget` replacements are spent.
Process unfold(const Process& p, const DefinitionEnv& env, std::size_t budget = kDefaultMaxUnfold);

/// False iff `p` has an internal choice outside every action guard.
bool is_det_stable(const Process& p, const DefinitionEnv& env,
                   std::size_t budget = kDefaultMaxUnfold);

/// False iff `p` has a probabilistic choice outside every action guard.
bool is_prob_stable(const Process& p, const DefinitionEnv& env,
                    std::size_t budget = kDefaultMaxUnfold);

/// True for `0` and for compositions whose every component has terminated
/// (`0||{A}0`, `0;0`, `0+0`).
bool is_terminated(const Process& p, const DefinitionEnv& env,
                   std::size_t budget = kDefaultMaxUnfold);

/// Resolves exactly one unguarded internal choice per successor.
std::vector<NdStep> nd_successors(const Process& p, const DefinitionEnv& env,
                                  std::size_t budget = kDefaultMaxUnfold);

/// Resolves all unguarded probabilistic choices at once. Zero-probability
/// outcomes are dropped; the rest sum to one.
std::vector<ProbStep> prob_successors(const Process& p, const DefinitionEnv& env,
                                      std::size_t budget = kDefaultMaxUnfold);

/// All single timed steps of a stable process. Empty means no move.
std::vector<ActionStep> action_successors(const Process& p, const DefinitionEnv& env,
                                          std::size_t budget = kDefaultMaxUnfold);

/// Rate of a joint move: the minimum, with `inf` as the passive top element.
Rate sync_rate(const Rate& a, const Rate& b);

NodeKind classify(const Process& p, const DefinitionEnv& env,
                  std::size_t budget = kDefaultMaxUnfold);

/// The steps of the rule family selected by `kind`; Deadlock and Success have none.
std::vector<Step> successors(const Process& p, NodeKind kind, const DefinitionEnv& env,
                             std::size_t budget = kDefaultMaxUnfold);

std::string to_string(const TransitionLabel& label);

}  // namespace rosa
