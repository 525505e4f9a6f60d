#pragma once

// Canonical forms used to identify states that differ only up to simple
// strong-bisimulation laws:
//
//   S1  0;Q            -> Q
//   S2  0||{A}0        -> 0
//   S3  P-P -> P,  P+P -> P when P has no unguarded - or *{r}
//   S4  operands of -, +, || ordered by key; P*{r}Q -> Q*{1-r}P when key(Q) < key(P),
//       and P*{r}P -> P*{1-r}P when r > 0.5
//   S5  P*{1}Q -> P,  P*{0}Q -> Q
//
// Variables in unguarded positions (not under a prefix, not the right side
// of `;`) are replaced by their bindings, so `P` and its body share a key.

#include <string>

#include "rosa/ast.hpp"

namespace rosa {

struct CanonicalKey {
    std::string key;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Operand order used by S4: plain byte order on keys, except that `0` sorts
/// after every other key.
bool key_less(const std::string& a, const std::string& b);

Process canonicalize(const Process& p, const DefinitionEnv& env);

CanonicalKey canonical_key(const Process& p, const DefinitionEnv& env);

}  // namespace rosa
