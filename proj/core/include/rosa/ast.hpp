#pragma once

// Immutable process terms of the ROSA algebra and the definition
// environment that binds process variables.

#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "rosa/errors.hpp"

namespace rosa {

bool is_identifier(std::string_view text);

class ActionName {
public:
    /// Throws ValidationError unless `name` is an identifier other than `inf`.
    explicit ActionName(std::string name);

    const std::string& str() const noexcept { return name_; }

    friend bool operator==(const ActionName&, const ActionName&) = default;
    friend auto operator<=>(const ActionName&, const ActionName&) = default;

private:
    std::string name_;
};

/// Either a strictly positive finite rate or the passive rate `inf`.
class Rate {
public:
    static Rate finite(double value);
    static Rate infinite() noexcept { return Rate{}; }

    bool is_infinite() const noexcept { return infinite_; }
    /// Only meaningful for finite rates.
    double value() const noexcept { return value_; }

    friend bool operator==(const Rate&, const Rate&) = default;

private:
    Rate() = default;

    bool infinite_ = true;
    double value_ = 0.0;
};

class Probability {
public:
    explicit Probability(double value);

    double value() const noexcept { return value_; }
    /// 1 - p, rounded to 15 significant digits so that 1 - 0.7 is 0.3.
    Probability complement() const;

    friend bool operator==(const Probability&, const Probability&) = default;

private:
    double value_;
};

/// Synchronisation set of a parallel composition, kept sorted.
class SyncSet {
public:
    SyncSet() = default;
    SyncSet(std::initializer_list<std::string> names);

    void insert(ActionName name) { names_.insert(std::move(name)); }
    bool contains(std::string_view name) const;
    bool empty() const noexcept { return names_.empty(); }
    std::size_t size() const noexcept { return names_.size(); }

    auto begin() const { return names_.begin(); }
    auto end() const { return names_.end(); }

    friend bool operator==(const SyncSet&, const SyncSet&) = default;

private:
    std::set<ActionName> names_;
};

struct ProcessNode;

/// Shared handle to an immutable term. Copies are cheap.
class Process {
public:
    explicit Process(std::shared_ptr<const ProcessNode> node) : node_(std::move(node)) {}

    const ProcessNode& node() const noexcept { return *node_; }
    const ProcessNode* get() const noexcept { return node_.get(); }

    template <class T>
    const T* as() const noexcept;
    template <class T>
    bool is() const noexcept { return as<T>() != nullptr; }

private:
    std::shared_ptr<const ProcessNode> node_;
};

struct Nil {};

struct Var {
    std::string name;
};

struct Prefix {
    ActionName action;
    Rate rate;
    Process next;
};

/// `P;Q`
struct Seq {
    Process left;
    Process right;
};

/// `P - Q`
struct IntChoice {
    Process left;
    Process right;
};

/// `P + Q`
struct ExtChoice {
    Process left;
    Process right;
};

/// `P *{r} Q`: left with probability r, right with 1 - r.
struct ProbChoice {
    Probability prob;
    Process left;
    Process right;
};

/// `P ||{A} Q`
struct Par {
    SyncSet sync;
    Process left;
    Process right;
};

struct ProcessNode {
    std::variant<Nil, Var, Prefix, Seq, IntChoice, ExtChoice, ProbChoice, Par> term;
};

template <class T>
const T* Process::as() const noexcept {
    return std::get_if<T>(&node_->term);
}

Process nil();
Process var(std::string name);
Process prefix(ActionName action, Rate rate, Process next);
Process prefix(std::string action, Process next);  // passive rate
Process prefix(std::string action, double rate, Process next);
Process seq(Process left, Process right);
Process int_choice(Process left, Process right);
Process ext_choice(Process left, Process right);
Process prob_choice(Probability prob, Process left, Process right);
Process prob_choice(double prob, Process left, Process right);
Process par(SyncSet sync, Process left, Process right);

/// True iff both terms are identical trees.
bool structural_equal(const Process& p, const Process& q);

inline bool operator==(const Process& p, const Process& q) { return structural_equal(p, q); }

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);
std::string format_rate(const Rate& rate);

/// Tool syntax with only the parentheses the operator priorities require.
std::string pretty_print(const Process& p);

/// Node count of the tree.
std::size_t size(const Process& p);

class DefinitionEnv {
public:
    DefinitionEnv() = default;

    /// Throws DuplicateDefinition when `name` is already bound.
    void bind(const std::string& name, Process body, Position where = {});
    bool contains(const std::string& name) const { return bindings_.count(name) != 0; }
    /// The body of `name`, verbatim. Throws UnboundVariable.
    const Process& lookup(const std::string& name) const;
    const Process* find(const std::string& name) const;

    const std::string& root() const noexcept { return root_; }
    /// Throws UnboundVariable when `name` is not bound.
    void set_root(const std::string& name);

    const std::map<std::string, Process>& bindings() const noexcept { return bindings_; }

private:
    std::map<std::string, Process> bindings_;
    std::string root_;
};

const Process& lookup(const DefinitionEnv& env, const std::string& name);

}  // namespace rosa
