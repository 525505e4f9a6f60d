#include "rosa/errors.hpp"

namespace rosa {

std::string to_string(const Position& pos) {
    return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

ParseError::ParseError(Position position, std::string expected, std::string found)
    : Error(to_string(position) + ": expected " + expected + ", found " + found),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

LexError::LexError(Position position, std::string found)
    : ParseError(position, "a token", std::move(found)) {}

ValidationError::ValidationError(std::string message, std::optional<Position> position)
    : Error(position ? to_string(*position) + ": " + message : message),
      position_(position) {}

UnboundVariable::UnboundVariable(std::string name, std::optional<Position> position)
    : Error((position ? to_string(*position) + ": " : std::string{}) +
            "unbound process variable '" + name + "'"),
      name_(std::move(name)),
      position_(position) {}

DuplicateDefinition::DuplicateDefinition(std::string name, Position position)
    : Error(to_string(position) + ": process '" + name + "' is already defined"),
      name_(std::move(name)),
      position_(position) {}

UnguardedRecursion::UnguardedRecursion(std::string name)
    : Error("unguarded recursion while unfolding '" + name + "'"), name_(std::move(name)) {}

}  // namespace rosa
