#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace rosa {

/// 1-based location in the source text.
struct Position {
    std::size_t line = 1;
    std::size_t column = 1;

    friend bool operator==(const Position&, const Position&) = default;
};

std::string to_string(const Position& pos);

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(Position position, std::string expected, std::string found);

    const Position& position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    Position position_;
    std::string expected_;
    std::string found_;
};

class LexError : public ParseError {
public:
    LexError(Position position, std::string found);
};

/// A literal or name violates a domain constraint (rate <= 0, probability
/// outside [0,1], malformed identifier).
class ValidationError : public Error {
public:
    explicit ValidationError(std::string message,
                             std::optional<Position> position = std::nullopt);

    const std::optional<Position>& position() const noexcept { return position_; }

private:
    std::optional<Position> position_;
};

class UnboundVariable : public Error {
public:
    explicit UnboundVariable(std::string name,
                             std::optional<Position> position = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    const std::optional<Position>& position() const noexcept { return position_; }

private:
    std::string name_;
    std::optional<Position> position_;
};

class DuplicateDefinition : public Error {
public:
    DuplicateDefinition(std::string name, Position position);

    const std::string& name() const noexcept { return name_; }
    const Position& position() const noexcept { return position_; }

private:
    std::string name_;
    Position position_;
};

class UnguardedRecursion : public Error {
public:
    explicit UnguardedRecursion(std::string name);

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

/// A semantic operation was invoked outside its precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace rosa
