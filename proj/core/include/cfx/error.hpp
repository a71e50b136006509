#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cfx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundPlaceholder : public Error {
 public:
  explicit UnboundPlaceholder(std::string name)
      : Error("unbound placeholder '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DuplicateBinder : public Error {
 public:
  explicit DuplicateBinder(std::string name)
      : Error("duplicate binder 'mu " + name + "'"), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class NotAMu : public Error {
 public:
  NotAMu() : Error("expression is not a mu-expression") {}
};

class NotNullable : public Error {
 public:
  NotNullable() : Error("expression is not nullable") {}
};

class NotContained : public Error {
 public:
  explicit NotContained(const std::string& what) : Error("not contained: " + what) {}
};

class EmptyLanguage : public Error {
 public:
  EmptyLanguage() : Error("the context-free expression denotes the empty language") {}
};

class NotGuarded : public Error {
 public:
  NotGuarded() : Error("expression is not guarded") {}
};

class EmptyAlphabet : public Error {
 public:
  EmptyAlphabet() : Error("alphabet is empty") {}
};

/// Evaluation ran out of fuel.
class Diverged : public Error {
 public:
  explicit Diverged(std::uint64_t steps)
      : Error("evaluation diverged after " + std::to_string(steps) + " steps"), steps_(steps) {}
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t steps_;
};

/// A coercion evaluated to the Wrong value or to something that is not a tree.
class WrongResult : public Error {
 public:
  explicit WrongResult(const std::string& what) : Error("wrong result: " + what) {}
};

/// Textual expression syntax error; `column` is 1-based.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t column, const std::string& what)
      : Error("syntax error at column " + std::to_string(column) + ": " + what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Malformed tree or coercion record.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error("format error: " + what) {}
};

}  // namespace cfx
