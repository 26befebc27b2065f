#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mustshe {

/// Base class for all recoverable errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line` is 1-based; 0 when the error is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Bad command-line arguments or option values.
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Hypotheses and corpus records are not aligned one-to-one.
class AlignmentError : public Error {
 public:
  AlignmentError(std::size_t corpus_records, std::size_t hypothesis_lines)
      : Error("hypothesis file has " + std::to_string(hypothesis_lines) +
              " lines but corpus has " + std::to_string(corpus_records) + " records"),
        corpus_records_(corpus_records),
        hypothesis_lines_(hypothesis_lines) {}
  std::size_t corpus_records() const { return corpus_records_; }
  std::size_t hypothesis_lines() const { return hypothesis_lines_; }

 private:
  std::size_t corpus_records_;
  std::size_t hypothesis_lines_;
};

/// A metric was requested over zero records.
class EmptyViewError : public Error {
 public:
  using Error::Error;
};

/// A mining rule failed to compile; carries the rule id.
class PatternError : public Error {
 public:
  PatternError(const std::string& rule_id, const std::string& what)
      : Error("rule " + rule_id + ": " + what), rule_id_(rule_id) {}
  const std::string& rule_id() const { return rule_id_; }

 private:
  std::string rule_id_;
};

/// No lexicon entry or suffix rule can swap the token; it must go to human review.
class NoRuleError : public Error {
 public:
  explicit NoRuleError(const std::string& token)
      : Error("no swap rule for token '" + token + "'"), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

}  // namespace mustshe
