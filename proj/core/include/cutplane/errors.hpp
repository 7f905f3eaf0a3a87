#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cutplane {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class EmptyDataset : public Error {
 public:
  EmptyDataset() : Error("dataset contains no points") {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              ", got " + std::to_string(got)) {}
};

class ZeroVector : public Error {
 public:
  explicit ZeroVector(const std::string& where)
      : Error("zero vector not allowed: " + where) {}
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("parse error at line " + std::to_string(line) + ": " + what) {}
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t size)
      : Error("index " + std::to_string(index) + " out of range (size " +
              std::to_string(size) + ")") {}
};

class UpdateBudgetExceeded : public Error {
 public:
  explicit UpdateBudgetExceeded(std::uint64_t budget)
      : Error("perceptron update budget of " + std::to_string(budget) +
              " exceeded; data may not be separable"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

class NoViolatedConstraint : public Error {
 public:
  NoViolatedConstraint()
      : Error("no violated constraint: the query point is already consistent") {}
};

class DegenerateDenominator : public Error {
 public:
  DegenerateDenominator(std::size_t n_total, std::size_t n_compressed)
      : Error("degenerate denominator: |S| = " + std::to_string(n_compressed) +
              " >= n = " + std::to_string(n_total)) {}
};

class ChordCollapse : public Error {
 public:
  ChordCollapse()
      : Error("hit-and-run chord collapsed repeatedly; "
              "the polytope interior is empty or near-empty") {}
};

class NotSeparable : public Error {
 public:
  explicit NotSeparable(double margin)
      : Error("polytope has empty interior (max-min margin " +
              std::to_string(margin) + ")") {}
};

class MaxIterExceeded : public Error {
 public:
  explicit MaxIterExceeded(std::uint64_t max_iter)
      : Error("iteration limit " + std::to_string(max_iter) +
              " reached before convergence") {}
};

class PoolExhausted : public Error {
 public:
  PoolExhausted() : Error("every pool point has already been queried") {}
};

class ZeroCenter : public Error {
 public:
  ZeroCenter() : Error("query scores are undefined for a zero center") {}
};

class ZeroAcceptance : public Error {
 public:
  explicit ZeroAcceptance(std::size_t n)
      : Error("no sample accepted out of " + std::to_string(n) +
              "; body volume is below Monte Carlo resolution") {}
};

class LambdaOutOfRange : public Error {
 public:
  explicit LambdaOutOfRange(double lambda)
      : Error("lambda = " + std::to_string(lambda) + " outside [0, 1)") {}
};

class DegenerateBody : public Error {
 public:
  explicit DegenerateBody(const std::string& what)
      : Error("degenerate body statistics: " + what) {}
};

class OffsetOutsideBody : public Error {
 public:
  OffsetOutsideBody()
      : Error("offset point lies outside the body; "
              "the generalized bound precondition does not hold") {}
};

class AllPruned : public Error {
 public:
  explicit AllPruned(double gamma)
      : Error("margin pruning at gamma = " + std::to_string(gamma) +
              " removed every generated point") {}
};

class DatasetUnavailable : public Error {
 public:
  explicit DatasetUnavailable(const std::string& path)
      : Error("dataset file unavailable: " + path) {}
};

}  // namespace cutplane
