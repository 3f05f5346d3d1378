#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hpt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A row would exceed the configured cell budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t row, std::size_t cells, std::size_t budget);

  std::size_t row() const noexcept { return row_; }
  std::size_t cells() const noexcept { return cells_; }
  std::size_t budget() const noexcept { return budget_; }

 private:
  std::size_t row_;
  std::size_t cells_;
  std::size_t budget_;
};

class DiscriminantMismatch : public Error {
 public:
  using Error::Error;
};

class NotRational : public Error {
 public:
  using Error::Error;
};

class NotIntegral : public Error {
 public:
  using Error::Error;
};

class DegenerateDiscriminant : public Error {
 public:
  using Error::Error;
};

class NoCentralCell : public Error {
 public:
  using Error::Error;
};

/// A scan of the computed row did not find the pair. Never patched over.
class LocationFailure : public Error {
 public:
  using Error::Error;
};

class HypothesisViolated : public Error {
 public:
  using Error::Error;
};

}  // namespace hpt
