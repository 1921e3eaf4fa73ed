#pragma once

#include <stdexcept>
#include <string>

namespace chowla {

// Factorization exceeded its effort budget before splitting the input.
// Distinct from a wrong answer: callers can catch this and widen the budget.
class FactoringGaveUp : public std::runtime_error {
 public:
  explicit FactoringGaveUp(const std::string& what) : std::runtime_error(what) {}
};

// A bounded search (prime in a progression, Pell index stream, ...) hit its cap.
class SearchBudgetExceeded : public std::runtime_error {
 public:
  explicit SearchBudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The polynomial has discriminant 0, i.e. it is a * (linear)^2 up to the leading
// coefficient; such forms never change sign and are outside every construction here.
class ExcludedForm : public std::domain_error {
 public:
  explicit ExcludedForm(const std::string& what) : std::domain_error(what) {}
};

// The Pell modulus is a perfect square, so x^2 - N*y^2 = 1 only has y = 0.
class PellDegenerate : public std::domain_error {
 public:
  explicit PellDegenerate(const std::string& what) : std::domain_error(what) {}
};

// A representation search ran through its whole Pell budget without ever
// hitting an integral n for either sign choice.
class NoIntegralSolution : public std::runtime_error {
 public:
  explicit NoIntegralSolution(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chowla
