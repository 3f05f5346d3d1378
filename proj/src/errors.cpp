#include "hpt/errors.hpp"

namespace hpt {

BudgetExceeded::BudgetExceeded(std::size_t row, std::size_t cells, std::size_t budget)
    : Error("row " + std::to_string(row) + " needs " + std::to_string(cells) +
            " cells, over the budget of " + std::to_string(budget)),
      row_(row),
      cells_(cells),
      budget_(budget) {}

}  // namespace hpt
