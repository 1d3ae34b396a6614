#pragma once

#include <cstdint>
#include <string>

namespace fuzzyfo {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

// Global cap on the number of evaluations a bounded search may perform:
// FUZZYFO_BUDGET when set to a positive integer, else kDefaultSearchBudget.
std::uint64_t search_budget();

// Throws BudgetExceeded when `space` > `budget`.
void require_within_budget(const std::string& what, long double space, std::uint64_t budget);

}  // namespace fuzzyfo
