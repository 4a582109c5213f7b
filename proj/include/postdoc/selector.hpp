#pragma once

#include <vector>

#include "postdoc/dsf.hpp"

namespace postdoc {

struct SummarySelection {
  std::vector<int> selection_order;  // element indexes in pick order
  std::vector<int> document_order;   // same indexes sorted ascending
  double f_value = 0.0;
  std::vector<double> g;  // per-dimension g(A) cache
};

struct SelectOptions {
  bool parallel = true;
};

// Cardinality-constrained greedy maximization of f; ties broken by lowest
// ordinal. Fills |A| = min(K, N).
SummarySelection greedy_select(const Document& doc, const WeightVector& w, int k,
                               const SelectOptions& opts = {});

// Exact maximizer over all subsets with |A| <= K (N <= 20 guard); ties broken
// by lexicographically smallest ordinal list.
SummarySelection brute_force_select(const Document& doc, const WeightVector& w, int k);

// Largest K whose greedily selected text fits the token budget (~4 chars per
// token); image elements count toward K but not toward the budget.
int choose_k(const Document& doc, const WeightVector& w, int token_budget = 3000);

}  // namespace postdoc
