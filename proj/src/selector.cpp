#include "postdoc/selector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "postdoc/errors.hpp"

namespace postdoc {

static SummarySelection finish(const SelectionState& st, const WeightVector& w) {
  SummarySelection sel;
  sel.selection_order = st.selected;
  sel.document_order = st.selected;
  std::sort(sel.document_order.begin(), sel.document_order.end());
  sel.g = g_vector(st);
  sel.f_value = eval_f(st, w);
  return sel;
}

SummarySelection greedy_select(const Document& doc, const WeightVector& w, int k,
                               const SelectOptions& opts) {
  if (doc.elements.empty())
    throw validation_error("document " + doc.doc_id + ": no elements");
  if (k < 1) throw validation_error("K must be >= 1");
  check_weights(w, doc.dim());

  SelectionState st = make_state(doc);
  const int n = st.n_doc;
  const int d = st.dim();
  const int target = std::min(k, n);
  std::vector<double> base_sqrt_g(d);
  std::vector<double> gains(n);

  for (int step = 0; step < target; ++step) {
    for (int u = 0; u < d; ++u) base_sqrt_g[u] = std::sqrt(eval_g(st, u));
#pragma omp parallel for schedule(static) if (opts.parallel)
    for (int c = 0; c < n; ++c) {
      if (st.is_selected[c]) continue;
      gains[c] = marginal_gain_cached(st, w, c, base_sqrt_g);
    }
    int best = -1;
    double best_gain = -std::numeric_limits<double>::infinity();
    for (int c = 0; c < n; ++c) {
      if (st.is_selected[c]) continue;
      if (gains[c] > best_gain) {
        best_gain = gains[c];
        best = c;
      }
    }
    apply_element(st, best);
  }
  return finish(st, w);
}

SummarySelection brute_force_select(const Document& doc, const WeightVector& w, int k) {
  if (doc.elements.empty())
    throw validation_error("document " + doc.doc_id + ": no elements");
  if (k < 1) throw validation_error("K must be >= 1");
  const int n = (int)doc.elements.size();
  if (n > 20)
    throw validation_error("brute force limited to N <= 20, got N = " + std::to_string(n));
  check_weights(w, doc.dim());

  std::vector<int> best_set;
  double best_f = 0.0;  // f(empty) = 0
  bool have_best = true;

  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > k) continue;
    SelectionState st = make_state(doc);
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        apply_element(st, i);
        members.push_back(i);
      }
    const double f = eval_f(st, w);
    const bool better =
        f > best_f ||
        (f == best_f && (!have_best || std::lexicographical_compare(members.begin(), members.end(),
                                                                    best_set.begin(), best_set.end())));
    if (better) {
      best_f = f;
      best_set = members;
      have_best = true;
    }
  }

  SelectionState st = make_state(doc);
  for (int i : best_set) apply_element(st, i);
  SummarySelection sel = finish(st, w);
  // enumeration visits subsets in ordinal order, so best_set is already sorted
  sel.selection_order = best_set;
  return sel;
}

int choose_k(const Document& doc, const WeightVector& w, int token_budget) {
  if (token_budget < 1) throw validation_error("token budget must be >= 1");
  const long budget_chars = 4L * token_budget;
  SummarySelection full = greedy_select(doc, w, (int)doc.elements.size());
  long chars = 0;
  int k = 0;
  for (int idx : full.selection_order) {
    const ContentElement& el = doc.elements[idx];
    if (el.modality == Modality::text) {
      const long len = (long)el.text.size();
      if (k >= 1 && chars + len > budget_chars) break;
      chars += len;
    }
    ++k;
  }
  return std::max(1, k);
}

}  // namespace postdoc
