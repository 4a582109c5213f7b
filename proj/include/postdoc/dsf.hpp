#pragma once

#include <vector>

#include "postdoc/corpus.hpp"

namespace postdoc {

using WeightVector = std::vector<double>;

// Incremental bookkeeping for the per-dimension decomposition
//   g_u(A) = sum_sel[u] * (n_doc + doc_total[u] - sum_sel[u]) + sum_img[u] * sum_txt[u]
// where sum_sel/sum_img/sum_txt run over the selection and doc_total over the
// whole document. The image–text alignment term is stored in this exact
// factorized form, which makes marginal updates O(d).
struct SelectionState {
  const Document* doc = nullptr;
  std::vector<int> selected;      // element indexes in selection order
  std::vector<char> is_selected;  // by element index
  std::vector<double> sum_sel;
  std::vector<double> sum_img;
  std::vector<double> sum_txt;
  std::vector<double> doc_total;
  int n_doc = 0;

  int dim() const { return (int)sum_sel.size(); }
};

SelectionState make_state(const Document& doc);

double eval_g(const SelectionState& st, int u);
std::vector<double> g_vector(const SelectionState& st);

// f(A) = sum_u w_u * sqrt(g_u(A))
double eval_f(const SelectionState& st, const WeightVector& w);

// f(A + candidate) - f(A), computed from the updated per-dimension g.
double marginal_gain(const SelectionState& st, const WeightVector& w, int candidate);

// Same quantity against a precomputed sqrt(g_u(A)) cache; the greedy scan
// shares one cache across all candidates of a step.
double marginal_gain_cached(const SelectionState& st, const WeightVector& w, int candidate,
                            const std::vector<double>& base_sqrt_g);

void apply_element(SelectionState& st, int candidate);

void check_weights(const WeightVector& w, int d);

}  // namespace postdoc
