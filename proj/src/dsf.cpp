#include "postdoc/dsf.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "postdoc/errors.hpp"

namespace postdoc {

SelectionState make_state(const Document& doc) {
  if (doc.elements.empty())
    throw validation_error("document " + doc.doc_id + ": no elements");
  SelectionState st;
  st.doc = &doc;
  const int d = doc.dim();
  st.n_doc = (int)doc.elements.size();
  st.is_selected.assign(st.n_doc, 0);
  st.sum_sel.assign(d, 0.0);
  st.sum_img.assign(d, 0.0);
  st.sum_txt.assign(d, 0.0);
  st.doc_total.assign(d, 0.0);
  for (const auto& el : doc.elements)
    for (int u = 0; u < d; ++u) st.doc_total[u] += el.embedding[u];
  return st;
}

double eval_g(const SelectionState& st, int u) {
  const double s = st.sum_sel[u];
  return s * (st.n_doc + st.doc_total[u] - s) + st.sum_img[u] * st.sum_txt[u];
}

std::vector<double> g_vector(const SelectionState& st) {
  std::vector<double> g(st.dim());
  for (int u = 0; u < st.dim(); ++u) g[u] = eval_g(st, u);
  return g;
}

double eval_f(const SelectionState& st, const WeightVector& w) {
  check_weights(w, st.dim());
  double f = 0.0;
  for (int u = 0; u < st.dim(); ++u) f += w[u] * std::sqrt(eval_g(st, u));
  return f;
}

static void check_candidate(const SelectionState& st, int candidate) {
  if (candidate < 0 || candidate >= st.n_doc)
    throw std::invalid_argument("candidate index " + std::to_string(candidate) + " out of range");
  if (st.is_selected[candidate])
    throw std::invalid_argument("candidate " + std::to_string(candidate) + " already selected");
}

double marginal_gain(const SelectionState& st, const WeightVector& w, int candidate) {
  check_weights(w, st.dim());
  check_candidate(st, candidate);
  const ContentElement& el = st.doc->elements[candidate];
  const bool img = el.modality == Modality::image;
  double gain = 0.0;
  for (int u = 0; u < st.dim(); ++u) {
    const double p = el.embedding[u];
    const double s2 = st.sum_sel[u] + p;
    const double i2 = st.sum_img[u] + (img ? p : 0.0);
    const double t2 = st.sum_txt[u] + (img ? 0.0 : p);
    const double g2 = s2 * (st.n_doc + st.doc_total[u] - s2) + i2 * t2;
    gain += w[u] * (std::sqrt(g2) - std::sqrt(eval_g(st, u)));
  }
  return gain;
}

double marginal_gain_cached(const SelectionState& st, const WeightVector& w, int candidate,
                            const std::vector<double>& base_sqrt_g) {
  const ContentElement& el = st.doc->elements[candidate];
  const bool img = el.modality == Modality::image;
  const double* emb = el.embedding.data();
  const double* ss = st.sum_sel.data();
  const double* si = st.sum_img.data();
  const double* stx = st.sum_txt.data();
  const double* tot = st.doc_total.data();
  const double n = st.n_doc;
  double gain = 0.0;
  const int d = st.dim();
  for (int u = 0; u < d; ++u) {
    const double p = emb[u];
    const double s2 = ss[u] + p;
    const double i2 = si[u] + (img ? p : 0.0);
    const double t2 = stx[u] + (img ? 0.0 : p);
    const double g2 = s2 * (n + tot[u] - s2) + i2 * t2;
    gain += w[u] * (std::sqrt(g2) - base_sqrt_g[u]);
  }
  return gain;
}

void apply_element(SelectionState& st, int candidate) {
  check_candidate(st, candidate);
  const ContentElement& el = st.doc->elements[candidate];
  const bool img = el.modality == Modality::image;
  for (int u = 0; u < st.dim(); ++u) {
    const double p = el.embedding[u];
    st.sum_sel[u] += p;
    if (img)
      st.sum_img[u] += p;
    else
      st.sum_txt[u] += p;
  }
  st.is_selected[candidate] = 1;
  st.selected.push_back(candidate);
}

void check_weights(const WeightVector& w, int d) {
  if ((int)w.size() != d)
    throw validation_error("weight vector has dimension " + std::to_string(w.size()) +
                           ", expected " + std::to_string(d));
  for (double v : w)
    if (v < 0.0) throw validation_error("weight vector has a negative entry");
}

}  // namespace postdoc
