// Compares the serial and OpenMP-parallel greedy marginal-gain scans and
// checks that both produce identical selections.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "postdoc/corpus.hpp"
#include "postdoc/rng.hpp"
#include "postdoc/selector.hpp"

using namespace postdoc;

namespace {

Document synth_doc(int n, int d, uint64_t seed) {
  SplitMix64 rng(seed);
  Document doc;
  doc.doc_id = "bench";
  doc.elements.resize(n);
  for (int i = 0; i < n; ++i) {
    ContentElement& el = doc.elements[i];
    el.id = "e" + std::to_string(i);
    el.ordinal = i;
    el.modality = (i % 4 == 0) ? Modality::image : Modality::text;
    el.embedding.resize(d);
    double norm = 0.0;
    for (int u = 0; u < d; ++u) {
      el.embedding[u] = rng.unit() + 1e-6;
      norm += el.embedding[u];
    }
    for (int u = 0; u < d; ++u) el.embedding[u] /= norm;
  }
  return doc;
}

double time_select(const Document& doc, const WeightVector& w, int k, bool parallel,
                   SummarySelection& out) {
  SelectOptions opts;
  opts.parallel = parallel;
  const auto t0 = std::chrono::steady_clock::now();
  out = greedy_select(doc, w, k, opts);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int d = 768, k = 20;
  const std::vector<int> sizes = {500, 1000, 2000};
  const int reps = argc > 1 ? std::atoi(argv[1]) : 3;

  std::printf("%8s %6s %6s %12s %12s %9s %6s\n", "N", "d", "K", "serial(s)", "parallel(s)",
              "speedup", "match");
  for (int n : sizes) {
    const Document doc = synth_doc(n, d, 1234);
    const WeightVector w(d, 1.0 / d);
    double best_serial = 1e300, best_parallel = 1e300;
    SummarySelection a, b;
    for (int r = 0; r < reps; ++r) {
      best_serial = std::min(best_serial, time_select(doc, w, k, false, a));
      best_parallel = std::min(best_parallel, time_select(doc, w, k, true, b));
    }
    const bool match = a.selection_order == b.selection_order && a.f_value == b.f_value;
    std::printf("%8d %6d %6d %12.4f %12.4f %8.2fx %6s\n", n, d, k, best_serial, best_parallel,
                best_serial / best_parallel, match ? "yes" : "NO");
    if (!match) return 1;
  }
  return 0;
}
