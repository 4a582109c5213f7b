#include "postdoc/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "postdoc/errors.hpp"
#include "postdoc/rng.hpp"
#include "postdoc/selector.hpp"

namespace postdoc {

static SelectionState gold_state(const Document& doc, const GroundTruthSummary& gold) {
  SelectionState st = make_state(doc);
  for (const auto& id : gold.selected_ids) {
    const int idx = doc.index_of(id);
    if (idx < 0)
      throw validation_error("document " + doc.doc_id + ": ground-truth id " + id + " not found");
    apply_element(st, idx);
  }
  return st;
}

double hinge_term(const Document& doc, const GroundTruthSummary& gold, const WeightVector& w, int k,
                  bool parallel) {
  SummarySelection greedy = greedy_select(doc, w, k, SelectOptions{parallel});
  SelectionState gst = gold_state(doc, gold);
  return std::max(greedy.f_value - eval_f(gst, w), 0.0);
}

double hinge_loss(const Document& doc, const GroundTruthSummary& gold, const WeightVector& w, int k,
                  double lambda, bool parallel) {
  double sq = 0.0;
  for (double v : w) sq += v * v;
  return hinge_term(doc, gold, w, k, parallel) + 0.5 * lambda * sq;
}

WeightVector hinge_subgradient_fixed(const std::vector<double>& g_greedy,
                                     const std::vector<double>& g_gold, bool active) {
  WeightVector sub(g_greedy.size(), 0.0);
  if (!active) return sub;
  for (size_t u = 0; u < sub.size(); ++u)
    sub[u] = std::sqrt(g_greedy[u]) - std::sqrt(g_gold[u]);
  return sub;
}

static WeightVector projected_update(const WeightVector& w, const std::vector<double>& g_greedy,
                                     const std::vector<double>& g_gold, bool hinge_active,
                                     const TrainConfig& cfg) {
  const bool apply_hinge = cfg.gate_hinge ? hinge_active : true;
  WeightVector next(w.size());
  for (size_t u = 0; u < w.size(); ++u) {
    double sub = cfg.lambda * w[u];
    if (apply_hinge) sub += std::sqrt(g_greedy[u]) - std::sqrt(g_gold[u]);
    next[u] = std::max(0.0, w[u] - cfg.lr * sub);
  }
  return next;
}

WeightVector sgd_step(const Document& doc, const GroundTruthSummary& gold, const WeightVector& w,
                      const TrainConfig& cfg, int k) {
  SummarySelection greedy = greedy_select(doc, w, k, SelectOptions{cfg.parallel});
  SelectionState gst = gold_state(doc, gold);
  const bool active = greedy.f_value - eval_f(gst, w) > 0.0;
  return projected_update(w, greedy.g, g_vector(gst), active, cfg);
}

struct Sample {
  const Document* doc = nullptr;
  int k = 0;
};

static std::vector<Sample> prepare(const Corpus& corpus, const TrainConfig& cfg,
                                   const WeightVector& w0, const char* which) {
  if (corpus.docs.empty()) throw validation_error(std::string(which) + " corpus is empty");
  std::vector<Sample> samples;
  for (const auto& doc : corpus.docs) {
    if (!doc.ground_truth)
      throw validation_error("document " + doc.doc_id + " has no ground truth");
    samples.push_back(Sample{&doc, cfg.k > 0 ? cfg.k : choose_k(doc, w0, cfg.token_budget)});
  }
  return samples;
}

TrainReport train(const Corpus& train_corpus, const Corpus& val_corpus, const TrainConfig& cfg) {
  if (cfg.lambda < 0) throw validation_error("lambda must be >= 0");
  if (cfg.lr <= 0) throw validation_error("learning rate must be > 0");
  if (cfg.max_epochs < 1) throw validation_error("max_epochs must be >= 1");
  if (cfg.patience < 1) throw validation_error("patience must be >= 1");
  if (train_corpus.d != val_corpus.d)
    throw validation_error("train and validation corpora have different dimensions");

  const int d = train_corpus.d;
  WeightVector w(d, 1.0 / d);

  // Budgeted K is fixed from the initial uniform weights so the objective
  // stays stationary across epochs.
  std::vector<Sample> train_samples = prepare(train_corpus, cfg, w, "train");
  std::vector<Sample> val_samples = prepare(val_corpus, cfg, w, "validation");

  auto val_loss_at = [&](const WeightVector& weights) {
    double acc = 0.0;
    for (const auto& s : val_samples)
      acc += hinge_loss(*s.doc, *s.doc->ground_truth, weights, s.k, cfg.lambda, cfg.parallel);
    return acc / (double)val_samples.size();
  };

  TrainReport report;
  SplitMix64 rng(cfg.seed);
  std::vector<int> order(train_samples.size());
  std::iota(order.begin(), order.end(), 0);

  double best_val = std::numeric_limits<double>::infinity();
  int epochs_since_improvement = 0;
  report.weights = w;
  report.best_epoch = 0;
  report.stop_reason = "max_epochs";

  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    fisher_yates_shuffle(order, rng);
    double train_loss = 0.0;
    long active_count = 0;
    for (int idx : order) {
      const Sample& s = train_samples[idx];
      SummarySelection greedy = greedy_select(*s.doc, w, s.k, SelectOptions{cfg.parallel});
      SelectionState gst = gold_state(*s.doc, *s.doc->ground_truth);
      const double margin = greedy.f_value - eval_f(gst, w);
      const bool active = margin > 0.0;
      double sq = 0.0;
      for (double v : w) sq += v * v;
      train_loss += std::max(margin, 0.0) + 0.5 * cfg.lambda * sq;
      if (active) ++active_count;
      w = projected_update(w, greedy.g, g_vector(gst), active, cfg);
    }
    EpochStats stats;
    stats.train_loss = train_loss / (double)train_samples.size();
    stats.val_loss = val_loss_at(w);
    stats.hinge_active_fraction = (double)active_count / (double)train_samples.size();
    report.epochs.push_back(stats);

    if (stats.val_loss < best_val - cfg.tol) {
      best_val = stats.val_loss;
      report.weights = w;
      report.best_epoch = epoch;
      epochs_since_improvement = 0;
    } else {
      ++epochs_since_improvement;
      if (epochs_since_improvement >= cfg.patience) {
        report.stop_reason = "early_stop";
        break;
      }
    }
  }
  return report;
}

}  // namespace postdoc
