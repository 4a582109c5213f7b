#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "postdoc/corpus.hpp"
#include "postdoc/dsf.hpp"

namespace postdoc {

struct TrainConfig {
  double lambda = 0.1;
  double lr = 0.01;
  int max_epochs = 50;
  int patience = 3;
  double tol = 1e-4;
  int k = 0;  // 0: per-document budgeted K at the initial uniform weights
  int token_budget = 3000;
  uint64_t seed = 42;
  bool gate_hinge = true;  // false: apply the hinge subgradient unconditionally
  bool parallel = true;    // inner greedy scans only; updates stay sequential
};

struct EpochStats {
  double train_loss = 0.0;
  double val_loss = 0.0;
  double hinge_active_fraction = 0.0;
};

struct TrainReport {
  std::vector<EpochStats> epochs;
  WeightVector weights;  // best on validation
  std::string stop_reason;
  int best_epoch = -1;  // 0-based
};

// max(f(A_greedy) - f(A_gold), 0); both selections at cardinality k.
double hinge_term(const Document& doc, const GroundTruthSummary& gold, const WeightVector& w, int k,
                  bool parallel = true);

// hinge_term + (lambda/2) * ||w||^2
double hinge_loss(const Document& doc, const GroundTruthSummary& gold, const WeightVector& w, int k,
                  double lambda, bool parallel = true);

// One projected subgradient step:
//   sub_u = [sqrt(g_u(A_greedy)) - sqrt(g_u(A_gold))] * 1[hinge active] + lambda * w_u
//   w_u <- max(0, w_u - lr * sub_u)
// With gate_hinge = false the bracketed term applies unconditionally.
WeightVector sgd_step(const Document& doc, const GroundTruthSummary& gold, const WeightVector& w,
                      const TrainConfig& cfg, int k);

// The bracketed subgradient of the hinge term alone for fixed selections
// (what a finite-difference check differentiates).
WeightVector hinge_subgradient_fixed(const std::vector<double>& g_greedy,
                                     const std::vector<double>& g_gold, bool active);

TrainReport train(const Corpus& train_corpus, const Corpus& val_corpus, const TrainConfig& cfg);

}  // namespace postdoc
