#pragma once

#include <string>
#include <vector>

namespace postdoc {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Lowercases and splits on runs of non-alphanumeric bytes.
std::vector<std::string> tokenize(const std::string& text);

RougeScore rouge_n(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
                   int n);
RougeScore rouge_l(const std::vector<std::string>& candidate, const std::vector<std::string>& reference);

RougeScore rouge_n(const std::string& candidate, const std::string& reference, int n);
RougeScore rouge_l(const std::string& candidate, const std::string& reference);

double cosine(const std::vector<double>& a, const std::vector<double>& b);

// Mean pairwise cosine between every document element and every summary element.
double coverage(const std::vector<std::vector<double>>& summary,
                const std::vector<std::vector<double>>& document);

// 1 - mean pairwise cosine within the summary (both orderings, including x = y).
double diversity(const std::vector<std::vector<double>>& summary);

// |predicted ∩ gold| / |predicted| over unique ids; 0 when predicted is empty.
double image_precision(const std::vector<std::string>& predicted_image_ids,
                       const std::vector<std::string>& gold_image_ids);

}  // namespace postdoc
