#include "postdoc/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "postdoc/errors.hpp"

namespace postdoc {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      cur += (char)std::tolower(c);
    } else if (!cur.empty()) {
      tokens.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

static RougeScore from_counts(double overlap, double n_cand, double n_ref) {
  RougeScore s;
  if (n_cand <= 0 || n_ref <= 0) return s;
  s.precision = overlap / n_cand;
  s.recall = overlap / n_ref;
  if (s.precision + s.recall > 0)
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  return s;
}

static std::unordered_map<std::string, int> ngram_counts(const std::vector<std::string>& tokens, int n) {
  std::unordered_map<std::string, int> counts;
  if ((int)tokens.size() < n) return counts;
  for (size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int j = 1; j < n; ++j) {
      key += '\x1f';
      key += tokens[i + j];
    }
    ++counts[key];
  }
  return counts;
}

RougeScore rouge_n(const std::vector<std::string>& candidate, const std::vector<std::string>& reference,
                   int n) {
  if (n != 1 && n != 2) throw validation_error("rouge_n supports n in {1,2}");
  auto cand = ngram_counts(candidate, n);
  auto ref = ngram_counts(reference, n);
  long n_cand = 0, n_ref = 0, overlap = 0;
  for (const auto& [k, v] : cand) n_cand += v;
  for (const auto& [k, v] : ref) n_ref += v;
  for (const auto& [k, v] : cand) {
    auto it = ref.find(k);
    if (it != ref.end()) overlap += std::min(v, it->second);
  }
  return from_counts((double)overlap, (double)n_cand, (double)n_ref);
}

RougeScore rouge_l(const std::vector<std::string>& candidate, const std::vector<std::string>& reference) {
  const size_t m = candidate.size(), n = reference.size();
  if (m == 0 || n == 0) return {};
  std::vector<int> prev(n + 1, 0), cur(n + 1, 0);
  for (size_t i = 1; i <= m; ++i) {
    for (size_t j = 1; j <= n; ++j) {
      if (candidate[i - 1] == reference[j - 1])
        cur[j] = prev[j - 1] + 1;
      else
        cur[j] = std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return from_counts((double)prev[n], (double)m, (double)n);
}

RougeScore rouge_n(const std::string& candidate, const std::string& reference, int n) {
  return rouge_n(tokenize(candidate), tokenize(reference), n);
}

RougeScore rouge_l(const std::string& candidate, const std::string& reference) {
  return rouge_l(tokenize(candidate), tokenize(reference));
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    throw validation_error("cosine: dimension mismatch");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw validation_error("cosine: zero vector");
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

double coverage(const std::vector<std::vector<double>>& summary,
                const std::vector<std::vector<double>>& document) {
  if (summary.empty() || document.empty())
    throw validation_error("coverage: empty input set");
  double acc = 0.0;
  for (const auto& x : document)
    for (const auto& y : summary) acc += cosine(x, y);
  return acc / ((double)summary.size() * (double)document.size());
}

double diversity(const std::vector<std::vector<double>>& summary) {
  if (summary.empty()) throw validation_error("diversity: empty summary");
  double acc = 0.0;
  for (const auto& x : summary)
    for (const auto& y : summary) acc += cosine(x, y);
  const double k = (double)summary.size();
  return 1.0 - acc / (k * k);
}

double image_precision(const std::vector<std::string>& predicted_image_ids,
                       const std::vector<std::string>& gold_image_ids) {
  std::unordered_set<std::string> pred(predicted_image_ids.begin(), predicted_image_ids.end());
  std::unordered_set<std::string> gold(gold_image_ids.begin(), gold_image_ids.end());
  if (pred.empty()) return 0.0;
  long hit = 0;
  for (const auto& id : pred)
    if (gold.count(id)) ++hit;
  return (double)hit / (double)pred.size();
}

}  // namespace postdoc
