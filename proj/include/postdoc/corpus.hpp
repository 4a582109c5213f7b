#pragma once

#include <optional>
#include <string>
#include <vector>

namespace postdoc {

enum class Modality { text, image };

struct ContentElement {
  std::string id;
  int ordinal = 0;
  Modality modality = Modality::text;
  std::string text;        // sentence (text) or caption (image)
  std::string image_path;  // image elements only
  std::vector<double> embedding;
};

struct GroundTruthSummary {
  std::vector<std::string> selected_ids;
  std::optional<std::string> gold_text;
};

struct Document {
  std::string doc_id;
  std::string title;
  std::vector<ContentElement> elements;  // sorted by ordinal; ordinal == index
  std::optional<GroundTruthSummary> ground_truth;

  int dim() const { return elements.empty() ? 0 : (int)elements.front().embedding.size(); }
  const ContentElement* find(const std::string& id) const;
  int index_of(const std::string& id) const;  // -1 when absent
};

struct Corpus {
  std::vector<Document> docs;
  int d = 0;
};

// raw: normalize on load; normalized: validate only; as_is: use untouched
// (for metrics over raw embedding spaces).
enum class EmbeddingMode { raw, normalized, as_is };

// Shifts every embedding by the per-dimension minimum over the document's
// elements, adds epsilon, then divides each vector by its own L1 norm.
void normalize_document(Document& doc, double epsilon = 1e-6);

Document parse_document(const std::string& json_line, int line_no);
void validate_document(const Document& doc);
void validate_normalized(const Document& doc, double tol = 1e-9);

Corpus load_corpus(const std::string& path, EmbeddingMode mode = EmbeddingMode::normalized,
                   double epsilon = 1e-6);
void save_corpus(const Corpus& corpus, const std::string& path);

std::string document_to_json_line(const Document& doc);

}  // namespace postdoc
