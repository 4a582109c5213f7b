#include "postdoc/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <unordered_set>

#include "json.hpp"
#include "postdoc/errors.hpp"
#include "postdoc/serialize.hpp"

namespace postdoc {

using nlohmann::json;

const ContentElement* Document::find(const std::string& id) const {
  for (const auto& el : elements)
    if (el.id == id) return &el;
  return nullptr;
}

int Document::index_of(const std::string& id) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].id == id) return (int)i;
  return -1;
}

void normalize_document(Document& doc, double epsilon) {
  if (doc.elements.empty())
    throw validation_error("document " + doc.doc_id + ": no elements");
  if (epsilon < 0.0)
    throw validation_error("epsilon must be >= 0");
  const size_t d = doc.elements.front().embedding.size();
  for (const auto& el : doc.elements)
    if (el.embedding.size() != d)
      throw validation_error("element " + el.id + ": embedding dimension mismatch (" +
                             std::to_string(el.embedding.size()) + " vs " + std::to_string(d) + ")");

  std::vector<double> shift(d, std::numeric_limits<double>::infinity());
  for (const auto& el : doc.elements)
    for (size_t u = 0; u < d; ++u) shift[u] = std::min(shift[u], el.embedding[u]);

  for (auto& el : doc.elements) {
    double norm = 0.0;
    for (size_t u = 0; u < d; ++u) {
      el.embedding[u] = el.embedding[u] - shift[u] + epsilon;
      norm += el.embedding[u];
    }
    if (norm <= 0.0)
      throw validation_error("element " + el.id + ": zero L1 norm after shift (epsilon too small)");
    for (size_t u = 0; u < d; ++u) el.embedding[u] /= norm;
  }
}

static Modality parse_modality(const std::string& s, int line_no) {
  if (s == "text") return Modality::text;
  if (s == "image") return Modality::image;
  throw validation_error("line " + std::to_string(line_no) + ": unknown modality \"" + s + "\"");
}

Document parse_document(const std::string& json_line, int line_no) {
  json j;
  try {
    j = json::parse(json_line);
  } catch (const json::exception& e) {
    throw validation_error("line " + std::to_string(line_no) + ": malformed record: " + e.what());
  }
  const std::string where = "line " + std::to_string(line_no);
  try {
    Document doc;
    doc.doc_id = j.at("doc_id").get<std::string>();
    doc.title = j.value("title", std::string{});
    if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty())
      throw validation_error(where + ": document " + doc.doc_id + " has no elements");
    for (const auto& je : j["elements"]) {
      ContentElement el;
      el.id = je.at("id").get<std::string>();
      el.ordinal = je.at("ordinal").get<int>();
      el.modality = parse_modality(je.at("modality").get<std::string>(), line_no);
      el.text = je.value("text", std::string{});
      el.image_path = je.value("image_path", std::string{});
      el.embedding = je.at("embedding").get<std::vector<double>>();
      doc.elements.push_back(std::move(el));
    }
    if (j.contains("ground_truth")) {
      GroundTruthSummary gt;
      gt.selected_ids = j["ground_truth"].at("selected_ids").get<std::vector<std::string>>();
      if (j["ground_truth"].contains("gold_text"))
        gt.gold_text = j["ground_truth"]["gold_text"].get<std::string>();
      doc.ground_truth = std::move(gt);
    }
    std::stable_sort(doc.elements.begin(), doc.elements.end(),
                     [](const ContentElement& a, const ContentElement& b) { return a.ordinal < b.ordinal; });
    validate_document(doc);
    return doc;
  } catch (const json::exception& e) {
    throw validation_error(where + ": malformed record: " + e.what());
  }
}

void validate_document(const Document& doc) {
  if (doc.elements.empty())
    throw validation_error("document " + doc.doc_id + ": no elements");
  const size_t d = doc.elements.front().embedding.size();
  if (d == 0)
    throw validation_error("document " + doc.doc_id + ": element " + doc.elements.front().id +
                           " has an empty embedding");
  std::unordered_set<std::string> ids;
  for (size_t i = 0; i < doc.elements.size(); ++i) {
    const auto& el = doc.elements[i];
    if (el.embedding.size() != d)
      throw validation_error("document " + doc.doc_id + ": element " + el.id +
                             ": embedding dimension mismatch (" + std::to_string(el.embedding.size()) +
                             " vs " + std::to_string(d) + ")");
    if (el.ordinal != (int)i)
      throw validation_error("document " + doc.doc_id + ": ordinals must be 0.." +
                             std::to_string(doc.elements.size() - 1) + " (element " + el.id +
                             " has ordinal " + std::to_string(el.ordinal) + ")");
    if (!ids.insert(el.id).second)
      throw validation_error("document " + doc.doc_id + ": duplicate element id " + el.id);
  }
  if (doc.ground_truth) {
    for (const auto& id : doc.ground_truth->selected_ids)
      if (!doc.find(id))
        throw validation_error("document " + doc.doc_id + ": ground-truth id " + id +
                               " not found among elements");
  }
}

void validate_normalized(const Document& doc, double tol) {
  for (const auto& el : doc.elements) {
    double sum = 0.0;
    for (double v : el.embedding) {
      if (v < 0.0)
        throw validation_error("document " + doc.doc_id + ": element " + el.id +
                               " has a negative embedding entry");
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol)
      throw validation_error("document " + doc.doc_id + ": element " + el.id +
                             " embedding L1 norm is " + std::to_string(sum) + ", expected 1");
  }
}

Corpus load_corpus(const std::string& path, EmbeddingMode mode, double epsilon) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  Corpus corpus;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    Document doc = parse_document(line, line_no);
    if (mode == EmbeddingMode::raw)
      normalize_document(doc, epsilon);
    else if (mode == EmbeddingMode::normalized)
      validate_normalized(doc);
    if (corpus.d == 0)
      corpus.d = doc.dim();
    else if (doc.dim() != corpus.d)
      throw validation_error("line " + std::to_string(line_no) + ": document " + doc.doc_id +
                             " has dimension " + std::to_string(doc.dim()) + ", corpus uses " +
                             std::to_string(corpus.d));
    corpus.docs.push_back(std::move(doc));
  }
  return corpus;
}

std::string document_to_json_line(const Document& doc) {
  json j;
  j["doc_id"] = doc.doc_id;
  j["title"] = doc.title;
  j["elements"] = json::array();
  for (const auto& el : doc.elements) {
    json je;
    je["id"] = el.id;
    je["ordinal"] = el.ordinal;
    je["modality"] = el.modality == Modality::text ? "text" : "image";
    je["text"] = el.text;
    if (!el.image_path.empty()) je["image_path"] = el.image_path;
    je["embedding"] = el.embedding;
    j["elements"].push_back(std::move(je));
  }
  if (doc.ground_truth) {
    j["ground_truth"]["selected_ids"] = doc.ground_truth->selected_ids;
    if (doc.ground_truth->gold_text)
      j["ground_truth"]["gold_text"] = *doc.ground_truth->gold_text;
  }
  return j.dump();
}

void save_corpus(const Corpus& corpus, const std::string& path) {
  std::string out;
  for (const auto& doc : corpus.docs) {
    out += document_to_json_line(doc);
    out += '\n';
  }
  atomic_write_text(path, out);
}

}  // namespace postdoc
