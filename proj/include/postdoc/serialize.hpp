#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "postdoc/color.hpp"
#include "postdoc/corpus.hpp"
#include "postdoc/dsf.hpp"
#include "postdoc/layout.hpp"
#include "postdoc/paraphrase.hpp"
#include "postdoc/selector.hpp"
#include "postdoc/trainer.hpp"

namespace postdoc {

std::string read_text_file(const std::string& path);

// Writes to a temp file in the target directory, then renames; a failed run
// never leaves a partial output behind.
void atomic_write_text(const std::string& path, const std::string& content);

// ISO-8601 UTC; honors SOURCE_DATE_EPOCH for reproducible outputs.
std::string current_timestamp();

struct WeightsFile {
  int d = 0;
  WeightVector w;
  std::string trained_on;
  nlohmann::json config;
  std::string created_at;
};

std::string weights_to_json(const WeightsFile& wf);
void save_weights(const WeightsFile& wf, const std::string& path);
WeightsFile load_weights(const std::string& path);  // rejects d mismatch / negative entries

// One summary as a single JSON line; a summaries file is one line per document.
struct SummaryRecord {
  std::string doc_id;
  std::string title;
  int k = 0;
  double f_value = 0.0;
  std::vector<std::string> selection_order;  // element ids in pick order
  std::vector<ContentElement> elements;      // selected elements, document order
};

SummaryRecord make_summary_record(const Document& doc, const SummarySelection& sel, int k);
std::string summary_to_json_line(const SummaryRecord& rec);
SummaryRecord parse_summary_record(const std::string& json_line, int line_no);
std::vector<SummaryRecord> load_summaries(const std::string& path);

std::vector<std::string> summary_text_sentences(const SummaryRecord& rec);
std::vector<PosterImage> summary_images(const SummaryRecord& rec);

std::string content_to_json(const PosterContent& content);
PosterContent load_content(const std::string& path);

std::string layout_to_json(const PosterLayout& layout);
PosterLayout parse_layout_json(const std::string& text);
PosterLayout load_layout(const std::string& path);

std::string roles_to_json(const ColorRoles& roles);
ColorRoles load_roles(const std::string& path);

// Flat TOML subset: `key = value` lines, # comments, quoted strings.
LayoutConfig load_layout_config(const std::string& path);

nlohmann::json train_config_to_json(const TrainConfig& cfg);
nlohmann::json train_report_to_json(const TrainReport& report);

}  // namespace postdoc
