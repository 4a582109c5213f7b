// Multimodal extractive summarization and poster synthesis pipeline.
//
// Exit codes: 0 success, 2 validation error, 3 I/O error, 4 remote-service
// error. The LLM credential is read from POSTDOC_LLM_KEY only.
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "postdoc/color.hpp"
#include "postdoc/corpus.hpp"
#include "postdoc/errors.hpp"
#include "postdoc/layout.hpp"
#include "postdoc/metrics.hpp"
#include "postdoc/paraphrase.hpp"
#include "postdoc/render.hpp"
#include "postdoc/selector.hpp"
#include "postdoc/serialize.hpp"
#include "postdoc/trainer.hpp"

namespace pd = postdoc;
using nlohmann::json;

namespace {

pd::EmbeddingMode corpus_mode(bool raw) {
  return raw ? pd::EmbeddingMode::raw : pd::EmbeddingMode::normalized;
}

pd::WeightVector load_or_default_weights(const std::string& path, int d) {
  if (path.empty()) return pd::WeightVector(d, 1.0 / d);
  pd::WeightsFile wf = pd::load_weights(path);
  if (wf.d != d)
    throw pd::validation_error("weights have dimension " + std::to_string(wf.d) +
                               " but the corpus uses " + std::to_string(d));
  return wf.w;
}

pd::SummaryRecord summarize_one(const pd::Document& doc, const pd::WeightVector& w, int k_flag,
                                int token_budget) {
  const int k = k_flag > 0 ? k_flag : pd::choose_k(doc, w, token_budget);
  pd::SummarySelection sel = pd::greedy_select(doc, w, k);
  return pd::make_summary_record(doc, sel, k);
}

std::string summary_key_from_env() {
  const char* key = std::getenv("POSTDOC_LLM_KEY");
  return key ? key : "";
}

pd::PosterContent content_from_summary(const pd::SummaryRecord& rec, bool remote,
                                       const pd::ClientConfig& client) {
  const std::vector<std::string> sentences = pd::summary_text_sentences(rec);
  if (sentences.empty())
    throw pd::validation_error("summary " + rec.doc_id + " has no text sentences to paraphrase");
  pd::PosterContent content;
  if (remote) {
    pd::ParaphraseResult result = pd::paraphrase_remote(sentences, client);
    if (result.fallback_used) std::cerr << "warning: " << result.warning << "\n";
    content = std::move(result.content);
  } else {
    content = pd::paraphrase_offline(sentences);
  }
  content.doc_id = rec.doc_id;
  content.title = rec.title.empty() ? rec.doc_id : rec.title;
  content.images = pd::summary_images(rec);
  return content;
}

// Aspect ratio (w/h) from a PNG header when available, else 4:3.
double sniff_aspect_ratio(const std::string& path) {
  const double fallback = 4.0 / 3.0;
  if (path.empty()) return fallback;
  std::ifstream in(path, std::ios::binary);
  if (!in) return fallback;
  unsigned char buf[24];
  if (!in.read((char*)buf, sizeof(buf))) return fallback;
  static const unsigned char magic[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};
  for (int i = 0; i < 8; ++i)
    if (buf[i] != magic[i]) return fallback;
  if (std::string((char*)buf + 12, 4) != "IHDR") return fallback;
  auto be32 = [&](int off) {
    return ((uint32_t)buf[off] << 24) | ((uint32_t)buf[off + 1] << 16) |
           ((uint32_t)buf[off + 2] << 8) | (uint32_t)buf[off + 3];
  };
  const uint32_t w = be32(16), h = be32(20);
  if (w == 0 || h == 0) return fallback;
  return (double)w / (double)h;
}

std::vector<double> aspect_ratios_for(const pd::PosterContent& content) {
  std::vector<double> aspects;
  for (const auto& img : content.images) aspects.push_back(sniff_aspect_ratio(img.image_path));
  return aspects;
}

struct DocMetrics {
  std::string doc_id;
  pd::RougeScore r1, r2, rl;
  std::optional<double> coverage, diversity;
  double image_precision = 0.0;
};

json rouge_json(const pd::RougeScore& s) {
  return json{{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

void mean_std(const std::vector<double>& xs, double& mean, double& sd) {
  mean = 0.0;
  for (double x : xs) mean += x;
  mean /= (double)xs.size();
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  sd = std::sqrt(var / (double)xs.size());
}

json aggregate(const std::vector<double>& xs) {
  double mean = 0, sd = 0;
  mean_std(xs, mean, sd);
  return json{{"mean", mean}, {"std", sd}};
}

std::string join_texts(const std::vector<pd::ContentElement>& elements) {
  std::string out;
  for (const auto& el : elements) {
    if (el.text.empty()) continue;
    if (!out.empty()) out += ' ';
    out += el.text;
  }
  return out;
}

int run_ingest(const std::string& input, const std::string& out, bool pre_normalized,
               double epsilon) {
  pd::Corpus corpus = pd::load_corpus(
      input, pre_normalized ? pd::EmbeddingMode::normalized : pd::EmbeddingMode::raw, epsilon);
  long elements = 0;
  for (const auto& doc : corpus.docs) elements += (long)doc.elements.size();
  pd::save_corpus(corpus, out);
  json stats{{"documents", corpus.docs.size()}, {"elements", elements}, {"d", corpus.d}};
  std::cout << stats.dump() << "\n";
  return 0;
}

int run_train(const std::string& corpus_path, const std::string& val_path, const std::string& out,
              const std::string& report_path, const pd::TrainConfig& cfg) {
  pd::Corpus train_corpus = pd::load_corpus(corpus_path);
  pd::Corpus val_corpus = pd::load_corpus(val_path);
  pd::TrainReport report = pd::train(train_corpus, val_corpus, cfg);

  pd::WeightsFile wf;
  wf.d = train_corpus.d;
  wf.w = report.weights;
  wf.trained_on = corpus_path;
  wf.config = pd::train_config_to_json(cfg);
  wf.created_at = pd::current_timestamp();
  pd::save_weights(wf, out);

  const json jreport = pd::train_report_to_json(report);
  if (!report_path.empty()) pd::atomic_write_text(report_path, jreport.dump(2) + "\n");
  std::cout << jreport.dump() << "\n";
  return 0;
}

int run_summarize(const std::string& weights_path, const std::string& doc_path,
                  const std::string& out, int k, int token_budget, int jobs, bool raw) {
  pd::Corpus corpus = pd::load_corpus(doc_path, corpus_mode(raw));
  if (corpus.docs.empty()) throw pd::validation_error(doc_path + " contains no documents");
  const pd::WeightVector w = load_or_default_weights(weights_path, corpus.d);

  std::vector<std::string> lines(corpus.docs.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (size_t i = 0; i < corpus.docs.size(); ++i) {
    try {
      lines[i] = pd::summary_to_json_line(summarize_one(corpus.docs[i], w, k, token_budget));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  std::string body;
  for (const auto& line : lines) {
    body += line;
    body += '\n';
  }
  pd::atomic_write_text(out, body);
  std::cout << "{\"documents\": " << corpus.docs.size() << "}\n";
  return 0;
}

int run_evaluate(const std::string& pred_path, const std::string& gold_path,
                 const std::string& source_path, const std::string& out, int jobs,
                 bool raw_embeddings) {
  const std::vector<pd::SummaryRecord> preds = pd::load_summaries(pred_path);
  if (preds.empty()) throw pd::validation_error(pred_path + " contains no summaries");
  pd::Corpus gold = pd::load_corpus(gold_path, pd::EmbeddingMode::as_is);
  std::optional<pd::Corpus> source;
  if (!source_path.empty())
    source = pd::load_corpus(source_path, raw_embeddings ? pd::EmbeddingMode::as_is
                                                         : pd::EmbeddingMode::normalized);

  auto find_doc = [](const pd::Corpus& corpus, const std::string& doc_id) -> const pd::Document& {
    for (const auto& doc : corpus.docs)
      if (doc.doc_id == doc_id) return doc;
    throw pd::validation_error("document " + doc_id + " not found in corpus");
  };

  std::vector<DocMetrics> metrics(preds.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, jobs))
  for (size_t i = 0; i < preds.size(); ++i) {
    try {
      const pd::SummaryRecord& rec = preds[i];
      const pd::Document& gdoc = find_doc(gold, rec.doc_id);
      if (!gdoc.ground_truth)
        throw pd::validation_error("document " + gdoc.doc_id + " has no ground truth");
      const pd::GroundTruthSummary& gt = *gdoc.ground_truth;

      DocMetrics m;
      m.doc_id = rec.doc_id;
      const std::string cand_text = join_texts(rec.elements);
      std::string ref_text;
      if (gt.gold_text) {
        ref_text = *gt.gold_text;
      } else {
        std::vector<pd::ContentElement> gold_elements;
        for (const auto& el : gdoc.elements)
          for (const auto& id : gt.selected_ids)
            if (el.id == id) gold_elements.push_back(el);
        ref_text = join_texts(gold_elements);
      }
      m.r1 = pd::rouge_n(cand_text, ref_text, 1);
      m.r2 = pd::rouge_n(cand_text, ref_text, 2);
      m.rl = pd::rouge_l(cand_text, ref_text);

      std::vector<std::string> pred_images, gold_images;
      for (const auto& el : rec.elements)
        if (el.modality == pd::Modality::image) pred_images.push_back(el.id);
      for (const auto& id : gt.selected_ids) {
        const pd::ContentElement* el = gdoc.find(id);
        if (el && el->modality == pd::Modality::image) gold_images.push_back(id);
      }
      m.image_precision = pd::image_precision(pred_images, gold_images);

      if (source) {
        const pd::Document& sdoc = find_doc(*source, rec.doc_id);
        std::vector<std::vector<double>> summary_emb, doc_emb;
        for (const auto& el : rec.elements) {
          const pd::ContentElement* sel = sdoc.find(el.id);
          if (!sel)
            throw pd::validation_error("document " + rec.doc_id + ": element " + el.id +
                                       " not found in source corpus");
          summary_emb.push_back(sel->embedding);
        }
        for (const auto& el : sdoc.elements) doc_emb.push_back(el.embedding);
        m.coverage = pd::coverage(summary_emb, doc_emb);
        m.diversity = pd::diversity(summary_emb);
      }
      metrics[i] = std::move(m);
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  json per_doc = json::array();
  std::vector<double> f1_1, f1_2, f1_l, covs, divs, prec;
  for (const auto& m : metrics) {
    json jm{{"doc_id", m.doc_id},
            {"rouge1", rouge_json(m.r1)},
            {"rouge2", rouge_json(m.r2)},
            {"rougeL", rouge_json(m.rl)},
            {"image_precision", m.image_precision}};
    if (m.coverage) jm["coverage"] = *m.coverage;
    if (m.diversity) jm["diversity"] = *m.diversity;
    per_doc.push_back(std::move(jm));
    f1_1.push_back(m.r1.f1);
    f1_2.push_back(m.r2.f1);
    f1_l.push_back(m.rl.f1);
    prec.push_back(m.image_precision);
    if (m.coverage) covs.push_back(*m.coverage);
    if (m.diversity) divs.push_back(*m.diversity);
  }
  json agg{{"rouge1_f1", aggregate(f1_1)},
           {"rouge2_f1", aggregate(f1_2)},
           {"rougeL_f1", aggregate(f1_l)},
           {"image_precision", aggregate(prec)}};
  if (!covs.empty()) agg["coverage"] = aggregate(covs);
  if (!divs.empty()) agg["diversity"] = aggregate(divs);
  json report{{"n_documents", metrics.size()}, {"per_document", per_doc}, {"aggregate", agg}};

  const std::string text = report.dump(2) + "\n";
  if (!out.empty())
    pd::atomic_write_text(out, text);
  else
    std::cout << text;
  return 0;
}

int run_paraphrase(const std::string& summary_path, const std::string& out, bool remote,
                   pd::ClientConfig client) {
  const std::vector<pd::SummaryRecord> records = pd::load_summaries(summary_path);
  if (records.empty()) throw pd::validation_error(summary_path + " contains no summaries");
  if (remote) {
    client.api_key = summary_key_from_env();
    if (client.api_key.empty())
      throw pd::validation_error("--remote requires the POSTDOC_LLM_KEY environment variable");
  }
  const pd::PosterContent content = content_from_summary(records.front(), remote, client);
  pd::atomic_write_text(out, pd::content_to_json(content));
  return 0;
}

int run_layout(const std::string& content_path, const std::string& config_path,
               const std::string& out) {
  const pd::PosterContent content = pd::load_content(content_path);
  pd::LayoutConfig cfg;
  if (!config_path.empty()) cfg = pd::load_layout_config(config_path);
  const pd::PosterLayout layout = pd::generate_layout(content, aspect_ratios_for(content), cfg);
  pd::atomic_write_text(out, pd::layout_to_json(layout));
  return 0;
}

int run_score_layout(const std::string& layout_path, const std::string& out) {
  const pd::PosterLayout layout = pd::load_layout(layout_path);
  const pd::NgoReport r = pd::score_layout(layout);
  json j{{"equilibrium", r.equilibrium},
         {"padding", r.padding},
         {"density", r.density},
         {"overlap", r.overlap},
         {"overall", r.overall}};
  const std::string text = j.dump(2) + "\n";
  if (!out.empty())
    pd::atomic_write_text(out, text);
  else
    std::cout << text;
  return 0;
}

int run_palette(const std::string& colors, const std::string& out) {
  const std::vector<pd::Color> palette =
      colors.empty() ? pd::default_palette() : pd::parse_palette(colors);
  const pd::ColorRoles roles = pd::assign_roles(palette);
  const std::string text = pd::roles_to_json(roles);
  if (!out.empty())
    pd::atomic_write_text(out, text);
  else
    std::cout << text;
  return 0;
}

int run_render(const std::string& layout_path, const std::string& content_path,
               const std::string& roles_path, const std::string& out, const std::string& font) {
  const pd::PosterLayout layout = pd::load_layout(layout_path);
  const pd::PosterContent content = pd::load_content(content_path);
  const pd::ColorRoles roles = pd::load_roles(roles_path);
  pd::atomic_write_text(out, pd::render_svg(layout, roles, content, font));
  return 0;
}

int run_poster(const std::string& doc_path, const std::string& weights_path,
               const std::string& out, int k, int token_budget, bool remote, bool raw,
               const std::string& config_path, const std::string& colors, const std::string& font,
               pd::ClientConfig client) {
  pd::Corpus corpus = pd::load_corpus(doc_path, corpus_mode(raw));
  if (corpus.docs.empty()) throw pd::validation_error(doc_path + " contains no documents");
  const pd::Document& doc = corpus.docs.front();
  const pd::WeightVector w = load_or_default_weights(weights_path, corpus.d);

  if (remote) {
    client.api_key = summary_key_from_env();
    if (client.api_key.empty())
      throw pd::validation_error("--remote requires the POSTDOC_LLM_KEY environment variable");
  }

  const pd::SummaryRecord rec = summarize_one(doc, w, k, token_budget);
  const pd::PosterContent content = content_from_summary(rec, remote, client);

  pd::LayoutConfig cfg;
  if (!config_path.empty()) cfg = pd::load_layout_config(config_path);
  const pd::PosterLayout layout = pd::generate_layout(content, aspect_ratios_for(content), cfg);

  const std::vector<pd::Color> palette =
      colors.empty() ? pd::default_palette() : pd::parse_palette(colors);
  const pd::ColorRoles roles = pd::assign_roles(palette);

  pd::atomic_write_text(out, pd::render_svg(layout, roles, content, font));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trainable multimodal extractive summarization and poster synthesis"};
  app.require_subcommand(1);

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Validate and normalize a raw corpus");
  std::string in_input, in_out;
  bool in_prenorm = false;
  double in_epsilon = 1e-6;
  ingest->add_option("--input", in_input, "raw corpus (JSONL)")->required();
  ingest->add_option("--out", in_out, "validated corpus output")->required();
  ingest->add_flag("--pre-normalized", in_prenorm, "input embeddings are already on the simplex");
  ingest->add_option("--epsilon", in_epsilon, "positive shift added before L1 normalization");

  // train
  auto* train = app.add_subcommand("train", "Learn weights from gold summaries");
  std::string tr_corpus, tr_val, tr_out, tr_report;
  pd::TrainConfig tr_cfg;
  bool tr_no_gate = false, tr_serial = false;
  train->add_option("--corpus", tr_corpus, "training corpus (JSONL)")->required();
  train->add_option("--val", tr_val, "validation corpus (JSONL)")->required();
  train->add_option("--out", tr_out, "weights output")->required();
  train->add_option("--report", tr_report, "also write the training report here");
  train->add_option("--lambda", tr_cfg.lambda, "L2 regularization weight");
  train->add_option("--lr", tr_cfg.lr, "learning rate");
  train->add_option("--k", tr_cfg.k, "cardinality budget (default: token-budgeted per document)");
  train->add_option("--seed", tr_cfg.seed, "epoch shuffling seed");
  train->add_option("--max-epochs", tr_cfg.max_epochs, "epoch cap");
  train->add_option("--patience", tr_cfg.patience, "early-stop patience (epochs)");
  train->add_option("--tol", tr_cfg.tol, "minimum validation-loss improvement");
  train->add_option("--token-budget", tr_cfg.token_budget, "token budget for the default K");
  train->add_flag("--no-hinge-gate", tr_no_gate,
                  "apply the hinge subgradient unconditionally (written-form fidelity)");
  train->add_flag("--serial", tr_serial, "disable parallel marginal-gain scans");

  // summarize
  auto* summarize = app.add_subcommand("summarize", "Greedy extractive summaries");
  std::string su_weights, su_doc, su_out;
  int su_k = 0, su_jobs = 1, su_budget = 3000;
  bool su_raw = false;
  summarize->add_option("--weights", su_weights, "weights file (default: uniform)");
  summarize->add_option("--doc", su_doc, "corpus file (JSONL)")->required();
  summarize->add_option("--out", su_out, "summaries output (JSONL)")->required();
  summarize->add_option("--k", su_k, "summary cardinality (default: token-budgeted)");
  summarize->add_option("--token-budget", su_budget, "token budget for the default K");
  summarize->add_option("--jobs", su_jobs, "documents processed in parallel");
  summarize->add_flag("--raw", su_raw, "input embeddings are raw; normalize on load");

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Score summaries against gold");
  std::string ev_pred, ev_gold, ev_source, ev_out;
  int ev_jobs = 1;
  bool ev_raw = false;
  evaluate->add_option("--pred", ev_pred, "predicted summaries (JSONL)")->required();
  evaluate->add_option("--gold", ev_gold, "gold corpus (JSONL with ground_truth)")->required();
  evaluate->add_option("--source", ev_source, "source corpus for coverage/diversity");
  evaluate->add_option("--out", ev_out, "write the report here instead of stdout");
  evaluate->add_option("--jobs", ev_jobs, "documents processed in parallel");
  evaluate->add_flag("--raw-embeddings", ev_raw, "use source embeddings as-is for cosines");

  // paraphrase
  auto* paraphrase = app.add_subcommand("paraphrase", "Turn a summary into poster content");
  std::string pa_summary, pa_out;
  bool pa_offline = false, pa_remote = false;
  pd::ClientConfig pa_client;
  paraphrase->add_option("--summary", pa_summary, "summary file (JSONL)")->required();
  paraphrase->add_option("--out", pa_out, "content output")->required();
  paraphrase->add_flag("--offline", pa_offline, "deterministic offline grouping (default)");
  paraphrase->add_flag("--remote", pa_remote, "call the chat-completion service");
  paraphrase->add_option("--endpoint", pa_client.endpoint, "chat-completion endpoint");
  paraphrase->add_option("--model", pa_client.model, "model name");
  paraphrase->add_option("--timeout", pa_client.timeout_s, "request timeout (seconds)");

  // layout
  auto* layout = app.add_subcommand("layout", "Generate a poster layout from content");
  std::string la_content, la_config, la_out;
  layout->add_option("--content", la_content, "content file")->required();
  layout->add_option("--config", la_config, "layout config (TOML)");
  layout->add_option("--out", la_out, "layout output")->required();

  // score-layout
  auto* score = app.add_subcommand("score-layout", "Aesthetic scores for a layout");
  std::string sc_layout, sc_out;
  score->add_option("--layout", sc_layout, "layout file")->required();
  score->add_option("--out", sc_out, "write the report here instead of stdout");

  // palette
  auto* palette = app.add_subcommand("palette", "Derive color roles from a palette");
  std::string pl_colors, pl_out;
  palette->add_option("--colors", pl_colors, "comma-separated hex colors (default palette if omitted)");
  palette->add_option("--out", pl_out, "write the roles here instead of stdout");

  // render
  auto* render = app.add_subcommand("render", "Render a poster to SVG");
  std::string re_layout, re_content, re_roles, re_out, re_font = "Helvetica";
  render->add_option("--layout", re_layout, "layout file")->required();
  render->add_option("--content", re_content, "content file")->required();
  render->add_option("--roles", re_roles, "color roles file")->required();
  render->add_option("--out", re_out, "SVG output")->required();
  render->add_option("--font", re_font, "font family name");

  // poster
  auto* poster = app.add_subcommand("poster", "End-to-end poster from a document");
  std::string po_doc, po_weights, po_out, po_config, po_colors, po_font = "Helvetica";
  int po_k = 0, po_budget = 3000;
  bool po_offline = false, po_remote = false, po_raw = false;
  pd::ClientConfig po_client;
  poster->add_option("--doc", po_doc, "corpus file; the first document is used")->required();
  poster->add_option("--weights", po_weights, "weights file (default: uniform)");
  poster->add_option("--out", po_out, "SVG output")->required();
  poster->add_option("--k", po_k, "summary cardinality (default: token-budgeted)");
  poster->add_option("--token-budget", po_budget, "token budget for the default K");
  poster->add_flag("--offline", po_offline, "offline paraphrase (default)");
  poster->add_flag("--remote", po_remote, "remote paraphrase");
  poster->add_option("--config", po_config, "layout config (TOML)");
  poster->add_option("--colors", po_colors, "comma-separated hex palette");
  poster->add_option("--font", po_font, "font family name");
  poster->add_flag("--raw", po_raw, "input embeddings are raw; normalize on load");
  poster->add_option("--endpoint", po_client.endpoint, "chat-completion endpoint");
  poster->add_option("--model", po_client.model, "model name");
  poster->add_option("--timeout", po_client.timeout_s, "request timeout (seconds)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*ingest) return run_ingest(in_input, in_out, in_prenorm, in_epsilon);
    if (*train) {
      tr_cfg.gate_hinge = !tr_no_gate;
      tr_cfg.parallel = !tr_serial;
      return run_train(tr_corpus, tr_val, tr_out, tr_report, tr_cfg);
    }
    if (*summarize) return run_summarize(su_weights, su_doc, su_out, su_k, su_budget, su_jobs, su_raw);
    if (*evaluate) return run_evaluate(ev_pred, ev_gold, ev_source, ev_out, ev_jobs, ev_raw);
    if (*paraphrase) {
      if (pa_offline && pa_remote)
        throw pd::validation_error("--offline and --remote are mutually exclusive");
      return run_paraphrase(pa_summary, pa_out, pa_remote, pa_client);
    }
    if (*layout) return run_layout(la_content, la_config, la_out);
    if (*score) return run_score_layout(sc_layout, sc_out);
    if (*palette) return run_palette(pl_colors, pl_out);
    if (*render) return run_render(re_layout, re_content, re_roles, re_out, re_font);
    if (*poster) {
      if (po_offline && po_remote)
        throw pd::validation_error("--offline and --remote are mutually exclusive");
      return run_poster(po_doc, po_weights, po_out, po_k, po_budget, po_remote, po_raw, po_config,
                        po_colors, po_font, po_client);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pd::exit_code_for(e);
  }
  return 0;
}
