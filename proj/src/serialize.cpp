#include "postdoc/serialize.hpp"

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "postdoc/errors.hpp"

namespace postdoc {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw io_error("failed reading " + path);
  return buf.str();
}

void atomic_write_text(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write " + tmp);
    out << content;
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw io_error("failed writing " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw io_error("cannot move " + tmp + " to " + path);
  }
}

std::string current_timestamp() {
  std::time_t t;
  if (const char* sde = std::getenv("SOURCE_DATE_EPOCH")) {
    t = (std::time_t)std::strtoll(sde, nullptr, 10);
  } else {
    t = std::time(nullptr);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string weights_to_json(const WeightsFile& wf) {
  json j;
  j["d"] = wf.d;
  j["w"] = wf.w;
  j["trained_on"] = wf.trained_on;
  j["config"] = wf.config;
  j["created_at"] = wf.created_at;
  return j.dump(2) + "\n";
}

void save_weights(const WeightsFile& wf, const std::string& path) {
  atomic_write_text(path, weights_to_json(wf));
}

WeightsFile load_weights(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw validation_error("weights file " + path + ": " + e.what());
  }
  try {
    WeightsFile wf;
    wf.d = j.at("d").get<int>();
    wf.w = j.at("w").get<WeightVector>();
    wf.trained_on = j.value("trained_on", std::string{});
    if (j.contains("config")) wf.config = j["config"];
    wf.created_at = j.value("created_at", std::string{});
    if ((int)wf.w.size() != wf.d)
      throw validation_error("weights file " + path + ": d = " + std::to_string(wf.d) +
                             " but w has " + std::to_string(wf.w.size()) + " entries");
    for (double v : wf.w)
      if (v < 0.0) throw validation_error("weights file " + path + ": negative weight entry");
    return wf;
  } catch (const json::exception& e) {
    throw validation_error("weights file " + path + ": " + e.what());
  }
}

SummaryRecord make_summary_record(const Document& doc, const SummarySelection& sel, int k) {
  SummaryRecord rec;
  rec.doc_id = doc.doc_id;
  rec.title = doc.title;
  rec.k = k;
  rec.f_value = sel.f_value;
  for (int idx : sel.selection_order) rec.selection_order.push_back(doc.elements[idx].id);
  for (int idx : sel.document_order) {
    ContentElement el = doc.elements[idx];
    el.embedding.clear();  // ids/text/image refs only; embeddings stay in the corpus
    rec.elements.push_back(std::move(el));
  }
  return rec;
}

std::string summary_to_json_line(const SummaryRecord& rec) {
  json j;
  j["doc_id"] = rec.doc_id;
  j["title"] = rec.title;
  j["k"] = rec.k;
  j["f_value"] = rec.f_value;
  j["selection_order"] = rec.selection_order;
  j["selected"] = json::array();
  for (const auto& el : rec.elements) {
    json je;
    je["id"] = el.id;
    je["ordinal"] = el.ordinal;
    je["modality"] = el.modality == Modality::text ? "text" : "image";
    je["text"] = el.text;
    if (!el.image_path.empty()) je["image_path"] = el.image_path;
    j["selected"].push_back(std::move(je));
  }
  return j.dump();
}

SummaryRecord parse_summary_record(const std::string& json_line, int line_no) {
  const std::string where = "summary line " + std::to_string(line_no);
  json j;
  try {
    j = json::parse(json_line);
  } catch (const json::exception& e) {
    throw validation_error(where + ": " + e.what());
  }
  try {
    SummaryRecord rec;
    rec.doc_id = j.at("doc_id").get<std::string>();
    rec.title = j.value("title", std::string{});
    rec.k = j.value("k", 0);
    rec.f_value = j.value("f_value", 0.0);
    if (j.contains("selection_order"))
      rec.selection_order = j["selection_order"].get<std::vector<std::string>>();
    for (const auto& je : j.at("selected")) {
      ContentElement el;
      el.id = je.at("id").get<std::string>();
      el.ordinal = je.value("ordinal", 0);
      const std::string mod = je.at("modality").get<std::string>();
      if (mod != "text" && mod != "image")
        throw validation_error(where + ": unknown modality \"" + mod + "\"");
      el.modality = mod == "text" ? Modality::text : Modality::image;
      el.text = je.value("text", std::string{});
      el.image_path = je.value("image_path", std::string{});
      rec.elements.push_back(std::move(el));
    }
    return rec;
  } catch (const json::exception& e) {
    throw validation_error(where + ": " + e.what());
  }
}

std::vector<SummaryRecord> load_summaries(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::vector<SummaryRecord> records;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    records.push_back(parse_summary_record(line, line_no));
  }
  return records;
}

std::vector<std::string> summary_text_sentences(const SummaryRecord& rec) {
  std::vector<std::string> sentences;
  for (const auto& el : rec.elements)
    if (el.modality == Modality::text && el.text.find_first_not_of(" \t\r\n") != std::string::npos)
      sentences.push_back(el.text);
  return sentences;
}

std::vector<PosterImage> summary_images(const SummaryRecord& rec) {
  std::vector<PosterImage> images;
  for (const auto& el : rec.elements)
    if (el.modality == Modality::image)
      images.push_back(PosterImage{el.id, el.image_path, el.text});
  return images;
}

std::string content_to_json(const PosterContent& content) {
  json j;
  j["doc_id"] = content.doc_id;
  j["title"] = content.title;
  j["topics"] = json::array();
  for (const auto& t : content.topics)
    j["topics"].push_back(json{{"title", t.title}, {"bullets", t.bullets}});
  j["images"] = json::array();
  for (const auto& img : content.images)
    j["images"].push_back(json{{"element_id", img.element_id},
                               {"image_path", img.image_path},
                               {"caption", img.caption}});
  return j.dump(2) + "\n";
}

PosterContent load_content(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw validation_error("content file " + path + ": " + e.what());
  }
  try {
    PosterContent content;
    content.doc_id = j.value("doc_id", std::string{});
    content.title = j.value("title", std::string{});
    for (const auto& jt : j.at("topics")) {
      Topic t;
      t.title = jt.at("title").get<std::string>();
      t.bullets = jt.at("bullets").get<std::vector<std::string>>();
      for (const auto& b : t.bullets)
        if (b.empty())
          throw validation_error("content file " + path + ": empty bullet in topic \"" + t.title +
                                 "\"");
      content.topics.push_back(std::move(t));
    }
    if (content.topics.empty())
      throw validation_error("content file " + path + ": needs at least one topic");
    if (j.contains("images")) {
      for (const auto& ji : j["images"]) {
        PosterImage img;
        img.element_id = ji.at("element_id").get<std::string>();
        img.image_path = ji.value("image_path", std::string{});
        img.caption = ji.value("caption", std::string{});
        content.images.push_back(std::move(img));
      }
    }
    return content;
  } catch (const json::exception& e) {
    throw validation_error("content file " + path + ": " + e.what());
  }
}

static const char* kind_name(BoxKind k) {
  switch (k) {
    case BoxKind::title: return "title";
    case BoxKind::text: return "text";
    case BoxKind::image: return "image";
    case BoxKind::caption: return "caption";
  }
  return "?";
}

static json box_to_json(const Box& b, double frame_h) {
  json j;
  j["kind"] = kind_name(b.kind);
  j["content_ref"] = b.content_ref;
  j["bottom_origin"] = json{{"x1", b.x1}, {"y1", b.y1}, {"x2", b.x2}, {"y2", b.y2}};
  j["top_origin"] =
      json{{"x1", b.x1}, {"y1", frame_h - b.y2}, {"x2", b.x2}, {"y2", frame_h - b.y1}};
  return j;
}

std::string layout_to_json(const PosterLayout& layout) {
  const LayoutConfig& cfg = layout.config;
  json j;
  j["frame"] = json{{"width", cfg.width}, {"height", cfg.height}};
  j["config"] = json{{"width", cfg.width},
                     {"height", cfg.height},
                     {"title_frac", cfg.title_frac},
                     {"b1_frac", cfg.b1_frac},
                     {"alpha", cfg.alpha},
                     {"beta", cfg.beta},
                     {"k1", cfg.k1},
                     {"k2", cfg.k2},
                     {"font_size", cfg.font_size},
                     {"pad_text", cfg.pad_text},
                     {"min_font_size", cfg.min_font_size},
                     {"image_width_mode", cfg.image_width_mode == ImageWidthMode::full_column
                                              ? "full_column"
                                              : "divided"}};
  j["dh1"] = layout.dh1;
  j["dh2"] = layout.dh2;
  j["image_scale"] = layout.image_scale;
  j["boxes"] = json::array();
  for (const Box& b : layout.all_boxes()) j["boxes"].push_back(box_to_json(b, cfg.height));
  return j.dump(2) + "\n";
}

static LayoutConfig config_from_json(const json& j) {
  LayoutConfig cfg;
  cfg.width = j.value("width", cfg.width);
  cfg.height = j.value("height", cfg.height);
  cfg.title_frac = j.value("title_frac", cfg.title_frac);
  cfg.b1_frac = j.value("b1_frac", cfg.b1_frac);
  cfg.alpha = j.value("alpha", cfg.alpha);
  cfg.beta = j.value("beta", cfg.beta);
  cfg.k1 = j.value("k1", cfg.k1);
  cfg.k2 = j.value("k2", cfg.k2);
  cfg.font_size = j.value("font_size", cfg.font_size);
  cfg.pad_text = j.value("pad_text", cfg.pad_text);
  cfg.min_font_size = j.value("min_font_size", cfg.min_font_size);
  const std::string mode = j.value("image_width_mode", std::string("full_column"));
  if (mode == "full_column")
    cfg.image_width_mode = ImageWidthMode::full_column;
  else if (mode == "divided")
    cfg.image_width_mode = ImageWidthMode::divided;
  else
    throw validation_error("unknown image_width_mode \"" + mode + "\"");
  return cfg;
}

PosterLayout parse_layout_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw validation_error(std::string("layout file: ") + e.what());
  }
  try {
    PosterLayout layout;
    layout.config = config_from_json(j.at("config"));
    layout.dh1 = j.value("dh1", 0.0);
    layout.dh2 = j.value("dh2", 0.0);
    layout.image_scale = j.value("image_scale", 1.0);
    bool have_title = false;
    for (const auto& jb : j.at("boxes")) {
      Box b;
      const std::string kind = jb.at("kind").get<std::string>();
      b.content_ref = jb.value("content_ref", -1);
      const json& r = jb.at("bottom_origin");
      b.x1 = r.at("x1").get<double>();
      b.y1 = r.at("y1").get<double>();
      b.x2 = r.at("x2").get<double>();
      b.y2 = r.at("y2").get<double>();
      if (b.x1 >= b.x2 || b.y1 >= b.y2)
        throw validation_error("layout file: degenerate box (" + kind + ")");
      if (kind == "title") {
        b.kind = BoxKind::title;
        layout.title_box = b;
        have_title = true;
      } else if (kind == "text") {
        b.kind = BoxKind::text;
        layout.text_boxes.push_back(b);
      } else if (kind == "image") {
        b.kind = BoxKind::image;
        layout.image_boxes.push_back(b);
      } else if (kind == "caption") {
        b.kind = BoxKind::caption;
        layout.caption_boxes.push_back(b);
      } else {
        throw validation_error("layout file: unknown box kind \"" + kind + "\"");
      }
    }
    if (!have_title) throw validation_error("layout file: missing title box");
    if (layout.caption_boxes.size() != layout.image_boxes.size())
      throw validation_error("layout file: image and caption boxes must pair up");
    return layout;
  } catch (const json::exception& e) {
    throw validation_error(std::string("layout file: ") + e.what());
  }
}

PosterLayout load_layout(const std::string& path) { return parse_layout_json(read_text_file(path)); }

std::string roles_to_json(const ColorRoles& roles) {
  json j;
  j["background"] = to_hex(roles.background);
  j["box_fill"] = to_hex(roles.box_fill);
  j["text_fill"] = to_hex(roles.text_fill);
  return j.dump(2) + "\n";
}

ColorRoles load_roles(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw validation_error("roles file " + path + ": " + e.what());
  }
  try {
    ColorRoles roles;
    roles.background = parse_hex(j.at("background").get<std::string>());
    roles.box_fill = parse_hex(j.at("box_fill").get<std::string>());
    roles.text_fill = parse_hex(j.at("text_fill").get<std::string>());
    const Color black{0, 0, 0}, white{255, 255, 255};
    if (!(roles.text_fill == black) && !(roles.text_fill == white))
      throw validation_error("roles file " + path + ": text_fill must be #000000 or #FFFFFF");
    return roles;
  } catch (const json::exception& e) {
    throw validation_error("roles file " + path + ": " + e.what());
  }
}

static std::string strip_toml(const std::string& raw) {
  std::string s;
  bool in_quotes = false;
  for (char c : raw) {
    if (c == '"') in_quotes = !in_quotes;
    if (c == '#' && !in_quotes) break;
    s += c;
  }
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

LayoutConfig load_layout_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  LayoutConfig cfg;
  std::string raw;
  int line_no = 0;
  auto parse_num = [&](const std::string& v) {
    size_t used = 0;
    double x = 0;
    try {
      x = std::stod(v, &used);
    } catch (const std::exception&) {
      throw validation_error(path + ":" + std::to_string(line_no) + ": expected a number, got \"" +
                             v + "\"");
    }
    if (used != v.size())
      throw validation_error(path + ":" + std::to_string(line_no) + ": expected a number, got \"" +
                             v + "\"");
    return x;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip_toml(raw);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw validation_error(path + ":" + std::to_string(line_no) + ": expected key = value");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    key.erase(key.find_last_not_of(" \t") + 1);
    val.erase(0, val.find_first_not_of(" \t"));
    if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
      val = val.substr(1, val.size() - 2);

    if (key == "width") cfg.width = parse_num(val);
    else if (key == "height") cfg.height = parse_num(val);
    else if (key == "title_frac") cfg.title_frac = parse_num(val);
    else if (key == "b1_frac") cfg.b1_frac = parse_num(val);
    else if (key == "alpha") cfg.alpha = parse_num(val);
    else if (key == "beta") cfg.beta = parse_num(val);
    else if (key == "k1") cfg.k1 = parse_num(val);
    else if (key == "k2") cfg.k2 = parse_num(val);
    else if (key == "font_size") cfg.font_size = parse_num(val);
    else if (key == "pad_text") cfg.pad_text = parse_num(val);
    else if (key == "min_font_size") cfg.min_font_size = parse_num(val);
    else if (key == "image_width_mode") {
      if (val == "full_column") cfg.image_width_mode = ImageWidthMode::full_column;
      else if (val == "divided") cfg.image_width_mode = ImageWidthMode::divided;
      else
        throw validation_error(path + ":" + std::to_string(line_no) +
                               ": image_width_mode must be full_column or divided");
    } else {
      throw validation_error(path + ":" + std::to_string(line_no) + ": unknown key \"" + key +
                             "\"");
    }
  }
  validate_config(cfg);
  return cfg;
}

nlohmann::json train_config_to_json(const TrainConfig& cfg) {
  return json{{"lambda", cfg.lambda},
              {"lr", cfg.lr},
              {"max_epochs", cfg.max_epochs},
              {"patience", cfg.patience},
              {"tol", cfg.tol},
              {"k", cfg.k},
              {"token_budget", cfg.token_budget},
              {"seed", cfg.seed},
              {"gate_hinge", cfg.gate_hinge}};
}

nlohmann::json train_report_to_json(const TrainReport& report) {
  json epochs = json::array();
  for (const auto& e : report.epochs)
    epochs.push_back(json{{"train_loss", e.train_loss},
                          {"val_loss", e.val_loss},
                          {"hinge_active_fraction", e.hinge_active_fraction}});
  return json{{"epochs", epochs},
              {"n_epochs", report.epochs.size()},
              {"best_epoch", report.best_epoch},
              {"stop_reason", report.stop_reason}};
}

}  // namespace postdoc
