#include "postdoc/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "postdoc/errors.hpp"

namespace postdoc {

std::vector<Box> PosterLayout::all_boxes() const {
  std::vector<Box> boxes;
  boxes.push_back(title_box);
  boxes.insert(boxes.end(), text_boxes.begin(), text_boxes.end());
  boxes.insert(boxes.end(), image_boxes.begin(), image_boxes.end());
  boxes.insert(boxes.end(), caption_boxes.begin(), caption_boxes.end());
  return boxes;
}

std::vector<Rect> PosterLayout::all_rects() const {
  std::vector<Rect> rects;
  for (const Box& b : all_boxes()) rects.push_back(b.rect());
  return rects;
}

void validate_config(const LayoutConfig& cfg) {
  if (cfg.width <= 0 || cfg.height <= 0) throw validation_error("frame size must be positive");
  if (cfg.title_frac <= 0 || cfg.title_frac >= 1)
    throw validation_error("title_frac must be in (0,1)");
  if (cfg.b1_frac <= 0 || cfg.b1_frac >= 1) throw validation_error("b1_frac must be in (0,1)");
  if (cfg.alpha < 0 || cfg.beta < 0 || cfg.k1 < 0 || cfg.k2 < 0)
    throw validation_error("margins and gaps must be >= 0");
  if (cfg.min_font_size <= 0 || cfg.font_size < cfg.min_font_size)
    throw validation_error("need font_size >= min_font_size > 0");
  if (cfg.pad_text <= 0)
    throw validation_error("pad_text must be > 0 (keeps every box a positive area)");
  if (cfg.title_frac * cfg.height <= cfg.alpha / 2)
    throw validation_error("title region too small for the outer margin");
  if (cfg.b1_frac * cfg.width <= cfg.beta)
    throw validation_error("image column narrower than its margin");
  if ((1 - cfg.b1_frac) * cfg.width <= cfg.alpha)
    throw validation_error("text column narrower than its margin");
}

int chars_per_line(double box_width, const LayoutConfig& cfg) {
  const double usable = box_width - 2.0 * cfg.pad_text;
  const int cpl = (int)std::floor(usable / cfg.char_width());
  if (cpl < 1)
    throw validation_error("box of width " + std::to_string(box_width) +
                           " is too narrow for text at font size " + std::to_string(cfg.font_size));
  return cpl;
}

double estimate_text_height(const std::vector<std::string>& parts, double box_width,
                            const LayoutConfig& cfg) {
  const int cpl = chars_per_line(box_width, cfg);
  long lines = 0;
  for (const auto& part : parts) lines += (long)((part.size() + cpl - 1) / cpl);
  return (double)lines * cfg.line_height() + 2.0 * cfg.pad_text;
}

// Hard byte slicing at cpl boundaries, nudged so UTF-8 sequences stay whole.
static std::vector<std::string> hard_slice(const std::string& text, int cpl) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t len = std::min((size_t)cpl, text.size() - pos);
    while (len > 0 && pos + len < text.size() && ((unsigned char)text[pos + len] & 0xC0) == 0x80)
      --len;
    if (len == 0) {
      len = 1;
      while (pos + len < text.size() && ((unsigned char)text[pos + len] & 0xC0) == 0x80) ++len;
    }
    lines.push_back(text.substr(pos, len));
    pos += len;
  }
  return lines;
}

std::vector<std::string> wrap_text(const std::string& text, int cpl) {
  if (cpl < 1) throw validation_error("chars per line must be >= 1");
  std::vector<std::string> lines;
  std::string cur;
  size_t i = 0;
  while (i < text.size()) {
    size_t j = text.find(' ', i);
    if (j == std::string::npos) j = text.size();
    const std::string word = text.substr(i, j - i);
    i = j + 1;
    if (word.empty()) continue;
    if (cur.empty()) {
      if ((int)word.size() <= cpl) {
        cur = word;
      } else {
        auto pieces = hard_slice(word, cpl);
        for (size_t p = 0; p + 1 < pieces.size(); ++p) lines.push_back(pieces[p]);
        cur = pieces.back();
      }
    } else if (cur.size() + 1 + word.size() <= (size_t)cpl) {
      cur += ' ';
      cur += word;
    } else {
      lines.push_back(cur);
      cur.clear();
      if ((int)word.size() <= cpl) {
        cur = word;
      } else {
        auto pieces = hard_slice(word, cpl);
        for (size_t p = 0; p + 1 < pieces.size(); ++p) lines.push_back(pieces[p]);
        cur = pieces.back();
      }
    }
  }
  if (!cur.empty()) lines.push_back(cur);

  // The height estimator budgets ceil(len/cpl) lines; word boundaries can
  // exceed that, in which case plain slicing (which never does) takes over.
  const size_t max_lines = (text.size() + cpl - 1) / cpl;
  if (lines.size() > max_lines) return hard_slice(text, cpl);
  return lines;
}

std::vector<std::string> topic_parts(const Topic& topic) {
  std::vector<std::string> parts;
  parts.push_back(topic.title);
  for (const auto& b : topic.bullets) parts.push_back("- " + b);
  return parts;
}

PosterLayout generate_layout(const PosterContent& content, const std::vector<double>& aspect_ratios,
                             const LayoutConfig& cfg) {
  validate_config(cfg);
  const int n_t = (int)content.topics.size();
  const int n_i = (int)content.images.size();
  if (n_t < 1) throw validation_error("poster content needs at least one topic");
  if ((int)aspect_ratios.size() != n_i)
    throw validation_error("need one aspect ratio per image (" + std::to_string(n_i) + " images, " +
                           std::to_string(aspect_ratios.size()) + " ratios)");
  for (double a : aspect_ratios)
    if (!(a > 0)) throw validation_error("aspect ratios must be positive");

  const double w = cfg.width, h = cfg.height;
  const double title_region = cfg.title_frac * h;
  const double l = h - title_region - cfg.alpha / 2.0;
  const double b1 = cfg.b1_frac * w;
  const double b2 = w - b1;
  const double text_w = b2 - cfg.alpha;
  const double text_x1 = b1 + cfg.alpha / 2.0;
  const double text_x2 = w - cfg.alpha / 2.0;
  const double img_w_base =
      cfg.image_width_mode == ImageWidthMode::full_column || n_i == 0 ? b1 - cfg.beta
                                                                      : (b1 - cfg.beta) / n_i;

  PosterLayout layout;
  LayoutConfig eff = cfg;

  // Text overflow: shrink the font toward min_font_size until the column fits.
  std::vector<double> h_t(n_t);
  double sum_ht = 0.0, dh1 = 0.0;
  for (;;) {
    sum_ht = 0.0;
    for (int i = 0; i < n_t; ++i) {
      h_t[i] = estimate_text_height(topic_parts(content.topics[i]), text_w, eff);
      sum_ht += h_t[i];
    }
    dh1 = (l - sum_ht) / (n_t + 1);
    if (dh1 >= 0.0) break;
    if (eff.font_size <= cfg.min_font_size + 1e-12) {
      std::string ids;
      for (int i = 0; i < n_t; ++i) ids += (i ? ", text[" : "text[") + std::to_string(i) + "]";
      throw validation_error("content cannot fit at min font size; overflowing boxes: " + ids);
    }
    eff.font_size = std::max(eff.font_size * 0.9, cfg.min_font_size);
  }

  // Image overflow: scale the image column down until it fits at this dh1.
  std::vector<double> h_i(n_i), h_c(n_i);
  double dh2 = dh1, scale = 1.0, img_w = img_w_base;
  if (n_i > 0) {
    for (int iter = 0;; ++iter) {
      img_w = img_w_base * scale;
      bool fits = true;
      double sum_ic = 0.0;
      try {
        for (int i = 0; i < n_i; ++i) {
          h_i[i] = img_w / aspect_ratios[i];
          h_c[i] = estimate_text_height({content.images[i].caption}, img_w, eff);
          sum_ic += h_i[i] + h_c[i];
        }
        if (n_i >= 3) {
          dh2 = (l - sum_ic - cfg.k1 * n_i) / (n_i + 1);
          // The column walk spends k2 per pair while dh2 was derived with k1,
          // so also check the actual bottom residual.
          fits = dh2 >= 0.0 && l - n_i * dh2 - sum_ic - n_i * cfg.k2 >= -1e-9;
        } else {
          dh2 = dh1;
          fits = l - n_i * dh2 - sum_ic - n_i * cfg.k2 >= -1e-9;
        }
      } catch (const validation_error&) {
        fits = false;  // captions no longer measurable at this width
      }
      if (fits) break;
      if (iter >= 60 || img_w_base * scale * 0.9 <= 2.0 * cfg.pad_text) {
        std::string ids;
        for (int i = 0; i < n_i; ++i) ids += (i ? ", image[" : "image[") + std::to_string(i) + "]";
        throw validation_error("image column cannot fit; overflowing boxes: " + ids);
      }
      scale *= 0.9;
    }
  }

  layout.config = eff;
  layout.dh1 = dh1;
  layout.dh2 = dh2;
  layout.image_scale = scale;

  layout.title_box =
      Box{BoxKind::title, cfg.alpha, h - title_region, w - cfg.alpha, h - cfg.alpha / 2.0, -1};

  // A running cursor keeps every adjacent gap exactly dh >= 0, so boxes can
  // touch but never overlap no matter how the closed forms round.
  double cursor = l;
  for (int i = 0; i < n_t; ++i) {
    cursor -= dh1;
    const double top = cursor;
    cursor -= h_t[i];
    layout.text_boxes.push_back(Box{BoxKind::text, text_x1, cursor, text_x2, top, i});
  }

  double lowest_caption_bottom = std::numeric_limits<double>::infinity();
  if (n_i > 0) {
    const double img_x1 = (b1 - img_w) / 2.0;
    const double img_x2 = img_x1 + img_w;
    double cur = l;
    for (int i = 0; i < n_i; ++i) {
      cur -= dh2;
      const double img_top = cur;
      cur -= h_i[i];
      layout.image_boxes.push_back(Box{BoxKind::image, img_x1, cur, img_x2, img_top, i});
      cur -= cfg.k2;
      const double cap_top = cur;
      cur -= h_c[i];
      layout.caption_boxes.push_back(Box{BoxKind::caption, img_x1, cur, img_x2, cap_top, i});
    }
    lowest_caption_bottom = cur;
  }

  // With two images or fewer the bottom text boxes stretch across both columns.
  if (n_i <= 2) {
    for (auto& box : layout.text_boxes) {
      if (box.y2 <= lowest_caption_bottom) {
        box.x1 = cfg.alpha;
        box.x2 = w - cfg.alpha;
      }
    }
  }

  auto finalize = [&](Box& box) {
    if (box.y1 < 0.0 && box.y1 > -1e-6) box.y1 = 0.0;
    if (box.x1 < 0.0 || box.y1 < 0.0 || box.x2 > w + 1e-9 || box.y2 > h + 1e-9 ||
        box.x1 >= box.x2 || box.y1 >= box.y2)
      throw validation_error("generated box out of frame");
  };
  finalize(layout.title_box);
  for (auto& b : layout.text_boxes) finalize(b);
  for (auto& b : layout.image_boxes) finalize(b);
  for (auto& b : layout.caption_boxes) finalize(b);
  return layout;
}

PosterLayout to_render_coords(const PosterLayout& layout) {
  PosterLayout flipped = layout;
  const double h = layout.config.height;
  auto flip = [h](Box& b) {
    const double y1 = b.y1, y2 = b.y2;
    b.y1 = h - y2;
    b.y2 = h - y1;
  };
  flip(flipped.title_box);
  for (auto& b : flipped.text_boxes) flip(b);
  for (auto& b : flipped.image_boxes) flip(b);
  for (auto& b : flipped.caption_boxes) flip(b);
  return flipped;
}

NgoReport score_layout(const PosterLayout& layout) {
  return score_boxes(Frame{layout.config.width, layout.config.height}, layout.all_rects());
}

}  // namespace postdoc
