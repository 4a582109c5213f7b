#pragma once

#include <string>
#include <vector>

#include "postdoc/ngo.hpp"
#include "postdoc/paraphrase.hpp"

namespace postdoc {

enum class BoxKind { title, text, image, caption };

struct Box {
  BoxKind kind = BoxKind::text;
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;  // bottom-left origin, y up
  int content_ref = -1;                           // topic index or image index

  Rect rect() const { return Rect{x1, y1, x2, y2}; }
};

enum class ImageWidthMode { full_column, divided };

struct LayoutConfig {
  double width = 1200.0;
  double height = 1600.0;
  double title_frac = 0.10;  // fraction of H reserved for the title box
  double b1_frac = 0.40;     // left (image) column fraction of W
  double alpha = 24.0;       // text-column margin
  double beta = 24.0;        // image-column margin
  double k1 = 10.0;          // image-spacing shrink constant
  double k2 = 8.0;           // image-to-caption gap
  double font_size = 18.0;
  double pad_text = 12.0;
  double min_font_size = 8.0;
  ImageWidthMode image_width_mode = ImageWidthMode::full_column;

  double line_height() const { return 1.3 * font_size; }
  double char_width() const { return 0.55 * font_size; }
};

struct PosterLayout {
  LayoutConfig config;  // effective values (font may have been shrunk)
  Box title_box;
  std::vector<Box> text_boxes;     // topic order, top to bottom
  std::vector<Box> image_boxes;    // selection order, top to bottom
  std::vector<Box> caption_boxes;  // paired with image_boxes
  double dh1 = 0.0;
  double dh2 = 0.0;
  double image_scale = 1.0;  // applied when the image column overflowed

  std::vector<Box> all_boxes() const;
  std::vector<Rect> all_rects() const;
};

// chars_per_line = floor((box_width - 2*pad) / char_width);
// height = sum over parts of ceil(len/chars_per_line) lines, times line_height,
// plus 2*pad.
double estimate_text_height(const std::vector<std::string>& parts, double box_width,
                            const LayoutConfig& cfg);

int chars_per_line(double box_width, const LayoutConfig& cfg);

// The wrapped lines of one part; never more than ceil(len/chars_per_line)
// lines (falls back to hard slicing when word boundaries would exceed that).
std::vector<std::string> wrap_text(const std::string& text, int cpl);

// Text block of a topic as measured and rendered: title, then "- "-prefixed bullets.
std::vector<std::string> topic_parts(const Topic& topic);

PosterLayout generate_layout(const PosterContent& content, const std::vector<double>& aspect_ratios,
                             const LayoutConfig& cfg = {});

// Flips every box to top-left-origin y-down coordinates; an involution.
PosterLayout to_render_coords(const PosterLayout& layout);

NgoReport score_layout(const PosterLayout& layout);

void validate_config(const LayoutConfig& cfg);

}  // namespace postdoc
