#include "postdoc/render.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>

#include "postdoc/errors.hpp"

namespace postdoc {

static std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

// Baseline of line i (0-based) inside a box whose text area starts at `top`.
static double baseline(double top, double pad, double line_height, int i) {
  return top + pad + (i + 1) * line_height - 0.3 * line_height;
}

static void emit_lines(std::string& svg, const std::vector<std::string>& parts, const Box& box,
                       const LayoutConfig& cfg, const Color& fill, bool first_part_bold) {
  const int cpl = chars_per_line(box.x2 - box.x1, cfg);
  const int budget = (int)std::floor((box.y2 - box.y1 - 2.0 * cfg.pad_text) / cfg.line_height());
  int line_no = 0;
  for (size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) continue;
    for (const auto& line : wrap_text(parts[p], cpl)) {
      if (line_no >= budget) return;  // estimator guarantees room; belt and braces
      svg += "    <text x=\"" + fmt(box.x1 + cfg.pad_text) + "\" y=\"" +
             fmt(baseline(box.y1, cfg.pad_text, cfg.line_height(), line_no)) + "\" font-size=\"" +
             fmt(cfg.font_size) + "\" fill=\"" + to_hex(fill) + "\"" +
             (p == 0 && first_part_bold ? " font-weight=\"bold\"" : "") + ">" + xml_escape(line) +
             "</text>\n";
      ++line_no;
    }
  }
}

std::string render_svg(const PosterLayout& layout, const ColorRoles& roles,
                       const PosterContent& content, const std::string& font_name) {
  for (const Box& b : layout.text_boxes)
    if (b.content_ref < 0 || b.content_ref >= (int)content.topics.size())
      throw validation_error("text box references topic " + std::to_string(b.content_ref) +
                             " which does not exist");
  for (const Box& b : layout.image_boxes)
    if (b.content_ref < 0 || b.content_ref >= (int)content.images.size())
      throw validation_error("image box references image " + std::to_string(b.content_ref) +
                             " which does not exist");
  for (const Box& b : layout.caption_boxes)
    if (b.content_ref < 0 || b.content_ref >= (int)content.images.size())
      throw validation_error("caption box references image " + std::to_string(b.content_ref) +
                             " which does not exist");

  const PosterLayout rl = to_render_coords(layout);
  const LayoutConfig& cfg = rl.config;
  const Color black{0, 0, 0}, white{255, 255, 255};
  const Color on_background =
      relative_luminance(roles.background, black) >= relative_luminance(roles.background, white)
          ? black
          : white;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" xmlns:xlink=\"http://www.w3.org/1999/xlink\" "
         "width=\"" + fmt(cfg.width) + "\" height=\"" + fmt(cfg.height) + "\" viewBox=\"0 0 " +
         fmt(cfg.width) + " " + fmt(cfg.height) + "\" font-family=\"" + xml_escape(font_name) +
         "\">\n";
  svg += "  <rect id=\"background\" x=\"0\" y=\"0\" width=\"" + fmt(cfg.width) + "\" height=\"" +
         fmt(cfg.height) + "\" fill=\"" + to_hex(roles.background) + "\"/>\n";

  const Box& tb = rl.title_box;
  svg += "  <text id=\"title\" x=\"" + fmt((tb.x1 + tb.x2) / 2.0) + "\" y=\"" +
         fmt((tb.y1 + tb.y2) / 2.0) + "\" font-size=\"" + fmt(2.0 * cfg.font_size) +
         "\" font-weight=\"bold\" fill=\"" + to_hex(on_background) +
         "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + xml_escape(content.title) +
         "</text>\n";

  for (const Box& b : rl.text_boxes) {
    const Topic& topic = content.topics[b.content_ref];
    svg += "  <g class=\"text-box\">\n";
    svg += "    <rect x=\"" + fmt(b.x1) + "\" y=\"" + fmt(b.y1) + "\" width=\"" + fmt(b.x2 - b.x1) +
           "\" height=\"" + fmt(b.y2 - b.y1) + "\" rx=\"6\" fill=\"" + to_hex(roles.box_fill) +
           "\"/>\n";
    emit_lines(svg, topic_parts(topic), b, cfg, roles.text_fill, true);
    svg += "  </g>\n";
  }

  for (size_t i = 0; i < rl.image_boxes.size(); ++i) {
    const Box& b = rl.image_boxes[i];
    const PosterImage& img = content.images[b.content_ref];
    svg += "  <g class=\"image-box\">\n";
    if (!img.image_path.empty() && std::filesystem::exists(img.image_path)) {
      svg += "    <image x=\"" + fmt(b.x1) + "\" y=\"" + fmt(b.y1) + "\" width=\"" +
             fmt(b.x2 - b.x1) + "\" height=\"" + fmt(b.y2 - b.y1) + "\" xlink:href=\"" +
             xml_escape(img.image_path) + "\" preserveAspectRatio=\"xMidYMid meet\"/>\n";
    } else {
      svg += "    <rect x=\"" + fmt(b.x1) + "\" y=\"" + fmt(b.y1) + "\" width=\"" +
             fmt(b.x2 - b.x1) + "\" height=\"" + fmt(b.y2 - b.y1) + "\" rx=\"6\" fill=\"" +
             to_hex(roles.box_fill) + "\" stroke=\"" + to_hex(roles.text_fill) + "\"/>\n";
      svg += "    <text x=\"" + fmt((b.x1 + b.x2) / 2.0) + "\" y=\"" + fmt((b.y1 + b.y2) / 2.0) +
             "\" font-size=\"" + fmt(cfg.font_size) + "\" fill=\"" + to_hex(roles.text_fill) +
             "\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + xml_escape(img.element_id) +
             "</text>\n";
    }
    svg += "  </g>\n";

    const Box& cb = rl.caption_boxes[i];
    svg += "  <g class=\"caption-box\">\n";
    svg += "    <rect x=\"" + fmt(cb.x1) + "\" y=\"" + fmt(cb.y1) + "\" width=\"" +
           fmt(cb.x2 - cb.x1) + "\" height=\"" + fmt(cb.y2 - cb.y1) + "\" rx=\"6\" fill=\"" +
           to_hex(roles.box_fill) + "\"/>\n";
    emit_lines(svg, {img.caption}, cb, cfg, roles.text_fill, false);
    svg += "  </g>\n";
  }

  svg += "</svg>\n";
  return svg;
}

}  // namespace postdoc
