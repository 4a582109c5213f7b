#include "postdoc/ngo.hpp"

#include <algorithm>
#include <cmath>

#include "postdoc/errors.hpp"

namespace postdoc {

static void check(const Frame& frame, const std::vector<Rect>& boxes) {
  if (frame.w <= 0.0 || frame.h <= 0.0) throw validation_error("frame must have positive size");
  if (boxes.empty()) throw validation_error("layout has no boxes");
}

double equilibrium(const Frame& frame, const std::vector<Rect>& boxes) {
  check(frame, boxes);
  double total_area = 0.0, mx = 0.0, my = 0.0;
  for (const Rect& b : boxes) {
    const double a = b.area();
    total_area += a;
    mx += a * (b.cx() - frame.w / 2.0);
    my += a * (b.cy() - frame.h / 2.0);
  }
  if (total_area <= 0.0) throw validation_error("layout has zero total box area");
  const double n = (double)boxes.size();
  const double em_x = 2.0 * mx / (n * frame.w * total_area);
  const double em_y = 2.0 * my / (n * frame.h * total_area);
  return 1.0 - (std::abs(em_x) + std::abs(em_y)) / 2.0;
}

double padding_score(const Frame& frame, const std::vector<Rect>& boxes) {
  check(frame, boxes);
  double l = boxes[0].x1, r = boxes[0].x2, b = boxes[0].y1, t = boxes[0].y2;
  for (const Rect& box : boxes) {
    l = std::min(l, box.x1);
    r = std::max(r, box.x2);
    b = std::min(b, box.y1);
    t = std::max(t, box.y2);
  }
  return 1.0 - ((r - l) * (t - b)) / (frame.w * frame.h);
}

double density_score(const Frame& frame, const std::vector<Rect>& boxes) {
  check(frame, boxes);
  double total_area = 0.0;
  for (const Rect& b : boxes) total_area += b.area();
  return std::min(1.0, total_area / (frame.w * frame.h * (double)boxes.size()));
}

double overlap_score(const Frame& frame, const std::vector<Rect>& boxes) {
  check(frame, boxes);
  double inter = 0.0;
  for (size_t i = 0; i < boxes.size(); ++i) {
    for (size_t j = i + 1; j < boxes.size(); ++j) {
      const double dx = std::min(boxes[i].x2, boxes[j].x2) - std::max(boxes[i].x1, boxes[j].x1);
      const double dy = std::min(boxes[i].y2, boxes[j].y2) - std::max(boxes[i].y1, boxes[j].y1);
      if (dx > 0.0 && dy > 0.0) inter += dx * dy;
    }
  }
  return 1.0 - std::min(1.0, inter / (frame.w * frame.h));
}

double overall_score(const Frame& frame, const std::vector<Rect>& boxes) {
  return 0.25 * (equilibrium(frame, boxes) + padding_score(frame, boxes) +
                 density_score(frame, boxes) + overlap_score(frame, boxes));
}

NgoReport score_boxes(const Frame& frame, const std::vector<Rect>& boxes) {
  NgoReport r;
  r.equilibrium = equilibrium(frame, boxes);
  r.padding = padding_score(frame, boxes);
  r.density = density_score(frame, boxes);
  r.overlap = overlap_score(frame, boxes);
  r.overall = 0.25 * (r.equilibrium + r.padding + r.density + r.overlap);
  return r;
}

}  // namespace postdoc
