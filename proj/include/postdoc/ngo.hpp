#pragma once

#include <vector>

namespace postdoc {

struct Frame {
  double w = 0.0, h = 0.0;
};

struct Rect {
  double x1 = 0.0, y1 = 0.0, x2 = 0.0, y2 = 0.0;  // bottom-left origin

  double width() const { return x2 - x1; }
  double height() const { return y2 - y1; }
  double area() const { return width() * height(); }
  double cx() const { return 0.5 * (x1 + x2); }
  double cy() const { return 0.5 * (y1 + y2); }
};

// Layout aesthetics, each in [0,1]:
//   equilibrium — area-weighted center-of-mass balance about the frame center
//   padding     — slack between the boxes' bounding hull and the frame
//   density     — covered area per box, relative to the frame
//   overlap     — 1 minus the clipped pairwise intersection area ratio
double equilibrium(const Frame& frame, const std::vector<Rect>& boxes);
double padding_score(const Frame& frame, const std::vector<Rect>& boxes);
double density_score(const Frame& frame, const std::vector<Rect>& boxes);
double overlap_score(const Frame& frame, const std::vector<Rect>& boxes);

// Equi-weighted mean of the four components.
double overall_score(const Frame& frame, const std::vector<Rect>& boxes);

struct NgoReport {
  double equilibrium = 0.0;
  double padding = 0.0;
  double density = 0.0;
  double overlap = 0.0;
  double overall = 0.0;
};

NgoReport score_boxes(const Frame& frame, const std::vector<Rect>& boxes);

}  // namespace postdoc
