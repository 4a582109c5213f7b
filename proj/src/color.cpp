#include "postdoc/color.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

#include "postdoc/errors.hpp"

namespace postdoc {

static int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Color parse_hex(const std::string& s) {
  std::string t = s;
  if (!t.empty() && t[0] == '#') t = t.substr(1);
  if (t.size() != 6)
    throw validation_error("invalid color \"" + s + "\": expected #RRGGBB");
  int v[6];
  for (int i = 0; i < 6; ++i) {
    v[i] = hex_digit(t[i]);
    if (v[i] < 0) throw validation_error("invalid color \"" + s + "\": expected #RRGGBB");
  }
  return Color{v[0] * 16 + v[1], v[2] * 16 + v[3], v[4] * 16 + v[5]};
}

std::string to_hex(const Color& c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02X%02X%02X", c.r, c.g, c.b);
  return buf;
}

static double linearize(int channel) {
  const double v = channel / 255.0;
  return v <= 0.03928 ? v / 12.92 : std::pow((v + 0.055) / 1.055, 2.4);
}

double luminance(const Color& c) {
  return 0.2126 * linearize(c.r) + 0.7152 * linearize(c.g) + 0.0722 * linearize(c.b);
}

double relative_luminance(const Color& a, const Color& b) {
  const double la = luminance(a), lb = luminance(b);
  return (std::max(la, lb) + 0.05) / (std::min(la, lb) + 0.05);
}

Color dominant_color(const std::vector<Color>& palette) {
  if (palette.size() < 2)
    throw validation_error("dominant color needs a palette of at least 2 colors");
  int best = 0;
  double best_sum = -1.0;
  for (size_t i = 0; i < palette.size(); ++i) {
    double sum = 0.0;
    for (size_t j = 0; j < palette.size(); ++j)
      if (j != i) sum += relative_luminance(palette[i], palette[j]);
    if (sum > best_sum) {
      best_sum = sum;
      best = (int)i;
    }
  }
  return palette[best];
}

Color complement(const Color& c) { return Color{255 - c.r, 255 - c.g, 255 - c.b}; }

ColorRoles assign_roles(const std::vector<Color>& palette) {
  ColorRoles roles;
  roles.background = dominant_color(palette);
  roles.box_fill = complement(roles.background);
  const Color black{0, 0, 0}, white{255, 255, 255};
  roles.text_fill =
      relative_luminance(roles.box_fill, black) >= relative_luminance(roles.box_fill, white) ? black
                                                                                             : white;
  return roles;
}

std::vector<Color> parse_palette(const std::string& comma_separated_hex) {
  std::vector<Color> palette;
  std::string cur;
  auto flush = [&] {
    size_t a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) return;
    size_t b = cur.find_last_not_of(" \t");
    palette.push_back(parse_hex(cur.substr(a, b - a + 1)));
  };
  for (char c : comma_separated_hex) {
    if (c == ',') {
      flush();
      cur.clear();
    } else {
      cur += c;
    }
  }
  flush();
  if (palette.empty()) throw validation_error("empty palette");
  return palette;
}

std::vector<Color> default_palette() {
  return {parse_hex("#1B3A5C"), parse_hex("#F2E9DC"), parse_hex("#C84B31"), parse_hex("#2D6A4F")};
}

}  // namespace postdoc
