#pragma once

#include <string>
#include <vector>

namespace postdoc {

struct Color {
  int r = 0, g = 0, b = 0;
  bool operator==(const Color&) const = default;
};

Color parse_hex(const std::string& s);   // "#RRGGBB" (leading '#' optional)
std::string to_hex(const Color& c);      // "#RRGGBB", uppercase

// WCAG relative luminance of a single color, in [0,1].
double luminance(const Color& c);

// WCAG contrast ratio (max(L,L')+0.05)/(min(L,L')+0.05); symmetric, >= 1.
double relative_luminance(const Color& a, const Color& b);

// argmax over C of sum_{C' != C} relative_luminance(C, C'); ties -> lowest index.
Color dominant_color(const std::vector<Color>& palette);

Color complement(const Color& c);  // channel-wise 255 - v

struct ColorRoles {
  Color background;
  Color box_fill;
  Color text_fill;  // black or white
};

// background = dominant color, box_fill = its complement, text_fill = black or
// white, whichever contrasts more with the box fill (ties -> black).
ColorRoles assign_roles(const std::vector<Color>& palette);

std::vector<Color> parse_palette(const std::string& comma_separated_hex);
std::vector<Color> default_palette();

}  // namespace postdoc
