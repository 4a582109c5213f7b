#pragma once

#include <string>

#include "postdoc/color.hpp"
#include "postdoc/layout.hpp"
#include "postdoc/paraphrase.hpp"

namespace postdoc {

// Deterministic SVG 1.1 poster: background fill, centered title, rounded text
// boxes with wrapped topic text, image references (labeled placeholder when the
// file is missing) with caption boxes underneath.
std::string render_svg(const PosterLayout& layout, const ColorRoles& roles,
                       const PosterContent& content, const std::string& font_name = "Helvetica");

std::string xml_escape(const std::string& s);

}  // namespace postdoc
