#pragma once

#include <string>
#include <vector>

#include "lam/lamination.hpp"
#include "lam/tags.hpp"

namespace lam {

enum class GeodesicStyle { straight_chord, hyperbolic_arc };

struct RenderSpec {
  int size = 800;  // pixels per disk
  GeodesicStyle style = GeodesicStyle::hyperbolic_arc;
  std::string stroke = "#1a1a1a";
  double stroke_width = 1.0;
  bool labels = false;
};

/// Pinched-disk picture: the unit circle plus one path per leaf, drawn as
/// straight chords or as circular arcs orthogonal to the unit circle.
/// Output is deterministic for fixed input.
std::string render_lamination_svg(const Lamination& L, const RenderSpec& spec);

/// Two unit disks side by side: each tag's left polygon in the left disk and
/// right polygon in the right disk, filled with a color derived from a
/// stable hash of the left polygon so equal tags always share a color.
std::string render_tag_svg(const std::vector<MixedTag>& tags, const RenderSpec& spec);

}  // namespace lam
