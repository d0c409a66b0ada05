#pragma once

#include <string>

#include "coindoe/coinduction.hpp"
#include "coindoe/oe.hpp"

namespace coindoe {

// DOT rendering of a side-1 configuration on the words rep*g of the depth-n
// ball, one cluster per coset. Edges:
//   solid   w -> w s         for generators s of G1
//   dashed  w -> w t         where t in G1 realizes a G2 generator b on the
//                            label: f(w t) = T2(b^{-1}) f(w)
//   colored w -> w h         for generators h of H, when w h is in the ball
// Throws TruncationExceeded if depth exceeds the configuration's depth.
std::string render_diagram(const OeContext& ctx, const TruncatedConfig& f,
                           int depth);

}  // namespace coindoe
