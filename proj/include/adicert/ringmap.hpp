#pragma once

#include "adicert/ideal.hpp"

namespace adicert {

/// Ring homomorphism determined by the images of the source variables
/// (and the canonical map on coefficients).  Construction checks that the
/// source's defining relations (or modulus) die in the target.
struct RingMap {
  RingPtr src, tgt;
  std::vector<RingElement> var_images;

  static RingMap make(const RingPtr& src, const RingPtr& tgt,
                      std::vector<RingElement> var_images);
  static RingMap identity(const RingPtr& r);

  RingElement apply(const RingElement& e) const;
  Ideal apply(const Ideal& I) const; // extension: generators mapped into tgt
};

} // namespace adicert
