#ifndef CMGRAPH_LIMITS_HPP
#define CMGRAPH_LIMITS_HPP

#include <cstddef>

namespace cmg {

/// Size caps for the exponential procedures. Exceeding one raises CapExceeded.
struct Limits {
  std::size_t vertex_cap = 40;
  std::size_t facet_cap = 12;      // brute-force shellability only
  std::size_t face_cap = 2'000'000;
};

}  // namespace cmg

#endif
