#pragma once

// Frozen reference maps on Z2 x Z4, index (u, v) = 4u + v. Values were
// computed with an independent tuple-arithmetic brute force and instantiate
// the form-I template at a = (0,1), x = (1,0), θ(x) = (1,2).

#include <memory>

#include "ortho/group.hpp"
#include "ortho/orthomorphism.hpp"

namespace fixtures {

inline ortho::GroupPtr z2xz4() {
  return std::make_shared<const ortho::FiniteGroup>(
      ortho::direct_product(ortho::build_cyclic(2), ortho::build_cyclic(4)));
}

inline ortho::GroupPtr group(std::size_t a, std::size_t b = 1) {
  if (b == 1) return std::make_shared<const ortho::FiniteGroup>(ortho::build_cyclic(a));
  return std::make_shared<const ortho::FiniteGroup>(
      ortho::direct_product(ortho::build_cyclic(a), ortho::build_cyclic(b)));
}

// ((0,1) (1,1) (0,3) (0,2) (1,3) (1,0) (1,2))
inline const ortho::GroupMap kThetaStar{{0, 5, 7, 2, 6, 3, 1, 4}};
// ((1,3) (0,3) (0,1) (1,2))((1,0) (0,2) (1,1))
inline const ortho::GroupMap kPsi1{{0, 6, 5, 1, 2, 4, 7, 3}};
inline const ortho::GroupMap kPsi2{{0, 4, 1, 7, 2, 6, 3, 5}};
// α θ* α⁻¹ with α = ((0,1) (1,1))((0,3) (1,3))
inline const ortho::GroupMap kThetaStarAlpha{{0, 7, 3, 4, 6, 1, 5, 2}};
inline const ortho::GroupMap kAlphaStar{{0, 5, 2, 7, 4, 1, 6, 3}};

}  // namespace fixtures
