#pragma once

#include <array>
#include <string>

#include "chordcubic/scalars.hpp"

namespace chordcubic {

template <class S>
using Triple = std::array<S, 3>;

template <RingElement S>
bool is_zero_triple(const Triple<S>& t) {
  return t[0].is_zero() && t[1].is_zero() && t[2].is_zero();
}

template <RingElement S>
Triple<S> cross(const Triple<S>& p, const Triple<S>& q) {
  return {p[1] * q[2] - p[2] * q[1], p[2] * q[0] - p[0] * q[2], p[0] * q[1] - p[1] * q[0]};
}

template <RingElement S>
S dot(const Triple<S>& p, const Triple<S>& q) {
  return p[0] * q[0] + p[1] * q[1] + p[2] * q[2];
}

/// Point normalization: the last nonzero coordinate becomes 1, so affine
/// points read [x:y:1] and O reads [0:1:0].
template <FieldElement S>
Triple<S> normalize_point(const Triple<S>& t) {
  for (int i = 2; i >= 0; --i) {
    if (!t[i].is_zero()) {
      S s = t[i].inv();
      return {t[0] * s, t[1] * s, t[2] * s};
    }
  }
  throw Error(ErrorKind::zero_triple, "[0:0:0] is not a projective point");
}

/// Line normalization: the first nonzero coordinate becomes 1.
template <FieldElement S>
Triple<S> normalize_line(const Triple<S>& t) {
  for (int i = 0; i < 3; ++i) {
    if (!t[i].is_zero()) {
      S s = t[i].inv();
      return {t[0] * s, t[1] * s, t[2] * s};
    }
  }
  throw Error(ErrorKind::zero_triple, "[0:0:0] is not a line");
}

/// Projective equality: all 2x2 minors vanish.
template <RingElement S>
bool proportional(const Triple<S>& p, const Triple<S>& q) {
  return is_zero_triple(cross(p, q));
}

template <class S>
std::string triple_string(const Triple<S>& t) {
  return "[" + coordinate_string(t[0]) + ":" + coordinate_string(t[1]) + ":" +
         coordinate_string(t[2]) + "]";
}

}  // namespace chordcubic
