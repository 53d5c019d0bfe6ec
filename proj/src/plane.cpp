#include "chordcubic/plane.hpp"

namespace chordcubic {

namespace {

PrimeField field_of(const TernaryForm<Fp>& form) {
  return form.coefficients().front().field();
}

}  // namespace

std::vector<Triple<Fp>> find_flexes_over_Fp(const TernaryForm<Fp>& form) {
  const TernaryForm<Fp> hessian = hessian_cubic(form);
  const std::array<TernaryForm<Fp>, 3> grad{form.partial(0), form.partial(1), form.partial(2)};
  std::vector<Triple<Fp>> out;
  for_each_plane_point(field_of(form), [&](const Triple<Fp>& pt) {
    if (!form.evaluate(pt).is_zero() || !hessian.evaluate(pt).is_zero()) return;
    bool smooth = !grad[0].evaluate(pt).is_zero() || !grad[1].evaluate(pt).is_zero() ||
                  !grad[2].evaluate(pt).is_zero();
    if (smooth) out.push_back(pt);
  });
  return out;
}

bool smooth_over_Fp(const TernaryForm<Fp>& form) {
  const std::array<TernaryForm<Fp>, 3> grad{form.partial(0), form.partial(1), form.partial(2)};
  bool smooth = true;
  for_each_plane_point(field_of(form), [&](const Triple<Fp>& pt) {
    if (!smooth || !form.evaluate(pt).is_zero()) return;
    if (grad[0].evaluate(pt).is_zero() && grad[1].evaluate(pt).is_zero() &&
        grad[2].evaluate(pt).is_zero()) {
      smooth = false;
    }
  });
  return smooth;
}

std::size_t count_points_over_Fp(const TernaryForm<Fp>& form) {
  std::size_t count = 0;
  for_each_plane_point(field_of(form), [&](const Triple<Fp>& pt) {
    if (form.evaluate(pt).is_zero()) ++count;
  });
  return count;
}

}  // namespace chordcubic
