#pragma once

#include <json.hpp>

#include "chordcubic/chord.hpp"
#include "chordcubic/curve.hpp"
#include "chordcubic/plane.hpp"
#include "chordcubic/verify.hpp"

namespace chordcubic {

/// {"claim", "status", "witness", "stats"}; "millis" only when asked for, so
/// repeated runs stay byte-identical by default.
nlohmann::ordered_json report_json(const Report& r, bool with_timing = false);

/// {"UiVjWk": "coef"} over the nonzero coefficients, in monomial order.
template <FieldElement S>
nlohmann::ordered_json form_json(const TernaryForm<S>& form) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  std::size_t n = 0;
  for (const auto& e : form.monomials()) {
    const S& c = form.coefficients()[n++];
    if (!c.is_zero()) out[monomial_key(e)] = to_string(c);
  }
  return out;
}

template <FieldElement S>
nlohmann::ordered_json curve_json(const CurveParams<S>& params) {
  return {{"a", to_string(params.a())}, {"b", to_string(params.b())}};
}

template <FieldElement S>
nlohmann::ordered_json intersection_json(const IntersectionRecord<S>& rec) {
  return {{"point", triple_string(rec.point)}, {"mult", rec.multiplicity}};
}

template <FieldElement S>
nlohmann::ordered_json invariants_json(const CubicInvariants<S>& inv) {
  return {{"e", to_string(inv.e)},
          {"c1", to_string(inv.c1)},
          {"c2", to_string(inv.c2)},
          {"mu_inv", to_string(inv.mu_inv)}};
}

}  // namespace chordcubic
