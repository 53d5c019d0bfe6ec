#include "chordcubic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "chordcubic/poly.hpp"

namespace chordcubic {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

namespace {

class Stopwatch {
 public:
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string clip(std::string s) {
  constexpr std::size_t kMax = 400;
  if (s.size() > kMax) s = s.substr(0, kMax) + " ...";
  return s;
}

// Records the first failure only; later witnesses would repeat the story.
void fail(Report& r, const std::string& witness) {
  if (r.status == Status::fail) return;
  r.status = Status::fail;
  r.witness = witness.empty() ? "check failed" : clip(witness);
}

Report make_report(const char* claim) {
  Report r;
  r.claim = claim;
  return r;
}

Report finish(Report r, const Stopwatch& clock) {
  r.millis = clock.millis();
  return r;
}

struct Symbols {
  MultiPoly x = MultiPoly::variable(Var::x);
  MultiPoly y = MultiPoly::variable(Var::y);
  MultiPoly a = MultiPoly::variable(Var::a);
  MultiPoly b = MultiPoly::variable(Var::b);
};

std::int64_t as_stat(std::size_t n) { return static_cast<std::int64_t>(n); }

CurvePoint<Fp> translate_for_check(const CurvePoint<Fp>& p, Mutation m) {
  CurvePoint<Fp> t = translate_by_beta(p);
  if (m == Mutation::fibers_translate_sign) return t.negated();
  return t;
}

bool contains_projectively(const std::vector<Triple<Fp>>& set, const Triple<Fp>& pt) {
  return std::any_of(set.begin(), set.end(),
                     [&](const Triple<Fp>& q) { return proportional(q, pt); });
}

Status quotient_counts(const CurveParams<Fp>& params, Mutation m, Report& report) {
  const Fp& a = params.a();
  const Fp& b = params.b();
  Fp target_b = a * a - (m == Mutation::quotient_target ? a.lift(3) : a.lift(4)) * b;
  std::size_t target_count = 0;
  try {
    target_count = enumerate_points(validate_curve(-(a.lift(2) * a), target_b)).size();
  } catch (const Error&) {
    fail(report, "target curve is singular mod " + std::to_string(a.modulus()));
    return Status::fail;
  }
  std::size_t image_count = count_points_over_Fp(chord_cubic(params));
  if (image_count != target_count) {
    fail(report, "p=" + std::to_string(a.modulus()) + ": image cubic has " +
                     std::to_string(image_count) + " points, E' has " +
                     std::to_string(target_count));
    return Status::fail;
  }
  return Status::pass;
}

void isogeny_symbolic(Mutation m, Report& report) {
  Symbols s;
  // phi(x, y) = (y^2/x^2, y (x^2 - b)/x^2) onto Y^2 = X^3 + A X^2 + B X,
  // with the equation multiplied through by x^6.
  MultiPoly target_a = MultiPoly(-2) * s.a;
  MultiPoly target_b = s.a * s.a - MultiPoly(m == Mutation::quotient_target ? 3 : 4) * s.b;
  MultiPoly x2 = s.x * s.x, y2 = s.y * s.y;
  MultiPoly residual = x2 * y2 * (x2 - s.b).pow(2) - y2.pow(3) - target_a * x2 * y2.pow(2) -
                       target_b * x2.pow(2) * y2;
  MultiPoly reduced = reduce_mod_curve(residual);
  report.stats["isogeny_terms"] = as_stat(residual.size());
  if (!reduced.is_zero()) fail(report, "isogeny residual: " + reduced.to_string());
}

}  // namespace

bool all_passed(const std::vector<Report>& reports) {
  return std::none_of(reports.begin(), reports.end(),
                      [](const Report& r) { return r.status == Status::fail; });
}

Report verify_chord_incidence_symbolic(Mutation m) {
  Stopwatch clock;
  Report r = make_report(claims::chord_incidence);
  Symbols s;
  auto [U, V, W] = chord_line_coordinates(s.x, s.y, s.b);
  if (m == Mutation::incidence_v_sign) V = s.b * s.x + s.x.pow(3);

  // p = (x, y) lies on the line.
  MultiPoly through_p = U * s.x + V * s.y + W;
  // p + beta = (b/x, -by/x^2) lies on it, after multiplying by x^2.
  MultiPoly through_translate = U * s.b * s.x - V * s.b * s.y + W * s.x * s.x;
  r.stats["terms_checked"] = as_stat(U.size() + V.size() + W.size());
  if (!through_p.is_zero()) fail(r, "U x + V y + W = " + through_p.to_string());
  if (!through_translate.is_zero()) {
    fail(r, "x^2 (U b/x - V b y/x^2 + W) = " + through_translate.to_string());
  }
  return finish(r, clock);
}

Report verify_identity_symbolic(Mutation m) {
  Stopwatch clock;
  Report r = make_report(claims::image_cubic_identity);
  Symbols s;
  const auto [U, V, W] = chord_line_coordinates(s.x, s.y, s.b);
  const MultiPoly T = MultiPoly(2) * s.b * U - s.a * W;
  const MultiPoly four_b = MultiPoly(4) * s.b;
  const MultiPoly e_sign = m == Mutation::identity_e_sign ? MultiPoly(-1) : MultiPoly(1);

  // G(U, V, W) with G the cleared image cubic; the e-term is 4b^2 T V^2.
  TernaryForm<MultiPoly> G = chord_cubic_cleared(s.a, s.b);
  if (m == Mutation::identity_e_sign) {
    using Form = TernaryForm<MultiPoly>;
    Form Uf = Form::variable(0, s.a), Vf = Form::variable(1, s.a), Wf = Form::variable(2, s.a);
    Form Tf = Uf.scaled(MultiPoly(2) * s.b) - Wf.scaled(s.a);
    G = G - (Tf * Vf * Vf).scaled(MultiPoly(8) * s.b * s.b);
  }
  MultiPoly substituted = G.evaluate({U, V, W});
  MultiPoly residual = reduce_mod_curve(substituted);
  r.stats["expanded_terms"] = as_stat(substituted.size());
  r.stats["residual_terms"] = as_stat(residual.size());
  if (!residual.is_zero()) fail(r, "G(U,V,W) mod y^2 - f = " + residual.to_string());

  // Ratio form N / D = -8 b^3 y^2 / ((a^2 - 4b) f), cross-multiplied after
  // scaling N by 4b^2 (4b - a^2) and D by 2b to clear 1/mu and the c's.
  MultiPoly N = four_b * s.b * (four_b - s.a * s.a) * W.pow(3) -
                MultiPoly(8) * s.a * s.b * s.b * T * W * W - four_b * s.b * T * T * W;
  MultiPoly D = T * V * V;
  MultiPoly cross_multiplied =
      MultiPoly(2) * s.b * N * (s.a * s.a - four_b) * curve_rhs() +
      e_sign * MultiPoly(8) * s.b.pow(3) * s.y * s.y * four_b * s.b * (four_b - s.a * s.a) * D;
  MultiPoly ratio_residual = reduce_mod_curve(cross_multiplied);
  r.stats["ratio_residual_terms"] = as_stat(ratio_residual.size());
  if (!ratio_residual.is_zero()) {
    fail(r, "ratio form residual: " + ratio_residual.to_string());
  }
  return finish(r, clock);
}

Report verify_hessian_flex_symbolic(Mutation m) {
  Stopwatch clock;
  Report r = make_report(claims::hessian_flex_symbolic);
  Symbols s;
  const MultiPoly zero(0), one(1);
  // chord_map of (r, 0), r a root of x^2 + a x + b, is [0:1:0]; without the
  // gamma shift the flex O would land on chord_map(O) = [1:0:0].
  Triple<MultiPoly> pt = m == Mutation::flex_drop_gamma ? Triple<MultiPoly>{one, zero, zero}
                                                        : Triple<MultiPoly>{zero, one, zero};
  TernaryForm<MultiPoly> G = chord_cubic_cleared(s.a, s.b);
  MultiPoly on_curve = G.evaluate(pt);
  MultiPoly hessian = hessian_cubic(G).evaluate(pt);
  Triple<MultiPoly> grad = gradient_at(G, pt);
  if (!on_curve.is_zero()) fail(r, "G at the point = " + on_curve.to_string());
  if (is_zero_triple(grad)) fail(r, "gradient vanishes identically");
  if (!hessian.is_zero()) fail(r, "Hessian at the point = " + hessian.to_string());
  r.stats["hessian_terms"] = as_stat(hessian.size());
  return finish(r, clock);
}

Report verify_translation(const CurveParams<Fp>& params) {
  Stopwatch clock;
  Report r = make_report(claims::translation);
  const auto beta = beta_point(params);
  const auto points = enumerate_points(params);
  for (const auto& p : points) {
    auto t = translate_by_beta(p);
    if (!(t == group_add(p, beta))) {
      fail(r, "p=" + to_string(p) + ": closed form " + to_string(t) + " vs group law " +
                  to_string(group_add(p, beta)));
    }
    if (!(translate_by_beta(t) == p)) fail(r, "translation is not an involution at " + to_string(p));
  }
  r.stats["points"] = as_stat(points.size());
  return finish(r, clock);
}

Report verify_chord_lines(const CurveParams<Fp>& params) {
  Stopwatch clock;
  Report r = make_report(claims::chord_lines);
  const auto points = enumerate_points(params);
  for (const auto& p : points) {
    auto t = translate_by_beta(p);
    auto line = chord_map(p);
    if (!(line == chord_map(t))) fail(r, "chord_map differs on the pair at " + to_string(p));
    if (!(line == line_through(p.coords(), t.coords()))) {
      fail(r, "chord_map(" + to_string(p) + ") = " + to_string(line) + " but line_through = " +
                  to_string(line_through(p.coords(), t.coords())));
    }
    if (!dual_incidence(p.coords(), line.coords()) || !dual_incidence(t.coords(), line.coords())) {
      fail(r, "incidence fails at " + to_string(p));
    }
  }
  r.stats["points"] = as_stat(points.size());
  return finish(r, clock);
}

Report verify_fibers(const CurveParams<Fp>& params, Mutation m) {
  Stopwatch clock;
  Report r = make_report(claims::fibers);
  const auto points = enumerate_points(params);
  const auto cubic = chord_cubic(params);
  std::map<DualPoint<Fp>, std::vector<CurvePoint<Fp>>> fibers;
  for (const auto& p : points) fibers[chord_map(p)].push_back(p);

  for (const auto& [line, fiber] : fibers) {
    if (!cubic.evaluate(line.coords()).is_zero()) {
      fail(r, "image " + to_string(line) + " is not on the image cubic");
    }
    const auto& q = fiber.front();
    auto partner = translate_for_check(q, m);
    bool ok = fiber.size() == 2 && (fiber[1] == partner || (fiber[0] == partner && fiber[1] == q));
    if (!ok) {
      std::string members;
      for (const auto& f : fiber) members += to_string(f) + " ";
      fail(r, "fiber of " + to_string(line) + " is { " + members + "}, expected {" +
                  to_string(q) + ", " + to_string(partner) + "}");
    }
  }
  if (2 * fibers.size() != points.size()) {
    fail(r, "image size " + std::to_string(fibers.size()) + " vs #E/2 = " +
                std::to_string(points.size()) + "/2");
  }
  r.stats["points"] = as_stat(points.size());
  r.stats["image_size"] = as_stat(fibers.size());
  return finish(r, clock);
}

Report verify_image_curve(const CurveParams<Fp>& params, unsigned dmax) {
  Stopwatch clock;
  Report r = make_report(claims::image_curve);
  const auto cubic = chord_cubic(params);
  std::set<DualPoint<Fp>> image;
  for (const auto& p : enumerate_points(params)) image.insert(chord_map(p));
  std::vector<Triple<Fp>> triples;
  for (const auto& l : image) {
    if (!cubic.evaluate(l.coords()).is_zero()) fail(r, to_string(l) + " is off the image cubic");
    triples.push_back(l.coords());
  }
  if (!forms_proportional(cubic, invariants_form(cubic_invariants(params)))) {
    fail(r, "cleared cubic and (e, c1, c2, mu_inv) form define different curves");
  }
  if (!smooth_over_Fp(cubic)) fail(r, "image cubic is singular over F_p");
  auto interp = min_interpolating_degree(triples, dmax);
  if (!interp || interp->degree != 3 || interp->nullity != 1) {
    fail(r, interp ? "interpolation degree " + std::to_string(interp->degree) + ", nullity " +
                         std::to_string(interp->nullity)
                   : std::string("no interpolating form up to dmax"));
  }
  r.stats["image_size"] = as_stat(image.size());
  if (interp) {
    r.stats["degree"] = interp->degree;
    r.stats["nullity"] = as_stat(interp->nullity);
  }
  return finish(r, clock);
}

Report verify_weierstrass_flexes(const CurveParams<Fp>& params) {
  Stopwatch clock;
  Report r = make_report(claims::weierstrass_flexes);
  const std::uint32_t p = params.a().modulus();
  const auto points = enumerate_points(params);
  const double window = 2.0 * std::sqrt(static_cast<double>(p));
  const double deviation = std::abs(static_cast<double>(points.size()) - (p + 1.0));
  if (deviation > window) fail(r, "#E = " + std::to_string(points.size()) + " outside Hasse window");
  if (points.size() % 2 != 0) fail(r, "#E = " + std::to_string(points.size()) + " is odd");

  const auto form = weierstrass_form(params);
  const auto torsion = three_torsion_flexes(params);
  const auto flexes = find_flexes_over_Fp(form);
  if (torsion.size() != flexes.size()) {
    fail(r, std::to_string(torsion.size()) + " 3-torsion points vs " +
                std::to_string(flexes.size()) + " Hessian flexes");
  }
  for (const auto& q : torsion) {
    if (!contains_projectively(flexes, q.coords())) fail(r, to_string(q) + " is not a flex");
    auto tangent = gradient_at(form, q.coords());
    auto meet = line_cubic_intersection(form, tangent);
    if (meet.size() != 1 || meet[0].multiplicity != 3) {
      fail(r, "tangent at flex " + to_string(q) + " does not have triple contact");
    }
  }
  r.stats["points"] = as_stat(points.size());
  r.stats["flexes"] = as_stat(flexes.size());
  return finish(r, clock);
}

Report verify_flex_correspondence(const CurveParams<Fp>& params, Mutation m) {
  Stopwatch clock;
  Report r = make_report(claims::flex_correspondence);
  const auto two = two_torsion_points(params);
  if (two.size() < 4) {
    r.status = Status::skipped;
    r.stats["two_torsion"] = as_stat(two.size());
    return finish(r, clock);
  }
  const auto cubic = chord_cubic(params);
  const auto torsion = three_torsion_flexes(params);
  std::vector<Triple<Fp>> expected;
  for (const auto& q : torsion) {
    for (std::size_t g = 2; g < 4; ++g) {
      auto target = m == Mutation::flex_drop_gamma ? q : group_add(q, two[g]);
      auto line = chord_map(target);
      if (!cubic.evaluate(line.coords()).is_zero()) {
        fail(r, to_string(line) + " is off the image cubic");
        continue;
      }
      if (!is_flex(cubic, line.coords())) {
        fail(r, "chord_map(" + to_string(target) + ") = " + to_string(line) + " is not a flex");
      }
      expected.push_back(line.coords());
    }
  }
  const auto found = find_flexes_over_Fp(cubic);
  for (const auto& f : found) {
    if (!contains_projectively(expected, f)) {
      fail(r, "flex " + triple_string(f) + " of the image is not a shifted 3-torsion image");
    }
  }
  const auto special = chord_map(CurvePoint<Fp>::infinity(params));
  if (is_flex(cubic, special.coords())) fail(r, to_string(special) + " should not be a flex");
  r.stats["two_torsion"] = as_stat(two.size());
  r.stats["three_torsion"] = as_stat(torsion.size());
  r.stats["image_flexes"] = as_stat(found.size());
  return finish(r, clock);
}

Report verify_quotient(const CurveParams<Rational>& params, std::span<const std::uint32_t> primes,
                       Mutation m) {
  Stopwatch clock;
  Report r = make_report(claims::quotient);
  isogeny_symbolic(m, r);
  std::int64_t checked = 0, skipped = 0;
  for (std::uint32_t p : primes) {
    PrimeField field(p);
    std::optional<CurveParams<Fp>> reduced;
    try {
      reduced = validate_curve(field.from_rational(params.a()), field.from_rational(params.b()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::beta_degenerate && e.kind() != ErrorKind::double_root &&
          e.kind() != ErrorKind::non_invertible_denominator) {
        throw;
      }
      ++skipped;
      continue;
    }
    quotient_counts(*reduced, m, r);
    ++checked;
  }
  r.stats["primes_checked"] = checked;
  r.stats["primes_skipped"] = skipped;
  return finish(r, clock);
}

Report verify_quotient(const CurveParams<Fp>& params, Mutation m) {
  Stopwatch clock;
  Report r = make_report(claims::quotient);
  isogeny_symbolic(m, r);
  quotient_counts(params, m, r);
  r.stats["primes_checked"] = 1;
  return finish(r, clock);
}

TranslationChordSummary translation_chord_summary(const CurvePoint<Fp>& translation, unsigned dmax,
                                                  Mutation m) {
  const auto points = enumerate_points(translation.params());
  std::map<DualPoint<Fp>, std::vector<CurvePoint<Fp>>> fibers;
  TranslationChordSummary out;
  for (const auto& q : points) {
    auto shifted = group_add(q, translation);
    if (m == Mutation::degree_translate_negated) shifted = shifted.negated();
    if (shifted == q) continue;
    fibers[line_through(q.coords(), shifted.coords())].push_back(q);
    ++out.points;
  }
  // A line through q and q + T also contains another translate pair exactly
  // when it is {w - T, w} (or {w, w + T, w + 2T} if 3T = O) with 3w = O.
  auto three_torsion = [](const CurvePoint<Fp>& u) { return scalar_mul(3, u).is_infinity(); };
  const bool translation_order_three = three_torsion(translation);
  std::size_t torsion3 = 0;
  for (const auto& q : points) {
    if (three_torsion(q)) ++torsion3;
  }
  out.expected_exceptional = translation_order_three ? torsion3 / 3 : torsion3;
  for (const auto& [line, fiber] : fibers) {
    out.image.push_back(line);
    out.max_fiber = std::max(out.max_fiber, fiber.size());
    if (fiber.size() == 1) continue;
    bool exceptional = false;
    if (m == Mutation::none && fiber.size() == (translation_order_three ? 3u : 2u)) {
      exceptional = std::any_of(fiber.begin(), fiber.end(), [&](const CurvePoint<Fp>& start) {
        CurvePoint<Fp> step = start;
        for (std::size_t k = 1; k < fiber.size(); ++k) {
          step = group_add(step, translation);
          if (std::find(fiber.begin(), fiber.end(), step) == fiber.end()) return false;
        }
        return three_torsion(step);
      });
    }
    ++(exceptional ? out.exceptional_fibers : out.unexplained_fibers);
  }
  out.image_size = out.image.size();
  std::vector<Triple<Fp>> triples;
  for (const auto& l : out.image) triples.push_back(l.coords());
  out.interpolation = min_interpolating_degree(triples, dmax);
  return out;
}

Report verify_degree_remark(const CurveParams<Fp>& params, long long order, unsigned dmax,
                            Mutation m) {
  Stopwatch clock;
  Report r = make_report(claims::degree_remark);
  if (order <= 2) {
    throw Error(ErrorKind::out_of_range, "translation order must exceed 2");
  }
  r.stats["order"] = order;
  if (params.a().modulus() < 101) {
    r.status = Status::skipped;
    return finish(r, clock);
  }
  auto translation = find_point_of_order(params, order);
  if (!translation) {
    r.status = Status::skipped;
    return finish(r, clock);
  }
  auto summary = translation_chord_summary(*translation, dmax, m);
  r.stats["points"] = as_stat(summary.points);
  r.stats["image_size"] = as_stat(summary.image_size);
  r.stats["exceptional_fibers"] = as_stat(summary.exceptional_fibers);
  r.stats["expected_exceptional"] = as_stat(summary.expected_exceptional);
  if (summary.interpolation) r.stats["degree"] = summary.interpolation->degree;

  if (summary.unexplained_fibers != 0) {
    fail(r, std::to_string(summary.unexplained_fibers) + " fibers with more than one point, T = " +
                to_string(*translation));
  }
  if (summary.exceptional_fibers != summary.expected_exceptional) {
    fail(r, std::to_string(summary.exceptional_fibers) + " exceptional fibers, expected " +
                std::to_string(summary.expected_exceptional) + " from the 3-torsion");
  }
  if (summary.image_size < 31) {
    fail(r, "only " + std::to_string(summary.image_size) + " image points; need 31 to rule out quintics");
  }
  if (!summary.interpolation || summary.interpolation->degree != 6) {
    fail(r, summary.interpolation
                ? "interpolation degree " + std::to_string(summary.interpolation->degree)
                : std::string("no interpolating form up to dmax"));
  }
  return finish(r, clock);
}

std::vector<Report> run_symbolic_suite() {
  return {verify_chord_incidence_symbolic(), verify_identity_symbolic(),
          verify_hessian_flex_symbolic()};
}

std::vector<Report> run_full_suite(const CurveParams<Fp>& params, unsigned dmax) {
  std::vector<Report> out = run_symbolic_suite();
  out.push_back(verify_translation(params));
  out.push_back(verify_chord_lines(params));
  out.push_back(verify_fibers(params));
  out.push_back(verify_image_curve(params, dmax));
  out.push_back(verify_weierstrass_flexes(params));
  out.push_back(verify_flex_correspondence(params));
  out.push_back(verify_quotient(params));

  // Smallest point order >= 4 present in the group.
  long long order = 4;
  if (params.a().modulus() >= 101) {
    const auto points = enumerate_points(params);
    const auto count = static_cast<long long>(points.size());
    long long best = 0;
    for (const auto& q : points) {
      long long n = point_order(q, count);
      if (n >= 4 && (best == 0 || n < best)) best = n;
    }
    if (best != 0) order = best;
  }
  out.push_back(verify_degree_remark(params, order, dmax));
  return out;
}

std::vector<CurveParams<Fp>> sample_curves(const PrimeField& field, std::size_t count,
                                           std::uint64_t seed) {
  std::uint64_t state = seed;
  auto next = [&state, &field]() {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<long long>((state >> 33) % field.modulus());
  };
  std::vector<CurveParams<Fp>> out;
  while (out.size() < count) {
    Fp a = field(next());
    Fp b = field(next());
    try {
      out.push_back(validate_curve(a, b));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace chordcubic
