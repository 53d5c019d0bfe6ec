#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "chordcubic/chord.hpp"
#include "chordcubic/curve.hpp"
#include "chordcubic/serialize.hpp"
#include "chordcubic/verify.hpp"

namespace chordcubic::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Request {
  std::string subcommand;
  std::optional<std::string> a, b, x, y;
  std::vector<std::uint64_t> primes;
  std::optional<long long> order;
  unsigned dmax = 8;
  std::uint64_t seed = 1;
  std::optional<std::size_t> random;
  std::string format = "json";
  bool timings = false;
};

Json reports_json(const std::vector<Report>& reports, bool timings) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(report_json(r, timings));
  return out;
}

int exit_for(const std::vector<Report>& reports) {
  return all_passed(reports) ? kExitOk : kExitCheckFailed;
}

std::string require(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw Error(ErrorKind::out_of_range, std::string("missing required flag ") + flag);
  return *v;
}

PrimeField single_prime(const Request& req) {
  if (req.primes.size() != 1) {
    throw Error(ErrorKind::out_of_range, "exactly one --prime is required");
  }
  return PrimeField(req.primes.front());
}

CurveParams<Rational> rational_curve(const Request& req) {
  return validate_curve(Rational::parse(require(req.a, "--a")),
                        Rational::parse(require(req.b, "--b")));
}

CurveParams<Fp> reduced_curve(const Request& req, const PrimeField& field) {
  return validate_curve(field.from_rational(Rational::parse(require(req.a, "--a"))),
                        field.from_rational(Rational::parse(require(req.b, "--b"))));
}

std::string field_name(const Rational&) { return "Q"; }
std::string field_name(const Fp& s) { return "F_" + std::to_string(s.modulus()); }

template <FieldElement S>
Json cubic_output(const CurveParams<S>& params) {
  return {{"command", "cubic"},
          {"field", field_name(params.a())},
          {"curve", curve_json(params)},
          {"cubic", form_json(chord_cubic(params))},
          {"invariants", invariants_json(cubic_invariants(params))}};
}

template <FieldElement S>
Json map_output(const CurveParams<S>& params, const std::optional<std::pair<S, S>>& xy) {
  CurvePoint<S> p = xy ? CurvePoint<S>::affine(params, xy->first, xy->second)
                       : CurvePoint<S>::infinity(params);
  return {{"command", "map"},
          {"field", field_name(params.a())},
          {"curve", curve_json(params)},
          {"point", to_string(p)},
          {"translate", to_string(translate_by_beta(p))},
          {"line", to_string(chord_map(p))}};
}

struct Outcome {
  Json json;
  int exit_code;
};

Outcome dispatch(const Request& req) {
  const std::string& cmd = req.subcommand;
  if (cmd == "identity") {
    auto reports = run_symbolic_suite();
    return {{{"command", cmd}, {"reports", reports_json(reports, req.timings)}},
            exit_for(reports)};
  }
  if (cmd == "cubic") {
    if (req.primes.empty()) return {cubic_output(rational_curve(req)), kExitOk};
    return {cubic_output(reduced_curve(req, single_prime(req))), kExitOk};
  }
  if (cmd == "map") {
    if (req.x.has_value() != req.y.has_value()) {
      throw Error(ErrorKind::out_of_range, "--x and --y must be given together");
    }
    if (req.primes.empty()) {
      std::optional<std::pair<Rational, Rational>> xy;
      if (req.x) xy.emplace(Rational::parse(*req.x), Rational::parse(*req.y));
      return {map_output(rational_curve(req), xy), kExitOk};
    }
    PrimeField field = single_prime(req);
    std::optional<std::pair<Fp, Fp>> xy;
    if (req.x) {
      xy.emplace(field.from_rational(Rational::parse(*req.x)),
                 field.from_rational(Rational::parse(*req.y)));
    }
    return {map_output(reduced_curve(req, field), xy), kExitOk};
  }
  if (cmd == "suite") {
    PrimeField field = single_prime(req);
    std::vector<CurveParams<Fp>> curves;
    if (req.random) {
      curves = sample_curves(field, *req.random, req.seed);
    } else {
      curves.push_back(reduced_curve(req, field));
    }
    Json runs = Json::array();
    bool ok = true;
    for (const auto& params : curves) {
      auto reports = run_full_suite(params, req.dmax);
      ok = ok && all_passed(reports);
      runs.push_back({{"curve", curve_json(params)}, {"reports", reports_json(reports, req.timings)}});
    }
    return {{{"command", cmd}, {"prime", field.modulus()}, {"runs", runs}},
            ok ? kExitOk : kExitCheckFailed};
  }
  if (cmd == "degree") {
    PrimeField field = single_prime(req);
    if (!req.order) throw Error(ErrorKind::out_of_range, "missing required flag --order");
    auto params = reduced_curve(req, field);
    std::vector<Report> reports{verify_degree_remark(params, *req.order, req.dmax)};
    return {{{"command", cmd}, {"curve", curve_json(params)}, {"prime", field.modulus()},
             {"reports", reports_json(reports, req.timings)}},
            exit_for(reports)};
  }
  if (cmd == "quotient") {
    auto params = rational_curve(req);
    std::vector<std::uint32_t> primes;
    for (auto p : req.primes) primes.push_back(PrimeField(p).modulus());
    if (primes.empty()) primes = {101, 211, 409};
    std::vector<Report> reports{verify_quotient(params, primes)};
    return {{{"command", cmd}, {"curve", curve_json(params)}, {"primes", primes},
             {"reports", reports_json(reports, req.timings)}},
            exit_for(reports)};
  }
  if (cmd == "flexes") {
    PrimeField field = single_prime(req);
    auto params = reduced_curve(req, field);
    std::vector<Report> reports{verify_flex_correspondence(params)};
    return {{{"command", cmd}, {"curve", curve_json(params)}, {"prime", field.modulus()},
             {"reports", reports_json(reports, req.timings)}},
            exit_for(reports)};
  }
  throw Error(ErrorKind::unknown_subcommand, "unknown subcommand '" + cmd + "'");
}

void text_reports(std::ostringstream& out, const Json& reports, const std::string& indent) {
  for (const auto& r : reports) {
    out << indent << r["claim"].get<std::string>() << ": " << r["status"].get<std::string>();
    const auto& witness = r["witness"].get<std::string>();
    if (!witness.empty()) out << " (" << witness << ")";
    out << "\n";
  }
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  for (const auto& [key, value] : j.items()) {
    if (key == "reports") {
      text_reports(out, value, "");
    } else if (key == "runs") {
      for (const auto& run : value) {
        out << "curve a=" << run["curve"]["a"].get<std::string>()
            << " b=" << run["curve"]["b"].get<std::string>() << "\n";
        text_reports(out, run["reports"], "  ");
      }
    } else {
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return out.str();
}

CommandResult rejected(ErrorKind kind, const std::string& message) {
  Json diag{{"error", std::string(to_string(kind))}, {"message", message}};
  return {kExitRejected, diag.dump() + "\n", message + "\n"};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Request req;
  CLI::App app{"Chord construction on plane cubics: exact computation and verification",
               "chordcubic"};
  app.require_subcommand(1);

  auto add_flags = [&req](CLI::App* sub) {
    sub->add_option("--a", req.a, "curve coefficient a (rational n/d)");
    sub->add_option("--b", req.b, "curve coefficient b (rational n/d)");
    sub->add_option("--prime", req.primes, "odd prime 3 < p < 2^16 (repeatable for quotient)");
    sub->add_option("--order", req.order, "order of the translation point (degree)");
    sub->add_option("--x", req.x, "affine x of the point (map)");
    sub->add_option("--y", req.y, "affine y of the point (map)");
    sub->add_option("--dmax", req.dmax, "largest interpolation degree tried")->check(CLI::Range(1, 8));
    sub->add_option("--seed", req.seed, "seed of the curve sampler");
    sub->add_option("--random", req.random, "number of sampled curves (suite)");
    sub->add_option("--format", req.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_flag("--timings", req.timings, "include per-check milliseconds");
  };
  const std::vector<std::pair<const char*, const char*>> subcommands{
      {"identity", "symbolic identities (incidence, image cubic, flex Hessian)"},
      {"cubic", "image cubic coefficients and invariants"},
      {"map", "chord of one point (O when --x/--y are absent)"},
      {"suite", "every check over F_p for one curve or --random N curves"},
      {"degree", "degree-1 map with sextic image for a translation of --order"},
      {"quotient", "2-isogeny identity and point counts of the image cubic"},
      {"flexes", "flexes of the image cubic from 3-torsion"},
  };
  for (const auto& [name, help] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_flags(sub);
    sub->callback([&req, n = std::string(name)] { req.subcommand = n; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    bool unknown = !args.empty() && std::none_of(subcommands.begin(), subcommands.end(),
                                                 [&](const auto& s) { return args[0] == s.first; });
    return rejected(unknown ? ErrorKind::unknown_subcommand : ErrorKind::out_of_range, e.what());
  }

  try {
    Outcome outcome = dispatch(req);
    std::string out = req.format == "text" ? render_text(outcome.json) : outcome.json.dump(2) + "\n";
    return {outcome.exit_code, out, ""};
  } catch (const Error& e) {
    return rejected(e.kind(), e.what());
  }
}

}  // namespace chordcubic::cli
