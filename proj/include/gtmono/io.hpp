#pragma once

#include "gtmono/analysis.hpp"
#include "gtmono/bases.hpp"
#include "gtmono/clifford.hpp"
#include "gtmono/poly.hpp"

#include "json.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gtmono::io {

using nlohmann::json;

class FormatError : public Error {
public:
  using Error::Error;
};

inline json rational_to_json(const Rational &q) { return to_string(q); }

inline Rational rational_from_json(const json &j) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidArgument &e) {
      throw FormatError(e.what());
    }
  }
  if (j.is_number_integer())
    return Rational(mpz_class(std::to_string(j.get<long long>())));
  throw FormatError("rational must be a \"num/den\" string");
}

/// {"m": dim, "blades": [{"idx": [...], "re": "p/q", "im": "p/q"}]}, blades in
/// lexicographic index order. With `approx`, decimal renderings are added
/// next to the exact fields.
inline json multivector_to_json(const Multivector &a, bool approx = false) {
  auto sorted = a.terms();
  std::sort(sorted.begin(), sorted.end(), [](const auto &x, const auto &y) {
    return blade_lex_less(x.first, y.first);
  });
  json blades = json::array();
  for (const auto &[mask, c] : sorted) {
    json b = {{"idx", blade_indices(mask)},
              {"re", rational_to_json(c.re())},
              {"im", rational_to_json(c.im())}};
    if (approx) {
      b["re_approx"] = to_double(c.re());
      b["im_approx"] = to_double(c.im());
    }
    blades.push_back(std::move(b));
  }
  return {{"m", a.dimension()}, {"blades", std::move(blades)}};
}

inline Multivector multivector_from_json(const json &j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("blades") ||
      !j["m"].is_number_integer() || !j["blades"].is_array())
    throw FormatError("multivector JSON needs integer \"m\" and array \"blades\"");
  const int dim = j["m"].get<int>();
  if (dim < 0 || dim > max_algebra_dimension)
    throw FormatError("multivector dimension out of range");
  std::vector<Multivector::Term> terms;
  std::vector<BladeMask> seen;
  for (const auto &b : j["blades"]) {
    if (!b.is_object() || !b.contains("idx") || !b["idx"].is_array())
      throw FormatError("blade entry needs an \"idx\" array");
    BladeMask mask = 0;
    try {
      mask = blade_mask(b["idx"].get<std::vector<int>>());
    } catch (const std::exception &e) {
      throw FormatError(std::string("bad blade index list: ") + e.what());
    }
    if (dim < 32 && (mask >> dim) != 0)
      throw FormatError("blade index exceeds m = " + std::to_string(dim));
    if (std::find(seen.begin(), seen.end(), mask) != seen.end())
      throw FormatError("duplicate blade in multivector JSON");
    seen.push_back(mask);
    Rational re = b.contains("re") ? rational_from_json(b["re"]) : Rational(0);
    Rational im = b.contains("im") ? rational_from_json(b["im"]) : Rational(0);
    terms.emplace_back(mask, GaussianRational(re, im));
  }
  return Multivector::from_terms(dim, std::move(terms));
}

/// {"m": nvars, "terms": [{"exp": [...], "coeff": <multivector>}]} in
/// graded-lex order.
inline json poly_to_json(const CliffPoly &p, bool approx = false) {
  json terms = json::array();
  for (const auto &[e, c] : p.terms())
    terms.push_back({{"exp", std::vector<int>(e.begin(), e.end())},
                     {"coeff", multivector_to_json(c, approx)}});
  return {{"m", p.nvars()}, {"terms", std::move(terms)}};
}

/// `alg_dim` is used for the zero polynomial, which carries no coefficient.
inline CliffPoly poly_from_json(const json &j, int alg_dim) {
  if (!j.is_object() || !j.contains("m") || !j.contains("terms") ||
      !j["m"].is_number_integer() || !j["terms"].is_array())
    throw FormatError("polynomial JSON needs integer \"m\" and array \"terms\"");
  const int nvars = j["m"].get<int>();
  if (nvars < 0)
    throw FormatError("negative variable count");
  if (!j["terms"].empty()) {
    const auto &first = j["terms"][0];
    if (!first.is_object() || !first.contains("coeff"))
      throw FormatError("term entry needs a \"coeff\"");
    alg_dim = multivector_from_json(first["coeff"]).dimension();
  }
  CliffPoly p(nvars, alg_dim);
  std::vector<ExponentVector> seen;
  for (const auto &t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("coeff") ||
        !t["exp"].is_array())
      throw FormatError("term entry needs \"exp\" and \"coeff\"");
    ExponentVector e;
    for (const auto &v : t["exp"]) {
      if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 65535)
        throw FormatError("exponents must be small nonnegative integers");
      e.push_back(static_cast<std::uint16_t>(v.get<long long>()));
    }
    if (static_cast<int>(e.size()) != nvars)
      throw FormatError("exponent vector length differs from m");
    if (std::find(seen.begin(), seen.end(), e) != seen.end())
      throw FormatError("duplicate monomial in polynomial JSON");
    seen.push_back(e);
    Multivector c = multivector_from_json(t["coeff"]);
    if (c.dimension() != alg_dim)
      throw FormatError("coefficients live in different algebras");
    p.add_term(std::move(e), c);
  }
  return p;
}

/// [{"k": int, "mu": "label", "nu": "signs"?, "coeff": <multivector>}].
inline json taylor_to_json(const TaylorTable &table, bool approx = false) {
  json out = json::array();
  for (const auto &e : table.entries) {
    json item = {{"k", e.k}, {"mu", label_to_string(e.k, e.mu)}};
    if (e.nu)
      item["nu"] = e.nu->signs;
    item["coeff"] = multivector_to_json(e.coeff, approx);
    out.push_back(std::move(item));
  }
  return out;
}

inline TaylorTable taylor_from_json(const json &j, SpaceKind kind, int m) {
  if (!j.is_array())
    throw FormatError("Taylor table JSON must be an array");
  TaylorTable table;
  for (const auto &item : j) {
    if (!item.is_object() || !item.contains("k") || !item.contains("mu") ||
        !item.contains("coeff") || !item["mu"].is_string())
      throw FormatError("Taylor entry needs \"k\", \"mu\" and \"coeff\"");
    TaylorEntry entry;
    const std::string label = item["mu"].get<std::string>();
    try {
      if (kind == SpaceKind::harmonic) {
        auto [k, mu] = parse_harmonic_label(label, m);
        entry.k = k;
        entry.mu = mu;
      } else {
        auto [k, mu] = parse_monogenic_label(label, m);
        entry.k = k;
        entry.mu = mu;
      }
      if (item.contains("nu"))
        entry.nu = parse_spin_label(item["nu"].get<std::string>());
    } catch (const InvalidArgument &e) {
      throw FormatError(e.what());
    }
    if (!item["k"].is_number_integer() || item["k"].get<long long>() != entry.k)
      throw FormatError("\"k\" disagrees with the label '" + label + "'");
    entry.coeff = multivector_from_json(item["coeff"]);
    table.entries.push_back(std::move(entry));
  }
  return table;
}

/// {"pi_power": int, "coeff": <multivector>}.
inline json ball_value_to_json(const ExactBallValue &v, bool approx = false) {
  return {{"pi_power", v.pi_power()}, {"coeff", multivector_to_json(v.coeff, approx)}};
}

inline ExactBallValue ball_value_from_json(const json &j, int m) {
  if (!j.is_object() || !j.contains("pi_power") || !j.contains("coeff"))
    throw FormatError("ball value JSON needs \"pi_power\" and \"coeff\"");
  if (j["pi_power"] != m / 2)
    throw FormatError("pi_power must be floor(m/2) = " + std::to_string(m / 2));
  return {m, multivector_from_json(j["coeff"])};
}

} // namespace gtmono::io
