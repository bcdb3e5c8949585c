#pragma once

#include "gtmono/analysis.hpp"
#include "gtmono/bases.hpp"
#include "gtmono/expression.hpp"
#include "gtmono/io.hpp"
#include "gtmono/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace gtmono::cli {

enum ExitCode { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

/// Raised for malformed command lines or inputs; maps to exit code 2.
class UsageError : public Error {
public:
  using Error::Error;
};

struct Options {
  std::string space = "clifford";
  int m = 3;
  int k = -1;
  std::string chirality = "+";
  bool json = false;
  bool text = false;
  bool approx = false;
  std::string input;
  std::string property;
  bool roundtrip = false;
  std::string decompose_kind;
};

namespace detail {

inline SpaceKind space_of(const std::string &name) {
  if (name == "harmonic")
    return SpaceKind::harmonic;
  if (name == "clifford")
    return SpaceKind::clifford;
  if (name == "spinor")
    return SpaceKind::spinor;
  throw UsageError("unknown space '" + name + "'");
}

inline Chirality chirality_of(const std::string &s) {
  if (s == "+")
    return Chirality::plus;
  if (s == "-")
    return Chirality::minus;
  throw UsageError("chirality must be '+' or '-'");
}

inline void require_m(const Options &o, int lowest = 3) {
  if (o.m < lowest || o.m > 8)
    throw UsageError("-m must lie in " + std::to_string(lowest) + "..8");
}

inline std::string read_input(const Options &o, std::istream &in) {
  if (o.input.empty())
    throw UsageError("--input PATH or --input - is required");
  if (o.input == "-")
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(o.input);
  if (!file)
    throw UsageError("cannot open input file '" + o.input + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

/// Expression text, or polynomial JSON when the first non-blank character is '{'.
inline CliffPoly read_poly(const std::string &source, int nvars, int alg_dim) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') {
    io::json j;
    try {
      j = io::json::parse(source);
    } catch (const io::json::parse_error &e) {
      throw UsageError(std::string("invalid JSON input: ") + e.what());
    }
    CliffPoly p = io::poly_from_json(j, alg_dim);
    if (p.nvars() != nvars)
      throw UsageError("input has " + std::to_string(p.nvars()) + " variables, expected " +
                       std::to_string(nvars));
    if (!p.is_zero() && p.algebra_dimension() != alg_dim)
      throw UsageError("input coefficients live in C_" +
                       std::to_string(p.algebra_dimension()) + ", expected C_" +
                       std::to_string(alg_dim));
    return p.is_zero() ? CliffPoly(nvars, alg_dim) : p;
  }
  return parse_poly(source, nvars, alg_dim);
}

inline void emit(std::ostream &out, const io::json &j) { out << j.dump(2) << '\n'; }

inline int cmd_basis(const Options &o, std::ostream &out) {
  const SpaceKind space = space_of(o.space);
  require_m(o);
  if (o.k < 0)
    throw UsageError("basis needs -k");
  const Chirality chirality = chirality_of(o.chirality);
  const auto elements = basis_elements(space, o.m, static_cast<unsigned>(o.k), chirality);
  if (o.text) {
    for (const auto &e : elements)
      out << e.mu << (e.nu.empty() ? "" : " " + e.nu) << '\t' << to_expression(e.poly)
          << '\n';
    return exit_ok;
  }
  io::json list = io::json::array();
  for (const auto &e : elements) {
    io::json item = {{"k", e.k}, {"mu", e.mu}};
    if (!e.nu.empty())
      item["nu"] = e.nu;
    item["poly"] = io::poly_to_json(e.poly, o.approx);
    list.push_back(std::move(item));
  }
  io::json doc = {{"space", o.space}, {"m", o.m}, {"k", o.k}};
  if (space == SpaceKind::spinor)
    doc["chirality"] = std::string(1, chirality_char(effective_chirality(o.m, chirality)));
  doc["elements"] = std::move(list);
  emit(out, doc);
  return exit_ok;
}

inline int cmd_check(const Options &o, std::ostream &out, std::ostream &err) {
  const SpaceKind space = space_of(o.space);
  require_m(o);
  const unsigned k = o.k < 0 ? 2 : static_cast<unsigned>(o.k);
  const Chirality chirality = chirality_of(o.chirality);
  CheckReport report;
  if (o.property == "appell")
    report = check_appell(space, o.m, k, chirality);
  else if (o.property == "monogenicity")
    report = check_monogenicity(space, o.m, k, chirality);
  else if (o.property == "orthogonality")
    report = check_orthogonality(space, o.m, k, chirality);
  else if (o.property == "ck")
    report = check_ck(o.m, k);
  else if (o.property == "dimensions")
    report = check_dimensions(space, o.m, k, chirality);
  else if (o.property == "coeff-relation")
    report = check_coefficient_relation(o.m, k, chirality);
  else
    throw UsageError("unknown property '" + o.property + "'");

  for (const auto &f : report.failures)
    err << "FAIL " << f << '\n';
  for (const auto &n : report.notes)
    err << "note: " << n << '\n';
  if (o.json) {
    emit(out, {{"property", o.property},
               {"space", o.space},
               {"m", o.m},
               {"k", k},
               {"checked", report.checked},
               {"failed", report.failures.size()},
               {"ok", report.ok()}});
  } else {
    out << (report.ok() ? "PASS " : "FAIL ") << o.property << ' ' << o.space << " m=" << o.m
        << " k<=" << k << " (" << report.checked - report.failures.size() << '/'
        << report.checked << ")\n";
  }
  return report.ok() ? exit_ok : exit_failed;
}

inline int cmd_expand(const Options &o, std::ostream &out, std::istream &in) {
  const SpaceKind space = space_of(o.space);
  require_m(o);
  const ExpansionContext ctx{o.m, chirality_of(o.chirality)};
  const int alg = space == SpaceKind::spinor ? spinor_algebra_dimension(o.m) : o.m;
  const CliffPoly g = read_poly(read_input(o, in), o.m, alg);
  const TaylorTable table = taylor_expand(g, space, ctx);
  bool exact = true;
  if (o.roundtrip)
    exact = reconstruct(table, space, ctx) == g;
  if (o.text) {
    for (const auto &e : table.entries)
      out << label_to_string(e.k, e.mu) << (e.nu ? " " + e.nu->signs : "") << '\t'
          << to_string(e.coeff) << '\n';
    if (o.roundtrip)
      out << "roundtrip_exact " << (exact ? "true" : "false") << '\n';
  } else if (o.roundtrip) {
    emit(out, {{"table", io::taylor_to_json(table, o.approx)}, {"roundtrip_exact", exact}});
  } else {
    emit(out, io::taylor_to_json(table, o.approx));
  }
  return exact ? exit_ok : exit_failed;
}

inline int cmd_decompose(const Options &o, std::ostream &out, std::istream &in) {
  require_m(o);
  io::json parts = io::json::array();
  int k = o.k;
  if (o.decompose_kind == "branch") {
    const CliffPoly p = read_poly(read_input(o, in), o.m, o.m);
    if (k < 0)
      k = std::max(p.degree(), 0);
    const auto pieces = branch_decompose_harmonic(p, static_cast<unsigned>(k));
    for (std::size_t j = 0; j < pieces.size(); ++j)
      parts.push_back({{"j", j}, {"poly", io::poly_to_json(pieces[j], o.approx)}});
  } else if (o.decompose_kind == "fischer") {
    const CliffPoly p = read_poly(read_input(o, in), o.m - 1, o.m);
    if (k < 0)
      k = std::max(p.degree(), 0);
    for (const auto &[j, mj] : fischer_decompose(p, static_cast<unsigned>(k)))
      parts.push_back({{"j", j}, {"poly", io::poly_to_json(mj, o.approx)}});
  } else {
    throw UsageError("decompose needs 'branch' or 'fischer'");
  }
  emit(out, {{"kind", o.decompose_kind}, {"m", o.m}, {"k", k}, {"components", parts}});
  return exit_ok;
}

inline void add_common(CLI::App *sub, Options &o) {
  sub->add_option("--space", o.space, "harmonic | clifford | spinor")
      ->check(CLI::IsMember({"harmonic", "clifford", "spinor"}));
  sub->add_option("-m", o.m, "dimension of R^m");
  sub->add_option("-k", o.k, "degree (check: maximal degree)");
  sub->add_option("--chirality", o.chirality, "spinor chirality, + or -")
      ->check(CLI::IsMember({"+", "-"}));
  auto *json = sub->add_flag("--json", o.json, "JSON output (default)");
  auto *text = sub->add_flag("--text", o.text, "plain text output");
  json->excludes(text);
  sub->add_flag("--approx", o.approx, "add decimal renderings next to exact values");
}

} // namespace detail

/// Runs one command line (without the program name) and returns its exit code.
inline int run_command(const std::vector<std::string> &args, std::ostream &out,
                       std::ostream &err, std::istream &in) {
  Options o;
  CLI::App app{"Exact Gelfand-Tsetlin Appell bases and Taylor expansions", "gtmono"};
  app.require_subcommand(1);
  auto *basis = app.add_subcommand("basis", "print the basis elements of degree k");
  auto *check = app.add_subcommand("check", "verify a property for all degrees <= k");
  auto *expand = app.add_subcommand("expand", "Taylor table of an input polynomial");
  auto *decompose = app.add_subcommand("decompose", "branch or Fischer decomposition");
  for (auto *sub : {basis, check, expand, decompose})
    detail::add_common(sub, o);
  check->add_option("--property", o.property,
                    "appell | orthogonality | monogenicity | ck | dimensions | coeff-relation")
      ->required();
  for (auto *sub : {expand, decompose})
    sub->add_option("--input", o.input, "input file, or - for stdin");
  expand->add_flag("--roundtrip", o.roundtrip, "reconstruct and compare with the input");
  decompose->add_option("kind", o.decompose_kind, "branch | fischer")
      ->required()
      ->check(CLI::IsMember({"branch", "fischer"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (basis->parsed())
      return detail::cmd_basis(o, out);
    if (check->parsed())
      return detail::cmd_check(o, out, err);
    if (expand->parsed())
      return detail::cmd_expand(o, out, in);
    return detail::cmd_decompose(o, out, in);
  } catch (const NotInSpace &e) {
    err << e.what() << '\n';
    return exit_failed;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const ParseError &e) {
    err << "parse error at " << e.what() << '\n';
    return exit_usage;
  } catch (const io::FormatError &e) {
    err << "format error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return exit_failed;
  }
}

} // namespace gtmono::cli
