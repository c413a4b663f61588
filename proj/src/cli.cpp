// Copyright 2026 The hankelgf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hankelgf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string_view>

#include "hankelgf/correspondence.hpp"
#include "hankelgf/enumeration.hpp"
#include "hankelgf/error.hpp"
#include "hankelgf/format.hpp"
#include "hankelgf/poly.hpp"
#include "hankelgf/structured.hpp"

namespace hankelgf::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string field;
  std::string format;
  unsigned jobs = 1;
  std::uint64_t budget = 100'000'000;

  // operands
  std::string u, v, f, g, matrix;
  std::optional<std::size_t> terms, order;
  std::vector<std::string> hankel_rank, stratum, stratum_rank, rank_at_most, hankel, sigma;
  std::string coprime;
};

json big(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

json codes_json(std::span<const Elt> elts) {
  json arr = json::array();
  for (Elt e : elts) arr.push_back(e.code);
  return arr;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).code);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string field_value(const Field& field) { return render_field(field).substr(2); }

/// Parses `k=v` tokens; exactly the listed keys must appear, once each.
std::map<std::string, std::uint64_t> parse_params(const std::vector<std::string>& tokens,
                                                  std::initializer_list<std::string_view> keys) {
  std::map<std::string, std::uint64_t> out;
  const std::set<std::string_view> allowed(keys);
  for (const std::string& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw InvalidArgument("expected key=value, got '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    if (!allowed.contains(key)) throw InvalidArgument("unexpected parameter '" + key + "'");
    if (out.contains(key)) throw InvalidArgument("duplicate parameter '" + key + "'");
    out[key] = parse_uint(std::string_view(tok).substr(eq + 1), key);
  }
  for (std::string_view k : keys) {
    if (!out.contains(std::string(k))) throw InvalidArgument("missing parameter '" + std::string(k) + "'");
  }
  return out;
}

std::vector<std::size_t> parse_degrees(const std::string& text) {
  std::vector<std::size_t> out;
  for (auto d : parse_uint_list(text, "degree")) out.push_back(static_cast<std::size_t>(d));
  return out;
}

bool wants_json(const Options& o, bool default_json) {
  if (o.format.empty()) return default_json;
  return o.format == "json";
}

EnumerationOptions enumeration_options(const Options& o) { return {o.budget, o.jobs}; }

HankelMatrix parse_matrix_operand(const std::string& text, const std::optional<Field>& field) {
  if (text.starts_with("T:")) return toeplitz_to_hankel(parse_toeplitz(text, field));
  return parse_hankel(text, field);
}

std::optional<Field> optional_field(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  return parse_field(o.field);
}

Field required_field(const Options& o) {
  if (o.field.empty()) throw InvalidArgument("--field is required");
  return parse_field(o.field);
}

int cmd_expand(const Options& o, std::ostream& out) {
  const Field field = required_field(o);
  const PadePair pair(parse_poly(o.u, field), parse_poly(o.v, field));
  const std::size_t terms = o.terms.value_or(2 * pair.order());
  const std::vector<Elt> a = pade_expand(pair, terms);
  if (wants_json(o, false)) {
    out << json{{"q", field_value(field)}, {"u", render_poly(pair.u())}, {"v", render_poly(pair.v())},
                {"n", pair.order()}, {"terms", codes_json(a)}}.dump()
        << '\n';
  } else {
    out << render_codes(a) << '\n';
  }
  return kOk;
}

int cmd_bezout(const Options& o, std::ostream& out) {
  const Field field = required_field(o);
  const Poly u = parse_poly(o.u, field);
  const Poly v = parse_poly(o.v, field);
  const std::size_t n = o.order.value_or(std::max(u.degree().value_or(0), v.degree().value_or(0)));
  const Matrix b = bezoutian(u, v, n);
  if (wants_json(o, false)) {
    out << json{{"q", field_value(field)}, {"u", render_poly(u)}, {"v", render_poly(v)}, {"n", n},
                {"rows", matrix_json(b)}, {"rank", rank(field, b)}}.dump()
        << '\n';
  } else {
    out << render_matrix(b) << '\n';
  }
  return kOk;
}

int cmd_hankel(const Options& o, std::ostream& out) {
  if (!o.matrix.empty()) {
    const HankelMatrix h = parse_matrix_operand(o.matrix, optional_field(o));
    const std::size_t r = rank(h);
    const std::size_t d = delta(h);
    if (wants_json(o, false)) {
      out << json{{"matrix", render_hankel(h)}, {"rows", matrix_json(h.dense())}, {"rank", r}, {"delta", d},
                  {"nonsingular", r == h.order()}}.dump()
          << '\n';
    } else {
      out << "rank=" << r << " delta=" << d << '\n';
    }
    return kOk;
  }
  const Field field = required_field(o);
  const PadePair pair(parse_poly(o.u, field), parse_poly(o.v, field));
  const BarnettFactors factors = barnett_triple(pair);
  if (wants_json(o, false)) {
    out << json{{"q", field_value(field)},
                {"u", render_poly(pair.u())},
                {"v", render_poly(pair.v())},
                {"n", pair.order()},
                {"hankel", render_hankel(factors.hankel)},
                {"bezoutian_uv", matrix_json(factors.bezoutian_uv)},
                {"bezoutian_u1", matrix_json(factors.bezoutian_u1)},
                {"barnett", true}}
               .dump()
        << '\n';
  } else {
    out << render_hankel(factors.hankel) << '\n';
  }
  return kOk;
}

int cmd_sigma(const Options& o, std::ostream& out) {
  const Field field = required_field(o);
  const CoprimePair pair(parse_poly(o.f, field), parse_poly(o.g, field));
  const HermitePair h = to_hermite(pair);
  const ToeplitzMatrix t = sigma(pair);
  if (wants_json(o, false)) {
    out << json{{"q", field_value(field)}, {"f", render_poly(pair.f())}, {"g", render_poly(pair.g())},
                {"u", render_poly(h.u())},     {"v", render_poly(h.v())},     {"n", pair.order()},
                {"toeplitz", render_toeplitz(t)}, {"rows", matrix_json(t.dense())}}
               .dump()
        << '\n';
  } else {
    out << render_toeplitz(t) << '\n';
  }
  return kOk;
}

int cmd_fiber(const Options& o, std::ostream& out) {
  const HankelMatrix b = parse_matrix_operand(o.matrix, optional_field(o));
  const std::vector<CoprimePair> pairs = fiber(b);
  const std::vector<Elt> lambdas = b.field().elements();
  if (wants_json(o, true)) {
    json arr = json::array();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const HermitePair h = to_hermite(pairs[i]);
      arr.push_back(json{{"lambda", lambdas[i].code},
                         {"u", render_poly(h.u())},
                         {"v", render_poly(h.v())},
                         {"f", render_poly(pairs[i].f())},
                         {"g", render_poly(pairs[i].g())},
                         {"n", pairs[i].order()},
                         {"q", field_value(b.field())}});
    }
    out << arr.dump() << '\n';
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      out << "lambda=" << lambdas[i].code << " f=" << render_poly(pairs[i].f())
          << " g=" << render_poly(pairs[i].g()) << '\n';
    }
  }
  return kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const std::uint64_t q = required_field(o).order();
  const int chosen = !o.hankel_rank.empty() + !o.stratum.empty() + !o.stratum_rank.empty() +
                     !o.rank_at_most.empty() + !o.coprime.empty();
  if (chosen != 1) {
    throw InvalidArgument(
        "count needs exactly one of --hankel-rank, --stratum, --stratum-rank, --rank-at-most, --coprime");
  }
  BigInt value;
  json query;
  if (!o.hankel_rank.empty()) {
    auto p = parse_params(o.hankel_rank, {"n", "r"});
    value = count_hankel_by_rank(q, p["n"], p["r"]);
    query = {{"kind", "hankel-rank"}, {"n", p["n"]}, {"r", p["r"]}};
  } else if (!o.stratum.empty()) {
    auto p = parse_params(o.stratum, {"n", "k"});
    value = count_stratum(q, p["n"], p["k"]);
    query = {{"kind", "stratum"}, {"n", p["n"]}, {"k", p["k"]}};
  } else if (!o.stratum_rank.empty()) {
    auto p = parse_params(o.stratum_rank, {"n", "k", "r"});
    value = count_stratum_rank(q, p["n"], p["k"], p["r"]);
    query = {{"kind", "stratum-rank"}, {"n", p["n"]}, {"k", p["k"]}, {"r", p["r"]}};
  } else if (!o.rank_at_most.empty()) {
    auto p = parse_params(o.rank_at_most, {"n", "r"});
    value = count_rank_at_most(q, p["n"], p["r"]);
    query = {{"kind", "rank-at-most"}, {"n", p["n"]}, {"r", p["r"]}};
  } else {
    const auto degrees = parse_degrees(o.coprime);
    value = count_coprime_tuples(q, degrees);
    query = {{"kind", "coprime"}, {"degrees", degrees}};
  }
  if (wants_json(o, false)) {
    json doc{{"q", q}};
    doc.update(query);
    doc["count"] = big(value);
    out << doc.dump() << '\n';
  } else {
    out << value.str() << '\n';
  }
  return kOk;
}

json census_json(const CensusTable& table) {
  json cells = json::array();
  for (const auto& [key, c] : table.cells) {
    cells.push_back(json{{"rank", key.first}, {"delta", key.second}, {"count", big(c)}});
  }
  return json{{"q", table.field.order()}, {"n", table.n}, {"cells", cells}, {"total", big(table.total())}};
}

json coprime_census_json(const CoprimeCensus& census) {
  json cells = json::array();
  for (const auto& [d, c] : census.by_gcd_degree) cells.push_back(json{{"gcd_degree", d}, {"count", big(c)}});
  return json{{"q", census.field.order()},
              {"degrees", census.degrees},
              {"cells", cells},
              {"total", big(census.total())}};
}

int cmd_census(const Options& o, std::ostream& out) {
  const Field field = required_field(o);
  if (o.hankel.empty() == o.coprime.empty()) throw InvalidArgument("census needs exactly one of --hankel, --coprime");
  const bool as_json = wants_json(o, true);
  if (!o.hankel.empty()) {
    const auto p = parse_params(o.hankel, {"n"});
    const CensusTable table = brute_hankel_census(field, p.at("n"), enumeration_options(o));
    if (as_json) {
      out << census_json(table).dump() << '\n';
    } else {
      for (const auto& [key, c] : table.cells) out << "rank=" << key.first << " delta=" << key.second << " count=" << c << '\n';
      out << "total=" << table.total() << '\n';
    }
    return kOk;
  }
  const CoprimeCensus census = brute_coprime_census(field, parse_degrees(o.coprime), enumeration_options(o));
  if (as_json) {
    out << coprime_census_json(census).dump() << '\n';
  } else {
    for (const auto& [d, c] : census.by_gcd_degree) out << "gcd_degree=" << d << " count=" << c << '\n';
    out << "total=" << census.total() << '\n';
  }
  return kOk;
}

void emit_report(const json& report, bool as_json, std::ostream& out) {
  if (as_json) {
    out << report.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : report.items()) out << key << '=' << value.dump() << '\n';
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Field field = required_field(o);
  const int chosen = !o.sigma.empty() + !o.hankel.empty() + !o.coprime.empty();
  if (chosen != 1) throw InvalidArgument("verify needs exactly one of --sigma, --hankel, --coprime");
  const bool as_json = wants_json(o, true);
  const std::uint64_t q = field.order();

  if (!o.sigma.empty()) {
    const auto p = parse_params(o.sigma, {"n"});
    const SigmaReport r = verify_sigma(field, p.at("n"), enumeration_options(o));
    emit_report(json{{"q", r.q},
                     {"n", r.n},
                     {"pairs", r.pairs},
                     {"images", r.images},
                     {"expected_images", r.expected_images},
                     {"images_nonsingular", r.images_nonsingular},
                     {"surjective", r.surjective},
                     {"fibers_uniform", r.fibers_uniform},
                     {"fiber_size", r.fiber_size},
                     {"fibers_reconstructed", r.fibers_reconstructed},
                     {"passed", r.passed()}},
                as_json, out);
    return r.passed() ? kOk : kCheckFailed;
  }

  if (!o.hankel.empty()) {
    const std::size_t n = parse_params(o.hankel, {"n"}).at("n");
    const CensusTable table = brute_hankel_census(field, n, enumeration_options(o));
    bool ranks = true, strata = true, strata_rank = true;
    for (const auto& [r, c] : table.by_rank()) ranks = ranks && c == count_hankel_by_rank(q, n, r);
    for (const auto& [k, c] : table.by_delta()) strata = strata && c == count_stratum(q, n, k);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k <= r; ++k) {
        strata_rank = strata_rank && table.delta_rank_at_most(k, r) == count_stratum_rank(q, n, k, r);
      }
    }
    const bool total = table.total() == boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(2 * n - 1));
    const bool passed = ranks && strata && strata_rank && total;
    emit_report(json{{"q", q},
                     {"n", n},
                     {"total", big(table.total())},
                     {"total_matches", total},
                     {"rank_counts_match", ranks},
                     {"stratum_counts_match", strata},
                     {"stratum_rank_counts_match", strata_rank},
                     {"passed", passed}},
                as_json, out);
    return passed ? kOk : kCheckFailed;
  }

  const auto degrees = parse_degrees(o.coprime);
  const CoprimeCensus census = brute_coprime_census(field, degrees, enumeration_options(o));
  const BigInt expected = count_coprime_tuples(q, degrees);
  const bool coprime_ok = census.by_gcd_degree.at(0) == expected;
  // |S_d| = q^d N(n_1 - d, ..., n_m - d)
  bool partition_ok = true;
  for (const auto& [d, c] : census.by_gcd_degree) {
    std::vector<std::size_t> reduced;
    for (std::size_t n : degrees) reduced.push_back(n - d);
    partition_ok = partition_ok && c == boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d)) *
                                            count_coprime_tuples(q, reduced);
  }
  const bool passed = coprime_ok && partition_ok;
  emit_report(json{{"q", q},
                   {"degrees", degrees},
                   {"coprime", big(census.by_gcd_degree.at(0))},
                   {"expected", big(expected)},
                   {"total", big(census.total())},
                   {"coprime_matches", coprime_ok},
                   {"gcd_partition_matches", partition_ok},
                   {"passed", passed}},
              as_json, out);
  return passed ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coprime polynomial pairs and Hankel/Toeplitz matrices over finite fields", "hankelgf"};
  app.require_subcommand(1);
  Options o;

  const auto common = [&o](CLI::App* sub) {
    sub->add_option("--field", o.field, "Field, e.g. q=2, q=3^2 or q=2^2:1,1,1");
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", o.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    sub->add_option("--budget", o.budget, "Maximum number of enumerated objects")->check(CLI::PositiveNumber);
  };

  auto* expand = app.add_subcommand("expand", "Expansion coefficients of v/u at infinity");
  common(expand);
  expand->add_option("--u", o.u, "Monic denominator")->required();
  expand->add_option("--v", o.v, "Numerator with deg v < deg u")->required();
  expand->add_option("--terms", o.terms, "Number of coefficients (default 2n)");

  auto* bezout = app.add_subcommand("bezout", "Bezoutian matrix of two polynomials");
  common(bezout);
  bezout->add_option("--u", o.u)->required();
  bezout->add_option("--v", o.v)->required();
  bezout->add_option("--n", o.order, "Order (default max degree)");

  auto* hankel = app.add_subcommand("hankel", "Hankel matrix of a Pade pair, or rank/delta of a given matrix");
  common(hankel);
  auto* hu = hankel->add_option("--u", o.u);
  auto* hv = hankel->add_option("--v", o.v);
  auto* hm = hankel->add_option("--matrix", o.matrix, "H:... or T:... serialization");
  hu->needs(hv);
  hv->needs(hu);
  hm->excludes(hu)->excludes(hv);

  auto* sig = app.add_subcommand("sigma", "Toeplitz image of a coprime monic pair");
  common(sig);
  sig->add_option("--f", o.f)->required();
  sig->add_option("--g", o.g)->required();

  auto* fib = app.add_subcommand("fiber", "All coprime pairs over a nonsingular Hankel/Toeplitz matrix");
  common(fib);
  fib->add_option("--matrix", o.matrix, "H:... or T:... serialization")->required();

  auto* count = app.add_subcommand("count", "Closed-form counts");
  common(count);
  count->add_option("--hankel-rank", o.hankel_rank, "n=N r=R")->expected(2);
  count->add_option("--stratum", o.stratum, "n=N k=K")->expected(2);
  count->add_option("--stratum-rank", o.stratum_rank, "n=N k=K r=R")->expected(3);
  count->add_option("--rank-at-most", o.rank_at_most, "n=N r=R")->expected(2);
  count->add_option("--coprime", o.coprime, "Degree list, e.g. 2,1,1");

  auto* census = app.add_subcommand("census", "Exhaustive tallies");
  common(census);
  census->add_option("--hankel", o.hankel, "n=N")->expected(1);
  census->add_option("--coprime", o.coprime, "Degree list");

  auto* verify = app.add_subcommand("verify", "Exhaustive verification against closed forms");
  common(verify);
  verify->add_option("--sigma", o.sigma, "n=N")->expected(1);
  verify->add_option("--hankel", o.hankel, "n=N")->expected(1);
  verify->add_option("--coprime", o.coprime, "Degree list");

  // CLI11 consumes arguments from the back, without the program name.
  std::vector<std::string> rev;
  for (std::size_t i = args.size(); i-- > 1;) rev.push_back(args[i]);
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInvalidInput;
  }

  try {
    if (expand->parsed()) return cmd_expand(o, out);
    if (bezout->parsed()) return cmd_bezout(o, out);
    if (hankel->parsed()) {
      if (o.matrix.empty() && o.u.empty()) throw InvalidArgument("hankel needs --u/--v or --matrix");
      return cmd_hankel(o, out);
    }
    if (sig->parsed()) return cmd_sigma(o, out);
    if (fib->parsed()) return cmd_fiber(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (census->parsed()) return cmd_census(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const InternalInconsistency& e) {
    err << "internal error: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace hankelgf::cli
