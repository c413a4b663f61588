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

#include "hankelgf/format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>

#include "hankelgf/error.hpp"

namespace hankelgf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
  const std::uint64_t v = parse_uint(text, what);
  if (v > std::numeric_limits<std::uint32_t>::max()) {
    throw InvalidArgument(std::string(what) + " out of range: " + std::string(text));
  }
  return static_cast<std::uint32_t>(v);
}

Elt parse_elt(std::string_view text, const Field& field) {
  const std::uint32_t c = parse_u32(text, "coefficient");
  if (!field.contains(Elt(c))) {
    throw InvalidArgument("coefficient " + std::string(text) + " is not a code of GF(" +
                          std::to_string(field.order()) + ")");
  }
  return Elt(c);
}

Poly parse_symbolic(std::string_view text, const Field& field) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  }
  if (compact.empty()) throw InvalidArgument("empty polynomial");

  std::map<std::size_t, Elt> terms;
  for (std::string_view term : split(compact, '+')) {
    if (term.empty()) throw InvalidArgument("empty term in polynomial '" + std::string(text) + "'");
    const std::size_t x = term.find_first_of("Xx");
    Elt coef(1);
    std::size_t exponent = 0;
    if (x == std::string_view::npos) {
      coef = parse_elt(term, field);
    } else {
      std::string_view head = term.substr(0, x);
      std::string_view tail = term.substr(x + 1);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (!head.empty()) coef = parse_elt(head, field);
      if (tail.empty()) {
        exponent = 1;
      } else if (tail.front() == '^') {
        exponent = static_cast<std::size_t>(parse_uint(tail.substr(1), "exponent"));
      } else {
        throw InvalidArgument("malformed term '" + std::string(term) + "'");
      }
    }
    auto [it, fresh] = terms.try_emplace(exponent, coef);
    if (!fresh) it->second = field.add(it->second, coef);
  }

  std::vector<Elt> coeffs(terms.rbegin()->first + 1, Elt(0));
  for (const auto& [e, c] : terms) coeffs[e] = c;
  return Poly(field, std::move(coeffs));
}

struct StructuredText {
  std::optional<Field> field;
  std::size_t n = 0;
  Vector a;
};

StructuredText parse_structured(std::string_view text, char tag, const std::optional<Field>& field) {
  text = trim(text);
  const std::string prefix = std::string(1, tag) + ":";
  if (!text.starts_with(prefix)) {
    throw InvalidArgument("expected '" + prefix + "...' but got '" + std::string(text) + "'");
  }
  text.remove_prefix(prefix.size());

  StructuredText out;
  std::optional<std::string_view> a_text;
  std::optional<std::size_t> n;
  for (std::string_view part : split(text, ';')) {
    part = trim(part);
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) throw InvalidArgument("malformed entry '" + std::string(part) + "'");
    const std::string_view key = part.substr(0, eq);
    const std::string_view value = part.substr(eq + 1);
    if (key == "q") {
      out.field = parse_field(value);
    } else if (key == "n") {
      n = static_cast<std::size_t>(parse_uint(value, "order"));
    } else if (key == "a") {
      a_text = value;
    } else {
      throw InvalidArgument("unknown key '" + std::string(key) + "'");
    }
  }
  if (field) {
    if (out.field && !(*out.field == *field)) throw InvalidArgument("matrix field disagrees with --field");
    out.field = field;
  }
  if (!out.field) throw InvalidArgument("matrix text has no field");
  if (!n || *n == 0) throw InvalidArgument("matrix text needs n >= 1");
  if (!a_text) throw InvalidArgument("matrix text has no defining vector");

  const auto parts = split(*a_text, ',');
  if (parts.size() != 2 * *n - 1) {
    throw InvalidArgument("defining vector needs 2n-1 = " + std::to_string(2 * *n - 1) + " entries");
  }
  out.n = *n;
  out.a.resize(static_cast<Eigen::Index>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) out.a(static_cast<Eigen::Index>(i)) = parse_elt(trim(parts[i]), *out.field);
  return out;
}

std::string render_structured(char tag, const Field& field, std::size_t n, const Vector& a) {
  std::string out(1, tag);
  out += ":" + render_field(field) + ";n=" + std::to_string(n) + ";a=";
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a(i).code);
  }
  return out;
}

}  // namespace

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("invalid " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::uint64_t> parse_uint_list(std::string_view text, std::string_view what) {
  std::vector<std::uint64_t> out;
  for (std::string_view part : split(trim(text), ',')) out.push_back(parse_uint(part, what));
  return out;
}

Field parse_field(std::string_view text) {
  text = trim(text);
  if (text.starts_with("q=")) text.remove_prefix(2);
  std::optional<std::vector<std::uint32_t>> modulus;
  if (const std::size_t colon = text.find(':'); colon != std::string_view::npos) {
    modulus.emplace();
    for (auto c : parse_uint_list(text.substr(colon + 1), "modulus coefficient")) {
      if (c > std::numeric_limits<std::uint32_t>::max()) throw InvalidArgument("modulus coefficient out of range");
      modulus->push_back(static_cast<std::uint32_t>(c));
    }
    text = text.substr(0, colon);
  }
  if (const std::size_t caret = text.find('^'); caret != std::string_view::npos) {
    const std::uint32_t p = parse_u32(text.substr(0, caret), "field characteristic");
    const std::uint32_t k = parse_u32(text.substr(caret + 1), "field extension degree");
    return Field::make(p, k, std::move(modulus));
  }
  const std::uint32_t q = parse_u32(text, "field order");
  if (modulus) throw InvalidArgument("an explicit modulus needs the p^k form");
  if (is_prime(q)) return Field::make(q);
  return Field::of_order(q);
}

std::string render_field(const Field& field) {
  std::string out = "q=" + std::to_string(field.characteristic());
  if (field.is_prime_field()) return out;
  out += "^" + std::to_string(field.degree()) + ":";
  const auto m = field.modulus();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(m[i]);
  }
  return out;
}

Poly parse_poly(std::string_view text, const Field& field) {
  text = trim(text);
  if (text.starts_with("coeffs:")) {
    text.remove_prefix(7);
    std::vector<Elt> coeffs;
    if (!trim(text).empty()) {
      for (std::string_view part : split(text, ',')) coeffs.push_back(parse_elt(trim(part), field));
    }
    return Poly(field, std::move(coeffs));
  }
  return parse_symbolic(text, field);
}

std::string render_poly(const Poly& p) {
  if (p.is_zero()) return "coeffs:0";
  return "coeffs:" + render_codes(p.coeffs());
}

std::string render_poly_symbolic(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t e = p.coeffs().size(); e-- > 0;) {
    const Elt c = p.coeff(e);
    if (c == Elt(0)) continue;
    if (!out.empty()) out += '+';
    if (e == 0) {
      out += std::to_string(c.code);
      continue;
    }
    if (c != Elt(1)) out += std::to_string(c.code) + "*";
    out += "X";
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

HankelMatrix parse_hankel(std::string_view text, const std::optional<Field>& field) {
  StructuredText s = parse_structured(text, 'H', field);
  return HankelMatrix(*s.field, std::move(s.a));
}

std::string render_hankel(const HankelMatrix& h) { return render_structured('H', h.field(), h.order(), h.a()); }

ToeplitzMatrix parse_toeplitz(std::string_view text, const std::optional<Field>& field) {
  StructuredText s = parse_structured(text, 'T', field);
  return ToeplitzMatrix(*s.field, std::move(s.a));
}

std::string render_toeplitz(const ToeplitzMatrix& t) {
  return render_structured('T', t.field(), t.order(), t.a());
}

std::string render_matrix(const Matrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (i > 0) out += ';';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += std::to_string(m(i, j).code);
    }
  }
  return out;
}

std::string render_codes(std::span<const Elt> elts) {
  std::string out;
  for (std::size_t i = 0; i < elts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elts[i].code);
  }
  return out;
}

}  // namespace hankelgf
