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

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hankelgf/field.hpp"
#include "hankelgf/linalg.hpp"
#include "hankelgf/poly.hpp"
#include "hankelgf/structured.hpp"

namespace hankelgf {

// Text formats. Every parser throws InvalidArgument on malformed input.

/// `q=p`, `q=p^k` or `q=p^k:c0,...,ck`; the `q=` prefix is optional. A bare
/// prime power such as `q=4` selects the built-in modulus.
Field parse_field(std::string_view text);

/// Canonical form: `q=p` for prime fields, `q=p^k:c0,...,ck` otherwise.
std::string render_field(const Field& field);

/// Either `coeffs:c0,c1,...` (ascending) or symbolic such as `2*X^3+X+1`.
Poly parse_poly(std::string_view text, const Field& field);

/// `coeffs:c0,c1,...`; the zero polynomial renders as `coeffs:0`.
std::string render_poly(const Poly& p);

/// Descending symbolic form, e.g. `X^2+2*X+1`.
std::string render_poly_symbolic(const Poly& p);

/// `H:q=2;n=3;a=1,0,1,1,0`. The q entry may be omitted when a field is
/// supplied; when both are present they must agree.
HankelMatrix parse_hankel(std::string_view text, const std::optional<Field>& field = std::nullopt);
std::string render_hankel(const HankelMatrix& h);

/// `T:q=2;n=2;a=1,0,1`, same conventions as the Hankel form.
ToeplitzMatrix parse_toeplitz(std::string_view text, const std::optional<Field>& field = std::nullopt);
std::string render_toeplitz(const ToeplitzMatrix& t);

/// Row-major rows separated by `;`, entries by `,`.
std::string render_matrix(const Matrix& m);

/// Comma-separated codes.
std::string render_codes(std::span<const Elt> elts);

std::uint64_t parse_uint(std::string_view text, std::string_view what);
std::vector<std::uint64_t> parse_uint_list(std::string_view text, std::string_view what);

}  // namespace hankelgf
