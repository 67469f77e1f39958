#pragma once

#include <string>

#include "cepd/matrix.hpp"

namespace cepd {

enum class MatrixFormat { Text, Json };

/// Text form: one row per line, whitespace-separated entries, complex
/// literals `a`, `bi`, `a+bi`, `a-bi`, with a bare `i` for the unit.
/// JSON form: {"rows": m, "cols": n, "data": [{"re": x, "im": y}, ...]}
/// in row-major order.
Matrix parse_matrix(const std::string& source, MatrixFormat format);

/// Serialization with 17 significant digits (text) or shortest-round-trip
/// JSON doubles; parse(format(m)) reproduces m bit-exactly.
std::string format_matrix(const Matrix& m, MatrixFormat format);

} // namespace cepd
