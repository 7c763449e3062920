#pragma once

#include <string>

#include <json.hpp>

#include "blockfact/algebra.hpp"
#include "blockfact/bimodule.hpp"
#include "blockfact/complex.hpp"

namespace blockfact {

using Json = nlohmann::ordered_json;

// Rationals serialize as exact "p/q" strings ("p" when q = 1); matrices as
// row-major arrays of such strings; module actions and structure constants
// as sparse records. All writers emit keys in a fixed order with fixed
// indentation, so identical data produces identical bytes.

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json sparse_to_json(const SparseMatrix& m);
SparseMatrix sparse_from_json(const Json& j);

Json algebra_to_json(const Algebra& a);
/// Runs the full construction checks. Throws InputError on malformed input
/// or law violations.
Algebra algebra_from_json(const Json& j);

Json bimodule_to_json(const Bimodule& b);
Bimodule bimodule_from_json(const Json& j, const Algebra& a);

Json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const Json& j);

std::string dump_document(const Json& j);
/// Parses and annotates parse failures with the file path and byte position.
Json parse_document(const std::string& text, const std::string& origin);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// "fnv1a:<16 hex digits>" fingerprint of a byte string.
std::string digest_string(const std::string& bytes);

}  // namespace blockfact
