#ifndef STACKYAUT_JSON_IO_HPP
#define STACKYAUT_JSON_IO_HPP

#include <json.hpp>

#include "stackyaut/crossed_module.hpp"
#include "stackyaut/stacky_fan.hpp"

namespace stackyaut {

using Json = nlohmann::ordered_json;

/// Raised on malformed or schema-violating input (CLI exit code 2).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class DocumentKind { StackyFan, Weights, CrossedModule, Matrix };

/// Parsed input file; exactly the member matching `kind` is populated.
struct InputDocument {
    std::string schema_version;
    DocumentKind kind;
    std::optional<StackyFan> stacky_fan;
    std::optional<IntVector> weights;
    std::optional<FiniteCrossedModule> crossed_module;
    std::optional<IntMatrix> matrix;
};

InputDocument parse_document(const Json& j);
InputDocument parse_document_file(const std::string& path);

Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json vector_to_json(const IntVector& v);
IntVector vector_from_json(const Json& j);

/// {"free_rank": d, "torsion": [t1, ...], "name": "Z^d + Z/t1 ..."}
Json group_invariants_json(const FgAbelianGroup& g);

Json stacky_fan_to_json(const StackyFan& sf);

/// Render a report document as indented text; matrices as bracketed rows.
std::string render_text(const Json& j);

}  // namespace stackyaut

#endif
