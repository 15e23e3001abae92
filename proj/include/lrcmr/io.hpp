#ifndef LRCMR_IO_HPP
#define LRCMR_IO_HPP

#include <string>

#include <json.hpp>

#include "lrcmr/code.hpp"
#include "lrcmr/equiv.hpp"

namespace lrcmr {

/// Insertion-ordered JSON keeps report bytes deterministic.
using ojson = nlohmann::ordered_json;

ojson field_to_json(const Field& f);
FieldPtr field_from_json(const ojson& j);  // FieldReconstructionMismatch / SchemaError

ojson matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const ojson& j, const FieldPtr& field);

/// Code file schema:
/// {"field":{"p","e","modulus","alpha"},"n","k","H":{"rows","cols","data"},
///  "roots":[...]|null,"meta":{...}}
ojson code_to_json(const LinearCode& c, const ojson& meta = ojson::object());
LinearCode code_from_json(const ojson& j, ojson* meta_out = nullptr);

void save_code(const LinearCode& c, const std::string& path, const ojson& meta = ojson::object());
LinearCode load_code(const std::string& path, ojson* meta_out = nullptr);

ojson perm_to_json(const PermSpec& p);
PermSpec perm_from_json(const ojson& j, std::size_t n);

ojson structure_report_to_json(const StructureReport& rep);

}  // namespace lrcmr

#endif
