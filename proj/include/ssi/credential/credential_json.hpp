#pragma once

#include <string>
#include <string_view>

#include "ssi/credential/credential.hpp"
#include "ssi/credential/presentation.hpp"
#include "ssi/core/json_codec.hpp"

namespace ssi {

// `.vc.json` and `.vp.json` share the ledger.json conventions.

json::Json to_json(const Credential& credential);
Credential credential_from_json(const json::Json& value);

json::Json to_json(const Presentation& presentation);
Presentation presentation_from_json(const json::Json& value);

std::string serialize_credential(const Credential& credential);
Credential parse_credential(std::string_view text);

std::string serialize_presentation(const Presentation& presentation);
Presentation parse_presentation(std::string_view text);

}  // namespace ssi
