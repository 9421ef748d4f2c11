#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qbx/presentation.hpp"

namespace qbx {

using Json = nlohmann::ordered_json;

struct FieldDesc {
    bool rational = true;
    std::uint32_t p = 0; // set when !rational

    Scalar one() const { return rational ? Scalar(1) : Scalar::fp(1, p); }
};

// A parsed input file: presentation, optional declared generator order,
// coefficient field.
struct PresentationFile {
    Presentation pres;
    std::optional<Enumeration> order;
    FieldDesc field;
};

// Parses the qbx/1 schema.  Syntax errors carry line and column; semantic
// errors carry the JSON path of the offending value.  field_override, when
// set, replaces the file's field and coefficients are read in it.
PresentationFile parse_presentation_text(const std::string& text,
                                         std::optional<FieldDesc> field_override = {});

// path "-" reads standard input
PresentationFile parse_presentation_file(const std::string& path,
                                         std::optional<FieldDesc> field_override = {});

Json render_presentation(const PresentationFile& pf);

// "--field" values: "rational", "fp" (default prime), or "fp:<prime>"
FieldDesc parse_field_flag(const std::string& flag);

} // namespace qbx
