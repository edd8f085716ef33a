#pragma once

// Serialization of the public types. JSON is the canonical machine format
// (nlohmann, insertion-ordered keys so output is byte-stable); the text forms
// are for human inspection: rectangles as space-separated grids, sequences as
// concatenated base-n digit strings when n <= 10 and comma-separated
// exponents otherwise.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "florcc/bounds.hpp"
#include "florcc/correlation.hpp"
#include "florcc/florentine.hpp"
#include "florcc/seqgen.hpp"

namespace florcc {

using Json = nlohmann::ordered_json;

// Thrown on malformed input; the message carries line/column when known.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json rect_to_json(const FlorentineRect& rect);
FlorentineRect rect_from_json(const Json& j);

std::string rect_to_text(const FlorentineRect& rect);
FlorentineRect rect_from_text(const std::string& text);

// Auto-detects JSON versus text grid from the content.
FlorentineRect load_rect(const std::string& path);

Json sequence_set_to_json(const SequenceSet& set);
SequenceSet sequence_set_from_json(const Json& j);

// One line per sequence: digit strings for n <= 10, comma-separated otherwise.
std::string sequence_set_to_text(const SequenceSet& set);

Json ccc_to_json(const Ccc& ccc);
Ccc ccc_from_json(const Json& j);
Ccc load_ccc(const std::string& path);

Json qcss_to_json(const Qcss& q);
Qcss qcss_from_json(const Json& j);

Json correlation_report_to_json(const CorrelationReport& report);
Json bounds_report_to_json(const BoundsReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// Parses a whole file as JSON, rethrowing with the nlohmann line/column info.
Json parse_json(const std::string& content, const std::string& origin);

}  // namespace florcc
