#include "florcc/io.hpp"

#include <fstream>
#include <sstream>

namespace florcc {

namespace {

int require_int(const Json& j, const char* key, const std::string& origin) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ParseError(origin + ": missing or non-integer field \"" + key + "\"");
    }
    return j[key].get<int>();
}

std::vector<std::vector<int>> require_matrix(const Json& j, const char* key,
                                             const std::string& origin) {
    if (!j.contains(key) || !j[key].is_array()) {
        throw ParseError(origin + ": missing array field \"" + key + "\"");
    }
    std::vector<std::vector<int>> rows;
    for (const auto& jr : j[key]) {
        if (!jr.is_array()) throw ParseError(origin + ": \"" + key + "\" must be 2-D");
        std::vector<int> row;
        for (const auto& v : jr) {
            if (!v.is_number_integer()) {
                throw ParseError(origin + ": non-integer entry in \"" + key + "\"");
            }
            row.push_back(v.get<int>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json rect_to_json(const FlorentineRect& rect) {
    Json j;
    j["n"] = rect.n;
    j["rows"] = rect.rows;
    j["construction"] = to_string(rect.construction);
    j["source_modulus"] = rect.source_modulus;
    return j;
}

FlorentineRect rect_from_json(const Json& j) {
    FlorentineRect rect;
    rect.n = require_int(j, "n", "rectangle");
    rect.rows = require_matrix(j, "rows", "rectangle");
    if (j.contains("construction")) {
        const auto name = j["construction"].get<std::string>();
        auto c = construction_from_string(name);
        if (!c) throw ParseError("rectangle: unknown construction \"" + name + "\"");
        rect.construction = *c;
    }
    rect.source_modulus =
        j.contains("source_modulus") ? require_int(j, "source_modulus", "rectangle") : rect.n;
    return rect;
}

std::string rect_to_text(const FlorentineRect& rect) {
    std::ostringstream out;
    for (const auto& row : rect.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << row[j];
        }
        out << '\n';
    }
    return out.str();
}

FlorentineRect rect_from_text(const std::string& text) {
    FlorentineRect rect;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<int> row;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' ||
                                         line[pos] == '\r')) {
                ++pos;
            }
            if (pos >= line.size()) break;
            std::size_t end = pos;
            bool numeric = true;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t' &&
                   line[end] != '\r') {
                const char ch = line[end];
                numeric = numeric && ((ch >= '0' && ch <= '9') || (ch == '-' && end == pos));
                ++end;
            }
            if (!numeric || end == pos) {
                throw ParseError("grid parse error at line " + std::to_string(line_no) +
                                 ", column " + std::to_string(pos + 1) +
                                 ": expected an integer, got \"" +
                                 line.substr(pos, end - pos) + "\"");
            }
            row.push_back(std::stoi(line.substr(pos, end - pos)));
            pos = end;
        }
        rect.rows.push_back(std::move(row));
    }
    if (rect.rows.empty()) throw ParseError("grid parse error: no rows found");
    rect.n = static_cast<int>(rect.rows[0].size());
    rect.construction = Construction::Handmade;
    rect.source_modulus = rect.n;
    return rect;
}

FlorentineRect load_rect(const std::string& path) {
    const std::string content = read_file(path);
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (content[first] == '{' || content[first] == '[')) {
        return rect_from_json(parse_json(content, path));
    }
    return rect_from_text(content);
}

Json sequence_set_to_json(const SequenceSet& set) {
    Json j;
    j["n"] = set.n;
    j["k"] = set.k;
    j["m"] = set.m;
    j["exponents"] = set.exponents;
    return j;
}

SequenceSet sequence_set_from_json(const Json& j) {
    SequenceSet set;
    set.n = require_int(j, "n", "sequence set");
    set.k = require_int(j, "k", "sequence set");
    set.m = require_int(j, "m", "sequence set");
    set.exponents = require_matrix(j, "exponents", "sequence set");
    for (const auto& row : set.exponents) {
        for (int v : row) {
            if (v < 0 || v >= set.n) {
                throw ParseError("sequence set: exponent " + std::to_string(v) +
                                 " outside Z_" + std::to_string(set.n));
            }
        }
    }
    return set;
}

std::string sequence_set_to_text(const SequenceSet& set) {
    std::ostringstream out;
    for (const auto& row : set.exponents) {
        for (std::size_t t = 0; t < row.size(); ++t) {
            if (set.n <= 10) {
                out << row[t];
            } else {
                if (t) out << ',';
                out << row[t];
            }
        }
        out << '\n';
    }
    return out.str();
}

Json ccc_to_json(const Ccc& ccc) {
    Json j;
    j["n"] = ccc.n;
    j["k"] = ccc.k;
    Json sets = Json::array();
    for (const auto& set : ccc.sets) sets.push_back(sequence_set_to_json(set));
    j["sets"] = std::move(sets);
    return j;
}

Ccc ccc_from_json(const Json& j) {
    Ccc ccc;
    ccc.n = require_int(j, "n", "ccc");
    ccc.k = require_int(j, "k", "ccc");
    if (!j.contains("sets") || !j["sets"].is_array()) {
        throw ParseError("ccc: missing \"sets\" array");
    }
    for (const auto& js : j["sets"]) ccc.sets.push_back(sequence_set_from_json(js));
    return ccc;
}

Ccc load_ccc(const std::string& path) {
    return ccc_from_json(parse_json(read_file(path), path));
}

Json qcss_to_json(const Qcss& q) {
    Json j;
    j["n"] = q.n;
    j["k_count"] = q.k_count;
    Json sets = Json::array();
    for (const auto& set : q.sets) sets.push_back(sequence_set_to_json(set));
    j["sets"] = std::move(sets);
    return j;
}

Qcss qcss_from_json(const Json& j) {
    Qcss q;
    q.n = require_int(j, "n", "qcss");
    q.k_count = require_int(j, "k_count", "qcss");
    if (!j.contains("sets") || !j["sets"].is_array()) {
        throw ParseError("qcss: missing \"sets\" array");
    }
    for (const auto& js : j["sets"]) q.sets.push_back(sequence_set_from_json(js));
    return q;
}

Json correlation_report_to_json(const CorrelationReport& report) {
    Json j;
    j["K"] = report.set_count;
    j["M"] = report.flock_size;
    j["N"] = report.length;
    j["delta_max"] = report.delta_max;
    j["argmax"] = {{"set_a", report.argmax.set_a},
                   {"set_b", report.argmax.set_b},
                   {"tau", report.argmax.tau}};
    Json hist = Json::array();
    for (const auto& [mag, count] : report.histogram) {
        hist.push_back(Json::array({mag, count}));
    }
    j["histogram"] = std::move(hist);
    return j;
}

Json bounds_report_to_json(const BoundsReport& report) {
    Json j;
    j["K"] = report.set_count;
    j["M"] = report.flock_size;
    j["N"] = report.length;
    j["delta_max"] = report.delta_max;
    j["welch"] = report.welch;
    if (report.liu) {
        j["liu"] = *report.liu;
    } else {
        j["liu"] = nullptr;
    }
    j["rho"] = report.rho;
    j["branch"] = to_string(report.branch);
    j["classification"] = to_string(report.classification);
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

Json parse_json(const std::string& content, const std::string& origin) {
    try {
        return Json::parse(content);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports the byte offset; translate to line/column.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < content.size(); ++i) {
            if (content[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(origin + ": JSON parse error at line " + std::to_string(line) +
                         ", column " + std::to_string(col) + ": " + e.what());
    }
}

}  // namespace florcc
