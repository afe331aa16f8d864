#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace arx {

// One record per checked identity.
struct VerificationReport {
    std::string task_id;
    std::string paper_anchor;
    std::string computed;
    std::string expected;
    double abs_error = 0.0;
    double rel_error = 0.0;
    long precision_bits = 0;
    long elapsed_ms = 0;
    std::string status = "pass";  // pass | fail | skipped
    std::string tolerance;        // the pass criterion, self-describing

    bool passed() const { return status == "pass"; }
};

namespace report {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

// field order here defines the CSV column order and the JSON key order
inline void write_json(std::ostream& os, const std::vector<VerificationReport>& rs) {
    os << "[\n";
    for (size_t i = 0; i < rs.size(); ++i) {
        const auto& r = rs[i];
        os << "  {"
           << "\"task_id\": \"" << json_escape(r.task_id) << "\", "
           << "\"paper_anchor\": \"" << json_escape(r.paper_anchor) << "\", "
           << "\"computed\": \"" << json_escape(r.computed) << "\", "
           << "\"expected\": \"" << json_escape(r.expected) << "\", "
           << "\"abs_error\": " << format_double(r.abs_error) << ", "
           << "\"rel_error\": " << format_double(r.rel_error) << ", "
           << "\"precision_bits\": " << r.precision_bits << ", "
           << "\"elapsed_ms\": " << r.elapsed_ms << ", "
           << "\"status\": \"" << json_escape(r.status) << "\", "
           << "\"tolerance\": \"" << json_escape(r.tolerance) << "\"}";
        os << (i + 1 < rs.size() ? ",\n" : "\n");
    }
    os << "]\n";
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        out += c;
    }
    out += "\"";
    return out;
}

inline void write_csv(std::ostream& os, const std::vector<VerificationReport>& rs) {
    os << "task_id,paper_anchor,computed,expected,abs_error,rel_error,precision_bits,elapsed_ms,status,"
          "tolerance\n";
    for (const auto& r : rs) {
        os << csv_escape(r.task_id) << ',' << csv_escape(r.paper_anchor) << ','
           << csv_escape(r.computed) << ',' << csv_escape(r.expected) << ','
           << format_double(r.abs_error) << ',' << format_double(r.rel_error) << ','
           << r.precision_bits << ',' << r.elapsed_ms << ',' << csv_escape(r.status) << ','
           << csv_escape(r.tolerance) << "\n";
    }
}

}  // namespace report
}  // namespace arx
