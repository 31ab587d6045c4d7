// Copyright 2026 The tisim developers.
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

#ifndef TISIM_REPORT_HPP
#define TISIM_REPORT_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "tisim/format.hpp"
#include "tisim/stats.hpp"

namespace tisim {

/// Minimal streaming JSON writer. Keys keep insertion order and doubles are
/// written with %.17g, so equal inputs serialize to equal bytes; that is the
/// whole reason this exists instead of a JSON library's dump().
class JsonWriter {
public:
    JsonWriter& begin_object() { return open('{'); }
    JsonWriter& end_object() { return close('}'); }
    JsonWriter& begin_array() { return open('['); }
    JsonWriter& end_array() { return close(']'); }

    JsonWriter& key(const std::string& name) {
        separate();
        write_string(name);
        out_ << ": ";
        just_wrote_key_ = true;
        return *this;
    }

    JsonWriter& value(const std::string& v) {
        separate();
        write_string(v);
        return *this;
    }
    JsonWriter& value(const char* v) { return value(std::string(v)); }
    JsonWriter& value(double v) {
        separate();
        out_ << format_double(v);
        return *this;
    }
    JsonWriter& value(std::uint64_t v) {
        separate();
        out_ << v;
        return *this;
    }
    JsonWriter& value(bool v) {
        separate();
        out_ << (v ? "true" : "false");
        return *this;
    }

    std::string str() const { return out_.str() + "\n"; }

private:
    JsonWriter& open(char c) {
        separate();
        out_ << c;
        depth_ += 1;
        fresh_ = true;
        return *this;
    }

    JsonWriter& close(char c) {
        depth_ -= 1;
        if (!fresh_) {
            out_ << '\n';
            indent();
        }
        out_ << c;
        fresh_ = false;
        return *this;
    }

    void separate() {
        if (just_wrote_key_) {
            just_wrote_key_ = false;
            return;
        }
        if (!fresh_) out_ << ',';
        if (depth_ > 0) {
            out_ << '\n';
            indent();
        }
        fresh_ = false;
    }

    void indent() {
        for (int i = 0; i < depth_; ++i) out_ << "  ";
    }

    void write_string(const std::string& s) {
        out_ << '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ << "\\\""; break;
                case '\\': out_ << "\\\\"; break;
                case '\n': out_ << "\\n"; break;
                case '\t': out_ << "\\t"; break;
                case '\r': out_ << "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out_ << buf;
                    } else {
                        out_ << c;
                    }
            }
        }
        out_ << '"';
    }

    std::ostringstream out_;
    int depth_ = 0;
    bool fresh_ = true;
    bool just_wrote_key_ = false;
};

inline void write_outcome_rows(JsonWriter& w, const CompareReport& report) {
    w.key("outcomes").begin_array();
    for (const CompareRow& row : report.rows) {
        w.begin_object();
        w.key("label").value(row.label);
        w.key("count").value(static_cast<std::uint64_t>(row.count));
        w.key("frequency").value(row.frequency);
        w.key("sigma").value(row.sigma);
        w.key("analytic_p").value(row.analytic_p);
        w.key("pass").value(row.pass);
        w.end_object();
    }
    w.end_array();
}

/// CSV twin of the JSON outcome table: one row per outcome.
inline std::string compare_report_csv(const CompareReport& report) {
    std::ostringstream out;
    out << "label,count,frequency,sigma,analytic_p,pass\n";
    for (const CompareRow& row : report.rows) {
        out << row.label << ',' << row.count << ',' << format_double(row.frequency) << ','
            << format_double(row.sigma) << ',' << format_double(row.analytic_p) << ','
            << (row.pass ? "true" : "false") << '\n';
    }
    return out.str();
}

} // namespace tisim

#endif // TISIM_REPORT_HPP
