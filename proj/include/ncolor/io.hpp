#pragma once

#include <cstddef>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "counting.hpp"
#include "errors.hpp"
#include "identities.hpp"

namespace ncolor::io {

/// "index,value" header, one row per coefficient, '\n' line endings.
inline void write_csv(const SequenceTable& t, std::ostream& os) {
    os << "index,value\n";
    for (std::size_t i = 0; i < t.values.size(); ++i) os << i << ',' << t.values[i].str() << '\n';
}

/// {"name":..,"params":{..},"order":N,"values":[..]} on one line. Values are
/// written as exact integer literals regardless of size.
inline void write_json(const SequenceTable& t, std::ostream& os) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [k, v] : t.params) params[k] = v;
    os << R"({"name":)" << nlohmann::json(t.name).dump() << R"(,"params":)" << params.dump()
       << R"(,"order":)" << t.order() << R"(,"values":[)";
    for (std::size_t i = 0; i < t.values.size(); ++i) os << (i ? "," : "") << t.values[i].str();
    os << "]}\n";
}

inline void write_pretty(const SequenceTable& t, std::ostream& os) {
    os << t.name;
    for (const auto& [k, v] : t.params) os << ' ' << k << '=' << v;
    os << '\n';
    const auto width = std::to_string(t.order()).size();
    for (std::size_t i = 0; i < t.values.size(); ++i)
        os << std::setw(static_cast<int>(width)) << i << "  " << t.values[i].str() << '\n';
}

namespace detail {

// SAX reader that keeps the literal text of every number, so integers too
// large for any machine type survive the round trip exactly.
class TableSax {
public:
    using json = nlohmann::json;

    SequenceTable table;
    std::optional<std::size_t> order;

    bool null() { return fail("unexpected null"); }
    bool boolean(bool) { return fail("unexpected boolean"); }
    bool number_integer(json::number_integer_t v) { return number(std::to_string(v)); }
    bool number_unsigned(json::number_unsigned_t v) { return number(std::to_string(v)); }
    bool number_float(json::number_float_t, const std::string& text) { return number(text); }
    bool string(std::string& s) {
        if (depth_ == 1 && key_ == "name") {
            table.name = s;
            return true;
        }
        return fail("unexpected string");
    }
    bool binary(json::binary_t&) { return fail("unexpected binary"); }
    bool start_object(std::size_t) {
        ++depth_;
        if (depth_ == 2 && key_ != "params") return fail("unexpected object");
        return depth_ <= 2 || fail("nesting too deep");
    }
    bool end_object() {
        --depth_;
        return true;
    }
    bool start_array(std::size_t) {
        if (depth_ != 1 || key_ != "values") return fail("unexpected array");
        in_values_ = true;
        return true;
    }
    bool end_array() {
        in_values_ = false;
        return true;
    }
    bool key(std::string& k) {
        if (depth_ == 1) key_ = k;
        else param_key_ = k;
        return true;
    }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) {
        return fail("parse error at byte " + std::to_string(pos) + ": " + e.what());
    }

private:
    bool number(const std::string& text) {
        if (text.find_first_of(".eE") != std::string::npos) return fail("non-integer number " + text);
        if (in_values_) {
            table.values.emplace_back(text);
        } else if (depth_ == 2) {
            table.params.emplace_back(param_key_, std::stoll(text));
        } else if (depth_ == 1 && key_ == "order") {
            order = std::stoull(text);
        } else {
            return fail("unexpected number");
        }
        return true;
    }
    bool fail(const std::string& why) { throw usage_error("read_json: " + why); }

    int depth_ = 0;
    bool in_values_ = false;
    std::string key_, param_key_;
};

} // namespace detail

/// Inverse of write_json.
inline SequenceTable read_json(const std::string& text) {
    detail::TableSax sax;
    nlohmann::json::sax_parse(text, &sax);
    if (sax.table.values.empty()) throw usage_error("read_json: no values");
    if (sax.order && *sax.order + 1 != sax.table.values.size())
        throw usage_error("read_json: order does not match number of values");
    return sax.table;
}

namespace detail {

inline nlohmann::json value_json(const Value& v) {
    if (const auto* b = std::get_if<BigInt>(&v)) return b->str();
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [p, c] : std::get<LogCombination>(v).terms()) obj[std::to_string(p)] = c.str();
    return obj;
}

inline nlohmann::json param_json(const std::string& s) {
    if (!s.empty() && s.find_first_not_of("0123456789") == std::string::npos) return std::stoll(s);
    return s;
}

} // namespace detail

/// One JSON object per report. Exact integers in counterexamples are
/// strings; log combinations are objects keyed by prime.
inline nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json j;
    j["identity"] = to_string(r.id);
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = detail::param_json(v);
    j["range"] = r.range;
    j["status"] = r.passed() ? "pass" : "fail";
    if (!r.convention.empty()) j["convention"] = r.convention;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        nlohmann::json at = nlohmann::json::object();
        for (const auto& [k, v] : c.at) at[k] = v;
        j["counterexample"] = {{"at", at}, {"lhs", detail::value_json(c.lhs)}, {"rhs", detail::value_json(c.rhs)}};
        if (!c.note.empty()) j["counterexample"]["note"] = c.note;
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

inline std::string report_line(const VerificationReport& r) {
    std::ostringstream os;
    os << (r.passed() ? "PASS " : "FAIL ") << to_string(r.id);
    for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
    os << " (up to " << r.range << ")";
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        os << " at";
        for (const auto& [k, v] : c.at) os << ' ' << k << '=' << v;
        os << ": lhs " << to_string(c.lhs) << " rhs " << to_string(c.rhs);
        if (!c.note.empty()) os << " (" << c.note << ")";
    }
    return os.str();
}

} // namespace ncolor::io
