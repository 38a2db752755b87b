#ifndef CRITFORGE_TESTS_SCHEMA_CHECK_HPP
#define CRITFORGE_TESTS_SCHEMA_CHECK_HPP

#include <fstream>
#include <string>

#include <json.hpp>

namespace critforge::testing {

using nlohmann::json;

/// Minimal structural validator for the subset of JSON-Schema vocabulary the
/// shipped schema uses: type (string or list), required, properties, items,
/// enum, plus the internal $same_as / $same_as_def indirections.
class SchemaChecker {
public:
    explicit SchemaChecker(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open schema file " + path);
        in >> schema_;
    }

    bool validate_report(const json& report, std::string& why) const {
        if (!validate(report, schema_.at("envelope"), "envelope", why)) return false;
        const std::string status = report.at("status").get<std::string>();
        if (status == "error") {
            if (!report.contains("error")) {
                why = "error status without error object";
                return false;
            }
            return true;
        }
        if (!report.contains("result")) {
            why = "non-error status without result";
            return false;
        }
        const std::string command = report.at("command").get<std::string>();
        json rule = schema_.at("results").at(command);
        return validate(report.at("result"), resolve(rule), "result(" + command + ")", why);
    }

private:
    json resolve(json rule) const {
        if (rule.contains("$same_as"))
            return resolve(schema_.at("results").at(rule.at("$same_as").get<std::string>()));
        return rule;
    }

    bool type_matches(const json& value, const std::string& t) const {
        if (t == "object") return value.is_object();
        if (t == "array") return value.is_array();
        if (t == "string") return value.is_string();
        if (t == "integer") return value.is_number_integer();
        if (t == "boolean") return value.is_boolean();
        if (t == "null") return value.is_null();
        return false;
    }

    bool validate(const json& value, json rule, const std::string& where,
                  std::string& why) const {
        if (rule.contains("$same_as_def"))
            rule = schema_.at("defs").at(rule.at("$same_as_def").get<std::string>());

        if (rule.contains("type")) {
            const json& t = rule.at("type");
            bool ok = false;
            if (t.is_string()) ok = type_matches(value, t.get<std::string>());
            else
                for (const auto& alt : t) ok = ok || type_matches(value, alt.get<std::string>());
            if (!ok) {
                why = where + ": type mismatch, got " + value.dump();
                return false;
            }
        }
        if (rule.contains("enum")) {
            bool ok = false;
            for (const auto& alt : rule.at("enum")) ok = ok || alt == value;
            if (!ok) {
                why = where + ": value " + value.dump() + " not in enum";
                return false;
            }
        }
        if (value.is_object() && rule.contains("required")) {
            for (const auto& key : rule.at("required"))
                if (!value.contains(key.get<std::string>())) {
                    why = where + ": missing required key " + key.get<std::string>();
                    return false;
                }
        }
        if (value.is_object() && rule.contains("properties")) {
            for (const auto& [key, sub] : rule.at("properties").items())
                if (value.contains(key))
                    if (!validate(value.at(key), sub, where + "." + key, why)) return false;
        }
        if (value.is_array() && rule.contains("items")) {
            std::size_t i = 0;
            for (const auto& item : value)
                if (!validate(item, rule.at("items"), where + "[" + std::to_string(i++) + "]",
                              why))
                    return false;
        }
        return true;
    }

    json schema_;
};

} // namespace critforge::testing

#endif
