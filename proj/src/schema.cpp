#include "lenscape/schema.hpp"

#include <regex>

namespace lenscape {

namespace {

bool is_int_like(const Json& v) {
    if (v.is_number_integer()) return true;
    if (!v.is_string()) return false;
    static const std::regex digits("^[-+]?[0-9]+$");
    return std::regex_match(v.get<std::string>(), digits);
}

bool is_fraction_like(const Json& v) {
    if (!v.is_string()) return false;
    static const std::regex frac("^-?[0-9]+/[0-9]+$");
    return std::regex_match(v.get<std::string>(), frac);
}

std::optional<std::string> check(const Json& schema, const Json& value, const std::string& path) {
    auto fail = [&](const std::string& why) -> std::optional<std::string> {
        return path + ": " + why;
    };
    if (!schema.is_object()) return fail("schema node is not an object");

    if (schema.contains("any_of")) {
        std::string reasons;
        for (const Json& alt : schema["any_of"]) {
            auto v = check(alt, value, path);
            if (!v) return std::nullopt;
            reasons += (reasons.empty() ? "" : "; ") + *v;
        }
        return fail("no alternative matched (" + reasons + ")");
    }
    if (schema.contains("enum")) {
        for (const Json& e : schema["enum"])
            if (e == value) return std::nullopt;
        return fail("value not in enum: " + value.dump());
    }

    const std::string type = schema.value("type", std::string("object"));
    if (type == "int") {
        if (!is_int_like(value)) return fail("expected integer, got " + value.dump());
        return std::nullopt;
    }
    if (type == "fraction") {
        if (!is_fraction_like(value)) return fail("expected 'num/den', got " + value.dump());
        return std::nullopt;
    }
    if (type == "string") {
        if (!value.is_string()) return fail("expected string");
        return std::nullopt;
    }
    if (type == "bool") {
        if (!value.is_boolean()) return fail("expected boolean");
        return std::nullopt;
    }
    if (type == "array") {
        if (!value.is_array()) return fail("expected array");
        if (schema.contains("items")) {
            for (size_t i = 0; i < value.size(); ++i) {
                auto v = check(schema["items"], value[i], path + "[" + std::to_string(i) + "]");
                if (v) return v;
            }
        }
        return std::nullopt;
    }
    if (type == "object") {
        if (!value.is_object()) return fail("expected object");
        const Json props = schema.value("properties", Json::object());
        if (schema.contains("required")) {
            for (const Json& r : schema["required"])
                if (!value.contains(r.get<std::string>()))
                    return fail("missing required field '" + r.get<std::string>() + "'");
        }
        const bool additional = schema.value("additional", false);
        for (auto it = value.begin(); it != value.end(); ++it) {
            if (props.contains(it.key())) {
                auto v = check(props[it.key()], it.value(), path + "." + it.key());
                if (v) return v;
            } else if (!additional) {
                return fail("unexpected field '" + it.key() + "'");
            }
        }
        return std::nullopt;
    }
    return fail("unknown schema type '" + type + "'");
}

} // namespace

std::optional<std::string> schema_violation(const Json& schema, const Json& value) {
    return check(schema, value, "$");
}

} // namespace lenscape
