#include "nilgeom/schema.hpp"

#include "nilgeom/errors.hpp"

#include <regex>

namespace nilgeom {

namespace {

using nlohmann::json;

bool has_type(const json& v, const std::string& t)
{
    if (t == "object")
        return v.is_object();
    if (t == "array")
        return v.is_array();
    if (t == "string")
        return v.is_string();
    if (t == "integer")
        return v.is_number_integer();
    if (t == "number")
        return v.is_number();
    if (t == "boolean")
        return v.is_boolean();
    if (t == "null")
        return v.is_null();
    return false;
}

const json& resolve(const json& root, const std::string& ref)
{
    if (ref.rfind("#/", 0) != 0)
        throw SchemaError("only local $ref supported: " + ref);
    return root.at(json::json_pointer(ref.substr(1)));
}

void check(const json& v, const json& s, const json& root, const std::string& ptr)
{
    auto fail = [&](const std::string& why) {
        throw SchemaError((ptr.empty() ? std::string("/") : ptr) + ": " + why);
    };
    if (s.is_boolean()) {
        if (!s.get<bool>())
            fail("not allowed");
        return;
    }
    if (s.contains("$ref")) {
        check(v, resolve(root, s["$ref"].get<std::string>()), root, ptr);
        return;
    }
    if (s.contains("type")) {
        const json& t = s["type"];
        bool ok = false;
        if (t.is_string())
            ok = has_type(v, t.get<std::string>());
        else
            for (const auto& x : t)
                ok = ok || has_type(v, x.get<std::string>());
        if (!ok)
            fail("expected type " + t.dump());
    }
    if (s.contains("enum")) {
        bool ok = false;
        for (const auto& x : s["enum"])
            ok = ok || x == v;
        if (!ok)
            fail("value not in " + s["enum"].dump());
    }
    if (s.contains("const") && s["const"] != v)
        fail("expected " + s["const"].dump());
    if (v.is_number()) {
        if (s.contains("minimum") && v.get<double>() < s["minimum"].get<double>())
            fail("below minimum " + s["minimum"].dump());
        if (s.contains("maximum") && v.get<double>() > s["maximum"].get<double>())
            fail("above maximum " + s["maximum"].dump());
    }
    if (v.is_string() && s.contains("pattern")) {
        std::regex re(s["pattern"].get<std::string>());
        if (!std::regex_search(v.get<std::string>(), re))
            fail("does not match " + s["pattern"].dump());
    }
    if (v.is_object()) {
        if (s.contains("required"))
            for (const auto& r : s["required"])
                if (!v.contains(r.get<std::string>()))
                    fail("missing required field '" + r.get<std::string>() + "'");
        const json* props = s.contains("properties") ? &s["properties"] : nullptr;
        for (const auto& [k, x] : v.items()) {
            if (props && props->contains(k))
                check(x, (*props)[k], root, ptr + "/" + k);
            else if (s.contains("additionalProperties"))
                check(x, s["additionalProperties"], root, ptr + "/" + k);
        }
    }
    if (v.is_array()) {
        if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>())
            fail("fewer than " + s["minItems"].dump() + " items");
        if (s.contains("maxItems") && v.size() > s["maxItems"].get<std::size_t>())
            fail("more than " + s["maxItems"].dump() + " items");
        if (s.contains("items"))
            for (std::size_t i = 0; i < v.size(); ++i)
                check(v[i], s["items"], root, ptr + "/" + std::to_string(i));
    }
    auto count_matches = [&](const json& list, std::string& last) {
        int n = 0;
        for (const auto& sub : list) {
            try {
                check(v, sub, root, ptr);
                ++n;
            } catch (const SchemaError& e) {
                last = e.what();
            }
        }
        return n;
    };
    if (s.contains("oneOf")) {
        std::string last;
        int n = count_matches(s["oneOf"], last);
        if (n != 1)
            fail(n == 0 ? "no alternative matches (" + last + ")" : "several alternatives match");
    }
    if (s.contains("anyOf")) {
        std::string last;
        if (count_matches(s["anyOf"], last) == 0)
            fail("no alternative matches (" + last + ")");
    }
}

} // namespace

void validate_schema(const json& doc, const json& schema) { check(doc, schema, schema, ""); }

} // namespace nilgeom
