#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "braidforge/errors.hpp"
#include "braidforge/rational.hpp"

namespace braidforge::json {

/// Small JSON document model with two properties nlohmann's DOM cannot
/// give us: integers of arbitrary size are kept exact, and emission is
/// byte-deterministic (insertion-ordered object keys, fixed layout).
/// Floating-point literals are rejected outright; every number in the
/// file formats here is an integer.
class Value {
public:
    using Array = std::vector<Value>;
    using Member = std::pair<std::string, Value>;
    using Object = std::vector<Member>;

    Value() : data_(nullptr) {}
    Value(std::nullptr_t) : data_(nullptr) {}  // NOLINT(google-explicit-constructor)
    Value(bool b) : data_(b) {}                // NOLINT(google-explicit-constructor)
    Value(Int i) : data_(std::move(i)) {}      // NOLINT(google-explicit-constructor)
    Value(int i) : data_(Int(i)) {}            // NOLINT(google-explicit-constructor)
    Value(std::int64_t i) : data_(Int(i)) {}   // NOLINT(google-explicit-constructor)
    Value(std::size_t i) : data_(Int(i)) {}    // NOLINT(google-explicit-constructor)
    Value(std::string s) : data_(std::move(s)) {}  // NOLINT(google-explicit-constructor)
    Value(const char* s) : data_(std::string(s)) {}  // NOLINT(google-explicit-constructor)

    static Value array() { return Value(Array{}); }
    static Value object() { return Value(Object{}); }

    bool is_null() const { return std::holds_alternative<std::nullptr_t>(data_); }
    bool is_bool() const { return std::holds_alternative<bool>(data_); }
    bool is_integer() const { return std::holds_alternative<Int>(data_); }
    bool is_string() const { return std::holds_alternative<std::string>(data_); }
    bool is_array() const { return std::holds_alternative<Array>(data_); }
    bool is_object() const { return std::holds_alternative<Object>(data_); }

    bool as_bool() const { return get<bool>("boolean"); }
    const Int& as_integer() const { return get<Int>("integer"); }
    const std::string& as_string() const { return get<std::string>("string"); }
    const Array& items() const { return get<Array>("array"); }
    const Object& members() const { return get<Object>("object"); }

    Array& items() { return get<Array>("array"); }
    Object& members() { return get<Object>("object"); }

    void push(Value v) { items().push_back(std::move(v)); }
    void set(std::string key, Value v) { members().emplace_back(std::move(key), std::move(v)); }

    bool contains(std::string_view key) const {
        for (const Member& m : members())
            if (m.first == key) return true;
        return false;
    }

    const Value& at(std::string_view key) const {
        for (const Member& m : members())
            if (m.first == key) return m.second;
        throw ParseError("missing key '" + std::string(key) + "'");
    }

    const Value& at(std::size_t i) const {
        const Array& a = items();
        if (i >= a.size()) throw ParseError("array index out of range");
        return a[i];
    }

    friend bool operator==(const Value&, const Value&) = default;

    static Value parse(std::string_view text);
    std::string dump() const {
        std::string out;
        write(out, 0);
        out += "\n";
        return out;
    }

private:
    explicit Value(Array a) : data_(std::move(a)) {}
    explicit Value(Object o) : data_(std::move(o)) {}

    template <typename T>
    const T& get(const char* what) const {
        if (const T* p = std::get_if<T>(&data_)) return *p;
        throw ParseError(std::string("expected a JSON ") + what);
    }
    template <typename T>
    T& get(const char* what) {
        if (T* p = std::get_if<T>(&data_)) return *p;
        throw ParseError(std::string("expected a JSON ") + what);
    }

    static void write_string(std::string& out, const std::string& s) {
        out += '"';
        for (char ch : s) {
            switch (ch) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                case '\r': out += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(ch) < 0x20) {
                        static const char* hex = "0123456789abcdef";
                        out += "\\u00";
                        out += hex[(ch >> 4) & 0xf];
                        out += hex[ch & 0xf];
                    } else {
                        out += ch;
                    }
            }
        }
        out += '"';
    }

    bool contains_object() const {
        if (const Array* a = std::get_if<Array>(&data_)) {
            for (const Value& v : *a)
                if (v.is_object() || v.contains_object()) return true;
        }
        return false;
    }

    // Objects go one member per line; arrays are inlined unless they hold
    // objects. Keeps matrices compact and the overall file readable.
    void write(std::string& out, int depth) const {
        const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        const std::string pad_in(static_cast<std::size_t>(depth + 1) * 2, ' ');
        if (is_null()) {
            out += "null";
        } else if (const bool* b = std::get_if<bool>(&data_)) {
            out += *b ? "true" : "false";
        } else if (const Int* i = std::get_if<Int>(&data_)) {
            out += i->str();
        } else if (const std::string* s = std::get_if<std::string>(&data_)) {
            write_string(out, *s);
        } else if (const Array* a = std::get_if<Array>(&data_)) {
            if (a->empty()) {
                out += "[]";
            } else if (contains_object()) {
                out += "[\n";
                for (std::size_t k = 0; k < a->size(); ++k) {
                    out += pad_in;
                    (*a)[k].write(out, depth + 1);
                    out += k + 1 < a->size() ? ",\n" : "\n";
                }
                out += pad + "]";
            } else {
                out += "[";
                for (std::size_t k = 0; k < a->size(); ++k) {
                    if (k) out += ",";
                    (*a)[k].write(out, depth);
                }
                out += "]";
            }
        } else {
            const Object& o = std::get<Object>(data_);
            if (o.empty()) {
                out += "{}";
            } else {
                out += "{\n";
                for (std::size_t k = 0; k < o.size(); ++k) {
                    out += pad_in;
                    write_string(out, o[k].first);
                    out += ": ";
                    o[k].second.write(out, depth + 1);
                    out += k + 1 < o.size() ? ",\n" : "\n";
                }
                out += pad + "}";
            }
        }
    }

    std::variant<std::nullptr_t, bool, Int, std::string, Array, Object> data_;
};

namespace detail {

// SAX handler feeding nlohmann's tokenizer into Value. Integer tokens too
// wide for int64/uint64 reach number_float() with their raw text, which is
// where the exact big-integer path lives.
class ExactSax {
public:
    using number_integer_t = std::int64_t;
    using number_unsigned_t = std::uint64_t;
    using number_float_t = double;
    using string_t = std::string;
    using binary_t = nlohmann::json::binary_t;

    Value result;

    bool null() { return emit(Value(nullptr)); }
    bool boolean(bool b) { return emit(Value(b)); }
    bool number_integer(number_integer_t v) { return emit(Value(Int(v))); }
    bool number_unsigned(number_unsigned_t v) { return emit(Value(Int(v))); }
    bool number_float(number_float_t, const string_t& raw) {
        if (raw.find_first_of(".eE") != std::string::npos)
            throw ParseError("floating-point numbers are not allowed: '" + raw + "'");
        return emit(Value(Int(raw)));
    }
    bool string(string_t& s) { return emit(Value(s)); }
    bool binary(binary_t&) { throw ParseError("binary values are not allowed"); }
    bool start_object(std::size_t) {
        stack_.push_back(Value::object());
        return true;
    }
    bool key(string_t& k) {
        keys_.push_back(k);
        return true;
    }
    bool end_object() { return pop(); }
    bool start_array(std::size_t) {
        stack_.push_back(Value::array());
        return true;
    }
    bool end_array() { return pop(); }
    bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) {
        throw ParseError("JSON parse error at byte " + std::to_string(pos) + ": " + ex.what());
    }

private:
    bool emit(Value v) {
        if (stack_.empty()) {
            result = std::move(v);
            return true;
        }
        Value& top = stack_.back();
        if (top.is_array()) {
            top.push(std::move(v));
        } else {
            top.set(std::move(keys_.back()), std::move(v));
            keys_.pop_back();
        }
        return true;
    }
    bool pop() {
        Value done = std::move(stack_.back());
        stack_.pop_back();
        return emit(std::move(done));
    }

    std::vector<Value> stack_;
    std::vector<std::string> keys_;
};

}  // namespace detail

inline Value Value::parse(std::string_view text) {
    detail::ExactSax sax;
    if (!nlohmann::json::sax_parse(text.begin(), text.end(), &sax))
        throw ParseError("JSON parse failed");
    return std::move(sax.result);
}

}  // namespace braidforge::json
