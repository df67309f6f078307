#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "braidforge/braid.hpp"
#include "braidforge/family.hpp"
#include "braidforge/gamma0.hpp"
#include "braidforge/json_value.hpp"
#include "braidforge/quiver.hpp"

namespace braidforge {

inline constexpr std::string_view kToolVersion = "1.0.0";

// ---------------------------------------------------------------------------
// Scalar encodings. A Rational is a pair [p, q] with q > 0 and gcd 1; a
// Cyclotomic is a 4-tuple [p, q, r, s] meaning p/q + (r/s) w, both parts
// reduced. Matrices are row-major nested arrays of 4-tuples.

inline json::Value encode(const Rational& q) {
    json::Value v = json::Value::array();
    v.push(num(q));
    v.push(den(q));
    return v;
}

inline Rational decode_rational(const json::Value& v) {
    if (!v.is_array() || v.items().size() != 2)
        throw ParseError("rational must be a [p, q] pair");
    return make_rational(v.at(0).as_integer(), v.at(1).as_integer());
}

inline json::Value encode(const Cyclotomic& x) {
    json::Value v = json::Value::array();
    v.push(num(x.re));
    v.push(den(x.re));
    v.push(num(x.om));
    v.push(den(x.om));
    return v;
}

inline Cyclotomic decode_cyclotomic(const json::Value& v) {
    if (!v.is_array() || v.items().size() != 4)
        throw ParseError("scalar must be a [p, q, r, s] tuple");
    return {make_rational(v.at(0).as_integer(), v.at(1).as_integer()),
            make_rational(v.at(2).as_integer(), v.at(3).as_integer())};
}

inline json::Value encode(const Matrix& m) {
    json::Value rows = json::Value::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json::Value row = json::Value::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push(encode(m(i, j)));
        rows.push(std::move(row));
    }
    return rows;
}

inline Matrix decode_matrix(const json::Value& v, std::size_t rows, std::size_t cols) {
    if (!v.is_array() || v.items().size() != rows) throw ParseError("matrix row count mismatch");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json::Value& row = v.at(i);
        if (!row.is_array() || row.items().size() != cols)
            throw ParseError("matrix column count mismatch");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = decode_cyclotomic(row.at(j));
    }
    return m;
}

/// Square matrix whose size is read off the document itself.
inline Matrix decode_square_matrix(const json::Value& v) {
    if (!v.is_array()) throw ParseError("matrix must be an array of rows");
    const std::size_t n = v.items().size();
    return decode_matrix(v, n, n);
}

// ---------------------------------------------------------------------------
// Quivers and representations.

inline json::Value encode(const Quiver& q) {
    json::Value out = json::Value::object();
    out.set("vertices", q.vertex_count);
    json::Value arrows = json::Value::array();
    for (const Arrow& a : q.arrows) {
        json::Value pair = json::Value::array();
        pair.push(a.source);
        pair.push(a.target);
        arrows.push(std::move(pair));
    }
    out.set("arrows", std::move(arrows));
    return out;
}

inline Quiver decode_quiver(const json::Value& v) {
    Quiver q;
    q.vertex_count = static_cast<std::size_t>(v.at("vertices").as_integer());
    for (const json::Value& pair : v.at("arrows").items()) {
        if (!pair.is_array() || pair.items().size() != 2)
            throw ParseError("arrow must be a [source, target] pair");
        q.arrows.push_back({static_cast<std::size_t>(pair.at(0).as_integer()),
                            static_cast<std::size_t>(pair.at(1).as_integer())});
    }
    q.check();
    return q;
}

inline json::Value encode(const LabeledQuiver& lq) {
    json::Value out = encode(lq.quiver);
    json::Value labels = json::Value::array();
    for (const Cyclotomic& c : lq.labels) labels.push(encode(c));
    out.set("labels", std::move(labels));
    return out;
}

inline json::Value encode(const QRep& r) {
    json::Value out = json::Value::object();
    json::Value dim = json::Value::array();
    for (std::int64_t d : r.dim) dim.push(d);
    out.set("dim", std::move(dim));
    json::Value maps = json::Value::array();
    for (const Matrix& m : r.maps) maps.push(encode(m));
    out.set("arrow_maps", std::move(maps));
    return out;
}

inline QRep decode_qrep(const json::Value& v) {
    QRep r;
    for (const json::Value& d : v.at("dim").items())
        r.dim.push_back(static_cast<std::int64_t>(d.as_integer()));
    if (r.dim.size() != 5) throw ParseError("dimension vector must have 5 entries");
    const json::Value& maps = v.at("arrow_maps");
    if (!maps.is_array() || maps.items().size() != kQArrows)
        throw ParseError("expected 6 arrow maps");
    for (std::size_t k = 0; k < kQArrows; ++k)
        r.maps[k] = decode_matrix(maps.at(k), static_cast<std::size_t>(r.dim[arrow_target(k)]),
                                  static_cast<std::size_t>(r.dim[arrow_source(k)]));
    return r;
}

inline json::Value encode(const Gamma0Rep& g) {
    json::Value out = json::Value::object();
    out.set("n", g.n);
    out.set("U", encode(g.U));
    out.set("V", encode(g.V));
    return out;
}

inline Gamma0Rep decode_gamma0(const json::Value& v) {
    const std::size_t n = static_cast<std::size_t>(v.at("n").as_integer());
    return {n, decode_matrix(v.at("U"), n, n), decode_matrix(v.at("V"), n, n)};
}

inline json::Value encode(const Fingerprint& fp) {
    json::Value out = json::Value::array();
    for (const Cyclotomic& t : fp.traces) out.push(encode(t));
    return out;
}

inline Fingerprint decode_fingerprint(const json::Value& v) {
    Fingerprint fp;
    for (const json::Value& t : v.items()) fp.traces.push_back(decode_cyclotomic(t));
    return fp;
}

// ---------------------------------------------------------------------------
// Family specs, certificates, catalogs.

inline json::Value encode(const FamilySpec& spec) {
    json::Value out = json::Value::object();
    out.set("n", spec.n);
    json::Value lambdas = json::Value::array();
    for (const Rational& l : spec.lambdas) lambdas.push(encode(l));
    out.set("lambdas", std::move(lambdas));
    json::Value scalars = json::Value::array();
    for (const Cyclotomic& c : spec.arrow_scalars) scalars.push(encode(c));
    out.set("arrow_scalars", std::move(scalars));
    out.set("mu", encode(spec.mu));
    return out;
}

inline FamilySpec decode_family_spec(const json::Value& v) {
    FamilySpec spec;
    spec.n = static_cast<std::size_t>(v.at("n").as_integer());
    for (const json::Value& l : v.at("lambdas").items()) spec.lambdas.push_back(decode_rational(l));
    for (const json::Value& c : v.at("arrow_scalars").items())
        spec.arrow_scalars.push_back(decode_cyclotomic(c));
    spec.mu = decode_rational(v.at("mu"));
    return spec;
}

inline json::Value encode(const Certificate& cert) {
    json::Value out = json::Value::object();
    out.set("braid_ok", cert.braid_ok);
    out.set("irreducible", cert.irreducible);
    out.set("central_ok", cert.central_ok);
    out.set("fingerprint", encode(cert.fingerprint));
    out.set("parameter_count", cert.parameter_count);
    return out;
}

inline Certificate decode_certificate(const json::Value& v) {
    Certificate cert;
    cert.braid_ok = v.at("braid_ok").as_bool();
    cert.irreducible = v.at("irreducible").as_bool();
    cert.central_ok = v.at("central_ok").as_bool();
    cert.fingerprint = decode_fingerprint(v.at("fingerprint"));
    cert.parameter_count = static_cast<std::size_t>(v.at("parameter_count").as_integer());
    return cert;
}

inline json::Value encode(const B3Rep& rep, const Certificate& cert) {
    json::Value out = json::Value::object();
    out.set("n", rep.n);
    out.set("mu", encode(rep.mu));
    out.set("sigma1", encode(rep.sigma1));
    out.set("sigma2", encode(rep.sigma2));
    out.set("certificate", encode(cert));
    return out;
}

struct Catalog {
    std::string version{kToolVersion};
    std::string generated;  // ISO-8601 UTC provenance timestamp
    FamilySpec spec;
    B3Rep rep;
    Certificate certificate;
};

inline json::Value encode(const Catalog& cat) {
    json::Value out = json::Value::object();
    out.set("version", cat.version);
    out.set("generated", cat.generated);
    out.set("spec", encode(cat.spec));
    out.set("representation", encode(cat.rep, cat.certificate));
    return out;
}

inline Catalog decode_catalog(const json::Value& v) {
    Catalog cat;
    cat.version = v.at("version").as_string();
    cat.generated = v.at("generated").as_string();
    cat.spec = decode_family_spec(v.at("spec"));
    const json::Value& rep = v.at("representation");
    cat.rep.n = static_cast<std::size_t>(rep.at("n").as_integer());
    cat.rep.mu = decode_rational(rep.at("mu"));
    cat.rep.sigma1 = decode_matrix(rep.at("sigma1"), cat.rep.n, cat.rep.n);
    cat.rep.sigma2 = decode_matrix(rep.at("sigma2"), cat.rep.n, cat.rep.n);
    cat.certificate = decode_certificate(rep.at("certificate"));
    return cat;
}

// ---------------------------------------------------------------------------
// Text forms used on the command line.

/// Splits on a separator; empty input gives an empty list.
inline std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

/// Parses "3", "-1/2", "w", "-w", "2w", "1+2w", "1/2-3/4w".
inline Cyclotomic parse_cyclotomic(std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    const std::size_t w = text.find('w');
    if (w == std::string_view::npos) return {parse_rational(text)};
    if (w + 1 != text.size()) throw ParseError("'w' must be the last character: '" + std::string(text) + "'");
    std::string_view head = text.substr(0, w);
    // split head into rational part and omega coefficient at the last +/-
    // that is not a leading sign and not inside a fraction
    std::size_t cut = std::string_view::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') {
            cut = i;
            break;
        }
    }
    std::string_view re_part = cut == std::string_view::npos ? std::string_view{} : head.substr(0, cut);
    std::string_view om_part = cut == std::string_view::npos ? head : head.substr(cut);
    Rational om;
    if (om_part.empty() || om_part == "+")
        om = 1;
    else if (om_part == "-")
        om = -1;
    else
        om = parse_rational(om_part);
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return {std::move(re), std::move(om)};
}

}  // namespace braidforge
