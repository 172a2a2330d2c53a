#include "sta/doc_io.hpp"

#include <fstream>
#include <sstream>

#include "sta/maxwell.hpp"

namespace sta {

using nlohmann::json;

namespace {

json amp_to_json(const Rational& a) { return rational_to_string(a); }

json amp_to_json(const Complex& a) {
    return json{{"re", rational_to_string(a.re)}, {"im", rational_to_string(a.im)}};
}

template <typename R>
json poly_to_json_impl(const FourierPoly<R>& p) {
    json terms = json::array();
    for (const auto& [key, amp] : p.terms()) {
        json t;
        t["monomial"] = {key.expo[0], key.expo[1], key.expo[2], key.expo[3]};
        if (key.has_phase) {
            t["k"] = {rational_to_string(key.wave.k[0]), rational_to_string(key.wave.k[1]),
                      rational_to_string(key.wave.k[2]), rational_to_string(key.wave.k[3])};
            t["trig"] = key.trig == Trig::cos ? "cos" : "sin";
        }
        t["amp"] = amp_to_json(amp);
        terms.push_back(std::move(t));
    }
    return terms;
}

template <typename R>
json field_to_json_impl(const MultivectorField<R>& f) {
    json blades = json::array();
    for (int i = 0; i < kBladeCount; ++i) {
        const auto& p = f[static_cast<BladeMask>(i)];
        if (p.is_zero()) continue;
        blades.push_back(json{{"blade", blade_label(static_cast<BladeMask>(i))},
                              {"terms", poly_to_json_impl(p)}});
    }
    return blades;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw parse_error(where + ": " + what);
}

Rational parse_rational(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a \"p/q\" string");
    try {
        return rational_from_string(j.get<std::string>());
    } catch (const parse_error& e) {
        fail(where, e.what());
    }
}

Rational amp_from_json(const json& j, const std::string& where, Rational*) {
    return parse_rational(j, where);
}

Complex amp_from_json(const json& j, const std::string& where, Complex*) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im"))
        fail(where, "expected {\"re\": \"p/q\", \"im\": \"p/q\"}");
    return Complex(parse_rational(j.at("re"), where + ".re"),
                   parse_rational(j.at("im"), where + ".im"));
}

BladeMask parse_blade_label(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a blade label like \"b0011\"");
    std::string s = j.get<std::string>();
    if (s.size() != 5 || s[0] != 'b') fail(where, "malformed blade label '" + s + "'");
    unsigned mask = 0;
    for (int i = 1; i <= 4; ++i) {
        if (s[i] != '0' && s[i] != '1') fail(where, "malformed blade label '" + s + "'");
        mask = (mask << 1) | static_cast<unsigned>(s[i] - '0');
    }
    return static_cast<BladeMask>(mask);
}

template <typename R>
MultivectorField<R> field_from_json_impl(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of blade entries");
    MultivectorField<R> f;
    for (std::size_t b = 0; b < j.size(); ++b) {
        std::string bw = where + "[" + std::to_string(b) + "]";
        const json& entry = j[b];
        if (!entry.is_object() || !entry.contains("blade") || !entry.contains("terms"))
            fail(bw, "expected {\"blade\": ..., \"terms\": [...]}");
        BladeMask mask = parse_blade_label(entry.at("blade"), bw + ".blade");
        const json& terms = entry.at("terms");
        if (!terms.is_array()) fail(bw + ".terms", "expected an array");
        for (std::size_t t = 0; t < terms.size(); ++t) {
            std::string tw = bw + ".terms[" + std::to_string(t) + "]";
            const json& term = terms[t];
            if (!term.is_object() || !term.contains("monomial") || !term.contains("amp"))
                fail(tw, "expected {\"monomial\": [...], \"amp\": ...}");
            TermKey key;
            const json& mono = term.at("monomial");
            if (!mono.is_array() || mono.size() != 4)
                fail(tw + ".monomial", "expected 4 exponents");
            for (int mu = 0; mu < 4; ++mu) {
                if (!mono[mu].is_number_unsigned())
                    fail(tw + ".monomial", "exponents must be non-negative integers");
                key.expo[mu] = mono[mu].get<std::uint16_t>();
            }
            if (term.contains("k") != term.contains("trig"))
                fail(tw, "phase needs both \"k\" and \"trig\"");
            if (term.contains("k")) {
                const json& kj = term.at("k");
                if (!kj.is_array() || kj.size() != 4)
                    fail(tw + ".k", "expected 4 rational components");
                key.has_phase = true;
                for (int mu = 0; mu < 4; ++mu)
                    key.wave.k[mu] =
                        parse_rational(kj[mu], tw + ".k[" + std::to_string(mu) + "]");
                std::string trig = term.at("trig").is_string()
                                       ? term.at("trig").get<std::string>()
                                       : std::string();
                if (trig == "cos")
                    key.trig = Trig::cos;
                else if (trig == "sin")
                    key.trig = Trig::sin;
                else
                    fail(tw + ".trig", "expected \"cos\" or \"sin\"");
            }
            R amp = amp_from_json(term.at("amp"), tw + ".amp", static_cast<R*>(nullptr));
            f[mask].add_term(key, std::move(amp));
        }
    }
    return f;
}

}  // namespace

json poly_to_json(const FourierPoly<Rational>& p) { return poly_to_json_impl(p); }
json poly_to_json(const FourierPoly<Complex>& p) { return poly_to_json_impl(p); }
json field_to_json(const MultivectorField<Rational>& f) { return field_to_json_impl(f); }
json field_to_json(const MultivectorField<Complex>& f) { return field_to_json_impl(f); }

MultivectorField<Rational> real_field_from_json(const json& j, const std::string& where) {
    return field_from_json_impl<Rational>(j, where);
}
MultivectorField<Complex> complex_field_from_json(const json& j, const std::string& where) {
    return field_from_json_impl<Complex>(j, where);
}

json FieldDocument::to_json() const {
    json fields = json::object();
    if (is_complex()) {
        for (const auto& [name, f] : complex_fields) fields[name] = field_to_json(f);
    } else {
        for (const auto& [name, f] : real_fields) fields[name] = field_to_json(f);
    }
    json j;
    j["format"] = kFormatTag;
    j["signature"] = signature;
    j["scalar_ring"] = scalar_ring;
    j["fields"] = std::move(fields);
    j["params"] = params;
    return j;
}

FieldDocument FieldDocument::from_json(const json& j) {
    if (!j.is_object()) throw parse_error("document: expected a JSON object");
    if (!j.contains("format") || j.at("format") != kFormatTag)
        throw parse_error("document.format: expected \"" + std::string(kFormatTag) + "\"");
    FieldDocument d;
    if (j.contains("signature")) {
        if (!j.at("signature").is_string())
            throw parse_error("document.signature: expected a string");
        d.signature = j.at("signature").get<std::string>();
    }
    if (d.signature != "1,3")
        throw parse_error("document.signature: only \"1,3\" is supported");
    if (!j.contains("scalar_ring") || !j.at("scalar_ring").is_string())
        throw parse_error("document.scalar_ring: expected a string");
    d.scalar_ring = j.at("scalar_ring").get<std::string>();
    if (d.scalar_ring != kRingRational && d.scalar_ring != kRingComplex)
        throw parse_error("document.scalar_ring: unknown ring '" + d.scalar_ring + "'");
    if (!j.contains("fields") || !j.at("fields").is_object())
        throw parse_error("document.fields: expected an object");
    for (const auto& [name, fj] : j.at("fields").items()) {
        std::string where = "fields." + name;
        if (d.is_complex())
            d.complex_fields.emplace(name, complex_field_from_json(fj, where));
        else
            d.real_fields.emplace(name, real_field_from_json(fj, where));
    }
    if (j.contains("params")) {
        if (!j.at("params").is_object())
            throw parse_error("document.params: expected an object");
        for (const auto& [name, pv] : j.at("params").items()) {
            if (!pv.is_string())
                throw parse_error("document.params." + name + ": expected a string");
            d.params.emplace(name, pv.get<std::string>());
        }
    }
    return d;
}

std::string FieldDocument::dump() const { return to_json().dump(2) + "\n"; }

FieldDocument FieldDocument::parse(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(std::string("document is not valid JSON: ") + e.what());
    }
    return from_json(j);
}

FieldDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return FieldDocument::parse(buf.str());
}

void save_document(const FieldDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw error("cannot write '" + path + "'");
    out << doc.dump();
}

FieldDocument residual_document(const MultivectorField<Rational>& f) {
    FieldDocument doc;
    doc.real_fields["residual"] = f;
    return doc;
}

FieldDocument residual_document(const MultivectorField<Complex>& f) {
    FieldDocument doc = FieldDocument::complex_document();
    doc.complex_fields["residual"] = f;
    return doc;
}

namespace detail {

std::string dump_field(const MultivectorField<Rational>& f) {
    return residual_document(f).to_json().dump();
}

}  // namespace detail

}  // namespace sta
