#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "sta/field.hpp"

namespace sta {

/// On-disk form of one or more named multivector fields over a single
/// scalar ring, plus free-form string parameters (masses, wave vectors).
/// Rationals are serialized as "p/q" strings, never as decimals; blade
/// and term order is canonical, so emission is deterministic and
/// parse(emit(doc)) == doc holds exactly.
struct FieldDocument {
    static constexpr const char* kFormatTag = "sta-field-document";
    static constexpr const char* kRingRational = "rational";
    static constexpr const char* kRingComplex = "complex-rational";

    std::string signature = "1,3";
    std::string scalar_ring = kRingRational;
    std::map<std::string, MultivectorField<Rational>> real_fields;
    std::map<std::string, MultivectorField<Complex>> complex_fields;
    std::map<std::string, std::string> params;

    static FieldDocument real_document() { return FieldDocument{}; }
    static FieldDocument complex_document() {
        FieldDocument d;
        d.scalar_ring = kRingComplex;
        return d;
    }

    bool is_complex() const { return scalar_ring == kRingComplex; }

    nlohmann::json to_json() const;
    static FieldDocument from_json(const nlohmann::json& j);

    /// Canonical text form (sorted keys, fixed indentation, trailing
    /// newline); the round-trip and determinism contracts are stated over
    /// these bytes.
    std::string dump() const;
    static FieldDocument parse(const std::string& text);

    friend bool operator==(const FieldDocument& a, const FieldDocument& b) {
        return a.signature == b.signature && a.scalar_ring == b.scalar_ring &&
               a.real_fields == b.real_fields && a.complex_fields == b.complex_fields &&
               a.params == b.params;
    }
};

nlohmann::json poly_to_json(const FourierPoly<Rational>& p);
nlohmann::json poly_to_json(const FourierPoly<Complex>& p);
nlohmann::json field_to_json(const MultivectorField<Rational>& f);
nlohmann::json field_to_json(const MultivectorField<Complex>& f);
MultivectorField<Rational> real_field_from_json(const nlohmann::json& j,
                                                const std::string& where);
MultivectorField<Complex> complex_field_from_json(const nlohmann::json& j,
                                                  const std::string& where);

FieldDocument load_document(const std::string& path);
void save_document(const FieldDocument& doc, const std::string& path);

/// Wraps a nonzero residual as a complete document under the field name
/// "residual"; the form used by reports and gauge errors.
FieldDocument residual_document(const MultivectorField<Rational>& f);
FieldDocument residual_document(const MultivectorField<Complex>& f);

}  // namespace sta
