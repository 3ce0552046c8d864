#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "jumploci/certificate.hpp"
#include "jumploci/cons.hpp"
#include "jumploci/covers.hpp"
#include "jumploci/filtered_complex.hpp"
#include "jumploci/hodge.hpp"
#include "jumploci/jump_loci.hpp"
#include "jumploci/twisted_complex.hpp"

namespace jumploci {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "jumploci/v1";

// Parsers raise SchemaError on malformed input. Numbers: rationals are
// integers or strings "p/q"; cyclotomic numbers are {conductor, coeffs} or a
// plain rational.

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const Cyclo& c);
Cyclo cyclo_from_json(const Json& j);

/// {vars, terms: [{exps, coeff}], text}; text is for reading only.
Json to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const Json& j);

Json to_json(const RingMatrix& m);
RingMatrix ring_matrix_from_json(const Json& j, std::size_t nvars);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, std::size_t ambient);

/// Relators as arrays of signed 1-based generator indices.
Json to_json(const GroupPresentation& g);
GroupPresentation presentation_from_json(const Json& j);

Json to_json(const CoverDatum& c);
CoverDatum cover_datum_from_json(const Json& j);

Json to_json(const FreeComplex& k);
FreeComplex free_complex_from_json(const Json& j);

/// One of {"presentation": ..}, {"cover": ..}, {"complex": ..}.
FreeComplex complex_source_from_json(const Json& j);

/// Coordinates are cyclotomic numbers or {"generic": i}.
Json to_json(const CharacterPoint& p);
CharacterPoint point_from_json(const Json& j);

Json to_json(const LocusUnion& l);
Json to_json(const TranslatedSubtorus& s);
TranslatedSubtorus subtorus_from_json(const Json& j);

Json to_json(const OneHodgeStructure& h);
OneHodgeStructure hodge_from_json(const Json& j);

Json to_json(const std::vector<CertificateComponent>& cert);
std::vector<CertificateComponent> certificate_from_json(const Json& j);
Json to_json(const CertificateReport& r);

/// Per degree {lo, steps: [subspace, ...]}.
Json to_json(const Filtration& f);
Filtration filtration_from_json(const Json& j, const std::vector<std::size_t>& dims);

Json to_json(const FilteredComplex& k);
FilteredComplex filtered_complex_from_json(const Json& j);

Json to_json(const SpectralSequence& s);

Json to_json(const BigradedModuleData& a);
BigradedModuleData module_from_json(const Json& j);

Json to_json(const TriangulatedCurve& c);
TriangulatedCurve curve_from_json(const Json& j);

Json to_json(const IsotypicDims& d);

}  // namespace jumploci
