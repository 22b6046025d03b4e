// JSON/CSV serialization of the core objects.  All output is deterministic
// (sorted object keys, enumeration-ordered arrays, exact "p/q" rationals) so
// identical inputs always produce byte-identical artifacts.

#ifndef MIPF_JSON_IO_HPP
#define MIPF_JSON_IO_HPP

#include <string>

#include "mipf/extension.hpp"
#include "mipf/fusion.hpp"
#include "mipf/invariants.hpp"
#include "mipf/modular_data.hpp"
#include "mipf/zspectrum.hpp"

namespace mipf {

// {"theory":..., "labels":[...], "c":"p/q", "h":["p/q",...],
//  "S":[[[re,im],...]], "T":[[re,im],...]}, arrays in enumeration order.
std::string modular_data_json(const ModularData& md);

// {"theory":..., "M":[[...]], "builder":..., "params":{...}}
std::string mipf_json(const Mipf& m);

// Inverse of mipf_json; throws ErrKind::InvalidInput on malformed input.
// The matrix content is not validated here — verification is a separate,
// explicit step.
Mipf mipf_from_json(const std::string& text);

std::string clone_report_json(const CloneReport& rep);
std::string meromorphic_report_json(const MeromorphicReport& rep);

// "h_L,h_R,multiplicity" rows, exponents as reduced fractions, sorted.
std::string zspectrum_csv(const ZSpectrum& z);

// "a,b,c,N" rows for every nonzero fusion coefficient, label-named,
// enumeration-ordered.
std::string fusion_csv(const ModularData& md, const FusionRing& ring);

}  // namespace mipf

#endif  // MIPF_JSON_IO_HPP
