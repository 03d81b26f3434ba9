#pragma once

#include <nlohmann/json.hpp>

#include "qaffine/cluster.hpp"
#include "qaffine/laurent.hpp"
#include "qaffine/qchar.hpp"
#include "qaffine/qgroth.hpp"
#include "qaffine/relations.hpp"
#include "qaffine/truncation.hpp"
#include "qaffine/xxz.hpp"

namespace qaffine {

using nlohmann::json;

// Monomials are arrays of [i, r, exponent] triples sorted ascending;
// polynomials are arrays of {coef, monomial} with big-integer coefficients
// carried as decimal strings.
json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);
json to_json(const Laurent& p);
Laurent laurent_from_json(const json& j);

json to_json(const PsiWeight& w);

json to_json(const QCharResult& r);

json to_json(const relations::RelationExpr& rel);

json to_json(const cluster::Seed& s);
json to_json(const cluster::EnumerateResult& r);

json to_json(const truncation::TruncationParam& z);
json certificate_to_json(const std::map<VarKey, int>& cert);
json to_json(const truncation::Chain& c);
json to_json(const std::vector<truncation::EnumeratedParam>& params);

json to_json(const qgroth::KtElement& x);

json to_json(const xxz::SpectrumFit& fit);
json to_json(const xxz::QQReport& rep);

}  // namespace qaffine
