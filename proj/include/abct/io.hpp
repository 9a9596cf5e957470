#pragma once

#include <string>

#include <json.hpp>

#include "abct/classes.hpp"
#include "abct/matrix.hpp"
#include "abct/matroid.hpp"
#include "abct/symfunc.hpp"

namespace abct {

using OrderedJson = nlohmann::ordered_json;

/// "11*s[2] + 6*s[1,1]": terms sorted by descending lex partition,
/// coefficient always printed, zero parts omitted (the zero partition
/// renders as s[0]). The zero expansion renders "0".
std::string render_schur_text(const SchurExpansion& e);

/// [{"partition":[2],"coeff":"11"}, ...] in descending lex order.
OrderedJson schur_terms_json(const SchurExpansion& e);

/// {"n":..,"codim":..,"terms":[..]} plus "degree" when supplied.
OrderedJson class_result_json(const ClassResult& r, const Int* degree = nullptr);

/// 1-based "1,2,3" label of a 0-based index subset.
std::string subset_label(const IndexSet& I);

/// {"1,2,3":"1", ...} in subset enumeration order, values as "p/q".
OrderedJson pluecker_json(const PlueckerVector& P);

std::string matrix_to_csv(const ExactMatrix& M);
ExactMatrix matrix_from_csv(const std::string& text);

OrderedJson matrix_json(const ExactMatrix& M);
ExactMatrix matrix_from_json(const OrderedJson& j);

/// Reads a matrix file, JSON when the first non-space byte is '{',
/// CSV otherwise.
ExactMatrix matrix_from_file(const std::string& path);

/// {"n":6,"bases":[[1,2],...]} with 1-based sorted bases.
OrderedJson rank2_matroid_json(const Rank2Matroid& M);
Rank2Matroid rank2_matroid_from_json(const OrderedJson& j);
Rank2Matroid rank2_matroid_from_file(const std::string& path);

/// {"n":..,"k":..,"bases":[[1,2,3],...]}.
OrderedJson matroid_k_json(const MatroidK& M);

}  // namespace abct
