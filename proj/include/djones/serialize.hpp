// JSON serializations: polynomials as sorted [exponent, coefficient] lists,
// cyclotomic numbers as {order, coefficient strings}, matrices as a dimension
// followed by row-major entries.
#ifndef DJONES_SERIALIZE_HPP
#define DJONES_SERIALIZE_HPP

#include <string>
#include <vector>

#include "djones/bilaurent.hpp"
#include "djones/cyclotomic.hpp"
#include "djones/laurent.hpp"
#include "djones/qdiff.hpp"

namespace djones {

std::string laurent_to_json_text(const Laurent& p);
Laurent laurent_from_json_text(const std::string& text);

std::string bilaurent_to_json_text(const BiLaurent& p);
BiLaurent bilaurent_from_json_text(const std::string& text);

std::string cyclo_to_json_text(const Cyclo& z);
Cyclo cyclo_from_json_text(const std::string& text);

// list of [Q-power, S-power, coefficient]
std::string qdiff_to_json_text(const QDiffOperator& op);
QDiffOperator qdiff_from_json_text(const std::string& text);

std::string matrix_to_json_text(const std::vector<std::vector<Cyclo>>& m);

}  // namespace djones

#endif
