#ifndef PCW_SERIALIZE_HPP
#define PCW_SERIALIZE_HPP

#include <cstdint>
#include <memory>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pcw/bounds.hpp"
#include "pcw/covers.hpp"
#include "pcw/pseudocodeword.hpp"
#include "pcw/rational.hpp"
#include "pcw/search.hpp"
#include "pcw/tanner.hpp"
#include "pcw/weights.hpp"

namespace pcw {

// nlohmann ADL hooks. Schemas for the document-level formats live under
// schemas/ in the source tree.

void to_json(nlohmann::json& j, const Rational& r);
void from_json(const nlohmann::json& j, Rational& r);

void to_json(nlohmann::json& j, const GirthReport& r);

void to_json(nlohmann::json& j, const BoundReport& r);

void to_json(nlohmann::json& j, const Pseudocodeword& f);
Pseudocodeword pseudocodeword_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const Constellation& c);
Constellation constellation_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const QscSelection& s);
void to_json(nlohmann::json& j, const QscWeightDetail& d);

void to_json(nlohmann::json& j, const CoverSpec& c);
CoverSpec cover_from_json(const nlohmann::json& j,
                          std::shared_ptr<const TannerGraph> base);

void to_json(nlohmann::json& j, const SampleOrigin& o);
void to_json(nlohmann::json& j, const SearchConfig& c);
void to_json(nlohmann::json& j, const ChannelResult& c);
void to_json(nlohmann::json& j, const SearchReport& r);

/// {"n","r","checks":[[variable indices]]} with 0-based indices; an optional
/// "q" member must agree with the modulus passed by the caller.
nlohmann::json tanner_to_json(const TannerGraph& graph);
TannerGraph tanner_from_json(const nlohmann::json& j, std::uint32_t modulus);

/// Accepts either an alist document or the JSON mirror (sniffed by the
/// leading '{').
TannerGraph graph_from_text(std::string_view text, std::uint32_t modulus);

}  // namespace pcw

#endif  // PCW_SERIALIZE_HPP
