#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bsurf/actions.hpp"
#include "bsurf/form.hpp"
#include "bsurf/nambu.hpp"
#include "bsurf/surface.hpp"

namespace bsurf::io {

using json = nlohmann::ordered_json;

/// Schema violations: unknown keys, wrong types, missing fields. The message
/// names the offending key.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedPresentation {
  SurfacePresentation p;
  /// Present when the document carries an `involution` key (a surface handed
  /// over as its orientation double cover plus deck involution).
  std::optional<DeckInvolution> involution;
};

ParsedPresentation parse_presentation(const json& doc);
json presentation_to_json(const SurfacePresentation& p);

struct ParsedForm {
  BmFormData w;
  /// Resolved from an embedded `presentation` object or fixture name.
  std::optional<ParsedPresentation> presentation;
};

ParsedForm parse_form(const json& doc);
json form_to_json(const BmFormData& w);

FiniteAction parse_action(const json& doc);

NambuData parse_nambu(const json& doc);
json nambu_to_json(const NambuData& d);

json load_file(const std::string& path);

}  // namespace bsurf::io
