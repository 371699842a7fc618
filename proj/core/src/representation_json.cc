// Copyright 2026 The seqspectra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqspectra/representation_json.h"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "seqspectra/errors.h"

namespace seqspectra {

using nlohmann::json;

std::string RepresentationToJson(const RepresentationMatrix& rep) {
  json rows = json::array();
  for (std::size_t l = 0; l < rep.row_count(); ++l) {
    auto r = rep.row(l);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  json doc = {{"name", rep.name()},
              {"alphabet_order", rep.column_order()},
              {"rows", std::move(rows)},
              {"d", rep.row_norm()}};
  return doc.dump(2);
}

RepresentationMatrix RepresentationFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw RepresentationError(std::string("malformed representation JSON: ") +
                              e.what());
  }
  try {
    if (!doc.is_object()) {
      throw RepresentationError("representation JSON must be an object");
    }
    std::string name = doc.value("name", std::string("custom"));

    std::string order;
    const json& ao = doc.at("alphabet_order");
    if (ao.is_string()) {
      order = ao.get<std::string>();
    } else if (ao.is_array()) {
      for (const json& s : ao) {
        auto sym = s.get<std::string>();
        if (sym.size() != 1) {
          throw RepresentationError("alphabet_order entries must be single "
                                    "characters, got \"" + sym + "\"");
        }
        order += sym;
      }
    } else {
      throw RepresentationError(
          "alphabet_order must be a string or an array of strings");
    }
    for (char& c : order) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }

    auto rows = doc.at("rows").get<std::vector<std::vector<double>>>();
    RepresentationMatrix rep =
        ValidateRowOrthogonal(std::move(name), order, std::move(rows));

    if (doc.contains("d")) {
      const double declared = doc.at("d").get<double>();
      if (std::abs(declared - rep.row_norm()) >
          kRowNormTolerance * rep.row_norm()) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "declared d = " << declared
            << " does not match measured row norm " << rep.row_norm()
            << " in representation '" << rep.name() << "'";
        throw RepresentationError(msg.str());
      }
    }
    return rep;
  } catch (const json::exception& e) {
    throw RepresentationError(std::string("invalid representation JSON: ") +
                              e.what());
  }
}

RepresentationMatrix LoadRepresentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open representation file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return RepresentationFromJson(buf.str());
}

}  // namespace seqspectra
