// Copyright 2026 The renner-hecke Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "renner/data_format.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "renner/errors.hpp"

namespace renner {

  using nlohmann::json;

  namespace {
    json set_to_json(CoxeterGraph const& graph, GeneratorSet set) {
      json result = json::array();
      for (auto s : set.members()) {
        result.push_back(graph.name(s));
      }
      return result;
    }

    [[noreturn]] void fail(std::string const& path, std::string const& message) {
      throw ParseError(path + ": " + message);
    }

    std::string const& as_string(json const& value, std::string const& path) {
      if (!value.is_string()) {
        fail(path, "expected a string");
      }
      return value.get_ref<std::string const&>();
    }

    json const& as_array(json const& value, std::string const& path) {
      if (!value.is_array()) {
        fail(path, "expected an array");
      }
      return value;
    }

    json const& member(json const& doc, char const* key) {
      auto it = doc.find(key);
      if (it == doc.end()) {
        fail("/", std::string("missing field '") + key + "'");
      }
      return *it;
    }

    std::vector<std::string> string_list(json const& value, std::string const& path) {
      std::vector<std::string> result;
      auto const&              array = as_array(value, path);
      for (std::size_t i = 0; i < array.size(); ++i) {
        result.push_back(as_string(array[i], path + "/" + std::to_string(i)));
      }
      return result;
    }

    GeneratorSet generator_set(CoxeterGraph const& graph, json const& value,
                               std::string const& path) {
      GeneratorSet result;
      auto const&  array = as_array(value, path);
      for (std::size_t i = 0; i < array.size(); ++i) {
        auto const& name = as_string(array[i], path + "/" + std::to_string(i));
        auto        s    = graph.index_of(name);
        if (!s) {
          fail(path + "/" + std::to_string(i), "unknown generator '" + name + "'");
        }
        result.insert(*s);
      }
      return result;
    }

    std::vector<GeneratorSet> type_map(RennerData const& data, json const& value,
                                       std::string const& path) {
      if (!value.is_object()) {
        fail(path, "expected an object keyed by lattice element");
      }
      std::vector<GeneratorSet> result(data.lattice.size());
      for (auto const& [key, sets] : value.items()) {
        auto e = data.lattice.index_of(key);
        if (!e) {
          fail(path + "/" + key, "unknown lattice element '" + key + "'");
        }
        result[*e] = generator_set(data.graph, sets, path + "/" + key);
      }
      return result;
    }

    std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
      std::size_t line = 1;
      std::size_t col  = 1;
      for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return {line, col};
    }
  }  // namespace

  std::string to_data_text(RennerData const& data) {
    auto const& graph   = data.graph;
    auto const& lattice = data.lattice;
    json        doc     = json::object();
    doc["format"]       = kDataFormatTag;
    doc["generators"]   = graph.generators();
    json edges          = json::array();
    for (auto const& [edge, m] : graph.edges()) {
      edges.push_back({graph.name(edge.first), graph.name(edge.second), m});
    }
    doc["edges"]   = edges;
    doc["lattice"] = lattice.names();
    json order     = json::array();
    for (auto [a, b] : lattice.hasse_pairs()) {
      order.push_back({lattice.name(a), lattice.name(b)});
    }
    doc["order"] = order;
    json lower   = json::object();
    json upper   = json::object();
    for (std::size_t e = 0; e < lattice.size(); ++e) {
      lower[lattice.name(e)] = set_to_json(graph, data.lambda_star_lower.at(e));
      upper[lattice.name(e)] = set_to_json(graph, data.lambda_star_upper.at(e));
    }
    doc["lambda_star_lower"] = lower;
    doc["lambda_star_upper"] = upper;
    return doc.dump(2) + "\n";
  }

  RennerData parse_data(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
      auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
      throw ParseError(std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
    }
    if (!doc.is_object()) {
      fail("/", "expected a JSON object");
    }
    static std::set<std::string> const known{"format",  "generators", "edges",
                                             "lattice", "order",      "lambda_star_lower",
                                             "lambda_star_upper"};
    for (auto const& [key, value] : doc.items()) {
      if (!known.contains(key)) {
        fail("/" + key, "unknown field");
      }
    }
    if (auto it = doc.find("format"); it != doc.end()) {
      if (as_string(*it, "/format") != kDataFormatTag) {
        fail("/format", "unsupported format '" + it->get<std::string>() + "'");
      }
    }

    RennerData data;
    try {
      data.graph = CoxeterGraph(string_list(member(doc, "generators"), "/generators"));
    } catch (MalformedGraph const& e) {
      fail("/generators", e.what());
    }
    if (auto it = doc.find("edges"); it != doc.end()) {
      auto const& edges = as_array(*it, "/edges");
      for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string const path = "/edges/" + std::to_string(i);
        auto const&       edge = as_array(edges[i], path);
        if (edge.size() != 3) {
          fail(path, "expected [s, t, m]");
        }
        std::size_t ends[2];
        for (std::size_t k = 0; k < 2; ++k) {
          auto const& name = as_string(edge[k], path + "/" + std::to_string(k));
          auto        s    = data.graph.index_of(name);
          if (!s) {
            fail(path + "/" + std::to_string(k), "unknown generator '" + name + "'");
          }
          ends[k] = *s;
        }
        if (!edge[2].is_number_unsigned()) {
          fail(path + "/2", "expected a label >= 3");
        }
        try {
          data.graph.add_edge(ends[0], ends[1], edge[2].get<unsigned>());
        } catch (MalformedGraph const& e) {
          fail(path, e.what());
        }
      }
    }

    auto const names = string_list(member(doc, "lattice"), "/lattice");
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    if (auto it = doc.find("order"); it != doc.end()) {
      auto const& order = as_array(*it, "/order");
      for (std::size_t i = 0; i < order.size(); ++i) {
        std::string const path = "/order/" + std::to_string(i);
        auto const        pair = string_list(order[i], path);
        if (pair.size() != 2) {
          fail(path, "expected [a, b] with a < b");
        }
        std::size_t ends[2];
        for (std::size_t k = 0; k < 2; ++k) {
          auto it2 = std::find(names.begin(), names.end(), pair[k]);
          if (it2 == names.end()) {
            fail(path + "/" + std::to_string(k), "unknown lattice element '" + pair[k] + "'");
          }
          ends[k] = static_cast<std::size_t>(it2 - names.begin());
        }
        covers.emplace_back(ends[0], ends[1]);
      }
    }
    try {
      data.lattice = CrossSectionLattice(names, covers);
    } catch (InvalidData const& e) {
      fail("/order", e.what());
    }

    data.lambda_star_lower.assign(data.lattice.size(), GeneratorSet());
    data.lambda_star_upper.assign(data.lattice.size(), GeneratorSet());
    if (auto it = doc.find("lambda_star_lower"); it != doc.end()) {
      data.lambda_star_lower = type_map(data, *it, "/lambda_star_lower");
    }
    if (auto it = doc.find("lambda_star_upper"); it != doc.end()) {
      data.lambda_star_upper = type_map(data, *it, "/lambda_star_upper");
    }
    return data;
  }

  RennerData from_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw IoError("cannot open '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
      return parse_data(buffer.str());
    } catch (ParseError const& e) {
      throw ParseError(path.string() + ":" + e.what());
    }
  }

  void to_file(RennerData const& data, std::filesystem::path const& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw IoError("cannot write '" + path.string() + "'");
    }
    out << to_data_text(data);
  }

}  // namespace renner
