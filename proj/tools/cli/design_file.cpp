// Copyright 2026 The HiPPP Authors
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

#include "cli/design_file.hpp"

#include <cstdlib>
#include <limits>
#include <string>
#include <vector>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>

namespace hippp::cli {

namespace {

namespace pt = boost::property_tree;

std::string exact(double v) { return fmt::format("{:.17g}", v); }

std::string join(const std::vector<double>& values) {
  std::vector<std::string> parts;
  for (double v : values) parts.push_back(exact(v));
  return boost::algorithm::join(parts, ", ");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  boost::algorithm::split(items, text, boost::algorithm::is_any_of(","));
  std::vector<std::string> out;
  for (auto& item : items) {
    boost::algorithm::trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_real(const std::string& text, const std::string& key) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw DesignFileError(fmt::format("{}: '{}' is not a number", key, text));
  }
  return v;
}

std::vector<double> reals(const pt::ptree& tree, const std::string& key) {
  std::vector<double> values;
  for (const auto& item : split_list(tree.get<std::string>(key, ""))) {
    values.push_back(to_real(item, key));
  }
  return values;
}

std::string required(const pt::ptree& tree, const std::string& key) {
  const auto value = tree.get_optional<std::string>(key);
  if (!value) throw DesignFileError(fmt::format("design file is missing '{}'", key));
  return *value;
}

}  // namespace

Architecture DesignArtifact::architecture() const {
  return make_lshippp(layer1, layer2.rating, expected);
}

void write_design(std::ostream& out, const DesignArtifact& d) {
  out << "# LS-HiPPP converter design\n\n";
  out << "[supply]\n";
  out << "mean = " << exact(d.mean) << '\n';
  out << "sigma = " << exact(d.sigma) << '\n';
  out << "count = " << d.expected.size() << "\n\n";

  out << "[expected_set]\n";
  out << "capabilities = " << join(d.expected.capabilities) << "\n\n";

  std::vector<std::string> edges;
  std::vector<double> ratings;
  for (const auto& e : d.layer1.edges) {
    edges.push_back(fmt::format("{}-{}", e.from_battery, e.to_battery));
    ratings.push_back(e.rating);
  }
  out << "[layer1]\n";
  out << "edges = " << boost::algorithm::join(edges, ", ") << '\n';
  out << "ratings = " << join(ratings) << '\n';
  out << "processed = " << join(d.layer1.processed_at_design) << '\n';
  out << "rating_partitions = " << d.layer1.rating_partitions << "\n\n";

  out << "[layer2]\n";
  out << "budget = " << exact(d.budget) << '\n';
  out << "rating = " << exact(d.layer2.rating) << '\n';
  out << "count = " << d.layer2.count << "\n\n";

  std::vector<double> curve_ratings;
  std::vector<double> curve_utilization;
  for (const auto& p : d.curve.points) {
    curve_ratings.push_back(p.rating);
    curve_utilization.push_back(p.utilization);
  }
  out << "[layer2_curve]\n";
  out << "ratings = " << join(curve_ratings) << '\n';
  out << "utilization = " << join(curve_utilization) << '\n';
}

DesignArtifact read_design(std::istream& in) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw DesignFileError(fmt::format("malformed design file (line {}): {}", e.line(),
                                      e.message()));
  }
  DesignArtifact d;
  try {
    d.mean = to_real(required(tree, "supply.mean"), "supply.mean");
    d.sigma = to_real(required(tree, "supply.sigma"), "supply.sigma");
    const int count = std::stoi(required(tree, "supply.count"));
    d.expected.capabilities = reals(tree, "expected_set.capabilities");
    if (static_cast<int>(d.expected.capabilities.size()) != count) {
      throw DesignFileError(fmt::format("expected_set lists {} values for count = {}",
                                        d.expected.capabilities.size(), count));
    }

    const auto edge_items = split_list(required(tree, "layer1.edges"));
    const auto ratings = reals(tree, "layer1.ratings");
    d.layer1.processed_at_design = reals(tree, "layer1.processed");
    if (ratings.size() != edge_items.size() ||
        d.layer1.processed_at_design.size() != edge_items.size()) {
      throw DesignFileError("layer1 edges, ratings and processed differ in length");
    }
    for (size_t i = 0; i < edge_items.size(); ++i) {
      std::vector<std::string> ends;
      boost::algorithm::split(ends, edge_items[i], boost::algorithm::is_any_of("-"));
      if (ends.size() != 2) {
        throw DesignFileError(fmt::format("layer1.edges: bad edge '{}'", edge_items[i]));
      }
      d.layer1.edges.push_back({std::stoi(ends[0]), std::stoi(ends[1]), ratings[i]});
    }
    d.layer1.rating_partitions = std::stoi(required(tree, "layer1.rating_partitions"));

    d.budget = to_real(required(tree, "layer2.budget"), "layer2.budget");
    d.layer2.rating = to_real(required(tree, "layer2.rating"), "layer2.rating");
    d.layer2.count = std::stoi(required(tree, "layer2.count"));

    const auto curve_ratings = reals(tree, "layer2_curve.ratings");
    const auto curve_utilization = reals(tree, "layer2_curve.utilization");
    if (curve_ratings.size() != curve_utilization.size()) {
      throw DesignFileError("layer2_curve ratings and utilization differ in length");
    }
    for (size_t i = 0; i < curve_ratings.size(); ++i) {
      d.curve.points.push_back({curve_ratings[i], curve_utilization[i]});
    }
  } catch (const std::logic_error& e) {
    // std::stoi failures.
    throw DesignFileError(fmt::format("malformed design file: {}", e.what()));
  }
  return d;
}

}  // namespace hippp::cli
