// Copyright 2026 The Coverlife Authors
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

#include "coverlife/instance_io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace coverlife {
namespace {

using nlohmann::json;

std::vector<Point> ParsePoints(const json& array, const char* field) {
  if (!array.is_array()) {
    throw FormatError(std::string("\"") + field + "\" must be an array");
  }
  std::vector<Point> points;
  points.reserve(array.size());
  for (const json& p : array) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() ||
        !p[1].is_number()) {
      throw FormatError(std::string("\"") + field +
                        "\" entries must be [x, y] number pairs");
    }
    points.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return points;
}

json PointsToJson(const std::vector<Point>& points) {
  json array = json::array();
  for (const Point& p : points) array.push_back({p.x, p.y});
  return array;
}

}  // namespace

Instance ParseInstanceJson(const std::string& text) {
  try {
    const json doc = json::parse(text);
    Instance instance;
    instance.sensors = ParsePoints(doc.at("sensors"), "sensors");
    instance.targets = ParsePoints(doc.at("targets"), "targets");
    instance.range = doc.at("range").get<double>();
    instance.battery = doc.at("battery").get<std::vector<double>>();
    if (doc.contains("n") &&
        doc.at("n").get<size_t>() != instance.sensors.size()) {
      throw FormatError("\"n\" does not match the number of sensors");
    }
    if (doc.contains("m") &&
        doc.at("m").get<size_t>() != instance.targets.size()) {
      throw FormatError("\"m\" does not match the number of targets");
    }
    instance.Validate();
    return instance;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid instance: ") + e.what());
  }
}

std::string InstanceToJson(const Instance& instance) {
  json doc;
  doc["n"] = instance.sensors.size();
  doc["m"] = instance.targets.size();
  doc["range"] = instance.range;
  doc["sensors"] = PointsToJson(instance.sensors);
  doc["targets"] = PointsToJson(instance.targets);
  doc["battery"] = instance.battery;
  return doc.dump(2) + "\n";
}

Schedule ParseScheduleJson(const std::string& text) {
  try {
    const json doc = json::parse(text);
    Schedule schedule;
    for (const json& entry : doc.at("schedule")) {
      schedule.entries.push_back(
          {SensorCover(entry.at("cover").get<std::vector<SensorIndex>>()),
           entry.at("lifetime").get<double>()});
    }
    return schedule;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed schedule: ") + e.what());
  }
}

std::string ScheduleToJson(const Schedule& schedule) {
  json entries = json::array();
  for (const ScheduleEntry& entry : schedule.entries) {
    entries.push_back(
        {{"cover", entry.cover.members()}, {"lifetime", entry.lifetime}});
  }
  json doc;
  doc["schedule"] = std::move(entries);
  return doc.dump(2) + "\n";
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace coverlife
