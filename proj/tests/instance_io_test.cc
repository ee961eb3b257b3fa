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

#include <gtest/gtest.h>

#include "coverlife/instance_gen.h"
#include "coverlife/splitmix.h"
#include "test_util.h"

namespace coverlife {
namespace {

TEST(InstanceJsonTest, ParsesDocumentedFormat) {
  const Instance instance = ParseInstanceJson(R"({
    "n": 2, "m": 1, "range": 70,
    "sensors": [[0, 0], [10.5, 3]],
    "targets": [[1, 1]],
    "battery": [1, 0.5]
  })");
  EXPECT_EQ(instance.num_sensors(), 2);
  EXPECT_EQ(instance.sensors[1], (Point{10.5, 3.0}));
  EXPECT_EQ(instance.battery[1], 0.5);
  EXPECT_EQ(instance.range, 70.0);
}

TEST(InstanceJsonTest, RoundTripPreservesEveryBit) {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    GenConfig config;
    config.num_sensors = 40;
    config.num_targets = 10;
    config.seed = rng.Next();
    const Instance instance = Generate(config);
    EXPECT_EQ(ParseInstanceJson(InstanceToJson(instance)), instance);
  }
}

TEST(InstanceJsonTest, RejectsMalformed) {
  EXPECT_THROW(ParseInstanceJson("{"), FormatError);
  EXPECT_THROW(ParseInstanceJson(R"({"sensors": [[0,0]], "targets": [[1,1]],
                                    "range": 5})"),
               FormatError);
  EXPECT_THROW(ParseInstanceJson(R"({"n": 3, "sensors": [[0,0]],
                                    "targets": [[1,1]], "range": 5,
                                    "battery": [1]})"),
               FormatError);
  EXPECT_THROW(ParseInstanceJson(R"({"sensors": [[0,0]], "targets": [[1,1]],
                                    "range": 5, "battery": [-1]})"),
               FormatError);
  EXPECT_THROW(ParseInstanceJson(R"({"sensors": [[0]], "targets": [[1,1]],
                                    "range": 5, "battery": [1]})"),
               FormatError);
}

TEST(ScheduleJsonTest, RoundTrip) {
  const Schedule schedule{
      {{SensorCover({0, 1}), 0.5}, {SensorCover({2}), 0.1 + 0.2}}};
  EXPECT_EQ(ParseScheduleJson(ScheduleToJson(schedule)), schedule);
  EXPECT_THROW(ParseScheduleJson(R"({"schedule": [{"cover": [0]}]})"),
               FormatError);
}

}  // namespace
}  // namespace coverlife
