// Copyright 2026 The cpcorr Authors. All Rights Reserved.
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
#include <cmath>

#include "doctest.h"

#include "cpcorr/error.hpp"
#include "cpcorr/lattice.hpp"

using cpcorr::ContinuumSchedule;
using cpcorr::Lattice;

TEST_CASE("default schedule") {
  const ContinuumSchedule s;
  CHECK(s.half_length(80) == doctest::Approx(2.0));
  CHECK(s.spacing(80) == doctest::Approx(0.05));
  // L = (a0/2) sqrt(N N0), a = 2L/N
  CHECK(s.half_length(200) == doctest::Approx(0.025 * std::sqrt(200.0 * 80.0)));
  CHECK(s.spacing(200) == doctest::Approx(2.0 * s.half_length(200) / 200.0));
}

TEST_CASE("schedule drives both limits") {
  const ContinuumSchedule s;
  double prev_l = 0.0, prev_a = 1.0;
  for (int n = 80; n <= 1000; n += 20) {
    CHECK(s.half_length(n) > prev_l);
    CHECK(s.spacing(n) < prev_a);
    prev_l = s.half_length(n);
    prev_a = s.spacing(n);
  }
}

TEST_CASE("schedule validation") {
  CHECK_THROWS_AS(ContinuumSchedule(0.0, 80), cpcorr::ConfigError);
  CHECK_THROWS_AS(ContinuumSchedule(-0.1, 80), cpcorr::ConfigError);
  CHECK_THROWS_AS(ContinuumSchedule(0.05, 81), cpcorr::ConfigError);
  CHECK_THROWS_AS(ContinuumSchedule(0.05, 0), cpcorr::ConfigError);
}

TEST_CASE("lattice nodes are cell centres, mirror symmetric") {
  const Lattice lat = Lattice::from_schedule(ContinuumSchedule{}, 100);
  const auto x = lat.nodes();
  REQUIRE(x.size() == 100);
  CHECK(x[0] == doctest::Approx(-lat.half_length() + 0.5 * lat.spacing()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i] == -x[x.size() - 1 - i]);
    if (i > 0) CHECK(x[i] - x[i - 1] == doctest::Approx(lat.spacing()));
  }
}

TEST_CASE("lattice validation") {
  const ContinuumSchedule s;
  CHECK_THROWS_AS(Lattice::from_schedule(s, 60), cpcorr::ConfigError);
  CHECK_THROWS_AS(Lattice::from_schedule(s, 101), cpcorr::ConfigError);
  CHECK_NOTHROW(Lattice::from_schedule(s, 80));
}
