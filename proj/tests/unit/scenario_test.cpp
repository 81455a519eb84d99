#include "skyway/errors.hpp"
#include "skyway/scenario.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

namespace skyway {
namespace {

using ::testing::HasSubstr;

ValidationError validation_error(std::string_view text) {
  try {
    (void)parse_scenario(text);
  } catch (const ValidationError& e) {
    return e;
  }
  ADD_FAILURE() << "expected ValidationError";
  return ValidationError({});
}

TEST(ParseScenario, MinimalDocument) {
  const auto s = parse_scenario(R"({"source": "S", "nodes": [{"id": "S", "x": 0, "y": 0, "rooftop_height": 0}]})");
  EXPECT_EQ(s.source, "S");
  EXPECT_TRUE(s.packages.empty());
  EXPECT_TRUE(s.segments.empty());
  EXPECT_EQ(s.rig, default_rig());
}

TEST(ParseScenario, DefaultsForOmittedDroneFields) {
  const auto s = parse_scenario(R"({
    "source": "S",
    "nodes": [{"id": "S", "x": 0, "y": 0, "rooftop_height": 0}],
    "drone": {"cruise_speed": 7.5}
  })");
  EXPECT_DOUBLE_EQ(s.drone.max_payload, 15.9);
  EXPECT_DOUBLE_EQ(s.drone.cruise_speed, 7.5);
  EXPECT_DOUBLE_EQ(s.drone.base_rate, 2.0);
  EXPECT_DOUBLE_EQ(s.drone.payload_rate, 1.0);
  EXPECT_DOUBLE_EQ(s.drone.battery_capacity, 50000.0);
}

TEST(ParseScenario, NegativeMassIsLocated) {
  const auto e = validation_error(R"({
    "source": "S",
    "nodes": [{"id": "S", "x": 0, "y": 0, "rooftop_height": 0},
              {"id": "A", "x": 3, "y": 4, "rooftop_height": 0}],
    "segments": [{"a": "S", "b": "A"}],
    "packages": [{"id": "p", "mass": -1, "destination": "A"}]
  })");
  EXPECT_TRUE(e.mentions("packages[0].mass"));
  EXPECT_EQ(e.issues().size(), 1u);
}

TEST(ParseScenario, SyntaxError) {
  try {
    (void)parse_scenario("{\"source\": ");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::syntax_error);
  }
}

TEST(ParseScenario, AggregatesEveryViolation) {
  const auto e = validation_error(R"({
    "source": "Q",
    "nodes": [{"id": "S", "x": 0, "y": 0, "rooftop_height": -2},
              {"id": "S", "x": 1, "y": 0, "rooftop_height": 0},
              {"id": "B", "x": 5, "y": 0, "rooftop_height": 0}],
    "segments": [{"a": "S", "b": "Z"}, {"a": "B", "b": "B"}],
    "drone": {"vertical_speed": 0},
    "rig": {"levels": [1.0, 2.0], "clearance": 0},
    "packages": [{"id": "p", "mass": 1, "destination": "nowhere"},
                 {"id": "p", "mass": 1, "destination": "B"},
                 {"id": "r", "mass": 1, "destination": "B"}]
  })");
  for (const char* locator :
       {"nodes[0].rooftop_height", "nodes[1].id", "segments[0].b", "segments[1]", "source",
        "drone.vertical_speed", "rig.levels[1]", "rig.clearance", "packages[0].destination",
        "packages[1].id", "packages"}) {
    EXPECT_TRUE(e.mentions(locator)) << locator << "\n" << e.what();
  }
}

TEST(ParseScenario, TypeErrorsAndUnknownFields) {
  const auto e = validation_error(R"({
    "source": 3,
    "nodes": [{"id": "S", "x": "zero", "y": 0, "rooftop_height": 0, "colour": "red"}],
    "extra": true
  })");
  EXPECT_TRUE(e.mentions("source"));
  EXPECT_TRUE(e.mentions("nodes[0].x"));
  EXPECT_TRUE(e.mentions("nodes[0].colour"));
  EXPECT_TRUE(e.mentions("extra"));
  EXPECT_FALSE(validation_error("[]").issues().empty());
}

TEST(ParseScenario, DisconnectedNetworkIsLocated) {
  const auto e = validation_error(R"({
    "source": "S",
    "nodes": [{"id": "S", "x": 0, "y": 0, "rooftop_height": 0},
              {"id": "A", "x": 1, "y": 0, "rooftop_height": 0},
              {"id": "B", "x": 9, "y": 9, "rooftop_height": 0}],
    "segments": [{"a": "S", "b": "A"}]
  })");
  ASSERT_TRUE(e.mentions("segments"));
  EXPECT_THAT(e.what(), HasSubstr("{B}"));
}

TEST(ParseScenario, FixturesAreValid) {
  for (const char* name : {"n1.json", "n2.json", "demo3.json"}) {
    EXPECT_NO_THROW(testing::load_fixture(name)) << name;
  }
}

TEST(SerializeScenario, RoundTripsGeneratedScenarios) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratorParams params{4 + seed % 7, 1 + seed % 3, seed, 250.0, 120.0, 3};
    const Scenario generated = generate_scenario(params);
    EXPECT_TRUE(validate_scenario(generated).empty());
    const std::string text = serialize_scenario(generated);
    const Scenario parsed = parse_scenario(text);
    EXPECT_EQ(parsed, generated) << text;
    EXPECT_EQ(serialize_scenario(parsed), text);
  }
  const auto fixture = testing::load_fixture("demo3.json");
  EXPECT_EQ(parse_scenario(serialize_scenario(fixture)), fixture);
}

TEST(GenerateScenario, Deterministic) {
  const GeneratorParams params{5, 3, 42};
  EXPECT_EQ(serialize_scenario(generate_scenario(params)),
            serialize_scenario(generate_scenario(params)));
  EXPECT_NE(serialize_scenario(generate_scenario(params)),
            serialize_scenario(generate_scenario(GeneratorParams{5, 3, 43})));
}

TEST(GenerateScenario, MinimalCase) {
  const auto s = generate_scenario(GeneratorParams{2, 1, 0});
  EXPECT_EQ(s.nodes.size(), 2u);
  EXPECT_EQ(s.segments.size(), 1u);
  ASSERT_EQ(s.packages.size(), 1u);
  EXPECT_NE(s.packages[0].destination, s.source);
}

TEST(GenerateScenario, RespectsBounds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GeneratorParams params{2 + seed % 9, std::min<std::size_t>(1 + seed % 9, 1 + seed % 5),
                                 seed, 300.0, 200.0, 5};
    const auto s = generate_scenario(params);
    std::set<std::string> destinations;
    for (const auto& p : s.packages) {
      EXPECT_GT(p.mass, 0.1);
      EXPECT_LE(p.mass, 2.27);
      EXPECT_TRUE(destinations.insert(p.destination).second);
    }
    for (const auto& n : s.nodes) {
      EXPECT_GE(n.rooftop_height, 5.0);
      EXPECT_LE(n.rooftop_height, 60.0);
      EXPECT_GE(n.x, 0.0);
      EXPECT_LE(n.x, 300.0);
      EXPECT_GE(n.y, 0.0);
      EXPECT_LE(n.y, 200.0);
    }
    EXPECT_GE(s.segments.size(), s.nodes.size() - 1);
    EXPECT_NO_THROW((void)s.network());
  }
}

TEST(GenerateScenario, InvalidParams) {
  for (const GeneratorParams& bad :
       {GeneratorParams{1, 0, 0}, GeneratorParams{3, 3, 0}, GeneratorParams{9, 4, 0},
        GeneratorParams{4, 1, 0, -5.0, 10.0}, GeneratorParams{4, 1, 0, 100, 100, 0}}) {
    try {
      (void)generate_scenario(bad);
      ADD_FAILURE() << bad.node_count << "/" << bad.package_count;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::invalid_params);
    }
  }
}

TEST(ExportTelemetry, HeaderOnlyForEmptyLog) {
  EXPECT_EQ(export_telemetry({}), "t,x,y,z,payload_mass,battery_remaining,event\n");
}

TEST(ExportTelemetry, SingleTakeoffRecord) {
  TelemetryRecord r;
  r.event = EventKind::takeoff;
  r.payload_mass = 6.0;
  r.battery_remaining = 50000.0;
  const std::string csv = export_telemetry({r});
  EXPECT_EQ(csv,
            "t,x,y,z,payload_mass,battery_remaining,event\n"
            "0.000000,0.000000,0.000000,0.000000,6.000000,50000.000000,TAKEOFF\n");
}

TEST(ExportTelemetry, ParsesBackToSameRecordsAndEvents) {
  auto s = testing::load_fixture("demo3.json");
  s.packages[0].id = "odd,\"id\"";
  const auto plan = plan_ndf(s.network(), s.source, s.packages);
  const auto result = simulate_mission(s.network(), plan, assign_levels(plan), s.drone, s.rig,
                                       s.packages);
  std::string header;
  const auto rows = testing::parse_telemetry_csv(export_telemetry(result.telemetry), &header);
  EXPECT_EQ(header, "t,x,y,z,payload_mass,battery_remaining,event");
  ASSERT_EQ(rows.size(), result.telemetry.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ASSERT_EQ(rows[i].event, event_label(result.telemetry[i]));
    ASSERT_EQ(rows[i].numbers.size(), 6u);
    EXPECT_NEAR(rows[i].numbers[0], result.telemetry[i].t, 5e-7);
    EXPECT_NEAR(rows[i].numbers[3], result.telemetry[i].position.z, 5e-7);
  }
}

TEST(ReportJson, MirrorsReportFields) {
  const auto s = testing::load_fixture("n1.json");
  const auto plan = plan_ndf(s.network(), s.source, s.packages);
  const auto result = simulate_mission(s.network(), plan, assign_levels(plan), s.drone, s.rig,
                                       s.packages);
  const std::string json = report_to_json(result.report);
  for (const char* key : {"\"completed\": true", "\"abort_reason\": null", "\"releases\"",
                          "\"total_distance_3d\"", "\"energy\"", "\"end_position\""}) {
    EXPECT_THAT(json, HasSubstr(key));
  }
}

}  // namespace
}  // namespace skyway
