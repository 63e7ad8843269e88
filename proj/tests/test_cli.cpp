// End-to-end checks of the gtg binary: output formats, exit codes, and the
// certificate verify round trip.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(GTG_BIN) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("trace command") {
  auto r = run("trace --case 232 uvuvuvuv2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("l^4-3*l^2+1") != std::string::npos);
  CHECK(r.out.find("(0,0,1)") != std::string::npos);

  auto j = run("trace --format json xyxy2");
  CHECK(j.exit_code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["schema_version"] == "1");
  CHECK(doc["command"] == "trace");
  CHECK(doc["case"] == "332");
  CHECK(doc["payload"]["tau"]["coeffs"] == nlohmann::json::array({-1, -1, 1}));
}

TEST_CASE("canon and equiv commands") {
  auto r = run("canon x2y2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("canonical: xy") != std::string::npos);

  auto e = run("equiv uvuv uv2uv2");
  CHECK(e.exit_code == 0);
  CHECK(e.out.find("not equivalent") == std::string::npos);
  CHECK(e.out.find("equivalent") != std::string::npos);

  auto e2 = run("equiv uvuv uvuv2");
  CHECK(e2.out.find("not equivalent") != std::string::npos);

  auto orbit = run("equiv --format json xy");
  auto doc = nlohmann::json::parse(orbit.out);
  CHECK(doc["payload"]["orbit"].size() == 4);
}

TEST_CASE("classify command reports cited statuses") {
  auto r = run("classify xyx2y2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("finite of order 288") != std::string::npos);
  CHECK(r.out.find("source:") != std::string::npos);

  auto f = run("classify xyxyxy");
  CHECK(f.exit_code == 0);
  CHECK(f.out.find("free subgroup") != std::string::npos);
}

TEST_CASE("search single form") {
  auto r = run("search --case 232 --form 0,0,1 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["payload"]["total_classes"] == 1);
  CHECK(doc["payload"]["classes"][0]["canonical"] == "uvuvuvuv2");

  // determinism across worker counts
  auto a = run("search --case 232 --form 1,1,3 --jobs 1 --format json");
  auto b = run("search --case 232 --form 1,1,3 --jobs 3 --format json");
  CHECK(a.out == b.out);
}

TEST_CASE("oracle command") {
  auto r = run("oracle --case 232 --max-k 6 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["payload"]["classes"].size() == 6);
}

TEST_CASE("catalog command") {
  auto r = run("catalog --case 232 --format csv");
  CHECK(r.exit_code == 0);
  size_t rows = 0;
  for (char ch : r.out) rows += ch == '\n';
  CHECK(rows == 27);  // header + 26 entries

  auto j = run("catalog --case 332 --format json");
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["payload"]["entries"].size() == 19);
}

TEST_CASE("certificate emit and verify round trip") {
  auto r = run("sc-cert --case 332 xyxyxy2x2y2xyx2yx2y2 --format json");
  CHECK(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["payload"]["certified"] == true);

  std::string path = "gtg_cli_cert.json";
  {
    std::ofstream out(path);
    out << doc["payload"]["certificate"].dump();
  }
  auto v = run("sc-cert --verify " + path);
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("certificate valid") != std::string::npos);

  // tampering flips the exit code to the mismatch value
  {
    auto cert = doc["payload"]["certificate"];
    cert["N"] = 17;
    std::ofstream out(path);
    out << cert.dump();
  }
  auto bad = run("sc-cert --verify " + path);
  CHECK(bad.exit_code == 1);
  std::remove(path.c_str());

  // a supplied subdivision is validated as given
  auto s = run("sc-cert --case 332 xyxyxy2x2y2xyx2yx2y2 --subdivision 0,5,9");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("certificate found") != std::string::npos);
  auto sbad = run("sc-cert --case 332 xyxyxy2x2y2xyx2yx2y2 --subdivision 0,1,9");
  CHECK(sbad.exit_code == 1);
}

TEST_CASE("no certificate is a valid outcome") {
  auto r = run("sc-cert --case 332 xy");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("no certificate") != std::string::npos);
}

TEST_CASE("usage and parse errors exit with code 2") {
  CHECK(run("trace x^3y").exit_code == 2);       // vanishing syllable
  CHECK(run("trace xyu").exit_code == 2);        // mixed alphabets
  CHECK(run("search --case 232").exit_code == 2);  // neither --all nor --form
  CHECK(run("search --all").exit_code == 2);       // missing --case
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("trace --case 232 xyxy2").exit_code == 2);  // case mismatch
}
