#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// End-to-end checks against the installed binary: output schema, golden
// text forms, exit codes and error kinds.

namespace {

using json = nlohmann::json;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string temp_dir() {
  static std::string dir = [] {
    std::string d = "/tmp/weyl_cli_test_XXXXXX";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s", d.c_str());
    REQUIRE(mkdtemp(buf) != nullptr);
    return std::string(buf);
  }();
  return dir;
}

std::string write_file(const std::string& name, const std::string& body) {
  std::string path = temp_dir() + "/" + name;
  std::ofstream out(path);
  out << body;
  return path;
}

std::string read_all(const std::string& path) {
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return text;
}

RunResult run(const std::string& args) {
  RunResult r;
  std::string err_path = temp_dir() + "/stderr.txt";
  std::string cmd = std::string(WEYL_CLI_BIN) + " " + args + " 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  r.err = read_all(err_path);
  return r;
}

void check_schema(const json& doc, const std::string& command) {
  REQUIRE(doc.is_object());
  CHECK(doc.at("command") == command);
  CHECK(doc.at("inputs").is_object());
  CHECK(doc.contains("result"));
  CHECK(doc.at("witnesses").is_array());
  const json& t = doc.at("timings");
  CHECK(t.at("parse_us").is_number_integer());
  CHECK(t.at("compute_us").is_number_integer());
  CHECK(t.at("total_us").is_number_integer());
}

const char* kDoc =
    "algebra n=1 m=0;\n"
    "map s { q1 -> q1; p1 -> p1 + q1^2; }\n"
    "map s_inv { q1 -> q1; p1 -> p1 - q1^2; }\n"
    "map id { q1 -> q1; p1 -> p1; }\n"
    "element e = 3 + q1^2*p1;\n";

const char* kPlane =
    "algebra n=0 m=2;\n"
    "map f { y1 -> y1; y2 -> y2 + y1^2; }\n"
    "map bad { y1 -> y1; y2 -> y2^2; }\n";

}  // namespace

TEST_CASE("invert: text and JSON") {
  std::string doc = write_file("doc.weyl", kDoc);
  RunResult text = run("invert " + doc + " --map s");
  CHECK(text.exit_code == 0);
  CHECK(text.out ==
        "map s_inv {\n  q1 -> q1;\n  p1 -> p1 - q1^2;\n}\n");

  RunResult js = run("invert " + doc + " --map s --format json");
  CHECK(js.exit_code == 0);
  json parsed = json::parse(js.out);
  check_schema(parsed, "invert");
  CHECK(parsed["result"]["images"]["p1"] == "p1 - q1^2");
  CHECK(parsed["result"]["degree"] == 2);
}

TEST_CASE("verify and certify") {
  std::string doc = write_file("doc.weyl", kDoc);
  RunResult ok = run("verify " + doc + " --map s --inverse s_inv --format json");
  CHECK(ok.exit_code == 0);
  json parsed = json::parse(ok.out);
  check_schema(parsed, "verify");
  CHECK(parsed["result"]["verified"] == true);

  RunResult not_inverse =
      run("verify " + doc + " --map s --inverse id --format json");
  CHECK(not_inverse.exit_code == 0);
  CHECK(json::parse(not_inverse.out)["result"]["verified"] == false);

  std::string plane = write_file("plane.weyl", kPlane);
  RunResult good = run("certify " + plane + " --map f --format json");
  CHECK(good.exit_code == 0);
  json good_parsed = json::parse(good.out);
  check_schema(good_parsed, "certify");
  CHECK(good_parsed["result"]["certified"] == true);

  RunResult bad = run("certify " + plane + " --map bad --format json");
  CHECK(bad.exit_code == 0);
  json bad_parsed = json::parse(bad.out);
  CHECK(bad_parsed["result"]["certified"] == false);
  CHECK(bad_parsed["witnesses"].size() == 1);
}

TEST_CASE("degree report") {
  std::string doc = write_file("doc.weyl", kDoc);
  RunResult r = run("degree " + doc + " --map s --dual --format json");
  CHECK(r.exit_code == 0);
  json parsed = json::parse(r.out);
  check_schema(parsed, "degree");
  CHECK(parsed["result"]["degree"] == 2);
  CHECK(parsed["result"]["bound"] == "2");
  CHECK(parsed["result"]["inverse_degree"] == 2);
  CHECK(parsed["result"]["bound_satisfied"] == true);
}

TEST_CASE("faces") {
  std::string doc = write_file("doc.weyl", kDoc);
  RunResult equal = run("faces " + doc + " --map s --map s --format json");
  CHECK(equal.exit_code == 0);
  json eq = json::parse(equal.out);
  check_schema(eq, "faces");
  CHECK(eq["result"]["equal"] == true);

  RunResult differ =
      run("faces " + doc + " --map id --map s --side left --format json");
  CHECK(differ.exit_code == 0);
  json df = json::parse(differ.out);
  CHECK(df["result"]["equal"] == false);
  CHECK(df["witnesses"].size() == 1);
}

TEST_CASE("darboux") {
  std::string mat = write_file("form.mat", "0 2 0\n-2 0 0\n0 0 0\n");
  RunResult r = run("darboux --matrix " + mat + " --format json");
  CHECK(r.exit_code == 0);
  json parsed = json::parse(r.out);
  check_schema(parsed, "darboux");
  CHECK(parsed["result"]["n"] == 1);
  CHECK(parsed["result"]["m"] == 1);
  CHECK(parsed["result"]["change_of_basis"][1][1] == "1/2");
}

TEST_CASE("series-invert prints the signed Catalan numbers") {
  std::string doc = write_file("series.weyl",
                               "algebra n=0 m=1;\n"
                               "map f { y1 -> y1 + y1^2; }\n");
  RunResult r = run("series-invert " + doc + " --map f --order 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "y1 -> y1 - y1^2 + 2*y1^3 - 5*y1^4 + 14*y1^5 - 42*y1^6 + 132*y1^7 "
        "- 429*y1^8 + O(deg 9);\n");

  RunResult js = run("series-invert " + doc + " --map f --order 4 --format json");
  json parsed = json::parse(js.out);
  check_schema(parsed, "series-invert");
  CHECK(parsed["result"]["order"] == 4);
}

TEST_CASE("taylor table") {
  std::string doc = write_file("doc.weyl", kDoc);
  RunResult r = run("taylor " + doc + " --element e --format json");
  CHECK(r.exit_code == 0);
  json parsed = json::parse(r.out);
  check_schema(parsed, "taylor");
  const json& rows = parsed["result"]["coefficients"];
  REQUIRE(rows.size() == 2);
  CHECK(rows[0]["monomial"] == "1");
  CHECK(rows[0]["value"] == "3");
  CHECK(rows[1]["monomial"] == "q1^2*p1");
  CHECK(rows[1]["value"] == "1");
}

TEST_CASE("environment variable picks the default format") {
  std::string doc = write_file("doc.weyl", kDoc);
  std::string err_path = temp_dir() + "/stderr.txt";
  std::string cmd = std::string("WEYL_FORMAT=json ") + WEYL_CLI_BIN +
                    " certify " + doc + " --map s 2>" + err_path;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  check_schema(json::parse(out), "certify");
}

TEST_CASE("errors carry kinds and nonzero exit codes") {
  RunResult missing = run("invert /nonexistent.weyl --map s");
  CHECK(missing.exit_code == 1);
  json err = json::parse(missing.err);
  CHECK(err["error"] == "io_error");

  std::string bad_syntax = write_file("bad.weyl",
                                      "algebra n=1 m=0;\n"
                                      "element e = q1^-1;\n");
  RunResult syntax = run("taylor " + bad_syntax + " --element e");
  CHECK(syntax.exit_code == 1);
  CHECK(json::parse(syntax.err)["error"] == "parse_error");

  std::string doc = write_file("doc.weyl", kDoc);
  RunResult unknown = run("taylor " + doc + " --element nope");
  CHECK(unknown.exit_code == 1);
  CHECK(json::parse(unknown.err)["error"] == "invalid_argument");

  std::string plane = write_file("plane.weyl", kPlane);
  RunResult not_auto = run("faces " + plane + " --map f --map bad");
  CHECK(not_auto.exit_code == 1);
  CHECK(json::parse(not_auto.err)["error"] == "not_an_automorphism");

  RunResult capped = run("invert " + write_file("doc.weyl", kDoc) +
                         " --map s --cap 0");
  CHECK(capped.exit_code == 1);
  CHECK(json::parse(capped.err)["error"] == "degree_bound_exceeded");

  std::string not_antisymmetric = write_file("bad.mat", "1 0\n0 1\n");
  RunResult bad_form = run("darboux --matrix " + not_antisymmetric);
  CHECK(bad_form.exit_code == 1);
  CHECK(json::parse(bad_form.err)["error"] == "invalid_argument");

  RunResult usage = run("invert");
  CHECK(usage.exit_code == 1);
  CHECK(json::parse(usage.err)["error"] == "invalid_argument");
}
