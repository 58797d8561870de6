#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "g1/covariants.hpp"
#include "g1/degree5.hpp"
#include "g1/hesse.hpp"

using namespace g1;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& body) {
  fs::path dir = fs::temp_directory_path() / "g1_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << body;
  return p.string();
}

std::string model_file(const std::string& name, const GenusOneModel& m) { return write_file(name, serialize_model(m)); }

std::string curve_arg(const fixtures::CurveData& c) {
  std::string s;
  for (std::size_t i = 0; i < c.a.size(); ++i) s += (i ? "," : "") + c.a[i].get_str();
  return s;
}

// Body of "key begin" ... "key end".
std::string block(const std::string& doc, const std::string& key) {
  auto start = doc.find(key + " begin\n");
  auto stop = doc.find(key + " end\n");
  REQUIRE(start != std::string::npos);
  REQUIRE(stop != std::string::npos);
  start += key.size() + 7;
  return doc.substr(start, stop - start);
}

bool has_line(const std::string& doc, const std::string& line) {
  return ("\n" + doc).find("\n" + line + "\n") != std::string::npos;
}

int process_exit(const std::string& args) {
  int status = std::system((std::string(G1_BINARY) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("invariants of the worked quartic") {
  auto path = model_file("quartic.g1", fixtures::examples()[0].model);
  auto r = run({"invariants", "--model", path});
  CHECK(r.code == 0);
  CHECK(r.out == "status ok\nc4 3328\nc6 -202240\ndisc -2338816\n");
  CHECK(run({"invariants", "--model", path}).out == r.out);
}

TEST_CASE("invariants of the degree 5 example") {
  auto r = run({"invariants", "--model", model_file("quintic.g1", fixtures::quintic_1058())});
  CHECK(r.code == 0);
  CHECK(r.out == "status ok\nc4 -23\nc6 -1909\ndisc -2116\n");
}

TEST_CASE("hesse polynomials") {
  auto r = run({"hesse-polys", "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "D l^3 - 3*c4*l*m^2 - 2*c6*m^3"));
  auto dual = run({"hesse-polys", "--degree", "4", "--dual"});
  CHECK(has_line(dual.out, "tau 12"));
  CHECK(run({"hesse-polys", "--degree", "6"}).code == 2);
}

TEST_CASE("hessian round trips through the wire format") {
  auto zero = GenusOneModel::from_coefficients(3, std::vector<Rational>(10));
  auto r = run({"hessian", "--model", model_file("zero.g1", zero)});
  CHECK(r.code == 0);
  CHECK(parse_model(block(r.out, "model")) == zero);

  auto ex = fixtures::examples()[5];
  auto h = run({"hessian", "--model", model_file("quintic.g1", ex.model)});
  CHECK(parse_model(block(h.out, "model")) == fixtures::hessian_1058());

  auto c = run({"contravariants", "--model", model_file("cubic.g1", fixtures::examples()[1].model)});
  CHECK(c.code == 0);
  CHECK(parse_model(block(c.out, "p")).degree() == 3);
  CHECK(parse_model(block(c.out, "q")).degree() == 3);
}

TEST_CASE("pfaffians and model-from-quadrics") {
  auto r = run({"pfaffians", "--model", model_file("quintic.g1", fixtures::quintic_1058())});
  CHECK(r.code == 0);
  std::string quadrics;
  for (int i = 1; i <= 5; ++i) {
    std::string key = "pfaffian" + std::to_string(i) + " ";
    auto at = r.out.find(key);
    REQUIRE(at != std::string::npos);
    quadrics += r.out.substr(at + key.size(), r.out.find('\n', at) - at - key.size()) + "\n";
  }
  auto back = run({"model-from-quadrics", "--quadrics", write_file("quadrics.txt", quadrics)});
  CHECK(back.code == 0);
  CHECK(has_line(back.out, "exact true"));
  auto m = parse_model(block(back.out, "model"));
  CHECK(pfaffians(m) == pfaffians(fixtures::quintic_1058()));
}

TEST_CASE("embed, family and visibility") {
  auto ex = fixtures::examples()[1];
  auto e = run({"embed", "--curve", curve_arg(ex.f), "--point", "-10,22", "--degree", "3"});
  CHECK(e.code == 0);
  auto embedded = invariants(parse_model(block(e.out, "model")));
  CHECK(embedded.c4 == ex.c4);
  CHECK(embedded.c6 == ex.c6);

  auto p = run({"pencil-solve", "--model", model_file("cubic.g1", ex.model), "--curve", curve_arg(ex.e)});
  CHECK(p.code == 0);
  CHECK(has_line(p.out, "roots 1"));
  CHECK(has_line(p.out, "root 521 9"));
  CHECK(has_line(p.out, "solutions 1"));

  auto rev = fixtures::examples()[2];
  auto v = run({"visible", "--curve", curve_arg(rev.e), "--from-curve", curve_arg(rev.f), "--point", "-2,2", "--degree",
                "3", "--reverse"});
  CHECK(v.code == 0);
  CHECK(has_line(v.out, "kind reverse"));
  CHECK(has_line(v.out, "solution1.point -55 1"));

  auto f = run({"family", "--curve", "0,0,0,-7,10", "--degree", "3", "--lambda", "1", "--mu", "0"});
  CHECK(f.out == "status ok\ncurve 0,0,0,-7,10\nsingular false\nspecial_j false\n");

  auto rs = run({"rubin-silverberg", "--degree", "3", "--curve", "0,0,0,-7,10", "--t", "0"});
  CHECK(has_line(rs.out, "curve 0,0,0,-7,10"));
  CHECK(run({"rubin-silverberg", "--degree", "3", "--t", "0"}).code == 2);
}

TEST_CASE("syzygetic") {
  auto m = model_file("u3.g1", hesse_model(3, Rational(1, 3), 2));
  auto r = run({"syzygetic", "--model", m, "--point", "0,108"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "xi 0"));
  CHECK(has_line(r.out, "eta_squared -34992"));
  CHECK(run({"syzygetic", "--model", m, "--point", "inf"}).code == 1);
}

TEST_CASE("errors") {
  auto r = run({"embed", "--curve", "0,0,0,0,0", "--point", "inf", "--degree", "3"});
  CHECK(r.code == 1);
  CHECK(has_line(r.out, "status error"));
  CHECK(has_line(r.out, "kind math"));
  CHECK(!r.err.empty());

  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"invariants"}).code == 2);
  CHECK(run({"invariants", "--model", "/nonexistent/model.g1"}).code == 2);
  CHECK(run({"embed", "--curve", "1,2,3", "--point", "inf", "--degree", "3"}).code == 2);
  CHECK(run({"embed", "--curve", "0,0,0,1,1", "--point", "1,1", "--degree", "3"}).code == 2);
  CHECK(run({"invariants", "--model", write_file("bad.g1", "genus1model v1\ndegree 7\n")}).code == 2);
  CHECK(run({"pencil-solve", "--reverse", "--model", model_file("q5.g1", fixtures::quintic_1058()), "--curve",
             "0,0,0,-7,10"})
            .code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("process exit codes") {
  auto path = model_file("quartic.g1", fixtures::examples()[0].model);
  CHECK(process_exit("invariants --model " + path) == 0);
  CHECK(process_exit("embed --curve 0,0,0,0,0 --point inf --degree 3") == 1);
  CHECK(process_exit("no-such-command") == 2);
}
