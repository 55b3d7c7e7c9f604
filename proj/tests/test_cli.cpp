#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cohom/cli.hpp"
#include "cohom/dsl.hpp"
#include "cohom/geometry.hpp"

using namespace cohom;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cohom prints the cohomogeneity") {
  Run r = run({"cohom", "SU(2): C^4"});
  CHECK(r.code == 0);
  CHECK(r.out == "5\n");
  CHECK(run({"cohom", "E6: C^27"}).out == "4\n");
  CHECK(run({"--seed", "5", "cohom", "SO(3): R^7"}).out == "4\n");
  CHECK(run({"cohom", "SO(3): R^7", "--samples", "2"}).out == "4\n");
}

TEST_CASE("polar, copolarity and boundary commands") {
  CHECK(run({"polar", "SU(3): adjoint"}).out == "yes\n");
  CHECK(run({"polar", "SO(3): R^7"}).out == "no\n");
  CHECK(run({"copolarity", "SU(6): Lambda^2"}).out == "2\n");
  CHECK(run({"copolarity", "SU(2): C^4"}).out == "trivial\n");
  Run b = run({"boundary", "SU(3): S^2"});
  CHECK(b.code == 0);
  CHECK(b.out.rfind("yes\n", 0) == 0);
  CHECK(run({"boundary", "SO(3): R^7"}).out == "certified-no\n");
}

TEST_CASE("info describes the parsed expression") {
  Run r = run({"info", "SO(3): R^3 (x)_R G2: R^7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("group: SO3xG2\n") != std::string::npos);
  CHECK(r.out.find("dim V: 21\n") != std::string::npos);
  CHECK(r.out.find("dim G: 17\n") != std::string::npos);
}

TEST_CASE("torus case") {
  Run r = run({"torus-case", "--k", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cohom 5\n") != std::string::npos);
  CHECK(r.out.find("boundary: certified-no\n") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"cohom"}).code == 2);
  CHECK(run({"cohom", "SU(2)", "--bogus"}).code == 2);
  CHECK(run({"classify", "--cohom", "6"}).code == 2);
  CHECK(run({"torus-case", "--k", "9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("analysis failures exit with 1") {
  Run r = run({"cohom", "SU(3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("parse error") != std::string::npos);
  CHECK(r.err.find("^") != std::string::npos);
  CHECK(run({"cohom", "SO(3): [1]"}).code == 1);
  CHECK(run({"audit-involution", "SO(3): R^5", "--matrix", "/nonexistent/file"}).code == 1);
}

TEST_CASE("matrix files") {
  Sparse<Rational> m = read_matrix("2 3\n1 -1/2 0\n0 0 7/3\n");
  CHECK(m.r == 2);
  CHECK(m.c == 3);
  CHECK(m.at(0, 1) == Rational(-1, 2));
  CHECK(m.at(1, 2) == Rational(7, 3));
  CHECK(read_matrix(write_matrix(m)) == m);
  CHECK_THROWS(read_matrix("2 2\n1 0 0"));
  CHECK_THROWS(read_matrix("1 1\n1 2"));
  CHECK_THROWS(read_matrix("x"));
}

TEST_CASE("audit-involution reads the matrix file") {
  // -1 on R^5 commutes with SO3; it is not an element of the identity component.
  auto a = build_action(parse_rep("SO(3): R^5"));
  Sparse<Rational> w = Sparse<Rational>::identity(a->dim_V, Rational(-1));
  std::string path = "audit_matrix_test.txt";
  {
    std::ofstream f(path);
    f << write_matrix(w);
  }
  Run r = run({"audit-involution", "SO(3): R^5", "--matrix", path});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(r.out.find("dim fixed space: 0\n") != std::string::npos);
  CHECK(r.out.find("dim centralizer: 3\n") != std::string::npos);
  CHECK(r.out.find("formula holds: no\n") != std::string::npos);
}

TEST_CASE("classify emits the seven rows of cohomogeneity four") {
  Run r = run({"classify", "--cohom", "4", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "group,rep,cohomogeneity,polar,copolarity,boundary,provenance");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 7);
  CHECK(r.out.find("SO3xG2,R^3 (x)_R R^7,4,no,2,yes,computed\n") != std::string::npos);
}
