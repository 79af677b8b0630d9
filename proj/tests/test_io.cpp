#include <filesystem>
#include <functional>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "gk/io.hpp"

using namespace gk;
using fx::idx;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("gk_io_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

template <class E>
bool throws_with(const std::function<void()>& f, const std::string& needle) {
  try {
    f();
  } catch (const E& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("rational and surd parsing") {
  CHECK(parse_rational("3") == Q(3));
  CHECK(parse_rational("-3/6") == Q(-1, 2));
  CHECK(parse_rational("+2/4") == Q(1, 2));
  CHECK(parse_rational("1.25") == Q(5, 4));
  CHECK(parse_rational("-1.5e-2") == Q(-3, 200));
  CHECK(parse_rational(".5") == Q(1, 2));
  CHECK(parse_rational("2e3") == Q(2000));
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("."), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e99999"), std::invalid_argument);

  CHECK(parse_surd("sqrt(2)") == Surd::root(Q(2)));
  CHECK(parse_surd("-sqrt(1/3)") == Surd(-1, Q(1, 3)));
  CHECK(parse_surd("3/2") == Surd::rational(Q(3, 2)));
  CHECK(parse_surd("sqrt(4)") == Surd::rational(Q(2)));
  CHECK(Surd::root(Q(4)).str() == "2");
  CHECK(Surd::root(Q(2)).str() == "sqrt(2)");
  CHECK(Surd(-1, Q(1, 4)).str() == "-1/2");
  CHECK_THROWS(parse_surd("sqrt(x)"));
  CHECK_THROWS(parse_surd("0"));

  CHECK(format_real(2.0) == "2.00000000000");
  CHECK(format_real(-0.0) == "0.00000000000");
  CHECK(format_real(0.1) == "0.100000000000");
}

TEST_CASE("groupoid files round trip byte for byte") {
  for (const auto& [name, g] : fx::all()) {
    INFO(name);
    std::string text = serialize_groupoid(g->data());
    GroupoidData d = parse_groupoid_data(text);
    CHECK(d.names == g->data().names);
    CHECK(d.units == g->data().units);
    CHECK(d.inv == g->data().inv);
    CHECK(d.prod == g->data().prod);
    CHECK(serialize_groupoid(d) == text);
  }
}

TEST_CASE("groupoid file errors") {
  const std::string ok = "#groupoid v1\nelement e\nunit e\ninv e e\nmul e e e\n";
  CHECK(parse_groupoid_data(ok).size() == 1);
  CHECK(parse_groupoid_data("\n" + ok + "# trailing comment\n\n").size() == 1);
  CHECK(parse_groupoid_data("#groupoid v1\r\nelement e\r\nunit e\r\ninv e e\r\nmul e e e\r\n").size() == 1);

  CHECK(throws_with<ParseError>([] { parse_groupoid_data("#groupoid v2\n", "g.txt"); }, "g.txt:1: expected header"));
  CHECK(throws_with<ParseError>([] { parse_groupoid_data("", "g.txt"); }, "empty file"));
  CHECK(throws_with<ParseError>([&] { parse_groupoid_data(ok + "frobnicate e\n", "g.txt"); }, "g.txt:6: unknown directive"));
  CHECK(throws_with<ParseError>([&] { parse_groupoid_data(ok + "mul e f e\n"); }, "unknown element 'f'"));
  CHECK(throws_with<ParseError>([&] { parse_groupoid_data(ok + "element f\n"); }, "must precede"));
  CHECK(throws_with<ParseError>([&] { parse_groupoid_data(ok + "mul e e e\n"); }, "product given twice"));
  CHECK(throws_with<ParseError>([] { parse_groupoid_data("#groupoid v1\nelement e\nelement e\n"); }, "duplicate element"));
  CHECK(throws_with<ParseError>([] { parse_groupoid_data("#groupoid v1\nelement e extra\n"); }, "takes 1 argument"));
  CHECK(throws_with<CheckFailure>([] { parse_groupoid_data("#groupoid v1\nelement e\nunit e\n"); }, "inverse missing"));
  // Well formed but not a groupoid: no product for the unit.
  GroupoidData bad = parse_groupoid_data("#groupoid v1\nelement e\nunit e\ninv e e\n");
  CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("haar files") {
  const GPtr p2 = fx::p2();
  const Haar w = fx::w();
  std::string text = serialize_haar(w);
  CHECK(text == "#haar v1\nc (0,0) 1\nc (1,1) 4\nnu (0,0) 1\nnu (1,1) 1\n");
  Haar back = parse_haar(text, p2);
  CHECK(back.c_by_pos() == w.c_by_pos());
  CHECK(back.nu_by_pos() == w.nu_by_pos());
  CHECK(serialize_haar(back) == text);
  CHECK(parse_haar("#haar v1\nc (0,0) 0.5\nc (1,1) 2/4\nnu (0,0) 1\nnu (1,1) 1\n", p2).c_by_pos()[1] == Q(1, 2));

  CHECK(throws_with<CheckFailure>([&] { parse_haar("#haar v1\nc (0,0) 0\nc (1,1) 1\nnu (0,0) 1\nnu (1,1) 1\n", p2); }, "positivity"));
  CHECK(throws_with<CheckFailure>([&] { parse_haar("#haar v1\nc (0,0) 1\nc (1,1) 1\nnu (0,0) -1\nnu (1,1) 1\n", p2); }, "positivity"));
  CHECK(throws_with<ParseError>([&] { parse_haar("#haar v1\nc (0,0) 1\nc (1,1) 1\nnu (0,0) 1\n", p2); }, "missing 'nu'"));
  CHECK(throws_with<ParseError>([&] { parse_haar("#haar v1\nc (0,1) 1\n", p2); }, "not a unit"));
  CHECK(throws_with<ParseError>([&] { parse_haar("#haar v1\nc (0,0) x\n", p2); }, "not a number"));
  CHECK(throws_with<ParseError>([&] { parse_haar("#haar v1\nc (0,0) 1\nc (0,0) 1\n", p2); }, "given twice"));
}

TEST_CASE("morphism, element, double and mapping-form files with relative paths") {
  TempDir dir;
  fs::create_directories(dir.path / "sub");
  const GPtr s3 = fx::s3();
  write_file(dir / "s3.g", serialize_groupoid(s3->data()));
  Morphism e = unit_pair(s3);
  write_file(dir / "pt.g", serialize_groupoid(e.cod()->data()));

  MorphismFile mf{"../s3.g", "../pt.g", s3, e.cod(), e.graph()};
  const std::string mtext = serialize_morphism(mf);
  write_file(dir / "sub/e.m", mtext);
  MorphismFile back = load_morphism_file(dir / "sub/e.m");
  CHECK(back.graph == e.graph());
  CHECK(serialize_morphism(back) == mtext);
  CHECK(load_morphism(dir / "sub/e.m").graph() == e.graph());
  CHECK(throws_with<ParseError>([&] { parse_morphism("#morphism v1\ndom s3.g\n", dir.path.string()); }, "missing 'cod'"));
  CHECK(throws_with<ParseError>([&] { parse_morphism("#morphism v1\ndom a\ndom b\n", dir.path.string()); }, "given twice"));
  CHECK_THROWS_AS(parse_morphism("#morphism v1\ndom nope.g\ncod pt.g\n", dir.path.string()), ParseError);
  // A graph that is not a morphism parses, then fails validation.
  write_file(dir / "bad.m", "#morphism v1\ndom s3.g\ncod s3.g\npair [0,1,2] [1,0,2]\n");
  CHECK_THROWS_AS(load_morphism(dir / "bad.m"), CheckFailure);

  Coef<QC> f(s3->size());
  f[1] = QC(Q(1, 3), Q(-2));
  f[4] = QC(Q(5));
  ElementFile ef{"s3.g", s3, f};
  const std::string etext = serialize_element(ef);
  write_file(dir / "f.elt", etext);
  ElementFile eb = load_element(dir / "f.elt");
  CHECK(eb.coef == f);
  CHECK(serialize_element(eb) == etext);
  CHECK(throws_with<ParseError>([&] { parse_element("#elt v1\nover s3.g\ncoef [0,1,2] 1\n", dir.path.string()); }, "takes 3"));

  DoubleFile df{"s3.g", s3, fx::s3f().a, fx::s3f().b};
  const std::string dtext = serialize_double(df);
  write_file(dir / "s3.dbl", dtext);
  DoubleFile db = load_double(dir / "s3.dbl");
  CHECK(db.a == df.a);
  CHECK(db.b == df.b);
  CHECK(serialize_double(db) == dtext);
  CHECK(throws_with<ParseError>([&] { parse_double("#double v1\ngroup s3.g\nsuba [0,1,2]\n", dir.path.string()); }, "missing 'subb'"));

  FgFile ff{"s3.g", "pt.g", to_fg(e)};
  const std::string ftext = serialize_fg(ff);
  write_file(dir / "e.fg", ftext);
  FgFile fb = load_fg(dir / "e.fg");
  CHECK(from_fg(fb.fg).graph() == e.graph());
  CHECK(serialize_fg(fb) == ftext);
}

TEST_CASE("cochain files") {
  TempDir dir;
  const GPtr p2 = fx::p2();
  write_file(dir / "p2.g", serialize_groupoid(p2->data()));
  Cochain c = modular(fx::w());
  CochainFile cf{"p2.g", p2, c};
  const std::string text = serialize_cochain(cf);
  write_file(dir / "d.coc", text);
  CochainFile back = load_cochain(dir / "d.coc");
  CHECK(back.c == c);
  CHECK(serialize_cochain(back) == text);

  Cochain irr = unit_function(*p2, {Surd::root(Q(2)), Surd(-1, Q(3))});
  CochainFile cf0{"p2.g", p2, irr};
  const std::string t0 = serialize_cochain(cf0);
  CHECK(t0.find("val (0,0) sqrt(2)") != std::string::npos);
  CHECK(t0.find("val (1,1) -sqrt(3)") != std::string::npos);
  CHECK(parse_cochain(t0, dir.path.string()).c == irr);

  const std::string head = "#cochain v1\nover p2.g\ndeg 1\n";
  CHECK(throws_with<CheckFailure>([&] { parse_cochain(head + "val (0,1) 2\n", dir.path.string()); }, "value missing"));
  CHECK(throws_with<CheckFailure>(
      [&] { parse_cochain(head + "val (0,0) 2\nval (1,1) 1\nval (0,1) 2\nval (1,0) 1/2\n", dir.path.string()); },
      "normalization"));
  CHECK(throws_with<ParseError>([&] { parse_cochain(head + "val (0,1) (1,0) 2\n", dir.path.string()); }, "takes 2"));
  CHECK(throws_with<ParseError>([&] { parse_cochain("#cochain v1\nover p2.g\ndeg x\n", dir.path.string()); }, "bad degree"));
}

TEST_CASE("operator files") {
  Operator t{Eigen::MatrixXcd::Identity(2, 2), {1.0, 4.0}};
  t.m(0, 1) = cd(0.5, -1);
  CHECK(serialize_operator(t) ==
        "#matrix v1\nsize 2\nmu 1.00000000000 4.00000000000\n"
        "row 1.00000000000 0.00000000000 0.500000000000 -1.00000000000\n"
        "row 0.00000000000 0.00000000000 1.00000000000 0.00000000000\n");
}
