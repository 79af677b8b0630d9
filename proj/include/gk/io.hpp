#pragma once

#include <string>
#include <vector>

#include "gk/algebra.hpp"
#include "gk/harm.hpp"
#include "gk/homog.hpp"

namespace gk {

// Line-based text formats. Blank lines and lines starting with '#' after the
// header are ignored. Syntax problems throw ParseError; semantic ones
// (axioms, positivity, morphism laws) throw CheckFailure. Paths inside a
// file are resolved against the directory of that file.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
std::string dir_of(const std::string& path);
std::string join_path(const std::string& dir, const std::string& rel);

// #groupoid v1 / element NAME / unit NAME / inv X Y / mul X Y Z
GroupoidData parse_groupoid_data(const std::string& text, const std::string& where = "<groupoid>");
std::string serialize_groupoid(const GroupoidData& d);
GPtr load_groupoid(const std::string& path);

// #haar v1 / c UNIT P/Q / nu UNIT P/Q
Haar parse_haar(const std::string& text, const GPtr& g, const std::string& where = "<haar>");
std::string serialize_haar(const Haar& h);
Haar load_haar(const std::string& path, const GPtr& g);

// #morphism v1 / dom PATH / cod PATH / pair YCOD XDOM
struct MorphismFile {
  std::string dom_path, cod_path;
  GPtr dom, cod;
  Relation graph;
};
MorphismFile parse_morphism(const std::string& text, const std::string& base_dir, const std::string& where = "<morphism>");
std::string serialize_morphism(const MorphismFile& m);
MorphismFile load_morphism_file(const std::string& path);
Morphism load_morphism(const std::string& path);

// #elt v1 / over PATH / coef X RE IM
struct ElementFile {
  std::string over_path;
  GPtr g;
  Coef<QC> coef;
};
ElementFile parse_element(const std::string& text, const std::string& base_dir, const std::string& where = "<element>");
std::string serialize_element(const ElementFile& e);
ElementFile load_element(const std::string& path);

// #cochain v1 / over PATH / deg N / val X0 ... X(N-1) VALUE, where VALUE is
// P/Q, a decimal, or sqrt(P/Q). Degree 0 uses one slot holding a unit.
struct CochainFile {
  std::string over_path;
  GPtr g;
  Cochain c;
};
CochainFile parse_cochain(const std::string& text, const std::string& base_dir, const std::string& where = "<cochain>");
std::string serialize_cochain(const CochainFile& c);
CochainFile load_cochain(const std::string& path);

// #double v1 / group PATH / suba N1 ... / subb N1 ...
struct DoubleFile {
  std::string group_path;
  GPtr group;
  std::vector<std::size_t> a, b;
};
DoubleFile parse_double(const std::string& text, const std::string& base_dir, const std::string& where = "<double>");
std::string serialize_double(const DoubleFile& d);
DoubleFile load_double(const std::string& path);

// #fg v1 / dom PATH / cod PATH / f B A / g X B Y
struct FgFile {
  std::string dom_path, cod_path;
  MappingForm fg;
};
FgFile parse_fg(const std::string& text, const std::string& base_dir, const std::string& where = "<fg>");
std::string serialize_fg(const FgFile& f);
FgFile load_fg(const std::string& path);

// #matrix v1 / size N / mu W1 ... WN / row RE IM RE IM ...
std::string serialize_operator(const Operator& t);

}  // namespace gk
