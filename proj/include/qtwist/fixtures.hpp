#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qtwist/theta.hpp"

namespace qtwist::fixtures {

struct TableRow {
  std::int64_t D;
  std::int64_t c;
  double L;
};

/// One published twist table for form `form` and auxiliary l*.
struct TwistTable {
  std::string form;
  std::int64_t p;
  std::int64_t lstar;
  std::string psi;  // empty: not used (l* > 0)
  long double k;    // published constant
  std::vector<TableRow> rows;
};

const std::vector<TwistTable>& twist_tables();

/// Published q-expansions, as text, with the exponent bound they are given to.
struct SeriesFixture {
  std::string name;
  std::string series;
  std::int64_t bound;  // coefficients known for n <= bound
};

const SeriesFixture& series(const std::string& name);

/// Coefficients of "q^3-2q^4+q+..." as exponent -> coefficient.
std::map<std::int64_t, std::int64_t> parse_qseries(const std::string& text);

struct IdealFixture {
  std::vector<std::string> basis;
  std::int64_t norm;
};

/// Published right ideal representatives (R first).
struct ClassFixture {
  std::string form;
  std::int64_t p;
  std::vector<IdealFixture> ideals;
  std::vector<std::string> ef;  // coefficient of [I_i] in e_f, as rationals
  std::string height;
};

const std::vector<ClassFixture>& class_fixtures();

/// Published lattice bases of S_i^0 and their forms.
struct LatticeFixture {
  std::int64_t p;
  std::size_t ideal;  // index into the ClassFixture ideals; the lattice is S^0 of its left order
  std::vector<std::string> basis;
  Sextuple qf;
};

const std::vector<LatticeFixture>& lattice_fixtures();

/// Rows of the 389A table of forms: a_i = num/den, sextuple and b_i.
struct Form389 {
  std::int64_t num, den;
  Sextuple qf;
  std::array<std::int64_t, 3> b;
};

const std::vector<Form389>& forms_389a();

struct Constant {
  std::string name;
  long double value;
};

/// L(f, l*, 1) and L(f, 1) values quoted in the text.
const std::vector<Constant>& quoted_values();

}  // namespace qtwist::fixtures
