#include "qtwist/fixtures.hpp"

#include <cctype>

#include "qtwist/arith.hpp"

namespace qtwist::fixtures {

const std::vector<TwistTable>& twist_tables() {
  static const std::vector<TwistTable> tables = {
  {"11A", 11, -3, "chi_p", 0.2538418608559106843377589233509L,
   {
       {1, 1, 0.253842},
       {5, -5, 2.838038},
       {12, -5, 1.831946},
       {37, 5, 1.043284},
       {53, 10, 3.486786},
       {56, 10, 3.392105},
       {60, -5, 0.819271},
       {69, 15, 6.875768},
       {89, -5, 0.672680},
       {92, -5, 0.661621},
       {93, 5, 0.658054},
       {97, 5, 0.644343},
       {104, 10, 2.489124},
       {113, -5, 0.596986},
       {124, -5, 0.569892},
       {133, 10, 2.201088},
       {136, 10, 2.176676},
       {137, -5, 0.542179},
       {141, -10, 2.137734},
       {152, -10, 2.058929},
       {157, -15, 4.558227},
       {168, 10, 1.958432},
       {177, 5, 0.476998},
       {181, -15, 4.245281},
       {185, -5, 0.466571},
       {188, -10, 1.851332}}},
  {"37A", 37, 5, "", 4.902778763973580121708449663733L,
   {
       {-3, 1, 2.830621},
       {-4, 1, 2.451389},
       {-7, -1, 1.853076},
       {-11, 1, 1.478243},
       {-40, 2, 3.100790},
       {-47, -1, 0.715144},
       {-67, 6, 21.562911},
       {-71, 1, 0.581853},
       {-83, -1, 0.538150},
       {-84, -1, 0.534937},
       {-95, 0, 0.000000},
       {-104, 0, 0.000000},
       {-107, 0, 0.000000},
       {-111, 1, 0.930702},
       {-115, -6, 16.458713},
       {-120, -2, 1.790242},
       {-123, 3, 3.978618},
       {-127, 1, 0.435051},
       {-132, 3, 3.840589},
       {-136, 4, 6.726557},
       {-139, 0, 0.000000},
       {-148, -3, 7.254107},
       {-151, -2, 1.595930},
       {-152, -2, 1.590671},
       {-155, 2, 1.575203},
       {-159, 1, 0.388816},
       {-164, -1, 0.382843},
       {-184, 0, 0.000000},
       {-195, 2, 1.404381}}},
  {"37A", 37, -3, "step", 11.97383458492783851932803991781L,
   {
       {5, 1, 5.354862},
       {8, 1, 4.233390},
       {13, -1, 3.320944},
       {17, 1, 2.904081},
       {24, -1, 2.444149},
       {29, 2, 8.893941},
       {56, -1, 1.600071},
       {57, 1, 1.585973},
       {60, -1, 1.545815},
       {61, 0, 0.000000},
       {69, 0, 0.000000},
       {76, 1, 1.373493},
       {88, 1, 1.276415},
       {89, -1, 1.269224},
       {92, 2, 4.993434},
       {93, 2, 4.966515},
       {97, 0, 0.000000},
       {105, 1, 1.168527},
       {109, -1, 1.146885},
       {113, 0, 0.000000},
       {124, 0, 0.000000},
       {129, 1, 1.054237},
       {133, -1, 1.038263},
       {140, -3, 9.107764},
       {156, -1, 0.958674},
       {161, -2, 3.774681},
       {165, 1, 0.932162},
       {168, -1, 0.923801},
       {172, 1, 0.912996},
       {177, 0, 0.000000},
       {193, -1, 0.861895}}},
  {"43A", 43, 5, "", 5.452729672681734385570722785283L,
   {
       {-3, 1, 3.148135},
       {-7, 1, 2.060938},
       {-8, -1, 1.927831},
       {-19, 2, 5.003768},
       {-20, -1, 1.219267},
       {-39, -1, 0.873136},
       {-43, 2, 6.652268},
       {-51, 1, 0.763535},
       {-55, 1, 0.735246},
       {-71, 0, 0.000000},
       {-88, 3, 5.231366},
       {-91, -1, 0.571601},
       {-104, 1, 0.534684},
       {-115, -3, 4.576227},
       {-116, -1, 0.506273},
       {-119, -1, 0.499851},
       {-120, 0, 0.000000},
       {-123, -5, 12.291402},
       {-131, 0, 0.000000},
       {-132, 3, 4.271393},
       {-136, -1, 0.467568},
       {-148, -4, 7.171386},
       {-151, -1, 0.443737},
       {-155, -1, 0.437974},
       {-159, 1, 0.432430},
       {-163, 7, 20.927447},
       {-168, -2, 1.682749},
       {-179, -1, 0.407556},
       {-184, -3, 3.617825},
       {-191, 0, 0.000000},
       {-199, 0, 0.000000}}},
  {"43A", 43, -3, "chi_p", 10.937379059935167648758735438779L,
   {
       {5, 1, 4.891345},
       {8, -1, 3.866947},
       {12, 1, 3.157349},
       {28, -1, 2.066970},
       {29, -1, 2.031020},
       {33, -1, 1.903953},
       {37, 2, 7.192376},
       {61, 1, 1.400388},
       {65, -1, 1.356615},
       {69, -1, 1.316706},
       {73, 1, 1.280123},
       {76, 0, 0.000000},
       {77, -3, 11.217870},
       {85, 1, 1.186325},
       {88, -1, 1.165929},
       {89, 1, 1.159360},
       {93, 3, 10.207380},
       {104, 1, 1.072498},
       {105, 0, 0.000000},
       {113, -2, 4.115608},
       {120, 0, 0.000000},
       {136, 1, 0.937873},
       {137, 2, 3.737773},
       {141, -2, 3.684374},
       {149, 0, 0.000000},
       {156, 1, 0.875691},
       {157, 2, 3.491592},
       {161, -1, 0.861986},
       {168, -2, 3.375348},
       {177, -2, 3.288415},
       {184, 1, 0.806314}}},
  {"389A", 389, 5, "", 7.886950806206592817689630792605L,
   {
       {-3, 1, 4.553533},
       {-8, -1, 2.788458},
       {-15, -1, 2.036402},
       {-23, 1, 1.644543},
       {-31, 1, 1.416538},
       {-39, 1, 1.262923},
       {-40, 1, 1.247036},
       {-43, -3, 10.824738},
       {-47, 0, 0.000000},
       {-51, -2, 4.417576},
       {-56, 1, 1.053938},
       {-71, 1, 0.936009},
       {-83, -1, 0.865705},
       {-84, 1, 0.860537},
       {-88, -4, 13.452028},
       {-103, 0, 0.000000},
       {-104, -1, 0.773379},
       {-107, 0, 0.000000},
       {-115, -1, 0.735462},
       {-116, -2, 2.929140},
       {-123, 3, 6.400282},
       {-131, 1, 0.689086},
       {-132, -2, 2.745884},
       {-136, -2, 2.705202},
       {-139, -1, 0.668962},
       {-148, 6, 23.338921},
       {-151, 2, 2.567324},
       {-152, -1, 0.639716},
       {-155, 3, 5.701456},
       {-163, 8, 39.536232},
       {-167, -1, 0.610311},
       {-191, 1, 0.570680},
       {-195, 1, 0.564796},
       {-199, -1, 0.559091}}},
  };
  return tables;
}

const SeriesFixture& series(const std::string& name) {
  static const std::vector<SeriesFixture> all = {
      {"11A/theta1", "q^3-q^4-q^11-q^12+q^15+2q^16", 19},
      {"11A/theta-3/I1", "-2q^4+2q^5+2q^9+2q^12+2q^20+2q^25-2q^37", 47},
      {"11A/theta-3/I2", "q+q^4-3q^5-3q^12+4q^16-3q^20+2q^25-6q^36+3q^37", 47},
      {"389A/h1", "q^3-q^12-q^27+q^39+q^40+q^48-q^83-2q^92", 99},
  };
  for (const auto& s : all)
    if (s.name == name) return s;
  throw InvalidArgument("fixtures::series: unknown series " + name);
}

std::map<std::int64_t, std::int64_t> parse_qseries(const std::string& text) {
  std::map<std::int64_t, std::int64_t> out;
  std::size_t i = 0;
  auto number = [&]() {
    std::int64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = 10 * v + (text[i++] - '0');
    return v;
  };
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text.compare(i, 2, "O(") == 0 || text.compare(i, 3, "+O(") == 0) break;
    const std::size_t start = i;
    std::int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') sign = text[i++] == '-' ? -1 : 1;
    std::int64_t c = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) c = number();
    std::int64_t e = 0;
    if (i < text.size() && text[i] == 'q') {
      ++i;
      e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = number();
      }
    }
    if (i == start) throw InvalidArgument("parse_qseries: unexpected '" + std::string(1, text[i]) + "'");
    out[e] += sign * c;
  }
  return out;
}

const std::vector<ClassFixture>& class_fixtures() {
  static const std::vector<ClassFixture> all = {
      {"11A", 11, {{{"1", "i", "(1+j)/2", "(i+k)/2"}, 1}, {{"2", "2i", "(1+2i+j)/2", "(2+3i+k)/2"}, 2}}, {"-1", "1"}, "5"},
      {"37A",
       37,
       {{{"1", "i", "(1+i+j)/2", "(2+3i+k)/4"}, 1},
        {{"2", "2i", "(1+3i+j)/2", "(6+3i+k)/4"}, 2},
        {{"4", "2i", "(3+3i+j)/2", "(6+i+k)/2"}, 4}},
       {"0", "-1/2", "1/2"},
       "1/2"},
      {"43A",
       43,
       {{{"1", "i", "(1+j)/2", "(i+k)/2"}, 1},
        {{"2", "2i", "(1+2i+j)/2", "(2+3i+k)/2"}, 2},
        {{"3", "3i", "(1+2i+j)/2", "(2+5i+k)/2"}, 3},
        {{"3", "3i", "(1+4i+j)/2", "(4+5i+k)/2"}, 3}},
       {"0", "0", "-1/2", "1/2"},
       "1/2"},
  };
  return all;
}

const std::vector<LatticeFixture>& lattice_fixtures() {
  static const std::vector<LatticeFixture> all = {
      {11, 0, {"2i", "j", "i+k"}, {4, 11, 12, 0, 4, 0}},
      {11, 1, {"4i", "2i+j", "(7i+k)/2"}, {16, 15, 15, 14, 28, 16}},
      {37, 2, {"4i", "3i+j", "(3i+2j+k)/4"}, {32, 55, 15, 46, 12, 48}},
  };
  return all;
}

const std::vector<Form389>& forms_389a() {
  static const std::vector<Form389> all = {
  {1, 2, {15, 107, 416, -100, -8, -14}, {2, 4, 0}},
  {-1, 2, {15, 104, 415, 104, 2, 4}, {0, 4, 1}},
  {-1, 2, {23, 136, 203, 68, 2, 8}, {2, 1, 4}},
  {1, 2, {23, 72, 407, 72, 10, 20}, {1, 1, 0}},
  {-1, 2, {31, 51, 407, -46, -26, -10}, {1, 2, 0}},
  {1, 2, {31, 103, 204, 56, 20, 18}, {2, 0, 3}},
  {1, 2, {39, 128, 160, -116, -8, -36}, {1, 1, 4}},
  {-1, 2, {39, 40, 399, 40, 2, 4}, {1, 0, 1}},
  {1, 2, {40, 47, 399, 18, 40, 36}, {4, 3, 0}},
  {-1, 2, {47, 107, 135, 42, 22, 38}, {4, 3, 1}},
  {-1, 2, {56, 84, 139, 56, 4, 12}, {3, 1, 4}},
  {1, 2, {56, 92, 151, 76, 52, 44}, {4, 2, 3}},
  {1, 2, {71, 83, 132, -16, -12, -70}, {2, 3, 4}},
  {-1, 2, {71, 103, 124, -36, -64, -66}, {4, 0, 2}}
  };
  return all;
}

const std::vector<Constant>& quoted_values() {
  static const std::vector<Constant> all = {
      {"11A L(f,1)", 0.25384186L},
      {"11A L(f,-3,1)", 1.6844963L},
      {"37A L(f,5,1)", 5.3548616L},
      {"43A L(f,5,1)", 4.8913446L},
      {"43A L(f,-3,1)", 3.1481349L},
      {"389A L(f,5,1)", 8.9092552L},
  };
  return all;
}

}  // namespace qtwist::fixtures
