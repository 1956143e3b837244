#include "fivesel/screens.hpp"

#include <stdexcept>
#include <string>

namespace fivesel {

namespace {

std::vector<int> names_to_symbols(std::initializer_list<const char*> names) {
  std::vector<int> out;
  for (const char* n : names) {
    auto s = symbol_from_name(n);
    if (!s) throw std::logic_error(std::string("bad symbol name ") + n);
    out.push_back(*s);
  }
  return out;
}

std::array<std::vector<int>, 13> build_sets() {
  std::array<std::vector<int>, 13> sets;
  sets[0] = names_to_symbols({"a12", "a13", "b12", "b13", "c12", "c13", "d12",
                              "d13", "e12", "e13"});
  sets[1] = names_to_symbols({"a12", "a13", "a14", "b12", "b13", "b14", "c12",
                              "c13", "c14", "d12", "d13", "d14"});
  sets[2] = names_to_symbols({"a12", "a13", "a23", "b12", "b13", "b23", "c12",
                              "c13", "c23", "d12", "d13", "d23"});
  sets[3] = names_to_symbols({"a12", "a13", "a14", "a15", "a23", "a24", "a25",
                              "b12", "b13", "b14", "b15", "b23", "b24", "b25"});
  sets[4] = names_to_symbols({"a12", "a13", "a14", "a23", "a24", "a34", "b12",
                              "b13", "b14", "b23", "b24", "b34"});
  sets[5] = names_to_symbols({"a12", "a13", "a14", "a23", "a24", "b12", "b13",
                              "b14", "b23", "b24", "c12", "c13", "c14", "c23",
                              "c24"});
  sets[6] = names_to_symbols({"a12", "a13", "a14", "a15", "a23", "a24", "a25",
                              "a34", "a35", "a45"});
  sets[7] = names_to_symbols({"a12", "a13", "a14", "a15", "b12", "b13", "b14",
                              "b15", "c12", "c13", "c14", "c15"});
  sets[8] = names_to_symbols({"a12", "a13", "a14", "a15", "a23", "a24", "a25",
                              "b12", "c12", "d12", "e12"});
  sets[9] = names_to_symbols({"a12", "a13", "a14", "a15", "a23", "a24", "b12",
                              "b13", "b14", "b15", "b23", "b24", "c12", "d12",
                              "e12"});
  sets[10] = names_to_symbols({"a12", "a13", "a14", "a15", "a23", "a24", "a25",
                               "a34", "a35", "b12", "b13", "b23", "c12", "c13",
                               "c23"});
  sets[11] = names_to_symbols({"a12", "a13", "a14", "a15", "a23", "a24", "a25",
                               "a34", "a35", "b12", "b13", "c12", "c13", "d12",
                               "d13"});
  sets[12] = names_to_symbols({"a12", "a13", "a14", "a15", "a23", "a24", "a25",
                               "a34", "b12", "b13", "b14", "b15", "b23", "b24",
                               "c12", "c13", "c14", "c23", "d12", "d13"});
  return sets;
}

bool vanishes_on(const Quintuple& v, const std::vector<int>& symbols) {
  for (int s : symbols)
    if (v.coord(s) != 0) return false;
  return true;
}

}  // namespace

const std::array<std::vector<int>, 13>& reducibility_sets() {
  static const std::array<std::vector<int>, 13> sets = build_sets();
  return sets;
}

std::optional<int> reducibility_screen(const Quintuple& v) {
  const auto& sets = reducibility_sets();
  for (int k = 0; k < 13; ++k)
    if (vanishes_on(v, sets[k])) return k + 1;
  return std::nullopt;
}

Q1Witness q1_factorization(const Quintuple& v) {
  const auto& sets = reducibility_sets();
  Q1Witness w;
  w.q1 = sub_pfaffians(v)[0];
  if (vanishes_on(v, sets[0])) {
    w.case_id = 1;
    w.f1 = entry_form(v, 1, 4);
    w.f2 = entry_form(v, 2, 3);
    if (!(product_form(w.f1, w.f2) == qf_neg(w.q1)))
      throw std::logic_error("q1_factorization: case-1 identity violated");
    return w;
  }
  if (vanishes_on(v, sets[1]) || vanishes_on(v, sets[2])) {
    w.case_id = vanishes_on(v, sets[1]) ? 2 : 3;
    w.f1.fill(Rat(0));
    w.f2.fill(Rat(0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (w.q1.gram[i][j] != 0)
          throw std::logic_error("q1_factorization: Gram not confined to row/col 5");
    return w;
  }
  throw std::invalid_argument("q1_factorization: no Case 1-3 vanishing pattern");
}

}  // namespace fivesel
