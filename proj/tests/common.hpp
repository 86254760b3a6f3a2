#pragma once

#include <string>
#include <vector>

#include "autoseq/substitution.hpp"

namespace testutil {

inline autoseq::Substitution make_sub(const std::string& alpha,
                                      const std::vector<std::string>& images,
                                      const std::string& seed) {
  autoseq::AlphabetPtr A = autoseq::make_alphabet(alpha);
  std::vector<autoseq::Word> im;
  for (const std::string& s : images) im.push_back(autoseq::Word::parse(A, s));
  return autoseq::Substitution(A, std::move(im), A->index(seed));
}

// a -> ab, b -> ba (Thue-Morse)
inline autoseq::Substitution tm() { return make_sub("ab", {"ab", "ba"}, "a"); }

// a -> ab, b -> ab (coded fixed point has period 2)
inline autoseq::Substitution period2() {
  return make_sub("ab", {"ab", "ab"}, "a");
}

// a -> ab, b -> bc, c -> cc (coded fixed point marks powers of two)
inline autoseq::Substitution chain() {
  return make_sub("abc", {"ab", "bc", "cc"}, "a");
}

// Letter-to-letter coding given one codomain token per domain letter.
inline autoseq::Coding make_coding(const autoseq::AlphabetPtr& dom,
                                   const std::vector<std::string>& out,
                                   const std::string& codomain = "01") {
  autoseq::AlphabetPtr C = autoseq::make_alphabet(codomain);
  std::vector<int32_t> map;
  for (const std::string& t : out) map.push_back(C->index(t));
  return autoseq::Coding(dom, C, std::move(map));
}

}  // namespace testutil
