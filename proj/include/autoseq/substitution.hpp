#pragma once

#include <string>
#include <vector>

#include "autoseq/words.hpp"

namespace autoseq {

// Letter-to-letter map used to project fixed points.
class Coding {
public:
  Coding(AlphabetPtr domain, AlphabetPtr codomain, std::vector<int32_t> map);

  const AlphabetPtr& domain() const { return domain_; }
  const AlphabetPtr& codomain() const { return codomain_; }
  int32_t image(int32_t letter) const;
  Word apply(const Word& w) const;

private:
  AlphabetPtr domain_, codomain_;
  std::vector<int32_t> map_;
};

// Endomorphism of a free monoid with a marked seed letter. The seed starts
// its own image and every letter's iterated image grows without bound, so
// iterating on the seed converges to a one-sided fixed point.
class Substitution {
public:
  Substitution(AlphabetPtr alphabet, std::vector<Word> images, int seed);

  const AlphabetPtr& alphabet() const { return rule_.domain(); }
  const Morphism& rule() const { return rule_; }
  int seed() const { return seed_; }
  const Word& image(int letter) const { return rule_.image(letter); }
  const Word& image(const std::string& symbol) const {
    return rule_.image(symbol);
  }
  bool constant_length() const { return rule_.constant_length(); }
  // Common image length of a constant-length substitution.
  long length() const;

  Word apply(const Word& w) const { return rule_.apply(w); }
  Substitution power(int n) const;

  // First n letters of the one-sided fixed point.
  Word fixed_point_prefix(long n) const;

private:
  Morphism rule_;
  int seed_;
};

// Empty when (alphabet, images, seed) define a substitution; otherwise a
// description of the first violated condition.
std::string explain_invalid_substitution(const Morphism& rule, int seed);

// Distinct length-k factors of the substitution's language, sorted.
// Meaningful for primitive substitutions, where the language equals the
// language of the fixed point.
std::vector<Word> block_language(const Substitution& s, long k);

// Presentation of the fixed point by sliding k-blocks: letters are the
// length-k factors, and the image of a block lists the k-windows of its
// substituted image anchored at the first |image(first letter)| offsets.
struct BlockPresentation {
  Substitution sub;          // over the block alphabet
  std::vector<Word> blocks;  // block letter -> the k-word it stands for
  Coding first_letter;       // block letter -> first letter of the block
};
BlockPresentation k_block_substitution(const Substitution& s, long k);

// Power k and sub-alphabet on which the k-th iterate restricts to a
// primitive substitution.
struct PrimitiveComponent {
  int power = 1;
  std::vector<int> letters;  // indices into the original alphabet, sorted
  Substitution restricted;
};
PrimitiveComponent primitive_component(const Substitution& s);

// A substitution together with a coding of its fixed point.
struct CodedSubstitution {
  Substitution sub;
  Coding coding;
};

// Constant-length-p presentation of the eventually periodic sequence
// u v v v ...; the coded fixed point equals it exactly.
CodedSubstitution periodic_to_substitution(const Word& u, const Word& v,
                                           long p);

// Coded presentation of the 0/1 indicator sequence of the occurrences of u
// in the fixed point of s.
CodedSubstitution indicator_coding(const Substitution& s, const Word& u);

}  // namespace autoseq
