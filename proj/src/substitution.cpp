#include "autoseq/substitution.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "autoseq/detail/digraph.hpp"
#include "autoseq/perron.hpp"

namespace autoseq {

Coding::Coding(AlphabetPtr domain, AlphabetPtr codomain,
               std::vector<int32_t> map)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      map_(std::move(map)) {
  if (static_cast<int>(map_.size()) != domain_->size())
    throw ValidationError("coding needs one image per domain letter");
  for (int32_t x : map_)
    if (x < 0 || x >= codomain_->size())
      throw ValidationError("coding image out of range");
}

int32_t Coding::image(int32_t letter) const {
  if (letter < 0 || letter >= domain_->size())
    throw ValidationError("letter index out of range");
  return map_[static_cast<size_t>(letter)];
}

Word Coding::apply(const Word& w) const {
  if (*w.alphabet() != *domain_) throw ValidationError("alphabet mismatch");
  std::vector<int32_t> out;
  out.reserve(static_cast<size_t>(w.size()));
  for (long i = 0; i < w.size(); ++i)
    out.push_back(map_[static_cast<size_t>(w[i])]);
  return Word(codomain_, std::move(out));
}

std::string explain_invalid_substitution(const Morphism& rule, int seed) {
  const AlphabetPtr& A = rule.domain();
  if (*A != *rule.codomain()) return "rule is not an endomorphism";
  int n = A->size();
  if (seed < 0 || seed >= n) return "seed letter out of range";
  for (int a = 0; a < n; ++a)
    if (rule.image(a).empty())
      return "letter '" + A->symbol(a) + "' has an empty image";
  if (rule.image(seed)[0] != seed)
    return "seed '" + A->symbol(seed) +
           "' does not start its own image";

  // A letter grows iff it reaches a strongly connected component that
  // contains a cycle through some letter with image length >= 2.
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    std::set<int> succ;
    const Word& im = rule.image(a);
    for (long t = 0; t < im.size(); ++t) succ.insert(im[t]);
    adj[static_cast<size_t>(a)].assign(succ.begin(), succ.end());
  }
  std::vector<int> id = detail::scc_ids(adj);
  int ncomp = *std::max_element(id.begin(), id.end()) + 1;
  std::vector<char> has_cycle(static_cast<size_t>(ncomp), 0);
  std::vector<char> has_long(static_cast<size_t>(ncomp), 0);
  std::vector<int> comp_size(static_cast<size_t>(ncomp), 0);
  for (int a = 0; a < n; ++a) ++comp_size[static_cast<size_t>(id[a])];
  for (int a = 0; a < n; ++a) {
    if (rule.image(a).size() >= 2) has_long[static_cast<size_t>(id[a])] = 1;
    for (int b : adj[static_cast<size_t>(a)])
      if (id[a] == id[b]) has_cycle[static_cast<size_t>(id[a])] = 1;
  }
  std::vector<char> pumping(static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    pumping[static_cast<size_t>(a)] =
        has_cycle[static_cast<size_t>(id[a])] &&
        has_long[static_cast<size_t>(id[a])];
  // Mark letters reaching a pumping letter.
  std::vector<char> grow = pumping;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      if (grow[static_cast<size_t>(a)]) continue;
      for (int b : adj[static_cast<size_t>(a)])
        if (grow[static_cast<size_t>(b)]) {
          grow[static_cast<size_t>(a)] = 1;
          changed = true;
          break;
        }
    }
  }
  for (int a = 0; a < n; ++a)
    if (!grow[static_cast<size_t>(a)])
      return "letter '" + A->symbol(a) + "' is not growing";
  return {};
}

Substitution::Substitution(AlphabetPtr alphabet, std::vector<Word> images,
                           int seed)
    : rule_(alphabet, alphabet, std::move(images)), seed_(seed) {
  std::string why = explain_invalid_substitution(rule_, seed_);
  if (!why.empty()) throw ValidationError("invalid substitution: " + why);
}

long Substitution::length() const {
  if (!constant_length())
    throw ValidationError("substitution is not of constant length");
  return rule_.max_image_length();
}

Substitution Substitution::power(int n) const {
  if (n < 1) throw ValidationError("power needs n >= 1");
  Morphism m = rule_;
  for (int i = 1; i < n; ++i) m = compose(rule_, m);
  std::vector<Word> images;
  for (int a = 0; a < alphabet()->size(); ++a) images.push_back(m.image(a));
  return Substitution(alphabet(), std::move(images), seed_);
}

Word Substitution::fixed_point_prefix(long n) const {
  if (n < 0) throw ValidationError("prefix length must be >= 0");
  Word w(alphabet(), {static_cast<int32_t>(seed_)});
  if (n == 0) return Word::empty(alphabet());
  long guard = 4 * (alphabet()->size() + 8);
  while (w.size() < n) {
    long before = w.size();
    w = apply(w);
    if (w.size() > n) w.truncate(n);
    if (w.size() == before && --guard < 0)
      throw InternalError("fixed point iteration stalled");
  }
  return w;
}

std::vector<Word> block_language(const Substitution& s, long k) {
  if (k < 1) throw ValidationError("block length must be >= 1");
  std::set<Word> seen;
  std::vector<Word> queue;
  for (int a = 0; a < s.alphabet()->size(); ++a) {
    Word w(s.alphabet(), {static_cast<int32_t>(a)});
    seen.insert(w);
    queue.push_back(w);
  }
  while (!queue.empty()) {
    Word w = std::move(queue.back());
    queue.pop_back();
    Word v = s.apply(w);
    for (long len = 1; len <= std::min(k, v.size()); ++len)
      for (long pos = 0; pos + len <= v.size(); ++pos) {
        Word f = v.subword(pos, len);
        if (seen.insert(f).second) queue.push_back(f);
      }
  }
  std::vector<Word> out;
  for (const Word& w : seen)
    if (w.size() == k) out.push_back(w);
  return out;
}

namespace {

AlphabetPtr block_tokens(const std::vector<Word>& blocks) {
  std::vector<std::string> tokens;
  bool sc = blocks.empty() ? true : blocks[0].alphabet()->single_char();
  std::set<std::string> uniq;
  bool ok = true;
  for (const Word& b : blocks) {
    std::string t;
    if (sc) {
      t = b.str();
    } else {
      for (long i = 0; i < b.size(); ++i) {
        if (i) t += ';';
        t += b.alphabet()->symbol(b[i]);
      }
    }
    if (!uniq.insert(t).second) ok = false;
    tokens.push_back(t);
  }
  if (!ok) {
    tokens.clear();
    for (size_t i = 0; i < blocks.size(); ++i)
      tokens.push_back("b" + std::to_string(i));
  }
  return make_alphabet(std::move(tokens));
}

}  // namespace

BlockPresentation k_block_substitution(const Substitution& s, long k) {
  std::vector<Word> blocks = block_language(s, k);
  if (blocks.empty()) throw InternalError("empty block language");
  AlphabetPtr BA = block_tokens(blocks);
  std::map<Word, int32_t> block_of;
  for (size_t i = 0; i < blocks.size(); ++i)
    block_of.emplace(blocks[i], static_cast<int32_t>(i));

  std::vector<Word> images;
  std::vector<int32_t> first;
  for (const Word& u : blocks) {
    Word v = s.apply(u);
    long p0 = s.image(u[0]).size();
    std::vector<int32_t> im;
    im.reserve(static_cast<size_t>(p0));
    for (long j = 0; j < p0; ++j) {
      auto it = block_of.find(v.subword(j, k));
      if (it == block_of.end())
        throw InternalError("block closure missed a factor");
      im.push_back(it->second);
    }
    images.emplace_back(BA, std::move(im));
    first.push_back(u[0]);
  }

  Word seed_word = s.fixed_point_prefix(k);
  auto it = block_of.find(seed_word);
  if (it == block_of.end())
    throw InternalError("block closure missed the seed block");

  return BlockPresentation{
      Substitution(BA, std::move(images), it->second), blocks,
      Coding(BA, s.alphabet(), std::move(first))};
}

namespace {

std::vector<char> support_step(const Substitution& s,
                               const std::vector<char>& cur) {
  std::vector<char> next(cur.size(), 0);
  for (size_t a = 0; a < cur.size(); ++a) {
    if (!cur[a]) continue;
    const Word& im = s.image(static_cast<int>(a));
    for (long t = 0; t < im.size(); ++t)
      next[static_cast<size_t>(im[t])] = 1;
  }
  return next;
}

}  // namespace

PrimitiveComponent primitive_component(const Substitution& s) {
  int n = s.alphabet()->size();
  IntMatrix m = incidence_matrix(s.rule());
  for (int b = 0; b < n; ++b) {
    // Orbit of the letter support under the substitution.
    std::vector<std::vector<char>> seq;
    std::vector<char> cur(static_cast<size_t>(n), 0);
    cur[static_cast<size_t>(b)] = 1;
    int n1 = -1, n2 = -1;
    while (true) {
      auto it = std::find(seq.begin(), seq.end(), cur);
      if (it != seq.end()) {
        n1 = static_cast<int>(it - seq.begin());
        n2 = static_cast<int>(seq.size());
        break;
      }
      seq.push_back(cur);
      cur = support_step(s, cur);
    }
    int k0 = n2 - n1;
    const std::vector<char>& stable = seq[static_cast<size_t>(n1)];
    std::vector<int> letters;
    for (int a = 0; a < n; ++a)
      if (stable[static_cast<size_t>(a)]) letters.push_back(a);

    IntMatrix mk = m.pow(k0);
    int sz = static_cast<int>(letters.size());
    IntMatrix sub(sz, sz);
    bool closed = true;
    for (int j = 0; j < sz && closed; ++j) {
      for (int i = 0; i < n; ++i) {
        if (mk.at(i, letters[static_cast<size_t>(j)]) == 0) continue;
        auto pos = std::lower_bound(letters.begin(), letters.end(), i);
        if (pos == letters.end() || *pos != i) {
          closed = false;
          break;
        }
        sub.at(static_cast<int>(pos - letters.begin()), j) =
            mk.at(i, letters[static_cast<size_t>(j)]);
      }
    }
    if (!closed || !is_primitive(sub)) continue;

    // Extend the power so some letter starts its own image.
    auto first_letter_pow = [&](int c, int steps) {
      for (int t = 0; t < steps; ++t) c = s.image(c)[0];
      return c;
    };
    int b0 = letters[0];
    std::vector<int> orbit{b0};
    int m_cycle = 0;
    while (true) {
      int nxt = first_letter_pow(orbit.back(), k0);
      auto it = std::find(orbit.begin(), orbit.end(), nxt);
      if (it != orbit.end()) {
        b0 = nxt;
        m_cycle = static_cast<int>(orbit.end() - it);
        break;
      }
      orbit.push_back(nxt);
    }
    int k = k0 * m_cycle;

    Morphism rule = s.rule();
    Morphism pw = rule;
    for (int t = 1; t < k; ++t) pw = compose(rule, pw);
    std::vector<std::string> tokens;
    for (int a : letters) tokens.push_back(s.alphabet()->symbol(a));
    AlphabetPtr SA = make_alphabet(std::move(tokens));
    std::vector<int32_t> reindex(static_cast<size_t>(n), -1);
    for (int j = 0; j < sz; ++j)
      reindex[static_cast<size_t>(letters[static_cast<size_t>(j)])] =
          static_cast<int32_t>(j);
    std::vector<Word> images;
    for (int a : letters) {
      const Word& im = pw.image(a);
      std::vector<int32_t> v;
      v.reserve(static_cast<size_t>(im.size()));
      for (long t = 0; t < im.size(); ++t) {
        if (reindex[static_cast<size_t>(im[t])] < 0)
          throw InternalError("restricted image leaves the component");
        v.push_back(reindex[static_cast<size_t>(im[t])]);
      }
      images.emplace_back(SA, std::move(v));
    }
    int seed_idx = reindex[static_cast<size_t>(b0)];
    return PrimitiveComponent{k, letters,
                              Substitution(SA, std::move(images), seed_idx)};
  }
  throw InternalError("no primitive component found");
}

CodedSubstitution periodic_to_substitution(const Word& u, const Word& v,
                                           long p) {
  require_same_alphabet(u, v);
  if (p < 2) throw ValidationError("constant length must be >= 2");
  if (v.empty()) throw ValidationError("period word must be non-empty");

  long l = 1;
  while (p * l < u.size() || (p * l) % v.size() != 0) ++l;
  long L = p * l;

  auto x_at = [&](long t) {
    return t < u.size() ? u[t] : v[(t - u.size()) % v.size()];
  };

  std::vector<std::string> tokens;
  for (long t = 0; t < 2 * L; ++t) tokens.push_back("a" + std::to_string(t));
  AlphabetPtr A = make_alphabet(std::move(tokens));

  std::vector<Word> images;
  for (long t = 0; t < 2 * L; ++t) {
    std::vector<int32_t> im;
    long start = t < l ? t * p : L + (t % l) * p;
    for (long r = 0; r < p; ++r) im.push_back(static_cast<int32_t>(start + r));
    images.emplace_back(A, std::move(im));
  }

  std::vector<int32_t> code;
  for (long t = 0; t < 2 * L; ++t) code.push_back(x_at(t));

  return CodedSubstitution{Substitution(A, std::move(images), 0),
                           Coding(A, u.alphabet(), std::move(code))};
}

CodedSubstitution indicator_coding(const Substitution& s, const Word& u) {
  if (u.empty()) throw ValidationError("indicator word must be non-empty");
  if (*u.alphabet() != *s.alphabet())
    throw ValidationError("alphabet mismatch");
  BlockPresentation bp = k_block_substitution(s, u.size());
  AlphabetPtr bits = make_alphabet("01");
  std::vector<int32_t> code;
  bool found = false;
  for (const Word& b : bp.blocks) {
    bool hit = b == u;
    found = found || hit;
    code.push_back(hit ? 1 : 0);
  }
  if (!found)
    throw ValidationError("word '" + u.str() +
                          "' is not a factor of the fixed point");
  return CodedSubstitution{bp.sub,
                           Coding(bp.sub.alphabet(), bits, std::move(code))};
}

}  // namespace autoseq
