#include "autoseq/formats.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace autoseq {

namespace {

struct Tok {
  std::string text;
  long col = 0;
};

struct Line {
  long no = 0;
  std::vector<Tok> toks;
};

[[noreturn]] void fail(long line, long col, const std::string& msg) {
  throw ParseError("column " + std::to_string(col) + ": " + msg, line);
}

[[noreturn]] void invalid(long line, const std::string& msg) {
  throw ValidationError("line " + std::to_string(line) + ": " + msg);
}

// '#' starts a comment; a '('...')' group is one token with its spaces
// dropped, so tuples may be written with or without internal spaces.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  long no = 0;
  while (std::getline(in, raw)) {
    ++no;
    Line line{no, {}};
    size_t i = 0;
    while (i < raw.size()) {
      char c = raw[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      long col = static_cast<long>(i) + 1;
      std::string t;
      if (c == '(') {
        size_t j = i;
        bool closed = false;
        for (; j < raw.size() && raw[j] != '#'; ++j) {
          if (std::isspace(static_cast<unsigned char>(raw[j]))) continue;
          t += raw[j];
          if (raw[j] == ')') {
            closed = true;
            ++j;
            break;
          }
        }
        if (!closed) fail(no, col, "unclosed '('");
        i = j;
      } else {
        size_t j = i;
        for (; j < raw.size(); ++j) {
          char d = raw[j];
          if (std::isspace(static_cast<unsigned char>(d)) || d == '#' ||
              d == '(')
            break;
          t += d;
        }
        i = j;
      }
      line.toks.push_back({std::move(t), col});
    }
    if (!line.toks.empty()) out.push_back(std::move(line));
  }
  return out;
}

long parse_long(const Line& l, const Tok& t) {
  const std::string& s = t.text;
  size_t i = s.size() && (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) fail(l.no, t.col, "expected an integer, got '" + s + "'");
  for (size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      fail(l.no, t.col, "expected an integer, got '" + s + "'");
  return std::strtol(s.c_str(), nullptr, 10);
}

// "(1,2)" -> {1,2}; a plain integer is a 1-point.
std::vector<long> parse_point(const Line& l, const Tok& t) {
  const std::string& s = t.text;
  if (s.empty() || s[0] != '(') return {parse_long(l, t)};
  if (s.back() != ')') fail(l.no, t.col, "malformed tuple '" + s + "'");
  std::vector<long> out;
  std::string body = s.substr(1, s.size() - 2);
  size_t start = 0;
  while (true) {
    size_t comma = body.find(',', start);
    std::string part = body.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_long(l, Tok{part, t.col}));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string point_token(const std::vector<long>& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

bool is_key(const Line& l, const char* key) {
  return l.toks[0].text == key;
}

std::vector<std::string> arg_texts(const Line& l) {
  std::vector<std::string> out;
  for (size_t i = 1; i < l.toks.size(); ++i) out.push_back(l.toks[i].text);
  return out;
}

void need_args(const Line& l, size_t n) {
  if (l.toks.size() != n + 1)
    fail(l.no, l.toks[0].col,
         "'" + l.toks[0].text + "' takes " + std::to_string(n) + " value" +
             (n == 1 ? "" : "s"));
}

int32_t letter_index(const AlphabetPtr& a, const Line& l, const Tok& t) {
  std::optional<int> i = a->find(t.text);
  if (!i) invalid(l.no, "unknown letter '" + t.text + "'");
  return *i;
}

// Shared by the substitution and ndsubstitution bodies.
struct CodingLines {
  std::vector<std::string> output;
  struct CodeRow {
    Tok letter, target;
    long line;
  };
  std::vector<CodeRow> codes;
  long output_line = 0;

  bool take(const Line& l) {
    if (is_key(l, "output:")) {
      if (output_line) fail(l.no, l.toks[0].col, "duplicate 'output:'");
      if (l.toks.size() < 2) fail(l.no, l.toks[0].col, "'output:' is empty");
      output = arg_texts(l);
      output_line = l.no;
      return true;
    }
    if (is_key(l, "code")) {
      if (l.toks.size() != 4 || l.toks[2].text != "->")
        fail(l.no, l.toks[0].col, "expected 'code <letter> -> <letter>'");
      codes.push_back({l.toks[1], l.toks[3], l.no});
      return true;
    }
    return false;
  }

  std::optional<Coding> build(const AlphabetPtr& domain) const {
    if (!output_line && codes.empty()) return std::nullopt;
    if (!output_line)
      throw ValidationError("code lines need an 'output:' alphabet");
    if (codes.empty())
      throw ValidationError("'output:' given but no code lines");
    AlphabetPtr cod = make_alphabet(output);
    std::vector<int32_t> map(static_cast<size_t>(domain->size()), -1);
    for (const CodeRow& row : codes) {
      std::optional<int> li = domain->find(row.letter.text);
      if (!li) invalid(row.line, "code for unknown letter '" + row.letter.text + "'");
      std::optional<int> ti = cod->find(row.target.text);
      if (!ti)
        invalid(row.line, "code target '" + row.target.text +
                              "' is not an output letter");
      if (map[static_cast<size_t>(*li)] != -1)
        invalid(row.line, "duplicate code for letter '" + row.letter.text + "'");
      map[static_cast<size_t>(*li)] = *ti;
    }
    for (int i = 0; i < domain->size(); ++i)
      if (map[static_cast<size_t>(i)] == -1)
        throw ValidationError("no code for letter '" + domain->symbol(i) + "'");
    return Coding(domain, cod, std::move(map));
  }
};

SubstitutionFile parse_substitution(const std::vector<Line>& ls, size_t i) {
  std::optional<AlphabetPtr> alphabet;
  std::optional<long> length;
  std::optional<Tok> seed;
  struct RawRule {
    Tok letter;
    std::vector<Tok> image;
    long line;
  };
  std::vector<RawRule> rules;
  CodingLines coding;

  for (; i < ls.size(); ++i) {
    const Line& l = ls[i];
    if (is_key(l, "alphabet:")) {
      if (alphabet) fail(l.no, l.toks[0].col, "duplicate 'alphabet:'");
      if (l.toks.size() < 2) fail(l.no, l.toks[0].col, "'alphabet:' is empty");
      alphabet = make_alphabet(arg_texts(l));
    } else if (is_key(l, "length:")) {
      need_args(l, 1);
      length = parse_long(l, l.toks[1]);
    } else if (is_key(l, "seed:")) {
      need_args(l, 1);
      if (seed) fail(l.no, l.toks[0].col, "duplicate 'seed:'");
      seed = l.toks[1];
    } else if (is_key(l, "rule")) {
      if (l.toks.size() < 4 || l.toks[2].text != "->")
        fail(l.no, l.toks[0].col, "expected 'rule <letter> -> <letters>'");
      rules.push_back({l.toks[1],
                       std::vector<Tok>(l.toks.begin() + 3, l.toks.end()),
                       l.no});
    } else if (!coding.take(l)) {
      fail(l.no, l.toks[0].col,
           "unknown directive '" + l.toks[0].text + "' in a substitution");
    }
  }
  if (!alphabet) throw ParseError("missing 'alphabet:' line");
  if (!seed) throw ParseError("missing 'seed:' line");
  AlphabetPtr A = *alphabet;

  std::vector<std::optional<Word>> images(static_cast<size_t>(A->size()));
  for (const RawRule& r : rules) {
    std::optional<int> li = A->find(r.letter.text);
    if (!li) invalid(r.line, "rule for unknown letter '" + r.letter.text + "'");
    if (images[static_cast<size_t>(*li)])
      invalid(r.line, "duplicate rule for letter '" + r.letter.text + "'");
    std::vector<int32_t> ws;
    for (const Tok& t : r.image) {
      std::optional<int> ti = A->find(t.text);
      if (!ti) invalid(r.line, "unknown letter '" + t.text + "' in a rule");
      ws.push_back(*ti);
    }
    images[static_cast<size_t>(*li)] = Word(A, std::move(ws));
  }
  std::vector<Word> im;
  for (int a = 0; a < A->size(); ++a) {
    if (!images[static_cast<size_t>(a)])
      throw ValidationError("no rule for letter '" + A->symbol(a) + "'");
    im.push_back(*images[static_cast<size_t>(a)]);
    if (length && im.back().size() != *length)
      throw ValidationError("rule for '" + A->symbol(a) +
                            "' breaks the declared length");
  }
  std::optional<int> si = A->find(seed->text);
  if (!si) throw ValidationError("seed '" + seed->text + "' is not a letter");
  return SubstitutionFile{Substitution(A, std::move(im), *si),
                          coding.build(A)};
}

Automaton parse_automaton(const std::vector<Line>& ls, size_t i) {
  std::vector<std::string> states;
  std::vector<std::vector<long>> digits;  // alphabet tokens as points
  std::optional<std::string> initial;
  std::vector<std::string> terminals;
  bool have_states = false, have_alpha = false, have_terminal = false;
  struct RawEdge {
    Tok from, sym, to;
    long line;
  };
  std::vector<RawEdge> raw;

  for (; i < ls.size(); ++i) {
    const Line& l = ls[i];
    if (is_key(l, "states:")) {
      if (have_states) fail(l.no, l.toks[0].col, "duplicate 'states:'");
      if (l.toks.size() < 2) fail(l.no, l.toks[0].col, "'states:' is empty");
      states = arg_texts(l);
      have_states = true;
    } else if (is_key(l, "alphabet:")) {
      if (have_alpha) fail(l.no, l.toks[0].col, "duplicate 'alphabet:'");
      if (l.toks.size() < 2) fail(l.no, l.toks[0].col, "'alphabet:' is empty");
      for (size_t t = 1; t < l.toks.size(); ++t)
        digits.push_back(parse_point(l, l.toks[t]));
      have_alpha = true;
    } else if (is_key(l, "initial:")) {
      need_args(l, 1);
      if (initial) fail(l.no, l.toks[0].col, "duplicate 'initial:'");
      initial = l.toks[1].text;
    } else if (is_key(l, "terminal:")) {
      if (have_terminal) fail(l.no, l.toks[0].col, "duplicate 'terminal:'");
      terminals = arg_texts(l);
      have_terminal = true;
    } else if (is_key(l, "edge")) {
      if (l.toks.size() != 4)
        fail(l.no, l.toks[0].col, "expected 'edge <from> <symbol> <to>'");
      raw.push_back({l.toks[1], l.toks[2], l.toks[3], l.no});
    } else {
      fail(l.no, l.toks[0].col,
           "unknown directive '" + l.toks[0].text + "' in an automaton");
    }
  }
  if (!have_states) throw ParseError("missing 'states:' line");
  if (!have_alpha) throw ParseError("missing 'alphabet:' line");
  if (!initial) throw ParseError("missing 'initial:' line");

  size_t dim = digits.front().size();
  long p = 0;
  for (const auto& d : digits) {
    if (d.size() != dim)
      throw ValidationError("alphabet mixes tuple sizes");
    for (long c : d) {
      if (c < 0) throw ValidationError("digits are nonnegative");
      p = std::max(p, c + 1);
    }
  }
  std::set<std::vector<long>> seen(digits.begin(), digits.end());
  long expect = 1;
  for (size_t k = 0; k < dim; ++k) expect *= p;
  if (static_cast<long>(seen.size()) != expect ||
      seen.size() != digits.size())
    throw ValidationError(
        "alphabet must list every digit tuple of a base exactly once");

  std::set<std::string> known(states.begin(), states.end());
  if (known.size() != states.size())
    throw ValidationError("duplicate state names");
  auto check_state = [&](const Tok& t, long line) {
    if (!known.count(t.text)) invalid(line, "unknown state '" + t.text + "'");
  };
  std::vector<LabeledEdge> edges;
  for (const RawEdge& e : raw) {
    check_state(e.from, e.line);
    check_state(e.to, e.line);
    Line at{e.line, {}};
    std::vector<long> d = parse_point(at, e.sym);
    if (d.size() != dim) invalid(e.line, "symbol has the wrong tuple size");
    for (long c : d)
      if (c < 0 || c >= p) invalid(e.line, "digit out of range");
    edges.push_back(
        {e.from.text, tuple_symbol_index(p, d), e.to.text});
  }
  if (!known.count(*initial))
    throw ValidationError("unknown initial state '" + *initial + "'");
  for (const std::string& t : terminals)
    if (!known.count(t))
      throw ValidationError("unknown terminal state '" + t + "'");
  return from_edges(p, static_cast<int>(dim), states, edges, *initial,
                    terminals);
}

NdSubstitutionFile parse_ndsubstitution(const std::vector<Line>& ls,
                                        size_t i) {
  std::optional<int> dim;
  std::optional<long> side;
  std::optional<AlphabetPtr> alphabet;
  std::optional<Tok> seed;
  struct RawRule {
    Tok letter;
    std::vector<int32_t> cells;
    long line;
  };
  std::vector<RawRule> rules;
  CodingLines coding;

  while (i < ls.size()) {
    const Line& l = ls[i];
    if (is_key(l, "dim:")) {
      need_args(l, 1);
      if (dim) fail(l.no, l.toks[0].col, "duplicate 'dim:'");
      dim = static_cast<int>(parse_long(l, l.toks[1]));
      ++i;
    } else if (is_key(l, "side:")) {
      need_args(l, 1);
      if (side) fail(l.no, l.toks[0].col, "duplicate 'side:'");
      side = parse_long(l, l.toks[1]);
      ++i;
    } else if (is_key(l, "alphabet:")) {
      if (alphabet) fail(l.no, l.toks[0].col, "duplicate 'alphabet:'");
      if (l.toks.size() < 2) fail(l.no, l.toks[0].col, "'alphabet:' is empty");
      alphabet = make_alphabet(arg_texts(l));
      ++i;
    } else if (is_key(l, "seed:")) {
      need_args(l, 1);
      if (seed) fail(l.no, l.toks[0].col, "duplicate 'seed:'");
      seed = l.toks[1];
      ++i;
    } else if (is_key(l, "rule")) {
      if (l.toks.size() != 2 || l.toks[1].text.size() < 2 ||
          l.toks[1].text.back() != ':')
        fail(l.no, l.toks[0].col, "expected 'rule <letter>:'");
      if (!dim || !side || !alphabet)
        fail(l.no, l.toks[0].col,
             "'dim:', 'side:' and 'alphabet:' must precede the rules");
      if (*dim < 1) invalid(l.no, "dim must be positive");
      if (*side < 1) invalid(l.no, "side must be positive");
      Tok letter{l.toks[1].text.substr(0, l.toks[1].text.size() - 1),
                 l.toks[1].col};
      long row_count = 1;
      for (int k = 1; k < *dim; ++k) row_count *= *side;
      std::vector<int32_t> cells;
      for (long r = 0; r < row_count; ++r) {
        ++i;
        if (i >= ls.size())
          throw ParseError("rule '" + letter.text + "' is missing rows",
                           l.no);
        const Line& row = ls[i];
        if (static_cast<long>(row.toks.size()) != *side)
          fail(row.no, row.toks[0].col,
               "expected " + std::to_string(*side) + " letters in the row");
        for (const Tok& t : row.toks)
          cells.push_back(letter_index(*alphabet, row, t));
      }
      rules.push_back({letter, std::move(cells), l.no});
      ++i;
    } else if (coding.take(l)) {
      ++i;
    } else {
      fail(l.no, l.toks[0].col,
           "unknown directive '" + l.toks[0].text + "' in an ndsubstitution");
    }
  }
  if (!dim) throw ParseError("missing 'dim:' line");
  if (!side) throw ParseError("missing 'side:' line");
  if (!alphabet) throw ParseError("missing 'alphabet:' line");
  if (!seed) throw ParseError("missing 'seed:' line");
  AlphabetPtr A = *alphabet;

  std::vector<std::optional<ArrayWindow>> windows(
      static_cast<size_t>(A->size()));
  std::vector<long> shape(static_cast<size_t>(*dim), *side);
  for (RawRule& r : rules) {
    std::optional<int> li = A->find(r.letter.text);
    if (!li) invalid(r.line, "rule for unknown letter '" + r.letter.text + "'");
    if (windows[static_cast<size_t>(*li)])
      invalid(r.line, "duplicate rule for letter '" + r.letter.text + "'");
    windows[static_cast<size_t>(*li)] =
        ArrayWindow{A, shape, std::move(r.cells)};
  }
  std::vector<ArrayWindow> rv;
  for (int a = 0; a < A->size(); ++a) {
    if (!windows[static_cast<size_t>(a)])
      throw ValidationError("no rule for letter '" + A->symbol(a) + "'");
    rv.push_back(std::move(*windows[static_cast<size_t>(a)]));
  }
  std::optional<int> si = A->find(seed->text);
  if (!si) throw ValidationError("seed '" + seed->text + "' is not a letter");
  return NdSubstitutionFile{NdSubstitution(A, *dim, *side, std::move(rv)),
                            *si, coding.build(A)};
}

BlockMap parse_blockmap(const std::vector<Line>& ls, size_t i) {
  std::optional<int> dim;
  std::optional<long> radius, side;
  std::optional<AlphabetPtr> domain, codomain;
  struct RawRow {
    std::vector<Tok> key;
    Tok value;
    long line;
  };
  std::vector<RawRow> rows;

  for (; i < ls.size(); ++i) {
    const Line& l = ls[i];
    if (is_key(l, "dim:")) {
      need_args(l, 1);
      dim = static_cast<int>(parse_long(l, l.toks[1]));
    } else if (is_key(l, "radius:")) {
      need_args(l, 1);
      radius = parse_long(l, l.toks[1]);
    } else if (is_key(l, "side:")) {
      need_args(l, 1);
      side = parse_long(l, l.toks[1]);
    } else if (is_key(l, "domain:")) {
      if (l.toks.size() < 2) fail(l.no, l.toks[0].col, "'domain:' is empty");
      domain = make_alphabet(arg_texts(l));
    } else if (is_key(l, "codomain:")) {
      if (l.toks.size() < 2) fail(l.no, l.toks[0].col, "'codomain:' is empty");
      codomain = make_alphabet(arg_texts(l));
    } else if (is_key(l, "map")) {
      if (l.toks.size() < 4 || l.toks[l.toks.size() - 2].text != "->")
        fail(l.no, l.toks[0].col, "expected 'map <letters> -> <letter>'");
      rows.push_back({std::vector<Tok>(l.toks.begin() + 1, l.toks.end() - 2),
                      l.toks.back(), l.no});
    } else {
      fail(l.no, l.toks[0].col,
           "unknown directive '" + l.toks[0].text + "' in a blockmap");
    }
  }
  if (!domain) throw ParseError("missing 'domain:' line");
  if (!codomain) throw ParseError("missing 'codomain:' line");
  int d = dim.value_or(1);
  long window;
  if (d == 1) {
    if (side)
      throw ValidationError("one-dimensional maps take 'radius:', not 'side:'");
    if (!radius) throw ParseError("missing 'radius:' line");
    if (*radius < 0) throw ValidationError("radius must be nonnegative");
    window = 2 * *radius + 1;
  } else {
    if (radius)
      throw ValidationError("multi-dimensional maps take 'side:', not 'radius:'");
    if (!side) throw ParseError("missing 'side:' line");
    window = *side;
  }
  long cells = 1;
  for (int k = 0; k < d; ++k) cells *= window;

  std::map<std::vector<int32_t>, int32_t> table;
  for (const RawRow& r : rows) {
    if (static_cast<long>(r.key.size()) != cells)
      invalid(r.line, "expected " + std::to_string(cells) +
                          " letters before '->'");
    std::vector<int32_t> key;
    Line at{r.line, {}};
    for (const Tok& t : r.key) key.push_back(letter_index(*domain, at, t));
    std::optional<int> v = (*codomain)->find(r.value.text);
    if (!v) invalid(r.line, "unknown letter '" + r.value.text + "'");
    if (table.count(key)) invalid(r.line, "duplicate map row");
    table[std::move(key)] = *v;
  }
  return BlockMap(*domain, *codomain, d, window, std::move(table));
}

SemilinearSet parse_semilinear(const std::vector<Line>& ls, size_t i) {
  std::optional<int> dim;
  std::vector<std::vector<long>> base;
  std::vector<std::vector<std::vector<long>>> gens;

  for (; i < ls.size(); ++i) {
    const Line& l = ls[i];
    if (is_key(l, "dim:")) {
      need_args(l, 1);
      if (dim) fail(l.no, l.toks[0].col, "duplicate 'dim:'");
      dim = static_cast<int>(parse_long(l, l.toks[1]));
    } else if (is_key(l, "base:") || is_key(l, "gen:")) {
      if (!dim)
        fail(l.no, l.toks[0].col, "'dim:' must precede the vector lines");
      std::vector<std::vector<long>> pts;
      for (size_t t = 1; t < l.toks.size(); ++t) {
        std::vector<long> v = parse_point(l, l.toks[t]);
        if (static_cast<int>(v.size()) != *dim)
          invalid(l.no, "vector '" + l.toks[t].text +
                            "' does not have dim components");
        for (long c : v)
          if (c < 0) invalid(l.no, "vectors live in N^d");
        pts.push_back(std::move(v));
      }
      if (is_key(l, "base:"))
        base.insert(base.end(), pts.begin(), pts.end());
      else
        gens.push_back(std::move(pts));
    } else {
      fail(l.no, l.toks[0].col,
           "unknown directive '" + l.toks[0].text + "' in a semilinear set");
    }
  }
  if (!dim) throw ParseError("missing 'dim:' line");
  if (*dim < 1) throw ValidationError("dim must be positive");
  return SemilinearSet{*dim, std::move(base), std::move(gens)};
}

void print_coding(std::ostringstream& out, const Coding& c) {
  out << "output:";
  for (const std::string& s : c.codomain()->symbols()) out << " " << s;
  out << "\n";
  for (int a = 0; a < c.domain()->size(); ++a)
    out << "code " << c.domain()->symbol(a) << " -> "
        << c.codomain()->symbol(c.image(a)) << "\n";
}

std::string print_substitution(const SubstitutionFile& f) {
  std::ostringstream out;
  const AlphabetPtr& A = f.sub.alphabet();
  out << "substitution\nalphabet:";
  for (const std::string& s : A->symbols()) out << " " << s;
  out << "\n";
  if (f.sub.constant_length()) out << "length: " << f.sub.length() << "\n";
  out << "seed: " << A->symbol(f.sub.seed()) << "\n";
  for (int a = 0; a < A->size(); ++a) {
    out << "rule " << A->symbol(a) << " ->";
    const Word& w = f.sub.image(a);
    for (long i = 0; i < w.size(); ++i) out << " " << A->symbol(w[i]);
    out << "\n";
  }
  if (f.coding) print_coding(out, *f.coding);
  return out.str();
}

std::string print_automaton(const Automaton& a) {
  std::ostringstream out;
  out << "automaton\nstates:";
  for (const std::string& s : a.state_names()) out << " " << s;
  out << "\nalphabet:";
  for (int s = 0; s < a.n_symbols(); ++s)
    out << " " << tuple_symbol_token(a.p(), a.dim(), s);
  out << "\ninitial: " << a.state_names()[static_cast<size_t>(a.initial())];
  out << "\nterminal:";
  for (int q = 0; q < a.n_states(); ++q)
    if (a.is_terminal(q)) out << " " << a.state_names()[static_cast<size_t>(q)];
  out << "\n";
  for (int q = 0; q < a.n_states(); ++q)
    for (int s = 0; s < a.n_symbols(); ++s)
      out << "edge " << a.state_names()[static_cast<size_t>(q)] << " "
          << tuple_symbol_token(a.p(), a.dim(), s) << " "
          << a.state_names()[static_cast<size_t>(a.step(q, s))] << "\n";
  return out.str();
}

std::string print_ndsubstitution(const NdSubstitutionFile& f) {
  std::ostringstream out;
  const AlphabetPtr& A = f.sub.alphabet();
  out << "ndsubstitution\ndim: " << f.sub.dim() << "\nside: " << f.sub.side()
      << "\nalphabet:";
  for (const std::string& s : A->symbols()) out << " " << s;
  out << "\nseed: " << A->symbol(f.seed) << "\n";
  long side = f.sub.side();
  for (int a = 0; a < A->size(); ++a) {
    out << "rule " << A->symbol(a) << ":\n";
    const ArrayWindow& w = f.sub.rule(a);
    long rows = w.cell_count() / side;
    for (long r = 0; r < rows; ++r) {
      for (long c = 0; c < side; ++c)
        out << (c ? " " : "")
            << A->symbol(w.cells[static_cast<size_t>(r * side + c)]);
      out << "\n";
    }
  }
  if (f.coding) print_coding(out, *f.coding);
  return out.str();
}

std::string print_blockmap(const BlockMap& f) {
  std::ostringstream out;
  out << "blockmap\ndim: " << f.dim << "\n";
  if (f.dim == 1)
    out << "radius: " << f.radius() << "\n";
  else
    out << "side: " << f.window << "\n";
  out << "domain:";
  for (const std::string& s : f.domain->symbols()) out << " " << s;
  out << "\ncodomain:";
  for (const std::string& s : f.codomain->symbols()) out << " " << s;
  out << "\n";
  for (const auto& [key, value] : f.table) {
    out << "map";
    for (int32_t k : key) out << " " << f.domain->symbol(k);
    out << " -> " << f.codomain->symbol(value) << "\n";
  }
  return out.str();
}

std::string print_semilinear(const SemilinearSet& sl) {
  std::ostringstream out;
  out << "semilinear\ndim: " << sl.dim << "\n";
  if (!sl.base.empty()) {
    out << "base:";
    for (const auto& v : sl.base) out << " " << point_token(v);
    out << "\n";
  }
  for (const auto& g : sl.generators) {
    out << "gen:";
    for (const auto& v : g) out << " " << point_token(v);
    out << "\n";
  }
  return out.str();
}

}  // namespace

SpecValue parse_spec(const std::string& text) {
  std::vector<Line> ls = tokenize(text);
  if (ls.empty()) throw ParseError("empty input");
  const Line& head = ls.front();
  if (head.toks.size() != 1)
    fail(head.no, head.toks[1].col, "the kind tag stands alone on its line");
  const std::string& kind = head.toks[0].text;
  if (kind == "substitution") return parse_substitution(ls, 1);
  if (kind == "automaton") return parse_automaton(ls, 1);
  if (kind == "ndsubstitution") return parse_ndsubstitution(ls, 1);
  if (kind == "blockmap") return parse_blockmap(ls, 1);
  if (kind == "semilinear") return parse_semilinear(ls, 1);
  fail(head.no, head.toks[0].col, "unknown kind '" + kind + "'");
}

std::string print_spec(const SpecValue& v) {
  if (const auto* a = std::get_if<Automaton>(&v)) return print_automaton(*a);
  if (const auto* s = std::get_if<SubstitutionFile>(&v))
    return print_substitution(*s);
  if (const auto* n = std::get_if<NdSubstitutionFile>(&v))
    return print_ndsubstitution(*n);
  if (const auto* b = std::get_if<BlockMap>(&v)) return print_blockmap(*b);
  return print_semilinear(std::get<SemilinearSet>(v));
}

std::string render_window(const ArrayWindow& w, const std::string& format) {
  if (w.dim() != 2) throw ValidationError("rendering needs a 2-dimensional window");
  long width = w.shape[0], height = w.shape[1];
  std::ostringstream out;
  if (format == "pgm") {
    out << "P2\n" << width << " " << height << "\n"
        << w.alphabet->size() - 1 << "\n";
    for (long j = 0; j < height; ++j) {
      for (long i = 0; i < width; ++i) out << (i ? " " : "") << w.at({i, j});
      out << "\n";
    }
  } else if (format == "ascii") {
    bool compact = w.alphabet->single_char();
    for (long j = 0; j < height; ++j) {
      for (long i = 0; i < width; ++i)
        out << (i && !compact ? " " : "") << w.alphabet->symbol(w.at({i, j}));
      out << "\n";
    }
  } else {
    throw ValidationError("unknown render format '" + format + "'");
  }
  return out.str();
}

}  // namespace autoseq
