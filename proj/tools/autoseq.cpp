#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "autoseq/blockmap.hpp"
#include "autoseq/definability.hpp"
#include "autoseq/formats.hpp"
#include "autoseq/numeration.hpp"
#include "autoseq/perron.hpp"
#include "autoseq/recurrence.hpp"

using namespace autoseq;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpecValue load(const std::string& path) { return parse_spec(read_file(path)); }

SubstitutionFile as_substitution(SpecValue v) {
  auto* s = std::get_if<SubstitutionFile>(&v);
  if (!s) throw ValidationError("expected a substitution file");
  return std::move(*s);
}

Automaton as_automaton(SpecValue v) {
  auto* a = std::get_if<Automaton>(&v);
  if (!a) throw ValidationError("expected an automaton file");
  return std::move(*a);
}

NdSubstitutionFile as_ndsubstitution(SpecValue v) {
  auto* n = std::get_if<NdSubstitutionFile>(&v);
  if (!n) throw ValidationError("expected an ndsubstitution file");
  return std::move(*n);
}

SemilinearSet as_semilinear(SpecValue v) {
  auto* s = std::get_if<SemilinearSet>(&v);
  if (!s) throw ValidationError("expected a semilinear file");
  return std::move(*s);
}

std::string word_text(const Word& w) {
  if (w.alphabet()->single_char()) return w.str();
  std::string out;
  for (long i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += w.alphabet()->symbol(w[i]);
  }
  return out;
}

std::string point_text(const std::vector<long long>& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string point_text_l(const std::vector<long>& v) {
  return point_text(std::vector<long long>(v.begin(), v.end()));
}

std::string approx(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

Rat parse_rat(const std::string& text) {
  if (text.find('.') != std::string::npos ||
      text.find('e') != std::string::npos ||
      text.find('E') != std::string::npos)
    return rat_from_decimal(text);
  try {
    Rat q(text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ValidationError("not a number: '" + text + "'");
  }
}

// Fixed point of the file's substitution, coded when a coding is present
// and raw was not requested.
Word coded_prefix(const SubstitutionFile& f, long len, bool raw = false) {
  Word w = f.sub.fixed_point_prefix(len);
  return (f.coding && !raw) ? f.coding->apply(w) : w;
}

ArrayWindow coded_window(const NdSubstitutionFile& f, const ArrayWindow& w) {
  if (!f.coding) return w;
  ArrayWindow out{f.coding->codomain(), w.shape, {}};
  out.cells.reserve(w.cells.size());
  for (int32_t c : w.cells) out.cells.push_back(f.coding->image(c));
  return out;
}

// Membership window of an automaton within [0, bound)^dim; cell != 0 means
// the point is recognized.
ArrayWindow membership_window(const Automaton& a, long bound) {
  NdCodedSubstitution cs =
      automaton_to_ndsubstitution(normalize_for_conversion(a));
  int n = 1;
  NdFixedArray fa = fixed_array(cs.sub, n);
  while (fa.window.shape[0] < bound) fa = fixed_array(cs.sub, ++n);
  ArrayWindow out{cs.coding.codomain(), fa.window.shape, {}};
  out.cells.reserve(fa.window.cells.size());
  for (int32_t c : fa.window.cells) out.cells.push_back(cs.coding.image(c));
  return out;
}

void print_frequency_table(const FrequencyTable& t) {
  for (size_t i = 0; i < t.items.size(); ++i) {
    std::cout << word_text(t.items[i]);
    if (t.exact)
      std::cout << " " << rat_str(t.freq[i]) << " "
                << approx(rat_double(t.freq[i]));
    else
      std::cout << " " << approx(t.freq_d[i]);
    std::cout << "\n";
  }
}

void print_scaled_set(const char* label, const std::set<Rat>& s) {
  std::cout << label << ":";
  for (const Rat& q : s) std::cout << " " << rat_str(q);
  std::cout << "\n";
}

long long checked_ll(const std::string& text) {
  try {
    size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ValidationError("not an integer: '" + text + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"automatic sequences and recognizable sets toolkit"};
  app.require_subcommand(1);

  // rep
  {
    auto* c = app.add_subcommand("rep", "greedy base-p digits of a point");
    auto p = std::make_shared<long>(2);
    auto xs = std::make_shared<std::vector<std::string>>();
    c->add_option("base", *p, "base p >= 2")->required();
    c->add_option("x", *xs, "components of one point")->required();
    c->callback([p, xs] {
      std::vector<long long> v;
      for (const std::string& s : *xs) v.push_back(checked_ll(s));
      TupleWord tw = encode_tuple(*p, v);
      std::string out;
      for (const auto& t : tw.tuples) {
        if (tw.dim == 1 && *p <= 10)
          out += std::to_string(t[0]);
        else {
          if (!out.empty()) out += " ";
          out += point_text(std::vector<long long>(t.begin(), t.end()));
        }
      }
      std::cout << out << "\n";
    });
  }

  // val
  {
    auto* c = app.add_subcommand("val", "value of a digit string");
    auto p = std::make_shared<long>(2);
    auto digits = std::make_shared<std::vector<std::string>>();
    c->add_option("base", *p, "base p >= 2")->required();
    c->add_option("digits", *digits, "digit tokens, or one compact string")
        ->required();
    c->callback([p, digits] {
      if (*p < 2) throw ValidationError("base must be at least 2");
      std::vector<std::vector<long>> tuples;
      int dim = 1;
      if (digits->size() == 1 && digits->front().find('(') == std::string::npos &&
          digits->front().size() > 1) {
        for (char ch : digits->front()) {
          if (ch < '0' || ch > '9')
            throw ValidationError("not a digit: '" + std::string(1, ch) + "'");
          tuples.push_back({ch - '0'});
        }
      } else {
        for (const std::string& t : *digits) {
          std::vector<long> point;
          if (!t.empty() && t.front() == '(') {
            if (t.back() != ')')
              throw ValidationError("malformed tuple '" + t + "'");
            std::string body = t.substr(1, t.size() - 2);
            size_t start = 0;
            while (true) {
              size_t comma = body.find(',', start);
              point.push_back(static_cast<long>(checked_ll(body.substr(
                  start,
                  comma == std::string::npos ? std::string::npos
                                             : comma - start))));
              if (comma == std::string::npos) break;
              start = comma + 1;
            }
          } else {
            point.push_back(static_cast<long>(checked_ll(t)));
          }
          tuples.push_back(std::move(point));
        }
      }
      if (!tuples.empty()) dim = static_cast<int>(tuples.front().size());
      for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != dim)
          throw ValidationError("digit tuples mix sizes");
        for (long d : t)
          if (d < 0 || d >= *p) throw ValidationError("digit out of range");
      }
      std::vector<long long> v = decode_tuple(TupleWord{*p, dim, tuples});
      std::cout << point_text(v) << "\n";
    });
  }

  // aut run | enum | normalize
  {
    auto* c = app.add_subcommand("aut", "automaton queries");
    c->require_subcommand(1);
    auto file = std::make_shared<std::string>();

    auto* run = c->add_subcommand("run", "membership of one point");
    auto xs = std::make_shared<std::vector<long long>>();
    run->add_option("file", *file, "automaton file")
        ->required()
        ->check(CLI::ExistingFile);
    run->add_option("x", *xs, "components of one point")->required();
    run->callback([file, xs] {
      const Automaton& a = as_automaton(load(*file));
      if (static_cast<int>(xs->size()) != a.dim())
        throw ValidationError("the point needs " + std::to_string(a.dim()) +
                              " components");
      std::cout << (RecognizableSet{a}.member(*xs) ? "member" : "nonmember")
                << "\n";
    });

    auto* en = c->add_subcommand("enum", "members below a bound");
    auto bound = std::make_shared<long long>(0);
    en->add_option("file", *file, "automaton file")
        ->required()
        ->check(CLI::ExistingFile);
    en->add_option("bound", *bound, "exclusive bound per component")
        ->required();
    en->callback([file, bound] {
      const Automaton& a = as_automaton(load(*file));
      for (const auto& x : RecognizableSet{a}.enumerate(*bound))
        std::cout << point_text(x) << "\n";
    });

    auto* norm = c->add_subcommand("normalize", "zero-normalized form");
    norm->add_option("file", *file, "automaton file")
        ->required()
        ->check(CLI::ExistingFile);
    norm->callback([file] {
      std::cout << print_spec(normalize_for_conversion(as_automaton(load(*file))));
    });
  }

  // aut2sub
  {
    auto* c = app.add_subcommand(
        "aut2sub", "coded substitution presenting an automaton's set");
    auto file = std::make_shared<std::string>();
    c->add_option("file", *file, "automaton file")
        ->required()
        ->check(CLI::ExistingFile);
    c->callback([file] {
      CodedSubstitution cs = automaton_to_substitution(as_automaton(load(*file)));
      std::cout << print_spec(SubstitutionFile{cs.sub, cs.coding});
    });
  }

  // sub2aut
  {
    auto* c = app.add_subcommand("sub2aut",
                                 "automaton reading off a substitution");
    auto file = std::make_shared<std::string>();
    auto terminals = std::make_shared<std::vector<std::string>>();
    c->add_option("file", *file, "substitution file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("--terminal", *terminals,
                  "terminal letters (default: letters coding to 1)");
    c->callback([file, terminals] {
      const SubstitutionFile& f = as_substitution(load(*file));
      std::vector<std::string> t = *terminals;
      if (t.empty() && f.coding) {
        std::optional<int> one = f.coding->codomain()->find("1");
        if (one)
          for (int a = 0; a < f.sub.alphabet()->size(); ++a)
            if (f.coding->image(a) == *one)
              t.push_back(f.sub.alphabet()->symbol(a));
      }
      std::cout << print_spec(substitution_to_automaton(f.sub, t));
    });
  }

  // fix
  {
    auto* c = app.add_subcommand("fix", "prefix of the (coded) fixed point");
    auto file = std::make_shared<std::string>();
    auto len = std::make_shared<long>(64);
    c->add_option("file", *file, "substitution file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("length", *len, "prefix length")->required();
    c->callback([file, len] {
      std::cout << word_text(coded_prefix(as_substitution(load(*file)), *len))
                << "\n";
    });
  }

  // freq
  {
    auto* c = app.add_subcommand("freq", "factor frequencies at one length");
    auto file = std::make_shared<std::string>();
    auto k = std::make_shared<long>(1);
    c->add_option("file", *file, "substitution file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("length", *k, "factor length")->required();
    c->callback([file, k] {
      print_frequency_table(word_frequencies(as_substitution(load(*file)).sub, *k));
    });
  }

  // thetascale
  {
    auto* c = app.add_subcommand(
        "thetascale", "scaled frequency set over factor lengths");
    auto file = std::make_shared<std::string>();
    auto maxlen = std::make_shared<long>(8);
    c->add_option("file", *file, "substitution file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("maxlen", *maxlen, "largest factor length")->required();
    c->callback([file, maxlen] {
      ThetaScalingReport r =
          verify_theta_scaling(as_substitution(load(*file)).sub, *maxlen);
      std::cout << "exact: " << yesno(r.exact) << "\n";
      std::cout << "stabilized: " << yesno(r.stabilized) << "\n";
      std::cout << "k:";
      for (int k : r.k_of_n) std::cout << " " << k;
      std::cout << "\n";
      print_scaled_set("scaled", r.scaled);
    });
  }

  // retwords
  {
    auto* c = app.add_subcommand("retwords", "return words of a factor");
    auto file = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto prefix = std::make_shared<long>(1 << 15);
    c->add_option("file", *file, "substitution file")
        ->required()
        ->check(CLI::ExistingFile);
    auto raw = std::make_shared<bool>(false);
    c->add_option("word", *target, "factor of the (coded) fixed point")
        ->required();
    c->add_option("--prefix", *prefix, "prefix length to index");
    c->add_flag("--raw", *raw, "ignore the file's coding");
    c->callback([file, target, prefix, raw] {
      Word y = coded_prefix(as_substitution(load(*file)), *prefix, *raw);
      ReturnWordIndex idx = return_words(y, Word::parse(y.alphabet(), *target));
      std::cout << "occurrences: " << idx.positions.size() << "\n";
      std::cout << "max-gap: " << idx.max_gap << "\n";
      for (const Word& w : idx.returns) std::cout << word_text(w) << "\n";
    });
  }

  // complexity
  {
    auto* c = app.add_subcommand("complexity", "factor counts p(n)");
    auto file = std::make_shared<std::string>();
    auto maxn = std::make_shared<long>(16);
    auto prefix = std::make_shared<long>(1 << 15);
    c->add_option("file", *file, "substitution file")
        ->required()
        ->check(CLI::ExistingFile);
    auto raw = std::make_shared<bool>(false);
    c->add_option("maxn", *maxn, "largest length")->required();
    c->add_option("--prefix", *prefix, "prefix length to scan");
    c->add_flag("--raw", *raw, "ignore the file's coding");
    c->callback([file, maxn, prefix, raw] {
      Word y = coded_prefix(as_substitution(load(*file)), *prefix, *raw);
      for (long n = 1; n <= *maxn; ++n)
        std::cout << n << " " << complexity(y, n) << "\n";
    });
  }

  // periodic
  {
    auto* c = app.add_subcommand("periodic",
                                 "ultimate periodicity of the coded sequence");
    auto file = std::make_shared<std::string>();
    auto prefix = std::make_shared<long>(1 << 15);
    c->add_option("file", *file, "substitution file")
        ->required()
        ->check(CLI::ExistingFile);
    auto raw = std::make_shared<bool>(false);
    c->add_option("--prefix", *prefix, "prefix length to examine");
    c->add_flag("--raw", *raw, "ignore the file's coding");
    c->callback([file, prefix, raw] {
      PeriodicityReport r = is_ultimately_periodic(
          coded_prefix(as_substitution(load(*file)), *prefix, *raw));
      switch (r.verdict) {
        case Periodicity::PERIODIC:
          std::cout << "PERIODIC period=" << r.period
                    << " preperiod=" << r.preperiod << "\n";
          break;
        case Periodicity::NON_PERIODIC:
          std::cout << "NON-PERIODIC complexity>n up to n=" << r.witness_n
                    << "\n";
          break;
        default:
          std::cout << "INCONCLUSIVE\n";
      }
    });
  }

  // indep
  {
    auto* c = app.add_subcommand("indep", "multiplicative independence");
    auto p = std::make_shared<long long>(2);
    auto q = std::make_shared<long long>(3);
    c->add_option("p", *p, "first base")->required();
    c->add_option("q", *q, "second base")->required();
    c->callback([p, q] {
      IndependenceResult r = multiplicatively_independent(*p, *q);
      if (r.independent)
        std::cout << "independent\n";
      else
        std::cout << "dependent: " << *p << "^" << r.k << " = " << *q << "^"
                  << r.l << "\n";
    });
  }

  // density
  {
    auto* c = app.add_subcommand(
        "density", "power ratio approaching a target value");
    auto alpha = std::make_shared<std::string>();
    auto beta = std::make_shared<std::string>();
    auto target = std::make_shared<std::string>();
    auto eps = std::make_shared<std::string>();
    auto bound = std::make_shared<long>(128);
    c->add_option("alpha", *alpha, "first ratio")->required();
    c->add_option("beta", *beta, "second ratio")->required();
    c->add_option("target", *target, "target value")->required();
    c->add_option("eps", *eps, "tolerance")->required();
    c->add_option("--bound", *bound, "largest n+m tried");
    c->callback([alpha, beta, target, eps, bound] {
      DensityWitness w =
          density_search(parse_rat(*alpha), parse_rat(*beta),
                         parse_rat(*target), parse_rat(*eps), *bound);
      std::cout << "n=" << w.n << " m=" << w.m << " value=" << rat_str(w.value)
                << " ~" << approx(rat_double(w.value)) << "\n";
    });
  }

  // ndfix
  {
    auto* c = app.add_subcommand("ndfix", "generated array of a block rule");
    auto file = std::make_shared<std::string>();
    auto n = std::make_shared<int>(1);
    c->add_option("file", *file, "ndsubstitution file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("steps", *n, "expansion steps")->required();
    c->callback([file, n] {
      const NdSubstitutionFile& f = as_ndsubstitution(load(*file));
      ArrayWindow w = coded_window(f, fixed_array(f.sub, *n).window);
      if (w.dim() == 1) {
        std::cout << word_text(Word(w.alphabet, w.cells)) << "\n";
      } else if (w.dim() == 2) {
        std::cout << render_window(w, "ascii");
      } else {
        throw ValidationError("printing needs dim 1 or 2");
      }
    });
  }

  // ndfreq
  {
    auto* c = app.add_subcommand(
        "ndfreq", "scaled pattern frequency report of a block rule");
    auto file = std::make_shared<std::string>();
    auto maxr = std::make_shared<long>(2);
    c->add_option("file", *file, "ndsubstitution file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("maxr", *maxr, "largest pattern side")->required();
    c->callback([file, maxr] {
      NdFreqArrayReport r =
          verify_freq_array(as_ndsubstitution(load(*file)).sub, *maxr);
      std::cout << "periodic: " << yesno(r.periodic_flag) << "\n";
      std::cout << "patterns: " << r.pattern_count << "\n";
      std::cout << "stabilized: " << yesno(r.stabilized) << "\n";
      std::cout << "k:";
      for (int k : r.k_of_r) std::cout << " " << k;
      std::cout << "\n";
      print_scaled_set("scaled", r.scaled);
    });
  }

  // ndcheck
  {
    auto* c = app.add_subcommand(
        "ndcheck", "repetitivity and spacing constants of a block rule");
    auto file = std::make_shared<std::string>();
    auto maxr = std::make_shared<long>(2);
    c->add_option("file", *file, "ndsubstitution file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("maxr", *maxr, "largest pattern side")->required();
    c->callback([file, maxr] {
      SpacingReport r =
          spacing_and_repetitivity_check(as_ndsubstitution(load(*file)).sub, *maxr);
      std::cout << "K: " << r.K << "\n";
      std::cout << "Kprime: " << r.Kprime << "\n";
      std::cout << "stable: " << yesno(r.stable) << "\n";
      std::cout << "side: " << r.side << "\n";
    });
  }

  // semilinear enum
  {
    auto* c = app.add_subcommand("semilinear", "semilinear set queries");
    c->require_subcommand(1);
    auto* en = c->add_subcommand("enum", "members in a box");
    auto file = std::make_shared<std::string>();
    auto bound = std::make_shared<long>(16);
    en->add_option("file", *file, "semilinear file")
        ->required()
        ->check(CLI::ExistingFile);
    en->add_option("bound", *bound, "exclusive bound per component")
        ->required();
    en->callback([file, bound] {
      for (const auto& v : semilinear_members(as_semilinear(load(*file)), *bound))
        std::cout << point_text_l(v) << "\n";
    });
  }

  // muchnik
  {
    auto* c = app.add_subcommand(
        "muchnik", "compare a recognized set against a semilinear set");
    auto autfile = std::make_shared<std::string>();
    auto slfile = std::make_shared<std::string>();
    auto bound = std::make_shared<long>(64);
    c->add_option("automaton", *autfile, "automaton file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("semilinear", *slfile, "semilinear file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("bound", *bound, "box side")->required();
    c->callback([autfile, slfile, bound] {
      const Automaton& a = as_automaton(load(*autfile));
      MuchnikVerdict v = muchnik_equivalence(membership_window(a, *bound),
                                             as_semilinear(load(*slfile)), *bound);
      if (v.equal) {
        std::cout << "verdict: EQUAL\n";
      } else {
        std::cout << "verdict: DISCREPANCY\n";
        std::cout << "point: " << point_text_l(v.discrepancy) << "\n";
        std::cout << "window: " << (v.window_member ? "member" : "nonmember")
                  << "\n";
        std::cout << "set: " << (v.window_member ? "nonmember" : "member")
                  << "\n";
      }
      std::cout << "bound: " << v.bound << "\n";
    });
  }

  // cobham-demo
  {
    auto* c = app.add_subcommand(
        "cobham-demo", "joint consistency of two coded presentations");
    auto file1 = std::make_shared<std::string>();
    auto file2 = std::make_shared<std::string>();
    auto maxlen = std::make_shared<long>(6);
    c->add_option("first", *file1, "substitution file with coding")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("second", *file2, "substitution file with coding")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("--maxlen", *maxlen, "largest factor length compared");
    c->callback([file1, file2, maxlen] {
      const SubstitutionFile f1 = as_substitution(load(*file1));
      const SubstitutionFile f2 = as_substitution(load(*file2));
      if (!f1.coding || !f2.coding)
        throw ValidationError("both files need a coding");
      CobhamReport r =
          cobham_demo(f1.sub, *f1.coding, f2.sub, *f2.coding, *maxlen);
      std::cout << "p: " << r.p << "\n";
      std::cout << "q: " << r.q << "\n";
      if (r.dependent) {
        std::cout << "relation: dependent " << r.p << "^" << r.witness_k
                  << " = " << r.q << "^" << r.witness_l << "\n";
        std::cout << "prefix: " << r.prefix_checked << "\n";
        std::cout << "frequencies-match: " << yesno(r.frequencies_match)
                  << "\n";
        std::cout << "scaled1-stable: " << yesno(r.scaled1_stable) << "\n";
        std::cout << "scaled2-stable: " << yesno(r.scaled2_stable) << "\n";
        print_scaled_set("scaled1", r.scaled1);
        print_scaled_set("scaled2", r.scaled2);
      } else {
        std::cout << "relation: independent\n";
        std::cout << "prefix: " << r.prefix_checked << "\n";
        switch (r.periodicity.verdict) {
          case Periodicity::PERIODIC:
            std::cout << "verdict: PERIODIC period=" << r.periodicity.period
                      << " preperiod=" << r.periodicity.preperiod << "\n";
            break;
          case Periodicity::NON_PERIODIC:
            std::cout << "verdict: NON-PERIODIC\n";
            break;
          default:
            std::cout << "verdict: INCONCLUSIVE\n";
        }
        std::cout << "consistent: " << yesno(r.theorem_consistent) << "\n";
      }
      if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
    });
  }

  // render
  {
    auto* c = app.add_subcommand("render", "picture of a generated array");
    auto file = std::make_shared<std::string>();
    auto n = std::make_shared<int>(1);
    auto format = std::make_shared<std::string>("pgm");
    auto coded = std::make_shared<bool>(false);
    c->add_option("file", *file, "ndsubstitution file")
        ->required()
        ->check(CLI::ExistingFile);
    c->add_option("steps", *n, "expansion steps")->required();
    c->add_option("--format", *format, "pgm or ascii")
        ->check(CLI::IsMember({"pgm", "ascii"}));
    c->add_flag("--coded", *coded, "apply the file's coding first");
    c->callback([file, n, format, coded] {
      const NdSubstitutionFile& f = as_ndsubstitution(load(*file));
      ArrayWindow w = fixed_array(f.sub, *n).window;
      if (*coded) w = coded_window(f, w);
      std::cout << render_window(w, *format);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 4;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}
