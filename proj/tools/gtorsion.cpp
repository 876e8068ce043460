// gtorsion: command line front end.
//
// Exit codes: 0 success, 1 claim or check failure, 2 input or parse error,
// 3 incomplete certification (no non-abelian quotient found).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gtorsion/gtorsion.hpp"

namespace {

using namespace gtorsion;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitIncomplete = 3;

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(std::string const& path, std::string const& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    throw Error("cannot write '" + path + "'");
  }
}

int default_max_degree() {
  char const* env = std::getenv("GTORSION_MAX_DEGREE");
  if (env == nullptr || *env == '\0') {
    return kDefaultMaxDegree;
  }
  try {
    std::size_t used = 0;
    int v = std::stoi(env, &used);
    if (used == std::string(env).size()) {
      return v;
    }
  } catch (std::exception const&) {
  }
  throw Error(std::string("GTORSION_MAX_DEGREE is not an integer: '") + env + "'");
}

// ---------------------------------------------------------------------------

struct WordOpts {
  std::string input;
  std::string other;
  std::string of;
  std::string by;
};

void setup_word(CLI::App& app, int& code) {
  auto* word = app.add_subcommand("word", "Reduce, conjugate and compare words");
  word->require_subcommand(1);
  auto opts = std::make_shared<WordOpts>();

  auto* reduce = word->add_subcommand("reduce", "Print the reduced canonical form");
  reduce->add_option("word", opts->input, "Word")->required();
  reduce->callback([opts, &code] {
    std::cout << format_word(parse_word(opts->input)) << '\n';
    code = kExitOk;
  });

  auto* conj = word->add_subcommand("conjugate", "Print g^-1 x g");
  conj->add_option("--of", opts->of, "The word x")->required();
  conj->add_option("--by", opts->by, "The conjugator g")->required();
  conj->callback([opts, &code] {
    std::cout << format_word(conjugate(parse_word(opts->of), parse_word(opts->by)))
              << '\n';
    code = kExitOk;
  });

  auto* equal = word->add_subcommand("equal", "Exit 0 iff the words are equal");
  equal->add_option("u", opts->input, "First word")->required();
  equal->add_option("v", opts->other, "Second word")->required();
  equal->callback([opts, &code] {
    bool const same = parse_word(opts->input) == parse_word(opts->other);
    std::cout << (same ? "equal" : "not equal") << '\n';
    code = same ? kExitOk : kExitClaimFailure;
  });

  auto* is_conj = word->add_subcommand(
      "is-conjugate", "Print g with g^-1 u g = v, exit 1 if there is none");
  is_conj->add_option("u", opts->input, "First word")->required();
  is_conj->add_option("v", opts->other, "Second word")->required();
  is_conj->callback([opts, &code] {
    auto g = free_conjugate(parse_word(opts->input), parse_word(opts->other));
    if (g) {
      std::cout << format_word(*g) << '\n';
      code = kExitOk;
    } else {
      std::cout << "not conjugate\n";
      code = kExitClaimFailure;
    }
  });
}

// ---------------------------------------------------------------------------

struct CertifyOpts {
  std::optional<long> q, n;
  std::string presentation;
  std::string x;
  std::string w;
  std::optional<int> max_degree;
  std::string out;
};

void setup_certify(CLI::App& app, int& code) {
  auto opts = std::make_shared<CertifyOpts>();
  auto* cmd = app.add_subcommand(
      "certify", "Build and verify a generalized torsion certificate");
  auto* q = cmd->add_option("--q", opts->q, "Link family parameter q >= 0");
  auto* n = cmd->add_option("--n", opts->n, "Link family parameter n >= 1");
  auto* pres = cmd->add_option("--presentation", opts->presentation,
                               "Presentation file");
  auto* x = cmd->add_option("--x", opts->x, "Generator x of [x, w]");
  auto* w = cmd->add_option("--w", opts->w, "Word w of [x, w]");
  cmd->add_option("--max-degree", opts->max_degree,
                  "Largest symmetric group degree for the quotient search");
  cmd->add_option("--out", opts->out, "Certificate file (default: stdout)");
  q->needs(n);
  n->needs(q);
  pres->needs(x, w);
  q->excludes(pres);
  pres->excludes(q);

  cmd->callback([opts, &code] {
    TorsionCertificate cert;
    if (opts->q) {
      cert = certify_for_presentation(preset_link_presentation(*opts->q, *opts->n),
                                      Generator("b"),
                                      link_inner_word(*opts->q, *opts->n));
    } else if (!opts->presentation.empty()) {
      auto const p = parse_presentation(read_file(opts->presentation));
      cert = certify_for_presentation(p, Generator(opts->x),
                                      parse_word(opts->w, p.generators()));
    } else {
      throw Error("give either --q and --n, or --presentation with --x and --w");
    }
    int const degree = opts->max_degree.value_or(default_max_degree());
    bool const found = attach_nontriviality(cert, degree);
    auto const check = verify_certificate(cert);
    write_output(opts->out, write_certificate(cert));
    std::cerr << "factors: " << cert.factors.size() << '\n';
    if (!check.ok) {
      std::cerr << "verification failed: " << check.diagnostic << '\n';
      code = kExitClaimFailure;
    } else if (!found) {
      std::cerr << "incomplete: no non-abelian quotient up to degree " << degree
                << '\n';
      code = kExitIncomplete;
    } else {
      std::cerr << "verified; witness degree " << cert.nontriviality->degree << '\n';
      code = kExitOk;
    }
  });
}

// ---------------------------------------------------------------------------

struct ReproduceOpts {
  bool all = false;
  std::string claim;
  std::uint64_t seed = 0;
  std::optional<int> max_degree;
  std::string out;
  bool list = false;
};

void setup_reproduce(CLI::App& app, int& code) {
  auto opts = std::make_shared<ReproduceOpts>();
  auto* cmd = app.add_subcommand("reproduce", "Recompute every checkable claim");
  auto* all = cmd->add_flag("--all", opts->all, "Run every claim");
  auto* claim = cmd->add_option("--claim", opts->claim, "Run a single claim by id");
  cmd->add_option("--seed", opts->seed, "Seed for randomized claims")
      ->default_val(0);
  cmd->add_option("--max-degree", opts->max_degree, "Quotient search bound");
  cmd->add_option("--out", opts->out, "Report file (default: stdout)");
  cmd->add_flag("--list", opts->list, "List claim ids");
  all->excludes(claim);

  cmd->callback([opts, &code] {
    if (opts->list) {
      for (auto const& e : claim_registry()) {
        std::cout << e.id << '\n';
      }
      code = kExitOk;
      return;
    }
    ReproduceConfig cfg;
    cfg.seed = opts->seed;
    cfg.max_degree = opts->max_degree.value_or(default_max_degree());
    auto const records = run_claims(opts->all ? "" : opts->claim, cfg);
    write_output(opts->out, format_report(records, cfg));
    code = all_passed(records) ? kExitOk : kExitClaimFailure;
  });
}

// ---------------------------------------------------------------------------

struct PresentOpts {
  long q = 1, n = 1, p = 2, m = 1, s = 1;
  bool abelianization = false;
};

void setup_present(CLI::App& app, int& code) {
  auto opts = std::make_shared<PresentOpts>();
  auto* cmd = app.add_subcommand("present", "Print a preset presentation");
  cmd->require_subcommand(1);
  cmd->fallthrough();
  cmd->add_flag("--abelianization", opts->abelianization,
                "Append the abelianization as a comment");

  auto emit = [opts, &code](Presentation const& p) {
    std::cout << format_presentation(p);
    if (opts->abelianization) {
      std::cout << "# abelianization: " << abelianization(p).to_string() << '\n';
    }
    code = kExitOk;
  };

  auto* link = cmd->add_subcommand("link", "<a, b | [b, (ab)^q a^(n+2) (ba)^q]>");
  link->add_option("--q", opts->q)->required();
  link->add_option("--n", opts->n)->required();
  link->callback([opts, emit] { emit(preset_link_presentation(opts->q, opts->n)); });

  auto* wqn = cmd->add_subcommand("w-qn", "<a, b | w_{q,n}>");
  wqn->add_option("--q", opts->q)->required();
  wqn->add_option("--n", opts->n)->required();
  wqn->callback([opts, emit] {
    emit(Presentation(Alphabet{"a", "b"}, {preset_w_qn(opts->q, opts->n)}));
  });

  auto* tt = cmd->add_subcommand("twisted-torus",
                                 "Two-generator group of K(p(m+1)+1, pm+1; 2, s)");
  tt->add_option("--p", opts->p)->required();
  tt->add_option("--m", opts->m)->required();
  tt->add_option("--s", opts->s)->required();
  tt->callback([opts, emit] {
    emit(preset_twisted_torus_presentation(opts->p, opts->m, opts->s));
  });

  auto* svk = cmd->add_subcommand("svk", "Four-generator Seifert-van Kampen form");
  svk->add_option("--p", opts->p)->required();
  svk->add_option("--m", opts->m)->required();
  svk->add_option("--s", opts->s)->required();
  svk->callback([opts, emit] { emit(svk_presentation(opts->p, opts->m, opts->s)); });

  auto* pretzel = cmd->add_subcommand("pretzel", "<b, y | y^2 = w(b^-1, y)>");
  pretzel->add_option("--s", opts->s)->required();
  pretzel->callback([opts, emit] { emit(preset_pretzel_presentation(opts->s)); });
}

// ---------------------------------------------------------------------------

struct TietzeOpts {
  std::string script;
  long p = 2, m = 1, s = 1;
};

void setup_tietze(CLI::App& app, int& code) {
  auto opts = std::make_shared<TietzeOpts>();
  auto* cmd = app.add_subcommand("tietze", "Replay or emit Tietze scripts");
  cmd->require_subcommand(1);

  auto* rep = cmd->add_subcommand("replay", "Check every move of a script");
  rep->add_option("script", opts->script, "Script file")->required();
  rep->callback([opts, &code] {
    auto const r = replay(parse_script(read_file(opts->script)));
    for (auto const& line : r.transcript) {
      std::cout << line << '\n';
    }
    std::cout << "[result]\n" << format_presentation(r.result);
    code = r.ok ? kExitOk : kExitClaimFailure;
  });

  auto* emit = cmd->add_subcommand("emit", "Print a bundled script");
  emit->require_subcommand(1);
  auto* eq1 = emit->add_subcommand("eq1", "Seifert-van Kampen form to two generators");
  eq1->add_option("--p", opts->p)->required();
  eq1->add_option("--m", opts->m)->required();
  eq1->add_option("--s", opts->s)->required();
  eq1->callback([opts, &code] {
    std::cout << format_script(eq1_derivation_script(opts->p, opts->m, opts->s));
    code = kExitOk;
  });
  auto* pz = emit->add_subcommand("pretzel", "Twisted torus (2, 1, s) to <b, y>");
  pz->add_option("--s", opts->s)->required();
  pz->callback([opts, &code] {
    std::cout << format_script(pretzel_chain_script(opts->s));
    code = kExitOk;
  });
}

// ---------------------------------------------------------------------------

struct TwistOpts {
  long p = 2, m = 1, s = 1;
};

void setup_twist(CLI::App& app, int& code) {
  auto opts = std::make_shared<TwistOpts>();
  auto* cmd = app.add_subcommand("twist", "Dehn twist images and presentations");
  cmd->require_subcommand(1);
  auto* derive = cmd->add_subcommand(
      "derive", "Images of G, R, P, the glued presentation and its reduction");
  derive->add_option("--p", opts->p)->required();
  derive->add_option("--m", opts->m)->required();
  derive->add_option("--s", opts->s)->required();
  derive->callback([opts, &code] {
    auto const im = image_GRP(opts->p, opts->m, opts->s);
    struct {
      char const* name;
      Word const& w;
    } const rows[] = {{"G", im.g}, {"R", im.r}, {"P", im.p}};
    for (auto const& row : rows) {
      std::cout << "[" << row.name << "]\t" << format_word(row.w) << "\tU: "
                << format_word(project_U(row.w)) << "\tV: "
                << format_word(project_V(row.w)) << '\n';
    }
    std::cout << "[glued]\n"
              << format_presentation(svk_presentation(opts->p, opts->m, opts->s));
    auto const r = derive_eq1(opts->p, opts->m, opts->s);
    std::cout << "[derivation]\n";
    for (auto const& line : r.replay.transcript) {
      std::cout << line << '\n';
    }
    std::cout << "[result]\n" << format_presentation(r.replay.result);
    code = r.ok ? kExitOk : kExitClaimFailure;
  });
}

// ---------------------------------------------------------------------------

struct BraidOpts {
  std::string braid;
  int q = 1, n = 1, p = 2, m = 1, s = 0;
};

void setup_braid(CLI::App& app, int& code) {
  auto opts = std::make_shared<BraidOpts>();
  auto* cmd = app.add_subcommand("braid", "Braid closures and their invariants");
  cmd->require_subcommand(1);

  auto* analyze = cmd->add_subcommand("analyze", "Permutation, components, genus");
  analyze->add_option("braid", opts->braid, "Braid word, e.g. \"@5 s1 s2 s3\"")
      ->required();
  analyze->callback([opts, &code] {
    auto const b = parse_braid(opts->braid);
    std::cout << "braid\t" << format_braid(b) << '\n'
              << "strands\t" << b.strands() << '\n'
              << "length\t" << b.length() << '\n'
              << "exponent-sum\t" << b.exponent_sum() << '\n'
              << "permutation\t" << braid_permutation(b).cycles() << '\n'
              << "components\t" << closure_components(b) << '\n'
              << "positive\t" << (b.is_positive() ? "yes" : "no") << '\n';
    if (b.is_positive() && closure_components(b) == 1) {
      std::cout << "genus\t" << positive_braid_genus(b) << '\n';
    } else {
      std::cout << "genus\tn/a\n";
    }
    std::cout << "axis-linking\t" << axis_linking_number(b) << '\n';
    code = kExitOk;
  });

  auto* preset = cmd->add_subcommand("preset", "Print a preset braid");
  preset->require_subcommand(1);
  auto* kq = preset->add_subcommand("kq", "(s1 ... s_{2q+n+1})(s1 ... s_{2q})");
  kq->add_option("--q", opts->q)->required();
  kq->add_option("--n", opts->n)->required();
  kq->callback([opts, &code] {
    std::cout << format_braid(preset_kq_braid(opts->q, opts->n)) << '\n';
    code = kExitOk;
  });
  auto* tt = preset->add_subcommand("twisted-torus",
                                    "(s1 ... s_{p(m+1)})^(pm+1) s1^(2s)");
  tt->add_option("--p", opts->p)->required();
  tt->add_option("--m", opts->m)->required();
  tt->add_option("--s", opts->s)->required();
  tt->callback([opts, &code] {
    std::cout << format_braid(preset_twisted_torus_braid(opts->p, opts->m, opts->s))
              << '\n';
    code = kExitOk;
  });
}

// ---------------------------------------------------------------------------

struct AlexanderOpts {
  std::string preset;
  std::optional<long> s;
  std::string presentation;
  bool closed_form = false;
};

void setup_alexander(CLI::App& app, int& code) {
  auto opts = std::make_shared<AlexanderOpts>();
  auto* cmd = app.add_subcommand("alexander", "Alexander polynomial by Fox calculus");
  auto* preset = cmd->add_option("--preset", opts->preset, "Preset family")
                     ->check(CLI::IsMember({"pretzel"}));
  auto* s = cmd->add_option("--s", opts->s, "Family parameter");
  auto* pres = cmd->add_option("--presentation", opts->presentation,
                               "Two-generator one-relator presentation file");
  cmd->add_flag("--closed-form", opts->closed_form,
                "Also print the closed form for the pretzel family");
  preset->needs(s);
  preset->excludes(pres);
  pres->excludes(preset);

  cmd->callback([opts, &code] {
    Presentation p;
    if (!opts->preset.empty()) {
      p = preset_pretzel_presentation(*opts->s);
    } else if (!opts->presentation.empty()) {
      p = parse_presentation(read_file(opts->presentation));
    } else {
      throw Error("give --preset pretzel --s S or --presentation FILE");
    }
    auto const delta = alexander_poly(p);
    std::cout << "delta\t" << format_laurent(delta) << '\n'
              << "delta(1)\t" << delta.eval_at_one() << '\n'
              << "positive-real-roots\t" << count_positive_real_roots(delta) << '\n';
    code = kExitOk;
    if (opts->closed_form && opts->s) {
      auto const closed = pretzel_delta(*opts->s);
      bool const same = equal_up_to_units(closed, delta);
      std::cout << "closed-form\t" << format_laurent(closed) << '\n'
                << "agrees\t" << (same ? "yes" : "no") << '\n';
      code = same ? kExitOk : kExitClaimFailure;
    }
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized torsion certificates for knot and link groups"};
  app.set_version_flag("--version", std::string(gtorsion::kToolVersion));
  app.require_subcommand(1);
  int code = kExitOk;

  setup_word(app, code);
  setup_certify(app, code);
  setup_reproduce(app, code);
  setup_present(app, code);
  setup_tietze(app, code);
  setup_twist(app, code);
  setup_braid(app, code);
  setup_alexander(app, code);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInputError;
  } catch (gtorsion::ParseError const& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (gtorsion::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return code;
}
