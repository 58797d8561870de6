#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <sstream>

#include "g1/covariants.hpp"
#include "g1/degree5.hpp"
#include "g1/hesse.hpp"
#include "g1/pipeline.hpp"

namespace g1::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) out.push_back(item);
  return out;
}

Rational parse_number(const std::string& text, const std::string& what) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("bad rational '" + text + "' in " + what);
  }
}

EllipticCurve parse_curve(const std::string& text) {
  auto parts = split(text, ',');
  if (parts.size() != 5) throw UsageError("--curve expects a1,a2,a3,a4,a6");
  std::vector<Rational> a;
  for (const auto& p : parts) a.push_back(parse_number(p, "--curve"));
  return EllipticCurve::from_coefficients(a);
}

CurvePoint parse_point(const std::string& text) {
  if (text == "inf") return CurvePoint::zero();
  auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError("--point expects x,y or inf");
  return CurvePoint::affine(parse_number(parts[0], "--point"), parse_number(parts[1], "--point"));
}

GenusOneModel read_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

Invariants any_invariants(const GenusOneModel& m) { return m.degree() == 5 ? invariants5(m) : invariants(m); }

// Line-oriented output: "key value", with multi-line values framed by
// "key begin" and "key end".
class Document {
 public:
  explicit Document(std::ostream& out) : out_(out) { out_ << "status ok\n"; }

  void value(const std::string& key, const std::string& v) { out_ << key << " " << v << "\n"; }
  void value(const std::string& key, const Rational& v) { value(key, v.get_str()); }
  void value(const std::string& key, long v) { value(key, std::to_string(v)); }
  void flag(const std::string& key, bool v) { value(key, v ? "true" : "false"); }

  void block(const std::string& key, const std::string& body) {
    out_ << key << " begin\n" << body;
    if (!body.empty() && body.back() != '\n') out_ << "\n";
    out_ << key << " end\n";
  }
  void model(const std::string& key, const GenusOneModel& m) { block(key, serialize_model(m)); }

  void invariants(const Invariants& inv) {
    value("c4", inv.c4);
    value("c6", inv.c6);
    value("disc", inv.disc);
  }
  void curve(const std::string& key, const std::vector<Rational>& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].get_str();
    value(key, s);
  }
  void pencil_point(const std::string& key, const PencilPoint& p) {
    value(key, p.l.get_str() + " " + p.m.get_str());
  }

 private:
  std::ostream& out_;
};

std::string monomial(const Exponents& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    s += (s.empty() ? "" : "*") + names[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

// A binary form in the first two variables with coefficients in the rest,
// highest power of the first variable first.
std::string binary_form_string(const Polynomial& p, const std::vector<std::string>& names) {
  std::vector<std::string> inner(names.begin() + 2, names.end());
  auto groups = p.split({0, 1});
  std::string out;
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) {
    std::string mono = monomial(it->first, names);
    std::string coef = it->second.to_string(inner);
    std::string term;
    if (it->second.size() > 1) term = "(" + coef + ")" + (mono.empty() ? "" : "*" + mono);
    else if (mono.empty()) term = coef;
    else if (coef == "1") term = mono;
    else if (coef == "-1") term = "-" + mono;
    else term = coef + "*" + mono;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

void write_search(Document& doc, const PencilSearch& s) {
  doc.value("roots", static_cast<long>(s.roots.size()));
  for (const auto& r : s.roots) doc.pencil_point("root", r);
  doc.value("solutions", static_cast<long>(s.solutions.size()));
  for (std::size_t i = 0; i < s.solutions.size(); ++i) {
    std::string key = "solution" + std::to_string(i + 1);
    doc.pencil_point(key + ".point", s.solutions[i].point);
    doc.model(key + ".model", s.solutions[i].model);
  }
}

void write_fibre(Document& doc, const FamilyFibre& f) {
  doc.curve("curve", {0, 0, 0, f.a, f.b});
  doc.flag("singular", f.singular);
  doc.flag("special_j", f.special_j);
}

void require_degree(int n, int low, int high) {
  if (n < low || n > high)
    throw UsageError("--degree must be between " + std::to_string(low) + " and " + std::to_string(high));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants, covariants and visibility constructions for genus one models", "g1"};
  app.require_subcommand(1);

  std::string model_path, curve_text, other_curve_text, point_text, quadrics_path;
  std::string lambda_text = "1", mu_text = "0", t_text;
  int degree = 0;
  bool reverse = false, dual = false;
  std::function<void(Document&)> action;

  auto model_option = [&](CLI::App* sub) { sub->add_option("--model", model_path, "model document")->required(); };
  auto curve_option = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--curve", curve_text, "a1,a2,a3,a4,a6");
    if (required) o->required();
  };

  auto* inv = app.add_subcommand("invariants", "c4, c6 and the discriminant of a model");
  model_option(inv);
  inv->callback([&] { action = [&](Document& d) { d.invariants(any_invariants(read_model(model_path))); }; });

  auto* hess = app.add_subcommand("hessian", "Hessian covariant of a model");
  model_option(hess);
  hess->callback([&] {
    action = [&](Document& d) {
      auto m = read_model(model_path);
      d.model("model", m.degree() == 5 ? hessian5(m) : hessian(m));
    };
  });

  auto* contra = app.add_subcommand("contravariants", "P and Q contravariants (degrees 2-4)");
  model_option(contra);
  contra->callback([&] {
    action = [&](Document& d) {
      auto m = read_model(model_path);
      d.model("p", contravariant_p(m));
      d.model("q", contravariant_q(m));
    };
  });

  auto* pf = app.add_subcommand("pfaffians", "the five 4x4 Pfaffians of a degree 5 model");
  model_option(pf);
  pf->callback([&] {
    action = [&](Document& d) {
      auto qs = pfaffians(read_model(model_path));
      auto names = variable_names(5);
      for (std::size_t i = 0; i < qs.size(); ++i) d.value("pfaffian" + std::to_string(i + 1), qs[i].to_string(names));
    };
  });

  auto* mfq = app.add_subcommand("model-from-quadrics", "degree 5 model from five quadrics in x1..x5, one per line");
  mfq->add_option("--quadrics", quadrics_path, "file with five quadrics")->required();
  mfq->callback([&] {
    action = [&](Document& d) {
      std::ifstream in(quadrics_path);
      if (!in) throw UsageError("cannot read " + quadrics_path);
      std::vector<Polynomial> qs;
      auto names = variable_names(5);
      for (std::string line; std::getline(in, line);)
        if (line.find_first_not_of(" \t\r") != std::string::npos) qs.push_back(parse_polynomial(line, names));
      if (qs.size() != 5) throw UsageError("expected five quadrics, found " + std::to_string(qs.size()));
      Rational scale;
      auto m = model_from_quadric_basis(qs, &scale);
      auto root = rational_sqrt(scale);
      d.flag("exact", root.has_value());
      d.value("scale", scale);
      d.model("model", root ? *root * m : m);
    };
  });

  auto* hp = app.add_subcommand("hesse-polys", "Hesse polynomials D, c4, c6 in (l, m)");
  hp->add_option("--degree", degree, "2..5")->required();
  hp->add_flag("--dual", dual, "dual Hesse polynomials in (xi, eta)");
  hp->callback([&] {
    action = [&](Document& d) {
      require_degree(degree, 2, 5);
      const auto& h = dual ? dual_hesse_polynomials(degree) : hesse_polynomials(degree);
      std::vector<std::string> names = dual ? std::vector<std::string>{"xi", "eta", "c4", "c6"}
                                            : std::vector<std::string>{"l", "m", "c4", "c6"};
      d.value("degree", degree);
      if (dual) d.value("tau", dual_tau(degree));
      d.value("D", binary_form_string(h.d, names));
      d.value("c4", binary_form_string(h.c4, names));
      d.value("c6", binary_form_string(h.c6, names));
    };
  });

  auto* rs = app.add_subcommand("rubin-silverberg", "alpha, beta (gamma) in (J, t), or a fibre with --curve --t");
  rs->add_option("--degree", degree, "3..5")->required();
  curve_option(rs, false);
  rs->add_option("--t", t_text, "parameter value");
  rs->add_flag("--reverse", reverse, "reverse family (degree 3)");
  rs->callback([&] {
    action = [&](Document& d) {
      require_degree(degree, 3, 5);
      if (curve_text.empty() != t_text.empty()) throw UsageError("--curve and --t go together");
      if (!curve_text.empty()) {
        write_fibre(d, rubin_silverberg_fibre(parse_curve(curve_text), degree, parse_number(t_text, "--t"),
                                              reverse ? Congruence::reverse : Congruence::direct));
        return;
      }
      const auto& p = rubin_silverberg_polynomials(degree);
      std::vector<std::string> names = {"J", "t"};
      d.value("alpha", p.alpha.to_string(names));
      d.value("beta", p.beta.to_string(names));
      if (degree == 3) d.value("gamma", p.gamma.to_string(names));
    };
  });

  auto* emb = app.add_subcommand("embed", "model of a curve embedded by |(n-1).0 + P|");
  curve_option(emb, true);
  emb->add_option("--point", point_text, "x,y or inf")->required();
  emb->add_option("--degree", degree, "2..5")->required();
  emb->callback([&] {
    action = [&](Document& d) {
      require_degree(degree, 2, 5);
      d.model("model", model_from_embedding(parse_curve(curve_text), degree, parse_point(point_text)));
    };
  });

  auto* fam = app.add_subcommand("family", "fibre of the family of curves n-congruent to E");
  curve_option(fam, true);
  fam->add_option("--degree", degree, "2..5")->required();
  fam->add_option("--lambda", lambda_text, "first pencil coordinate")->required();
  fam->add_option("--mu", mu_text, "second pencil coordinate")->required();
  fam->add_flag("--reverse", reverse, "dual Hesse polynomials");
  fam->callback([&] {
    action = [&](Document& d) {
      require_degree(degree, 2, 5);
      PencilPoint p{parse_number(lambda_text, "--lambda"), parse_number(mu_text, "--mu"),
                    reverse ? Congruence::reverse : Congruence::direct};
      write_fibre(d, congruent_family_fibre(parse_curve(curve_text), degree, p));
    };
  });

  auto* ps = app.add_subcommand("pencil-solve", "pencil models with the invariants of E");
  model_option(ps);
  curve_option(ps, true);
  ps->add_flag("--reverse", reverse, "use xi P + eta Q");
  ps->callback([&] {
    action = [&](Document& d) {
      auto m = read_model(model_path);
      auto e = parse_curve(curve_text);
      write_search(d, reverse ? pencil_solve_reverse(m, e) : pencil_solve(m, e));
    };
  });

  auto* syz = app.add_subcommand("syzygetic", "singular fibre x_T U + 3 H(U) for an n-torsion point T");
  model_option(syz);
  syz->add_option("--point", point_text, "T on y^2 = x^3 - 27 c4 x - 54 c6")->required();
  syz->callback([&] {
    action = [&](Document& d) {
      auto r = syzygetic_ngon(read_model(model_path), parse_point(point_text));
      d.value("xi", r.data.xi);
      if (r.data.eta_squared) d.value("eta_squared", *r.data.eta_squared);
      d.model("model", r.model);
    };
  });

  auto* vis = app.add_subcommand("visible", "model for E visible from the point P on F");
  curve_option(vis, true);
  vis->add_option("--from-curve", other_curve_text, "F as a1,a2,a3,a4,a6")->required();
  vis->add_option("--point", point_text, "P on F")->required();
  vis->add_option("--degree", degree, "2..5")->required();
  vis->add_flag("--reverse", reverse, "reverse congruence");
  vis->callback([&] {
    action = [&](Document& d) {
      require_degree(degree, 2, 5);
      auto r = visible_element(parse_curve(curve_text), parse_curve(other_curve_text), parse_point(point_text), degree,
                               reverse ? Congruence::reverse : Congruence::direct);
      d.value("degree", degree);
      d.value("kind", r.kind == Congruence::direct ? "direct" : "reverse");
      d.invariants(r.invariants);
      d.model("embedded", r.embedded);
      d.value("solutions", static_cast<long>(r.solutions.size()));
      for (std::size_t i = 0; i < r.solutions.size(); ++i) {
        std::string key = "solution" + std::to_string(i + 1);
        d.pencil_point(key + ".point", r.solutions[i].point);
        d.model(key + ".model", r.solutions[i].model);
      }
    };
  });

  std::vector<const char*> argv = {"g1"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "g1: " << e.what() << "\n";
    return usage_error;
  }

  // Buffer so that a failure part way through leaves no partial document.
  std::ostringstream payload;
  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    err << "g1: " << message << "\n";
    out << "status error\nkind " << kind << "\nmessage " << message << "\n";
    return code;
  };
  try {
    Document doc(payload);
    action(doc);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), usage_error);
  } catch (const ParseError& e) {
    return fail("usage", e.what(), usage_error);
  } catch (const std::invalid_argument& e) {
    return fail("usage", e.what(), usage_error);
  } catch (const MathError& e) {
    return fail("math", e.what(), math_error);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), math_error);
  }
  out << payload.str();
  return ok;
}

}  // namespace g1::cli
