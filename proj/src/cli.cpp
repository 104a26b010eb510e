#include "abelocus/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "abelocus/humbert.hpp"
#include "abelocus/json_io.hpp"
#include "abelocus/locus.hpp"
#include "abelocus/periods.hpp"
#include "abelocus/sympmod.hpp"

namespace abelocus::cli {

namespace {

using json::Json;

struct Reply {
  Json result;
  std::string text;
  std::optional<Error> failure;  // set when a mathematical check came out false
};

struct Command {
  CLI::App* app;
  std::function<Json()> inputs;
  std::function<Reply()> handler;
};

Complex parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    fail(ErrorKind::InvalidArgument,
         "expected a complex number as re,im, got '" + s + "'");
  auto number = [&](const std::string& part) {
    char* end = nullptr;
    const double v = std::strtod(part.c_str(), &end);
    if (part.empty() || end != part.c_str() + part.size())
      fail(ErrorKind::InvalidArgument, "not a decimal number: '" + part + "'");
    return v;
  };
  return {number(s.substr(0, comma)), number(s.substr(comma + 1))};
}

std::string show(Complex z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ")
     << std::abs(z.imag()) << "i";
  return os.str();
}

std::string show_list(const std::vector<Int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Json int_list(const std::vector<Int>& v) {
  Json out = Json::array();
  for (Int x : v) out.push_back(json::integer(x));
  return out;
}

double default_tolerance() {
  if (const char* env = std::getenv(kToleranceEnv)) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 1e-10;
}

Complex random_upper(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(0.5, 2.0);
  const double r = re(rng);
  return {r, im(rng)};
}

std::optional<Error> check_failure(bool ok, ErrorKind kind, const std::string& what) {
  if (ok) return std::nullopt;
  return Error(kind, what);
}

Json embedding_json(const EllipticEmbedding& e, bool member) {
  return Json{{"slope", json::integer(e.slope)},
              {"v1", json::lattice_vector(e.v1)},
              {"v2", json::lattice_vector(e.v2)},
              {"exponent", json::integer(e.exponent)},
              {"member", member}};
}

std::string usage_hint(const CLI::App& app) {
  return app.help("", CLI::AppFormatMode::Normal);
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return kExitInvalidInput;
    case ErrorKind::UnsupportedMagnitude:
    case ErrorKind::BoundExceeded:
      return kExitBoundExceeded;
    case ErrorKind::InternalConsistency:
      return kExitInternal;
    default:
      return kExitConditionFails;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Components of the locus of non-simple (1,d)-polarised abelian "
               "surfaces",
               "abelocus"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  double tolerance = default_tolerance();
  std::uint64_t seed = 1;
  app.add_flag("--json", as_json, "Emit a JSON envelope");
  app.add_option("--tolerance", tolerance, "Floating tolerance for residuals")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for randomly drawn periods");

  std::vector<Command> commands;
  Int d = 0, m = 0, n = 0, x = 0, y = 0, bound = 100;
  std::vector<Int> coeffs;
  std::string z1_text, z2_text, tau_e_text, tau_f_text;

  auto label_inputs = [&] {
    return Json{{"d", json::integer(d)}, {"m", json::integer(m)},
                {"n", json::integer(n)}};
  };
  auto add_dmn = [&](CLI::App* sub) {
    sub->add_option("d", d, "Polarisation type (1,d)")->required();
    sub->add_option("m", m, "Exponent m")->required();
    sub->add_option("n", n, "Exponent n")->required();
  };

  // check d m n
  {
    auto* sub = app.add_subcommand("check", "Decide whether (m, n) are complementary");
    add_dmn(sub);
    commands.push_back({sub, label_inputs, [&] {
                          const bool ok = is_complementary(d, m, n);
                          return Reply{Json{{"complementary", ok}},
                                       ok ? "complementary" : "not complementary",
                                       check_failure(ok, ErrorKind::NotComplementary,
                                                     "exponents are not complementary")};
                        }});
  }
  // complements d n
  {
    auto* sub = app.add_subcommand("complements", "List exponents complementary to n");
    sub->add_option("d", d)->required();
    sub->add_option("n", n)->required();
    commands.push_back({sub,
                        [&] { return Json{{"d", json::integer(d)}, {"n", json::integer(n)}}; },
                        [&] {
                          const auto v = complements(d, n);
                          return Reply{int_list(v), show_list(v), std::nullopt};
                        }});
  }
  // decompose d m n
  {
    auto* sub = app.add_subcommand("decompose", "Invariants (a, b, c) of a locus");
    add_dmn(sub);
    commands.push_back({sub, label_inputs, [&] {
                          const auto dec = decompose({d, m, n});
                          std::ostringstream os;
                          os << "a = " << dec.a << ", b = " << dec.b << ", c = " << dec.c
                             << ", g = " << dec.g;
                          return Reply{Json{{"a", json::integer(dec.a)},
                                            {"b", json::integer(dec.b)},
                                            {"c", json::integer(dec.c)},
                                            {"g", json::integer(dec.g)}},
                                       os.str(), std::nullopt};
                        }});
  }
  // count d n
  {
    auto* sub = app.add_subcommand("count", "Number of components for exponent n");
    sub->add_option("d", d)->required();
    sub->add_option("n", n)->required();
    commands.push_back({sub,
                        [&] { return Json{{"d", json::integer(d)}, {"n", json::integer(n)}}; },
                        [&] {
                          const auto split = mu_split(n, d);
                          const Int count = component_count(d, n);
                          return Reply{Json{{"count", json::integer(count)},
                                            {"t", json::integer(split.t)}},
                                       std::to_string(count), std::nullopt};
                        }});
  }
  // equation d m n
  {
    auto* sub = app.add_subcommand("equation", "Canonical singular relation of a locus");
    add_dmn(sub);
    commands.push_back({sub, label_inputs, [&] {
                          const XYPair xy = xy_from_locus({d, m, n});
                          const SingularRelation rel = relation_from_xy(d, xy);
                          const std::string text = format_relation(rel) +
                                                   ", Delta = " + std::to_string(rel.delta);
                          return Reply{Json{{"x", json::integer(xy.x)},
                                            {"y", json::integer(xy.y)},
                                            {"relation", json::relation(rel)},
                                            {"text", text}},
                                       text, std::nullopt};
                        }});
  }
  // xy-enum d m n --bound B
  {
    auto* sub = app.add_subcommand("xy-enum", "All (x, y) witnesses up to a bound");
    add_dmn(sub);
    sub->add_option("--bound", bound, "Bound on |x| and |y|")->capture_default_str();
    commands.push_back({sub,
                        [&] {
                          Json in = label_inputs();
                          in["bound"] = json::integer(bound);
                          return in;
                        },
                        [&] {
                          Json list = Json::array();
                          std::ostringstream os;
                          for (const auto& xy : enumerate_xy(d, m, n, bound)) {
                            const auto rel = relation_from_xy(d, xy);
                            list.push_back(Json{{"x", json::integer(xy.x)},
                                                {"y", json::integer(xy.y)},
                                                {"relation", json::relation(rel)}});
                            os << xy.x << ' ' << xy.y << "  " << format_relation(rel)
                               << ", Delta = " << rel.delta << '\n';
                          }
                          std::string text = os.str();
                          if (!text.empty()) text.pop_back();
                          return Reply{list, text, std::nullopt};
                        }});
  }
  // locus-of-relation d a1 a2 a3 a4 a5
  {
    auto* sub = app.add_subcommand("locus-of-relation", "Locus induced by a singular relation");
    sub->add_option("d", d)->required();
    sub->add_option("coefficients", coeffs, "a1 a2 a3 a4 a5")->required()->expected(5);
    commands.push_back({sub,
                        [&] {
                          return Json{{"d", json::integer(d)}, {"a", int_list(coeffs)}};
                        },
                        [&] {
                          std::array<Int, 5> a{};
                          std::copy(coeffs.begin(), coeffs.end(), a.begin());
                          const SingularRelation rel = make_relation(d, a);
                          const LocusLabel l = locus_from_relation(rel);
                          std::ostringstream os;
                          os << "E_" << l.d << "(" << l.m << ", " << l.n << ")";
                          return Reply{Json{{"locus", json::label(l)},
                                            {"relation", json::relation(rel)}},
                                       os.str(), std::nullopt};
                        }});
  }

  auto period_reply = [&](const XYPair& xy, const PeriodMatrix& z) {
    const SingularRelation rel = relation_from_xy(d, xy);
    const Complex res = evaluate(rel, z.z1(), z.z2(), z.z3());
    const auto [m1, m2] = z.imag_minors();
    Json result = json::period(d, xy, z);
    result["siegel"] = Json{{"im_z1", m1}, {"det_im", m2}};
    result["residual"] = std::abs(res);
    std::ostringstream os;
    os << "z1 = " << show(z.z1()) << "\nz2 = " << show(z.z2())
       << "\nz3 = " << show(z.z3()) << "\nIm z1 = " << m1
       << ", det Im Z = " << m2 << "\n" << format_relation(rel)
       << " (residual " << std::abs(res) << ")";
    return Reply{result, os.str(),
                 check_failure(std::abs(res) <= tolerance * std::max(1.0, z.matrix().norm()),
                               ErrorKind::InternalConsistency,
                               "relation residual exceeds tolerance")};
  };
  auto z_inputs = [&](Json in) {
    if (!z1_text.empty()) in["z1"] = z1_text;
    if (!z2_text.empty()) in["z2"] = z2_text;
    return in;
  };
  // Uses --z1/--z2 when given, otherwise draws a point of the locus.
  auto choose_z = [&](const XYPair& xy) -> std::pair<Complex, Complex> {
    if (z1_text.empty() != z2_text.empty())
      fail(ErrorKind::InvalidArgument, "give both --z1 and --z2, or neither");
    if (!z1_text.empty()) return {parse_complex(z1_text), parse_complex(z2_text)};
    std::mt19937_64 rng(seed);
    const Complex tau_e = random_upper(rng);
    const Complex tau_f = random_upper(rng);
    return solve_z(d, xy, tau_e, tau_f);
  };

  // period d m n --z1 re,im --z2 re,im
  {
    auto* sub = app.add_subcommand("period", "Period matrix on a locus");
    add_dmn(sub);
    sub->add_option("--z1", z1_text, "z1 as re,im");
    sub->add_option("--z2", z2_text, "z2 as re,im");
    commands.push_back({sub, [&] { return z_inputs(label_inputs()); }, [&] {
                          const XYPair xy = xy_from_locus({d, m, n});
                          const auto [z1, z2] = choose_z(xy);
                          return period_reply(xy, build_period(d, xy, z1, z2));
                        }});
  }
  // solve-period d m n --tau-e re,im --tau-f re,im
  {
    auto* sub = app.add_subcommand("solve-period",
                                   "Period matrix containing curves of given periods");
    add_dmn(sub);
    sub->add_option("--tau-e", tau_e_text, "tau_E as re,im")->required();
    sub->add_option("--tau-f", tau_f_text, "tau_F as re,im")->required();
    commands.push_back({sub,
                        [&] {
                          Json in = label_inputs();
                          in["tau_e"] = tau_e_text;
                          in["tau_f"] = tau_f_text;
                          return in;
                        },
                        [&] {
                          const XYPair xy = xy_from_locus({d, m, n});
                          const auto [z1, z2] = solve_z(d, xy, parse_complex(tau_e_text),
                                                        parse_complex(tau_f_text));
                          return period_reply(xy, build_period(d, xy, z1, z2));
                        }});
  }
  // verify-lattice d x y --z1 --z2
  {
    auto* sub = app.add_subcommand("verify-lattice",
                                   "Check the embedded curves of A_{x,y}");
    sub->add_option("d", d)->required();
    sub->add_option("x", x)->required();
    sub->add_option("y", y)->required();
    sub->add_option("--z1", z1_text, "z1 as re,im");
    sub->add_option("--z2", z2_text, "z2 as re,im");
    commands.push_back({sub,
                        [&] {
                          return z_inputs(Json{{"d", json::integer(d)},
                                               {"x", json::integer(x)},
                                               {"y", json::integer(y)}});
                        },
                        [&] {
                          const XYPair xy{x, y};
                          if (x <= y)
                            fail(ErrorKind::InvalidArgument, "expected x > y");
                          const auto [z1, z2] = choose_z(xy);
                          const Embeddings e = embeddings(d, xy);
                          const bool mx = verify_membership(d, xy, z1, z2, e.ex, tolerance);
                          const bool my = verify_membership(d, xy, z1, z2, e.ey, tolerance);
                          const LocusLabel l = exponent_report(d, xy);
                          std::ostringstream os;
                          os << "E_x: slope " << e.ex.slope << ", exponent " << e.ex.exponent
                             << ", member " << yes_no(mx) << "\nE_y: slope " << e.ey.slope
                             << ", exponent " << e.ey.exponent << ", member " << yes_no(my)
                             << "\nlocus E_" << l.d << "(" << l.m << ", " << l.n << ")";
                          return Reply{Json{{"ex", embedding_json(e.ex, mx)},
                                            {"ey", embedding_json(e.ey, my)},
                                            {"locus", json::label(l)}},
                                       os.str(),
                                       check_failure(mx && my, ErrorKind::EmbeddingInvalid,
                                                     "embedded lattice vectors do not match")};
                        }});
  }

  // sp-oracle ...
  auto* oracle = app.add_subcommand("sp-oracle", "Exhaustive checks on Z_N^4");
  oracle->require_subcommand(1);
  Int oa = 0, ob = 0, oc = 0, od = 0, on = 0;
  std::vector<Int> vec;
  {
    auto* sub = oracle->add_subcommand("transitive-g",
                                       "Cyclic G with |GnE|=a, |GnF|=b form one orbit");
    sub->add_option("N", on)->required();
    sub->add_option("a", oa)->required();
    sub->add_option("b", ob)->required();
    commands.push_back({sub,
                        [&] {
                          return Json{{"N", json::integer(on)}, {"a", json::integer(oa)},
                                      {"b", json::integer(ob)}};
                        },
                        [&] {
                          const auto r = verify_transitive_G(on, oa, ob);
                          std::ostringstream os;
                          os << "subgroups " << r.count << ", orbit " << r.orbit_size
                             << ", single orbit " << yes_no(r.single_orbit);
                          return Reply{Json{{"count", r.count},
                                            {"orbit_size", r.orbit_size},
                                            {"single_orbit", r.single_orbit}},
                                       os.str(),
                                       check_failure(r.single_orbit && r.count > 0,
                                                     ErrorKind::LemmaViolation,
                                                     "subgroups do not form a single orbit")};
                        }});
  }
  auto abcd_inputs = [&] {
    return Json{{"a", json::integer(oa)}, {"b", json::integer(ob)},
                {"c", json::integer(oc)}, {"d", json::integer(od)}};
  };
  {
    auto* sub = oracle->add_subcommand("allowable-k",
                                       "Standard isotropic K and the intersection facts");
    for (auto* v : {&oa, &ob, &oc, &od})
      sub->add_option(v == &oa ? "a" : v == &ob ? "b" : v == &oc ? "c" : "d", *v)
          ->required();
    commands.push_back({sub, abcd_inputs, [&] {
                          const auto data = standard_K(oa, ob, oc, od);
                          const auto inter = check_intersection_lemma(data);
                          const auto all = verify_allowable_K(oa, ob, oc, od);
                          Json gens = Json::array();
                          for (const auto& g : data.K.generators())
                            gens.push_back(json::lattice_vector(g.coords()));
                          std::ostringstream os;
                          os << "K in Z_" << oc * od << "^4 of order " << data.K.order()
                             << ", l = " << data.l << ", c~ = " << data.c_tilde
                             << "\n|X| = " << inter.quotient_order
                             << ", intersection facts " << yes_no(inter.holds())
                             << "\nallowable K " << all.count << ", orbit "
                             << all.orbit_size << ", single orbit "
                             << yes_no(all.single_orbit);
                          const bool ok = inter.holds() && all.single_orbit;
                          return Reply{
                              Json{{"modulus", json::integer(oc * od)},
                                   {"generators", gens},
                                   {"order", data.K.order()},
                                   {"l", json::integer(data.l)},
                                   {"c_tilde", json::integer(data.c_tilde)},
                                   {"quotient_order", inter.quotient_order},
                                   {"meet_is_image_of_dE", inter.meet_is_image_of_dE},
                                   {"meet_is_image_of_dF", inter.meet_is_image_of_dF},
                                   {"preimage_is_dE_plus_dF", inter.preimage_is_dE_plus_dF},
                                   {"allowable_count", all.count},
                                   {"orbit_size", all.orbit_size},
                                   {"single_orbit", all.single_orbit}},
                              os.str(),
                              check_failure(ok, ErrorKind::LemmaViolation,
                                            "a structural check failed")};
                        }});
  }
  {
    auto* sub = oracle->add_subcommand("technical1",
                                       "All admissible (K, G) pairs form one orbit");
    for (auto* v : {&oa, &ob, &oc, &od})
      sub->add_option(v == &oa ? "a" : v == &ob ? "b" : v == &oc ? "c" : "d", *v)
          ->required();
    commands.push_back({sub, abcd_inputs, [&] {
                          const auto r = verify_technical1(oa, ob, oc, od);
                          std::ostringstream os;
                          os << "pairs " << r.pair_count << ", orbit " << r.orbit_size
                             << ", standard admissible " << yes_no(r.standard_admissible)
                             << ", single orbit " << yes_no(r.single_orbit);
                          return Reply{Json{{"pair_count", r.pair_count},
                                            {"orbit_size", r.orbit_size},
                                            {"standard_admissible", r.standard_admissible},
                                            {"single_orbit", r.single_orbit}},
                                       os.str(),
                                       check_failure(r.single_orbit, ErrorKind::LemmaViolation,
                                                     "pairs do not form a single orbit")};
                        }});
  }
  {
    auto* sub = oracle->add_subcommand("domination",
                                       "Cyclic lifts in L cover the targets in X[d]");
    for (auto* v : {&oc, &od, &oa, &ob})
      sub->add_option(v == &oa ? "a" : v == &ob ? "b" : v == &oc ? "c" : "d", *v)
          ->required();
    commands.push_back({sub,
                        [&] {
                          return Json{{"c", json::integer(oc)}, {"d", json::integer(od)},
                                      {"a", json::integer(oa)}, {"b", json::integer(ob)}};
                        },
                        [&] {
                          const auto r = verify_domination(oc, od, oa, ob);
                          std::ostringstream os;
                          os << "lifts " << r.lifts << ", targets " << r.targets
                             << ", images valid " << yes_no(r.images_valid)
                             << ", surjective " << yes_no(r.surjective);
                          return Reply{Json{{"lifts", r.lifts},
                                            {"targets", r.targets},
                                            {"images_valid", r.images_valid},
                                            {"surjective", r.surjective},
                                            {"holds", r.holds()}},
                                       os.str(),
                                       check_failure(r.holds(), ErrorKind::LemmaViolation,
                                                     "domination check failed")};
                        }});
  }
  {
    auto* sub = oracle->add_subcommand(
        "division", "Divide one element, or check every element of Z_N^4");
    sub->add_option("N", on)->required();
    sub->add_option("coords", vec, "e1 e2 f1 f2")->expected(4);
    commands.push_back({sub,
                        [&] {
                          Json in{{"N", json::integer(on)}};
                          if (!vec.empty()) in["coords"] = int_list(vec);
                          return in;
                        },
                        [&] {
                          if (!vec.empty()) {
                            const ModVector v(on, vec[0], vec[1], vec[2], vec[3]);
                            const Int k = element_order(v);
                            const ModVector q = divide_by_cofactor(v, k);
                            std::ostringstream os;
                            os << "order " << k << ", y = (" << q[0] << ", " << q[1]
                               << ", " << q[2] << ", " << q[3] << ")";
                            return Reply{Json{{"order", json::integer(k)},
                                              {"y", json::lattice_vector(q.coords())}},
                                         os.str(), std::nullopt};
                          }
                          const SymplecticModule module(on);
                          std::size_t checked = 0;
                          for (Index i = 0; i < module.size(); ++i) {
                            const ModVector v = module.vector(i);
                            divide_by_cofactor(v, element_order(v));
                            ++checked;
                          }
                          return Reply{Json{{"checked", checked}, {"total", true}},
                                       "all " + std::to_string(checked) +
                                           " elements divisible",
                                       std::nullopt};
                        }});
  }
  {
    auto* sub = oracle->add_subcommand("torsion", "E[k] == (N/k)E for every k | N");
    sub->add_option("N", on)->required();
    commands.push_back({sub, [&] { return Json{{"N", json::integer(on)}}; }, [&] {
                          const SymplecticModule module(on);
                          const Subgroup e = module.E();
                          Json per = Json::object();
                          bool all = true;
                          std::ostringstream os;
                          for (Int k : divisors(on)) {
                            const bool ok = torsion_check(e, k);
                            all = all && ok;
                            per[std::to_string(k)] = ok;
                            os << "k = " << k << ": " << yes_no(ok) << '\n';
                          }
                          std::string text = os.str();
                          text.pop_back();
                          return Reply{Json{{"per_k", per}, {"holds", all}}, text,
                                       check_failure(all, ErrorKind::LemmaViolation,
                                                     "torsion identity failed")};
                        }});
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << usage_hint(app);
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << usage_hint(app);
    return kExitInvalidInput;
  }

  const auto it = std::find_if(commands.begin(), commands.end(),
                               [](const Command& c) { return c.app->parsed(); });
  if (it == commands.end()) {
    err << "error: no command given\n\n" << usage_hint(app);
    return kExitInvalidInput;
  }
  std::string name = it->app->get_name();
  if (it->app->get_parent() == oracle) name = "sp-oracle " + name;

  Json envelope{{"command", name}, {"inputs", it->inputs()}, {"result", nullptr},
                {"status", "ok"}, {"error", nullptr}};
  int code = kExitOk;
  std::string text;
  try {
    Reply reply = it->handler();
    envelope["result"] = std::move(reply.result);
    text = std::move(reply.text);
    if (reply.failure) {
      envelope["status"] = "error";
      envelope["error"] = reply.failure->what();
      code = exit_code(reply.failure->kind());
    }
  } catch (const Error& e) {
    envelope["status"] = "error";
    envelope["error"] = e.what();
    code = exit_code(e.kind());
  }

  if (as_json) {
    out << envelope.dump(2) << '\n';
  } else {
    if (!text.empty()) out << text << '\n';
    if (code != kExitOk) err << "error: " << envelope["error"].get<std::string>() << '\n';
  }
  return code;
}

}  // namespace abelocus::cli
