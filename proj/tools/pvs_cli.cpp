#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "pvs/io.hpp"
#include "pvs/representatives.hpp"
#include "pvs/verify.hpp"

using namespace pvs;

namespace {

constexpr int kOk = 0;
constexpr int kDomain = 1;
constexpr int kUsage = 2;

bool g_pretty = false;

void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || j[0].is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
  }
}

void emit(const Json& j) {
  if (!g_pretty) {
    std::cout << j.dump() << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

AlternatingForm<double> as_double(const AnyForm& f) {
  return std::visit([](const auto& x) { return form_cast<double>(x); }, f);
}

std::vector<std::vector<Rational>> random_samples(std::uint64_t seed, std::size_t dim, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  std::vector<std::vector<Rational>> out(count, std::vector<Rational>(dim));
  for (auto& v : out)
    for (auto& x : v) x = Rational(num(rng), den(rng));
  return out;
}

template <class T>
std::vector<std::vector<T>> lift_samples(const std::vector<std::vector<Rational>>& s) {
  std::vector<std::vector<T>> out;
  for (const auto& v : s) {
    std::vector<T> w;
    for (const auto& x : v) w.push_back(scalar_cast<T>(x));
    out.push_back(std::move(w));
  }
  return out;
}

Json to_json(const NormedCheck& c) {
  return {{"samples", c.samples},
          {"norm_multiplicative", c.norm_multiplicative},
          {"conj_antimultiplicative", c.conj_antimultiplicative},
          {"inner_is_re", c.inner_is_re},
          {"x_conj_x", c.x_conj_x},
          {"alternative", c.alternative},
          {"associative", c.associative},
          {"normed", c.normed()}};
}

std::string one_line(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  for (auto& c : s)
    if (c == '\n') c = ' ';
  return s;
}

FormCase parse_case(const std::string& s) {
  if (s == "1" || s == "case1") return FormCase::case1;
  if (s == "2" || s == "case2") return FormCase::case2;
  if (s == "3" || s == "case3") return FormCase::case3;
  throw CLI::ValidationError("case", "expected 1, 2 or 3");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prehomogeneous vector space toolkit: invariants, orbits, octonions, perturbation and basis search"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "Human-readable table instead of JSON");

  std::string path, path2, name, algebra = "split", case_name, sign = "+";
  std::optional<long> opt_d, opt_n;
  long max_den = 1000;
  double tol = 1e-9, epsilon = 0.1;
  std::uint64_t seed = 0;
  int depth = 6, beam = 64, threads = 0;
  std::size_t samples = 100;
  bool via_orbit = false, left_moves = false;

  auto* rep = app.add_subcommand("rep", "Emit an orbit representative as form JSON");
  rep->add_option("name", name, "case1_w | case1_w1 | case1_walpha | case2_w | case2_wprime | case2_w1 | case3_w")
      ->required();
  rep->add_option("--d", opt_d, "Squarefree d for case1_walpha");
  rep->add_option("--n", opt_n, "n for case3_w");

  auto* inv = app.add_subcommand("invariant", "Relative invariant, S matrix, Q_x and Pfaffian");
  inv->add_option("form", path)->required()->check(CLI::ExistingFile);

  auto* cls = app.add_subcommand("classify", "Real orbit and irrationality flags");
  cls->add_option("form", path)->required()->check(CLI::ExistingFile);
  cls->add_option("--max-den", max_den, "Largest denominator tried by rational reconstruction")->check(CLI::PositiveNumber);
  cls->add_option("--tol", tol, "Float tolerance")->check(CLI::PositiveNumber);

  auto* stab = app.add_subcommand("stab", "Stabilizer Lie algebra in sl(n)");
  stab->add_option("form", path)->required()->check(CLI::ExistingFile);
  stab->add_option("--tol", tol, "Zero tolerance for float forms")->check(CLI::PositiveNumber);

  auto* fixed = app.add_subcommand("fixed", "Forms of the same degree fixed by the stabilizer");
  fixed->add_option("form", path)->required()->check(CLI::ExistingFile);
  fixed->add_option("--tol", tol, "Zero tolerance for float forms")->check(CLI::PositiveNumber);

  auto* oct = app.add_subcommand("octonion", "Octonion algebras attached to forms");
  oct->require_subcommand(1);
  auto* table = oct->add_subcommand("table", "Structure constants of O_x and a normed-algebra check");
  table->add_option("form", path)->required()->check(CLI::ExistingFile);
  table->add_option("--samples", samples, "Random rational samples for the check")->check(CLI::PositiveNumber);
  table->add_option("--seed", seed, "Seed for the samples");
  auto* cform = oct->add_subcommand("c-form", "The 3-form C(x, y, z) = <x, yz> on Im(A)");
  cform->add_option("--algebra", algebra)->check(CLI::IsMember({"split", "nonsplit"}));

  auto* pert = app.add_subcommand("perturb", "Extend a partial target to a form on a chosen real orbit");
  pert->add_option("case", case_name, "1, 2 or 3")->required();
  pert->add_option("target", path)->required()->check(CLI::ExistingFile);
  pert->add_option("--epsilon", epsilon)->required()->check(CLI::PositiveNumber);
  pert->add_option("--sign", sign, "Sign of Delta for case 1")->check(CLI::IsMember({"+", "-"}));
  pert->add_option("--n", opt_n, "n for case 3");

  auto* appx = app.add_subcommand("approximate", "Beam search for an integral basis matching a target");
  appx->add_option("form", path)->required()->check(CLI::ExistingFile);
  appx->add_option("target", path2)->required()->check(CLI::ExistingFile);
  appx->add_option("--epsilon", epsilon)->check(CLI::PositiveNumber);
  appx->add_option("--depth", depth)->check(CLI::PositiveNumber);
  appx->add_option("--beam", beam)->check(CLI::PositiveNumber);
  appx->add_option("--seed", seed);
  appx->add_option("--threads", threads, "0: PVS_THREADS or 1")->check(CLI::NonNegativeNumber);
  appx->add_flag("--via-orbit", via_orbit, "Move the target onto the orbit of x first");
  appx->add_flag("--left-moves", left_moves, "Also extend words on the left");

  auto* ver = app.add_subcommand("verify", "Check the golden identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*rep) {
      emit(to_json(make_rep(parse_rep_name(name, opt_d, opt_n))));
    } else if (*inv) {
      std::visit([](const auto& x) { emit(to_json(invariant_report(x))); }, parse_form(path));
    } else if (*cls) {
      std::visit(
          [&](const auto& x) {
            using T = typename std::decay_t<decltype(x)>::Map::mapped_type;
            Json j{{"orbit", to_json(classify_real(x, tol))}};
            if constexpr (std::is_same_v<T, Rational>) {
              j["irrationality"] = to_json(irrationality_report(x));
            } else {
              j["irrationality"] = to_json(irrationality_report(x, max_den, tol));
            }
            emit(j);
          },
          parse_form(path));
    } else if (*stab || *fixed) {
      std::visit(
          [&](const auto& x) {
            using T = typename std::decay_t<decltype(x)>::Map::mapped_type;
            auto run = [&](auto zero) {
              const auto l = stab_lie_algebra(x, zero);
              if (*stab) {
                emit(to_json(l));
              } else {
                Json forms = Json::array();
                for (const auto& f : fixed_space(l, x.degree(), zero)) forms.push_back(to_json(f));
                emit({{"dim", forms.size()}, {"basis", forms}});
              }
            };
            if constexpr (FloatScalar<T>) {
              run(NearZero{tol});
            } else {
              run(ExactZero{});
            }
          },
          parse_form(path));
    } else if (*table) {
      std::visit(
          [&](const auto& x) {
            using T = typename std::decay_t<decltype(x)>::Map::mapped_type;
            const auto o = octonion_from_form(x);
            Json j = to_json(o);
            if constexpr (FloatScalar<T>) {
              j["check"] = nullptr;
            } else {
              j["check"] = to_json(normed_check(o, lift_samples<T>(random_samples(seed, 8, samples))));
            }
            emit(j);
          },
          parse_form(path));
    } else if (*cform) {
      using R = Rational;
      const auto c = algebra == "split" ? c_form(split_octonions<R>(), split_octonion_f_basis<R>())
                                        : c_form(octonions<R>(), standard_im_basis(octonions<R>()));
      emit(to_json(c));
    } else if (*pert) {
      const FormCase c = parse_case(case_name);
      if (c == FormCase::case3 && !opt_n) throw CLI::ValidationError("--n", "case 3 needs --n");
      const auto y = target_from_json(read_json_file(path), c, c == FormCase::case3 ? static_cast<int>(*opt_n) : 0);
      emit(to_json(extend(y, epsilon, sign == "+" ? OrbitSign::positive : OrbitSign::negative)));
    } else if (*appx) {
      const auto x = as_double(parse_form(path));
      const FormCase c = detect_case(x);
      const auto y = target_from_json(read_json_file(path2), c, c == FormCase::case3 ? x.dim() / 2 : 0);
      SearchConfig cfg;
      cfg.beam_width = beam;
      cfg.max_depth = depth;
      cfg.seed = seed;
      cfg.epsilon = epsilon;
      cfg.left_moves = left_moves;
      cfg.threads = threads;
      const auto res = via_orbit ? approximate_via_orbit(x, y, cfg) : approximate(x, y, cfg);
      Json j = to_json(res, x);
      j["seed"] = seed;
      if (via_orbit) {
        Json dev = Json::object();
        for (const auto& [b, v] : deviations(x, y, res.best.h)) dev[blade_key(b)] = v;
        j["deviations_from_requested"] = dev;
      }
      emit(j);
    } else if (*ver) {
      const auto rows = run_verify();
      bool all = true;
      if (g_pretty) {
        for (const auto& r : rows) {
          std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
          if (!r.note.empty()) std::cout << "  (" << r.note << ")";
          std::cout << "\n";
          if (!r.pass) std::cout << "      computed: " << one_line(r.computed) << "\n      expected: " << one_line(r.expected) << "\n";
          all = all && r.pass;
        }
      } else {
        Json out = Json::array();
        for (const auto& r : rows) {
          out.push_back({{"name", r.name}, {"pass", r.pass}, {"computed", r.computed}, {"expected", r.expected},
                         {"note", r.note}});
          all = all && r.pass;
        }
        std::cout << Json{{"all_pass", all}, {"rows", out}}.dump() << "\n";
      }
      return all ? kOk : kDomain;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kOk;
}
