#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>

#include <CLI11.hpp>

#include "okd/acceptance.hpp"
#include "okd/fiber.hpp"
#include "okd/fusion.hpp"
#include "okd/hopf.hpp"
#include "okd/json_io.hpp"
#include "okd/morphisms.hpp"
#include "okd/star.hpp"

using namespace okd;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string field;
  std::string d, dl, dr;
};

const char* kFooter = R"(Words: letters x and x* separated by commas or spaces, case-insensitive
  ("x,x*", "x x* x"); the empty string "" is the unit object.
Scalars: rationals as "p/q"; complex numbers as "[re,im]"; rational
  functions in d as {"num":[...],"den":[...]} with ascending rational coefficients.
Backends: --field generic works over Q(d); --field rational and --field complex
  need --d, or --dl and --dr for distinct loop values.
Files: morphisms {"domain","codomain","terms":[{"diagram","coeff"}]} (a bare
  diagram is read as a morphism with coefficient 1); fiber data {"A":[[...]],"B":[[...]]}
  with matrices as row-major arrays. "-" reads standard input.
Exit status: 0 success or verdict true, 1 verdict false, 2 usage or input error.)";

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json(const std::string& path) { return parse_json(read_text(path)); }

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

template <Field F>
F parse_scalar(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    return scalar_from_json<F>(parse_json(text));
  }
  return scalar_from_json<F>(Json(text));
}

template <Field F>
Morphism<F> read_morphism(const std::string& path) {
  const Json j = read_json(path);
  if (j.is_object() && j.contains("arcs")) return Morphism<F>::from_diagram(diagram_from_json(j));
  return morphism_from_json<F>(j);
}

template <Field F>
FiberData<F> read_fiber(const std::string& path, const FieldContext<F>& ctx) {
  const Json j = read_json(path);
  if (!j.is_object() || !j.contains("A") || !j.contains("B")) {
    throw ParseError("fiber data needs \"A\" and \"B\" matrices");
  }
  return validate_fiber(matrix_from_json<F>(j.at("A")), matrix_from_json<F>(j.at("B")), ctx);
}

template <Field F>
Json fiber_json(const FiberData<F>& fd) {
  return {{"n", fd.n()},
          {"d_left", to_json(fd.context().d_left())},
          {"d_right", to_json(fd.context().d_right())},
          {"A", to_json(fd.a())},
          {"B", to_json(fd.b())},
          {"C", to_json(fd.c())},
          {"D", to_json(fd.d())}};
}

// Calls fn with the FieldContext selected on the command line.
template <class Fn>
int with_field(const Config& cfg, Fn&& fn) {
  const bool one = !cfg.d.empty();
  const bool two = !cfg.dl.empty() || !cfg.dr.empty();
  std::string field = cfg.field;
  if (field.empty()) field = (one || two) ? "rational" : "generic";
  if (one && two) throw UsageError("give either --d or --dl/--dr, not both");
  if (two && (cfg.dl.empty() || cfg.dr.empty())) throw UsageError("--dl and --dr go together");
  if (field == "generic") {
    if (one || two) throw UsageError("--field generic takes no loop values");
    return fn(generic_context());
  }
  if (!one && !two) throw UsageError("--field " + field + " needs --d or --dl/--dr");
  const auto make = [&](auto tag) {
    using F = decltype(tag);
    return one ? FieldContext<F>(parse_scalar<F>(cfg.d))
               : FieldContext<F>(parse_scalar<F>(cfg.dl), parse_scalar<F>(cfg.dr));
  };
  if (field == "rational") return fn(make(Rational{}));
  if (field == "complex") return fn(make(Complex{}));
  throw UsageError("unknown field backend \"" + field + "\"");
}

template <class F>
constexpr bool is_rational_v = std::is_same_v<F, Rational>;

template <class F>
void require_rational(const char* what) {
  if constexpr (!is_rational_v<F>) throw UsageError(std::string(what) + " needs --field rational");
}

Letter parse_letter(const std::string& s) {
  const Word w = Word::parse(s);
  if (w.size() != 1) throw UsageError("--start expects x or x*");
  return w[0];
}

template <Field F>
bool star_laws_hold(const StarParams<F>& p, std::size_t max_points, Json& report) {
  std::vector<Diagram> diagrams;
  for (const auto& w : Word::all_up_to(max_points))
    for (const auto& v : Word::all_up_to(max_points - w.size()))
      for (const auto& d : enumerate(w, v)) diagrams.push_back(d);
  bool involution = true, anti = true, monoidal = true;
  for (const auto& d : diagrams) {
    const Morphism<F> f = Morphism<F>::from_diagram(d);
    involution = involution && star(star(f, p), p) == f;
  }
  for (const auto& f : diagrams)
    for (const auto& g : diagrams) {
      if (f.num_points() + g.num_points() > max_points) continue;
      const Morphism<F> fm = Morphism<F>::from_diagram(f), gm = Morphism<F>::from_diagram(g);
      monoidal = monoidal && star(tensor(fm, gm), p) == tensor(star(fm, p), star(gm, p));
      if (f.top() == g.bottom()) {
        anti = anti && star(compose(fm, gm, p.ctx), p) == compose(star(gm, p), star(fm, p), p.ctx);
      }
    }
  report["diagrams"] = diagrams.size();
  report["involution"] = involution;
  report["antimultiplicative"] = anti;
  report["monoidal"] = monoidal;
  return involution && anti && monoidal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the category of oriented Kauffman diagrams.", "okd"};
  app.footer(kFooter);
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--field", cfg.field, "generic | rational | complex")
      ->check(CLI::IsMember({"generic", "rational", "complex"}));
  app.add_option("--d", cfg.d, "loop value d (one-parameter mode)");
  app.add_option("--dl", cfg.dl, "anticlockwise loop value");
  app.add_option("--dr", cfg.dr, "clockwise loop value");

  std::function<int()> action;
  std::string w1, w2, path1, path2, start = "x", c_text, versus, mu_text, point;
  int jw_n = 0;
  std::size_t max_len = 0, max_points = 4;

  auto* enum_cmd = app.add_subcommand("enum", "list K_{W,W'} in canonical order");
  enum_cmd->add_option("W", w1)->required();
  enum_cmd->add_option("W2", w2)->required();
  enum_cmd->callback([&] {
    action = [&] {
      Json out = Json::array();
      for (const auto& d : enumerate(Word::parse(w1), Word::parse(w2))) out.push_back(to_json(d));
      emit(out);
      return kOk;
    };
  });

  auto* dim_cmd = app.add_subcommand("dim", "print |K_{W,W'}|");
  dim_cmd->add_option("W", w1)->required();
  dim_cmd->add_option("W2", w2)->required();
  dim_cmd->callback([&] {
    action = [&] {
      emit(hom_dimension(Word::parse(w1), Word::parse(w2)));
      return kOk;
    };
  });

  auto* compose_cmd = app.add_subcommand("compose", "f after g");
  compose_cmd->add_option("f", path1)->required();
  compose_cmd->add_option("g", path2)->required();
  compose_cmd->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        emit(to_json(compose(read_morphism<F>(path1), read_morphism<F>(path2), ctx)));
        return kOk;
      });
    };
  });

  auto* tensor_cmd = app.add_subcommand("tensor", "f to the left of g");
  tensor_cmd->add_option("f", path1)->required();
  tensor_cmd->add_option("g", path2)->required();
  tensor_cmd->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        emit(to_json(tensor(read_morphism<F>(path1), read_morphism<F>(path2))));
        return kOk;
      });
    };
  });

  auto* jw_cmd = app.add_subcommand("jw", "Jones-Wenzl idempotent f_N");
  jw_cmd->add_option("N", jw_n)->required()->check(CLI::PositiveNumber);
  jw_cmd->add_option("--start", start, "first letter, x or x*");
  jw_cmd->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        emit(to_json(jones_wenzl(jw_n, parse_letter(start), ctx)));
        return kOk;
      });
    };
  });

  auto* project_cmd = app.add_subcommand("project", "simple projector P_W");
  project_cmd->add_option("W", w1)->required();
  project_cmd->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        emit(to_json(simple_projector(Word::parse(w1), ctx)));
        return kOk;
      });
    };
  });

  auto* fuse_cmd = app.add_subcommand("fuse", "X_W (x) X_W' as simples");
  fuse_cmd->add_option("W", w1)->required();
  fuse_cmd->add_option("W2", w2)->required();
  fuse_cmd->callback([&] {
    action = [&] {
      const Word a = Word::parse(w1), b = Word::parse(w2);
      return with_field(cfg, [&](const auto& ctx) {
        require_fusion_context(ctx, a.size() + b.size());
        emit(to_json(fuse(a, b)));
        return kOk;
      });
    };
  });

  auto* decompose_cmd = app.add_subcommand("decompose", "multiplicities of simples in X^W");
  decompose_cmd->add_option("W", w1)->required();
  decompose_cmd->callback([&] {
    action = [&] {
      const Word a = Word::parse(w1);
      return with_field(cfg, [&](const auto& ctx) {
        require_fusion_context(ctx, a.size());
        emit(to_json(decompose_word(a)));
        return kOk;
      });
    };
  });

  auto* oracle_cmd = app.add_subcommand("oracle-check", "fusion multiplicities vs |K| for all |W|,|W'| <= MAXLEN");
  oracle_cmd->add_option("MAXLEN", max_len)->required();
  oracle_cmd->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        require_fusion_context(ctx, 2 * max_len);
        const auto words = Word::all_up_to(max_len);
        Json failures = Json::array();
        std::size_t pairs = 0;
        for (const auto& a : words)
          for (const auto& b : words) {
            ++pairs;
            if (!dimension_oracle_check(a, b)) failures.push_back(Json::array({to_json(a), to_json(b)}));
          }
        emit({{"pairs", pairs}, {"ok", failures.empty()}, {"failures", failures}});
        return failures.empty() ? kOk : kFalse;
      });
    };
  });

  auto* gram_cmd = app.add_subcommand("gram", "Gram matrix of K_{I,W} with a PSD verdict");
  gram_cmd->add_option("W", w1)->required();
  gram_cmd->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        require_rational<F>("gram");
        if constexpr (is_rational_v<F>) {
          const Matrix<Rational> g = gram_matrix(Word::parse(w1), ctx);
          const PsdVerdict v = psd_test(g);
          Json pivots = Json::array();
          for (const auto& p : v.pivots) pivots.push_back(to_json(p));
          Json out{{"matrix", to_json(g)}, {"psd", v.psd}, {"pivots", pivots}};
          out["witness"] = v.witness ? Json(*v.witness) : Json(nullptr);
          emit(out);
          return v.psd ? kOk : kFalse;
        }
        return kUsage;
      });
    };
  });

  auto* star_apply_cmd = app.add_subcommand("star-apply", "apply the *-structure with parameter C (default d/|d|)");
  star_apply_cmd->add_option("f", path1)->required();
  star_apply_cmd->add_option("--c", c_text, "parameter c");
  star_apply_cmd->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        const Morphism<F> f = read_morphism<F>(path1);
        emit(to_json(c_text.empty() ? cstar_adjoint(f, ctx) : star(f, StarParams<F>(parse_scalar<F>(c_text), ctx))));
        return kOk;
      });
    };
  });

  auto* star_check_cmd = app.add_subcommand("star-check", "check the *-structure laws for parameter C");
  star_check_cmd->add_option("--c", c_text, "parameter c")->required();
  star_check_cmd->add_option("--versus", versus, "second parameter for the equivalence test");
  star_check_cmd->add_option("--max-points", max_points, "diagram size bound (default 4)");
  star_check_cmd->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        const F c = parse_scalar<F>(c_text);
        Json report{{"valid", star_params_valid(c, ctx)}};
        bool ok = report["valid"].template get<bool>();
        if (ok) ok = star_laws_hold(StarParams<F>(c, ctx), max_points, report);
        if (!versus.empty()) {
          const bool eq = star_equivalent(c, parse_scalar<F>(versus));
          report["equivalent"] = eq;
          ok = ok && eq;
        }
        emit(report);
        return ok ? kOk : kFalse;
      });
    };
  });

  auto* fiber_cmd = app.add_subcommand("fiber", "fiber functors");
  fiber_cmd->require_subcommand(1);
  auto* fv = fiber_cmd->add_subcommand("validate", "check the trace conditions of DATA");
  fv->add_option("DATA", path1)->required();
  fv->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        try {
          Json out = fiber_json(read_fiber(path1, ctx));
          out["valid"] = true;
          emit(out);
          return kOk;
        } catch (const FiberError& e) {
          emit({{"valid", false}, {"error", e.what()}});
          return kFalse;
        }
      });
    };
  });
  auto* fe = fiber_cmd->add_subcommand("eval", "evaluate morphism F under DATA");
  fe->add_option("DATA", path1)->required();
  fe->add_option("F", path2)->required();
  fe->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        emit(to_json(evaluate(read_morphism<F>(path2), read_fiber(path1, ctx))));
        return kOk;
      });
    };
  });
  auto* feq = fiber_cmd->add_subcommand("equiv", "whether two fiber functors are equivalent");
  feq->add_option("DATA1", path1)->required();
  feq->add_option("DATA2", path2)->required();
  feq->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        require_rational<F>("fiber equiv");
        if constexpr (is_rational_v<F>) {
          const bool eq = fiber_equivalent(read_fiber(path1, ctx), read_fiber(path2, ctx));
          emit({{"equivalent", eq}});
          return eq ? kOk : kFalse;
        }
        return kUsage;
      });
    };
  });
  auto* fu = fiber_cmd->add_subcommand("unitary", "unitary data from eigenvalues");
  fu->add_option("--mu", mu_text, "comma-separated positive rationals")->required();
  fu->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        require_rational<F>("fiber unitary");
        if constexpr (is_rational_v<F>) {
          std::vector<Rational> mu;
          std::stringstream s(mu_text);
          for (std::string item; std::getline(s, item, ',');) mu.push_back(Rational::parse(item));
          try {
            Json out = fiber_json(unitary_from_eigenvalues(mu, ctx.d()));
            out["valid"] = true;
            emit(out);
            return kOk;
          } catch (const FiberError& e) {
            emit({{"valid", false}, {"error", e.what()}});
            return kFalse;
          }
        }
        return kUsage;
      });
    };
  });
  auto* ff = fiber_cmd->add_subcommand("faithful", "rank of Phi on K_{W,I}");
  ff->add_option("DATA", path1)->required();
  ff->add_option("W", w1)->required();
  ff->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        const auto [r, expected] = faithfulness_rank(Word::parse(w1), read_fiber(path1, ctx));
        emit({{"rank", r}, {"expected", expected}, {"faithful", r == expected}});
        return r == expected ? kOk : kFalse;
      });
    };
  });

  auto* hopf_cmd = app.add_subcommand("hopf", "Hopf algebra presentations");
  hopf_cmd->require_subcommand(1);
  auto* he = hopf_cmd->add_subcommand("emit", "relations of the fiber functor DATA");
  he->add_option("DATA", path1)->required();
  he->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        emit(to_json(emit_relations(read_fiber(path1, ctx))));
        return kOk;
      });
    };
  });
  auto* heu = hopf_cmd->add_subcommand("emit-unitary", "universal unitary relations of DATA");
  heu->add_option("DATA", path1)->required();
  heu->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        if constexpr (std::is_same_v<F, RationalFunction>) {
          throw UsageError("hopf emit-unitary needs a numeric backend");
        } else {
          emit(to_json(emit_unitary_relations(read_fiber(path1, ctx))));
        }
        return kOk;
      });
    };
  });
  bool unitary_point = false;
  auto* hc = hopf_cmd->add_subcommand("check", "substitute a classical point into the relations");
  hc->add_option("DATA", path1)->required();
  hc->add_option("--point", point, "matrix S as JSON file")->required();
  hc->add_flag("--unitary", unitary_point, "use the unitary presentation");
  hc->callback([&] {
    action = [&] {
      return with_field(cfg, [&](const auto& ctx) {
        using F = typename std::decay_t<decltype(ctx)>::scalar_type;
        const FiberData<F> fd = read_fiber(path1, ctx);
        const Matrix<F> s = matrix_from_json<F>(read_json(point));
        RelationSet<F> rs;
        if (unitary_point) {
          if constexpr (std::is_same_v<F, RationalFunction>) {
            throw UsageError("--unitary needs a numeric backend");
          } else {
            rs = emit_unitary_relations(fd);
          }
        } else {
          rs = emit_relations(fd);
        }
        const bool holds = classical_point_check(rs, s);
        emit({{"holds", holds}});
        return holds ? kOk : kFalse;
      });
    };
  });

  auto* accept_cmd = app.add_subcommand("accept", "run the acceptance suite");
  accept_cmd->callback([&] {
    action = [] { return print_acceptance(std::cout) == 0 ? kOk : kFalse; };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    with_field(cfg, [](const auto&) { return kOk; });
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
  } catch (const okd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
