// Batch front end: parse JSON documents, run the library operations, emit
// canonical documents on stdout. Exit 0 on success, 1 when validation or a
// law check fails (report on stderr), 2 when an input does not parse.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cobcat/axioms.hpp"
#include "cobcat/cobordism.hpp"
#include "cobcat/decompose.hpp"
#include "cobcat/error.hpp"
#include "cobcat/eval.hpp"
#include "cobcat/int_compact.hpp"
#include "cobcat/json_io.hpp"
#include "cobcat/kleisli.hpp"
#include "cobcat/matrix_instance.hpp"
#include "cobcat/prof.hpp"
#include "cobcat/semiring.hpp"
#include "cobcat/wiring.hpp"

using namespace cobcat;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

Json load(const std::string& path) { return parse_json(read_input(path)); }

void emit(const Json& doc) { std::cout << doc.dump() << '\n'; }

std::map<Label, int> parse_dims(const std::string& s) {
  std::map<Label, int> dims;
  size_t start = 0;
  while (start <= s.size()) {
    const size_t comma = s.find(',', start);
    const std::string item =
        s.substr(start, comma == std::string::npos ? comma : comma - start);
    const size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("dims must look like a=2,b=2");
    try {
      dims[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ParseError("dims must look like a=2,b=2");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (dims.empty()) throw ParseError("dims must name at least one label");
  return dims;
}

/// Dispatches by semiring name to a generic callable taking the semiring
/// type as a tag.
template <typename F>
int with_semiring(const std::string& name, F&& f) {
  if (name == "nat") return f(NatSemiring{});
  if (name == "bool") return f(BoolSemiring{});
  if (name == "f64") return f(F64Semiring{});
  throw ParseError("unknown semiring: " + name);
}

/// Re-emits any recognized document in canonical form, validating it on
/// the way through. The document kind is told apart by its fields.
Json normalize_doc(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a document object");
  if (j.contains("wires")) return wiring_to_json(wiring_from_json(j));
  if (j.contains("arcs")) return cobordism_to_json(cobordism_from_json(j));
  if (j.contains("assignment")) return kleisli_to_json(kleisli_from_json(j));
  if (j.contains("category")) {
    auto doc = prof_from_json(j);
    validate_category(doc->category);
    validate_prof_monoid(doc->monoid);
    return prof_to_json(*doc);
  }
  if (j.contains("source")) {
    Json out;
    with_semiring(semiring_of(j), [&](auto tag) {
      using S = decltype(tag);
      MatrixInstance<S> t(dims_from_json(field(j, "dims")));
      out = int_to_doc(t, int_from_doc(t, j));
      return 0;
    });
    return out;
  }
  if (j.contains("entries")) {
    Json out;
    with_semiring(semiring_of(j), [&](auto tag) {
      using S = decltype(tag);
      const std::map<Label, int> dims = dims_from_json(field(j, "dims"));
      const Word dom = word_from_json(field(j, "dom"));
      const Word cod = word_from_json(field(j, "cod"));
      out = matrix_doc(matrix_from_doc<S>(j, dims, dom, cod), dom, cod, dims);
      return 0;
    });
    return out;
  }
  throw ParseError("unrecognized document kind");
}

int cmd_check_axioms(const std::string& dims_flag, const std::string& semiring,
                     int cases, std::uint64_t seed, int max_points) {
  const std::map<Label, int> dims = parse_dims(dims_flag);
  std::vector<Label> labels;
  for (const auto& [l, d] : dims) labels.push_back(l);
  return with_semiring(semiring, [&](auto tag) {
    using S = decltype(tag);
    MatrixInstance<S> t(dims);
    const LawCheckReport report =
        check_traced_axioms(&t, cases, seed, labels, max_points);
    if (report.all_passed()) {
      std::cout << report.summary();
      return 0;
    }
    std::cerr << report.summary();
    return 1;
  });
}

int cmd_check_prof(const std::string& path) {
  const auto doc = prof_from_json(load(path));
  std::ostringstream out;
  const char* stage = "category laws";
  try {
    validate_category(doc->category);
    out << "PASS category laws\n";
    stage = "module monoid laws";
    validate_prof_monoid(doc->monoid);
    out << "PASS module monoid laws\n";
    stage = "collapse";
    const Collapsed col = collapse(doc->monoid);
    validate_category(col.category);
    out << "PASS collapse\n";
  } catch (const Error& e) {
    std::cerr << out.str() << "FAIL " << stage << ": " << e.what() << '\n';
    return 1;
  }
  std::cout << out.str();
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"labeled oriented matchings as executable string diagrams"};
  app.require_subcommand(1);
  int rc = 0;

  std::string in_a, in_b, map_path, dims_flag = "a=2,b=2";
  std::string semiring = "nat";
  int over = 0, slot = 0, cases = 200, max_points = 2;
  std::uint64_t seed = 0;

  CLI::App* normalize = app.add_subcommand(
      "normalize", "re-emit any document in canonical form");
  normalize->add_option("input", in_a)->required();
  normalize->callback([&] { emit(normalize_doc(load(in_a))); });

  CLI::App* compose_cmd =
      app.add_subcommand("compose", "glue two matchings end to end");
  compose_cmd->add_option("first", in_a)->required();
  compose_cmd->add_option("second", in_b)->required();
  compose_cmd->callback([&] {
    emit(cobordism_to_json(compose(cobordism_from_json(load(in_a)),
                                   cobordism_from_json(load(in_b)))));
  });

  CLI::App* tensor_cmd =
      app.add_subcommand("tensor", "place two matchings side by side");
  tensor_cmd->add_option("first", in_a)->required();
  tensor_cmd->add_option("second", in_b)->required();
  tensor_cmd->callback([&] {
    emit(cobordism_to_json(tensor(cobordism_from_json(load(in_a)),
                                  cobordism_from_json(load(in_b)))));
  });

  CLI::App* trace_cmd =
      app.add_subcommand("trace", "feed a leading boundary prefix back");
  trace_cmd->add_option("input", in_a)->required();
  trace_cmd->add_option("--over", over, "number of leading points to close")
      ->required();
  trace_cmd->callback([&] {
    emit(cobordism_to_json(trace_cob(cobordism_from_json(load(in_a)), over)));
  });

  CLI::App* relabel_cmd =
      app.add_subcommand("relabel", "expand labels along a word map");
  relabel_cmd->add_option("input", in_a)->required();
  relabel_cmd->add_option("--map", map_path, "word map document")->required();
  relabel_cmd->callback([&] {
    emit(cobordism_to_json(relabel(cobordism_from_json(load(in_a)),
                                   kleisli_from_json(load(map_path)))));
  });

  CLI::App* decompose_cmd = app.add_subcommand(
      "decompose", "split into permutations around a sorted middle layer");
  decompose_cmd->add_option("input", in_a)->required();
  decompose_cmd->callback(
      [&] { emit(decomposition_to_json(decompose(cobordism_from_json(load(in_a))))); });

  CLI::App* wd = app.add_subcommand("wd", "wiring diagram operations");
  wd->require_subcommand(1);
  CLI::App* wd_flatten =
      wd->add_subcommand("flatten", "collapse a diagram to one matching");
  wd_flatten->add_option("input", in_a)->required();
  wd_flatten->callback([&] {
    emit(cobordism_to_json(wd_to_cobordism(wiring_from_json(load(in_a)))));
  });
  CLI::App* wd_subst =
      wd->add_subcommand("subst", "plug a diagram into one slot of another");
  wd_subst->add_option("outer", in_a)->required();
  wd_subst->add_option("inner", in_b)->required();
  wd_subst->add_option("--slot", slot, "slot to fill (0-based)")->required();
  wd_subst->callback([&] {
    emit(wiring_to_json(wd_substitute(wiring_from_json(load(in_a)), slot,
                                      wiring_from_json(load(in_b)))));
  });

  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "contract a matching to a matrix over a semiring");
  eval_cmd->add_option("input", in_a)->required();
  eval_cmd->add_option("--dims", dims_flag, "label dimensions, e.g. a=2,b=2")
      ->required();
  eval_cmd->add_option("--semiring", semiring, "nat, bool or f64");
  eval_cmd->callback([&] {
    const Cobordism c = cobordism_from_json(load(in_a));
    const std::map<Label, int> dims = parse_dims(dims_flag);
    with_semiring(semiring, [&](auto tag) {
      using S = decltype(tag);
      emit(matrix_doc(matrix_eval_oracle<S>(c, dims), word_of(c.dom),
                      word_of(c.cod), dims));
      return 0;
    });
  });

  CLI::App* int_grp =
      app.add_subcommand("int", "doubled-category operations");
  int_grp->require_subcommand(1);
  CLI::App* int_compose_cmd = int_grp->add_subcommand(
      "compose", "compose two doubled morphisms by middle feedback");
  int_compose_cmd->add_option("first", in_a)->required();
  int_compose_cmd->add_option("second", in_b)->required();
  int_compose_cmd->callback([&] {
    const Json jf = load(in_a);
    const Json jg = load(in_b);
    require(semiring_of(jf) == semiring_of(jg) &&
                field(jf, "dims") == field(jg, "dims"),
            Errc::type_mismatch,
            "the two morphisms live over different dims or semirings");
    with_semiring(semiring_of(jf), [&](auto tag) {
      using S = decltype(tag);
      MatrixInstance<S> t(dims_from_json(field(jf, "dims")));
      emit(int_to_doc(t,
                      int_compose(t, int_from_doc(t, jf), int_from_doc(t, jg))));
      return 0;
    });
  });

  CLI::App* check = app.add_subcommand("check", "law suites");
  check->require_subcommand(1);
  CLI::App* check_axioms = check->add_subcommand(
      "axioms", "run the seven feedback laws on a matrix instance");
  check_axioms->add_option("--cases", cases, "sampled cases per law");
  check_axioms->add_option("--seed", seed, "sampling seed")->required();
  check_axioms->add_option("--max-points", max_points,
                           "longest boundary word sampled");
  check_axioms->add_option("--dims", dims_flag,
                           "label dimensions, e.g. a=2,b=2");
  check_axioms->add_option("--semiring", semiring, "nat, bool or f64");
  check_axioms->callback([&] {
    rc = cmd_check_axioms(dims_flag, semiring, cases, seed, max_points);
  });
  CLI::App* check_prof = check->add_subcommand(
      "prof", "validate a finite module instance and its collapse");
  check_prof->add_option("input", in_a)->required();
  check_prof->callback([&] { rc = cmd_check_prof(in_a); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
