#pragma once

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polybasis/polybasis.hpp"
#include "polybasis/serialize.hpp"

namespace polybasis::cli {

using json::Json;

// Thrown for malformed user input that CLI11 itself cannot catch.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline void print_table(std::ostream& out, const Json& map) {
  std::size_t width = 5;
  for (const auto& [key, value] : map.items()) width = std::max(width, key.size());
  out << std::left << std::setw(static_cast<int>(width)) << "index" << "  coeff\n";
  for (const auto& [key, value] : map.items()) out << std::setw(static_cast<int>(width)) << key << "  " << value.dump() << '\n';
}

inline void print_rows(std::ostream& out, const SkylineFilling& f) {
  for (std::size_t r = f.nrows(); r-- > 0;) {
    out << std::right << std::setw(3) << r + 1 << " |";
    for (int v : f.rows()[r]) out << ' ' << v;
    out << '\n';
  }
}

inline std::string read_input(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read input file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline WeakComposition composition_arg(const std::string& text) {
  try {
    return parse_composition(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("bad composition '") + text + "': " + e.what());
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polynomial bases indexed by weak compositions: expansions, products, tableaux"};
  app.require_subcommand(1);
  bool table = false;
  app.add_flag("--table", table, "Aligned text instead of JSON");

  std::string id_name, from_name, to_name, index_text, method, lambda_text, model_name, input;
  std::size_t nvars = 0;
  bool witnesses = false, generic = false;
  int max_weight = 5, lr_weight = 4, lr_lambda = 3, m_max = 4;
  std::size_t max_len = 4, lr_len = 3;

  auto* basis = app.add_subcommand("basis", "Monomial expansion of a basis element");
  basis->add_option("--id", id_name, "Basis id")->required();
  basis->add_option("--index", index_text, "Comma-separated index")->required();
  basis->add_option("--n", nvars, "Number of variables (schur, quasi_schur)");
  basis->add_option("--method", method, "Description to use");

  auto* expand = app.add_subcommand("expand", "Expand one basis element in another basis");
  expand->add_option("--from", from_name, "Source basis")->required();
  expand->add_option("--to", to_name, "Target basis")->required();
  expand->add_option("--index", index_text, "Comma-separated weak composition")->required();
  expand->add_flag("--generic", generic, "Use triangular elimination even on poset relations");

  auto* product = app.add_subcommand("product", "Expand f_a * s_lambda by a combinatorial rule");
  product->add_option("--id", id_name, "atom, qkey or particle")->required();
  product->add_option("--index", index_text, "Weak composition a")->required();
  product->add_option("--lambda", lambda_text, "Partition lambda")->required();
  product->add_option("--n", nvars, "Number of variables (defaults to the index length)");
  product->add_flag("--witnesses", witnesses, "Also print the tableaux counted");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List the tableaux of a model");
  enumerate_cmd->add_option("--model", model_name, "ASSF FSSF MSSF LSSF QSSF qKT qKT1 QqKT revSSYT")->required();
  enumerate_cmd->add_option("--index", index_text, "Weak composition (or partition for revSSYT)")->required();
  enumerate_cmd->add_option("--n", nvars, "Largest entry for revSSYT");

  auto* biject = app.add_subcommand("biject", "Row-filling images of a reverse SSYT");
  biject->add_option("--input", input, "Reverse SSYT as JSON text or a file path")->required();

  auto* verify = app.add_subcommand("verify", "Run the positivity, product and description sweeps");
  verify->add_option("--max-weight", max_weight, "Largest |a| for the poset and description sweeps");
  verify->add_option("--max-len", max_len, "Largest length for the poset and description sweeps");
  verify->add_option("--lr-weight", lr_weight, "Largest |a| for the product sweep");
  verify->add_option("--lr-len", lr_len, "Largest length for the product sweep");
  verify->add_option("--lr-lambda", lr_lambda, "Largest |lambda| for the product sweep");

  auto* stable = app.add_subcommand("stable", "Truncations of f_{0^m x a} to the original variables");
  stable->add_option("--id", id_name, "Basis id")->required();
  stable->add_option("--index", index_text, "Weak composition a")->required();
  stable->add_option("--m", m_max, "Largest number of prepended zeros");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  auto emit = [&](const Json& j) { out << j.dump(2) << '\n'; };
  auto emit_map = [&](const Json& map) {
    if (table)
      print_table(out, map);
    else
      emit(map);
  };

  try {
    if (basis->parsed()) {
      const BasisId id = parse_basis_id(id_name);
      const auto index = parse_int_list(index_text);
      const std::size_t n = is_composition_indexed(id) ? index.size() : nvars;
      if (!is_composition_indexed(id) && n == 0) throw UsageError("--n is required for " + id_name);
      emit_map(json::coefficient_map(basis_element(id, index, n, method)));
      return 0;
    }
    if (expand->parsed()) {
      const BasisId source = parse_basis_id(from_name);
      const BasisId target = parse_basis_id(to_name);
      const WeakComposition a = composition_arg(index_text);
      const bool positive = poset_greater(source, target) || source == target;
      emit_map(json::coefficient_map(positive && !generic ? expand_positive(source, target, a)
                                                          : expand_generic(source, target, a)));
      return 0;
    }
    if (product->parsed()) {
      const BasisId id = parse_basis_id(id_name);
      const WeakComposition a = composition_arg(index_text);
      const Partition lambda = parse_partition(lambda_text);
      const std::size_t n = nvars == 0 ? a.size() : nvars;
      if (n != a.size()) throw UsageError("--n must equal the index length");
      const ProductResult result = product_rule(id, a, lambda, n);
      if (!witnesses) {
        emit_map(json::coefficient_map(result.expansion));
        return 0;
      }
      Json list = Json::array();
      for (const auto& L : result.lrs) list.push_back(json::to_json(L));
      for (const auto& p : result.pairs) list.push_back(json::to_json(p));
      if (table) {
        print_table(out, json::coefficient_map(result.expansion));
        out << list.size() << " witnesses\n";
      } else {
        emit({{"coefficients", json::coefficient_map(result.expansion)}, {"witnesses", std::move(list)}});
      }
      return 0;
    }
    if (enumerate_cmd->parsed()) {
      Json list = Json::array();
      if (model_name == "revSSYT") {
        const Partition lambda = parse_partition(index_text);
        const int n = nvars == 0 ? (lambda.empty() ? 0 : static_cast<int>(lambda.size())) : static_cast<int>(nvars);
        for (const auto& t : enumerate_revssyt(lambda, n)) list.push_back(json::to_json(t));
      } else {
        const Model model = parse_model(model_name);
        const WeakComposition a = composition_arg(index_text);
        const auto fillings = enumerate(model, a);
        if (table) {
          for (const auto& f : fillings) {
            print_rows(out, f);
            out << "    weight " << to_string(weight(f, a.size())) << "\n\n";
          }
          out << fillings.size() << " fillings\n";
          return 0;
        }
        for (const auto& f : fillings) list.push_back(json::to_json(f));
      }
      emit(list);
      return 0;
    }
    if (biject->parsed()) {
      const ReverseSSYT V = json::revssyt_from_json(Json::parse(read_input(input)));
      const SkylineFilling psi = right_row_fill(V);
      emit({{"input", json::to_json(V)},
            {"column_sets", json::to_json(column_sets(V))},
            {"column_fill", json::to_json(column_fill(V))},
            {"left_row_fill", json::to_json(left_row_fill(V))},
            {"left_runs", json::to_json(left_runs(V))},
            {"right_row_fill", json::to_json(psi)},
            {"right_runs", json::to_json(right_runs(V))},
            {"phi_of_right_row_fill", json::to_json(phi(psi))}});
      return 0;
    }
    if (verify->parsed()) {
      const PosetReport poset = verify_poset(max_weight, max_len);
      const ProductReport products = verify_products(lr_weight, lr_len, lr_lambda);
      const DescriptionReport descriptions = verify_descriptions(max_weight, max_len);
      const bool ok = poset.ok() && products.ok() && descriptions.ok();
      if (table) {
        out << std::left << std::setw(20) << "source" << std::setw(20) << "target" << std::setw(14) << "relation"
            << "ok\n";
        for (const auto& p : poset.pairs)
          out << std::setw(20) << to_string(p.source) << std::setw(20) << to_string(p.target) << std::setw(14)
              << to_string(p.relation) << (p.ok() ? "yes" : "NO") << '\n';
        out << "products checked " << products.checked << ", failures " << products.failures.size() << '\n';
        out << "descriptions checked " << descriptions.checked << ", mismatches " << descriptions.mismatches.size()
            << '\n';
        out << (ok ? "all ok" : "FAILED") << '\n';
      } else {
        emit({{"ok", ok},
              {"poset", json::to_json(poset)},
              {"products", json::to_json(products)},
              {"descriptions", json::to_json(descriptions)}});
      }
      return ok ? 0 : 1;
    }
    if (stable->parsed()) {
      const StableProbe probe = stable_limit_probe(parse_basis_id(id_name), composition_arg(index_text), m_max);
      if (table) {
        for (std::size_t m = 0; m < probe.truncations.size(); ++m) {
          out << "m=" << m << '\n';
          print_table(out, json::coefficient_map(probe.truncations[m]));
        }
        out << "stable " << (probe.stable() ? "yes" : "no") << ", vanishes " << (probe.vanishes() ? "yes" : "no")
            << '\n';
      } else {
        emit(json::to_json(probe));
      }
      return 0;
    }
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace polybasis::cli
