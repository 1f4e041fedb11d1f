#include "enrq/jobs.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "enrq/descendent.hpp"
#include "enrq/invariants.hpp"

namespace enrq {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::vector<std::string>& allowed,
                const std::string& context) {
  if (!obj.is_object()) throw std::invalid_argument(context + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool found = false;
    for (const auto& a : allowed)
      if (key == a) {
        found = true;
        break;
      }
    if (!found) throw std::invalid_argument("unknown field '" + key + "' in " + context);
  }
}

long get_int(const json& params, const std::string& key) {
  if (!params.contains(key)) throw std::invalid_argument("missing field '" + key + "'");
  const json& v = params.at(key);
  if (!v.is_number_integer()) throw std::invalid_argument("field '" + key + "' must be an integer");
  return v.get<long>();
}

long get_int_or(const json& params, const std::string& key, long fallback) {
  return params.contains(key) ? get_int(params, key) : fallback;
}

Rat get_rat(const json& params, const std::string& key) {
  if (!params.contains(key)) throw std::invalid_argument("missing field '" + key + "'");
  const json& v = params.at(key);
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_string()) return parse_rat(v.get<std::string>());
  throw std::invalid_argument("field '" + key + "' must be a rational string");
}

QVec get_rat_vector(const json& v, const std::string& context) {
  if (!v.is_array()) throw std::invalid_argument(context + " must be an array");
  QVec out;
  for (const auto& e : v) {
    if (e.is_number_integer())
      out.emplace_back(e.get<long>());
    else if (e.is_string())
      out.push_back(parse_rat(e.get<std::string>()));
    else
      throw std::invalid_argument(context + " entries must be integers or rational strings");
  }
  return out;
}

Lattice get_lattice(const json& v, const std::string& context) {
  if (!v.is_array()) throw std::invalid_argument(context + " must be an array of rows");
  std::vector<std::vector<Int>> g;
  for (const auto& row : v) {
    if (!row.is_array()) throw std::invalid_argument(context + " rows must be arrays");
    std::vector<Int> r;
    for (const auto& e : row) {
      if (e.is_number_integer())
        r.emplace_back(e.get<long>());
      else if (e.is_string())
        r.emplace_back(e.get<std::string>());
      else
        throw std::invalid_argument(context + " entries must be integers");
    }
    g.push_back(std::move(r));
  }
  return Lattice(std::move(g));
}

json rat_array(const QVec& v) {
  json a = json::array();
  for (const auto& e : v) a.push_back(rat_str(e));
  return a;
}

json series_json(const IntSeries& s) {
  json a = json::array();
  for (const auto& c : s.coeffs) a.push_back(c.get_str());
  return a;
}

TwistedInput input_from_params(const json& params) {
  check_keys(params, {"c1sq", "ch2", "lsq"}, "params");
  long c1sq = get_int_or(params, "c1sq", 0);
  Rat ch2 = get_rat(params, "ch2");
  long lsq = get_int_or(params, "lsq", -6);
  return TwistedInput::from_c1sq(c1sq, std::move(ch2), lsq);
}

json cmd_pair(const json& params) {
  check_keys(params, {"gram", "x", "y"}, "params");
  if (!params.contains("gram") || !params.contains("x") || !params.contains("y"))
    throw std::invalid_argument("pair requires gram, x, y");
  Lattice l = get_lattice(params.at("gram"), "gram");
  QVec x = get_rat_vector(params.at("x"), "x");
  QVec y = get_rat_vector(params.at("y"), "y");
  return json{{"pairing", rat_str(pairing(l, x, y))}};
}

json cmd_vdim(const json& params) {
  TwistedInput in = input_from_params(params);
  Int n = twisted_vdim(in);
  return json{{"N", n.get_str()},
              {"defined", n >= 0},
              {"even", mpz_even_p(n.get_mpz_t()) != 0}};
}

json cmd_evir(const json& params) {
  TwistedInput in = input_from_params(params);
  InvariantReport rep = euler_vir(in);
  json parity{{"n_even", rep.n_even},
              {"vbar_sq_mod4", rep.vbar_parity_ok},
              {"dim_mod4", rep.dim_mod4_ok},
              {"c2_quarter", rep.c2_quarter_form}};
  json inputs{{"c1", rat_array(rep.inputs.c1)},
              {"ch2", rat_str(rep.inputs.ch2)},
              {"lsq", rep.inputs.lsq}};
  return json{{"N", rep.N.get_str()},
              {"defined", rep.defined},
              {"evir", rep.evir.get_str()},
              {"route_goettsche", rep.route_goettsche.get_str()},
              {"route_lefschetz", rep.route_lefschetz.get_str()},
              {"beauville_depth_required", rep.beauville_depth_required.get_str()},
              {"parity", parity},
              {"inputs", inputs}};
}

json cmd_goettsche(const json& params) {
  check_keys(params, {"euler", "terms"}, "params");
  long e = get_int(params, "euler");
  long terms = get_int(params, "terms");
  if (terms < 1) throw std::invalid_argument("terms must be >= 1");
  return json{{"coefficients", series_json(goettsche(e, static_cast<int>(terms - 1)))}};
}

json cmd_fix_euler(const json& params) {
  check_keys(params, {"n"}, "params");
  long n = get_int(params, "n");
  return json{{"n", n}, {"euler_fix", euler_fix(n).get_str()}};
}

json cmd_beauville_search(const json& params) {
  check_keys(params, {"norm", "bound", "gram"}, "params");
  long norm = get_int(params, "norm");
  long bound = get_int(params, "bound");
  Lattice anti =
      params.contains("gram") ? get_lattice(params.at("gram"), "gram") : anti_invariant_default();
  std::vector<QVec> hits = enumerate_norm(anti, Int(norm), bound);
  json witnesses = json::array();
  for (const auto& v : hits) {
    BeauvilleWitness w = check_beauville_class(v, anti);
    json entry{{"coords", rat_array(v)}};
    entry["n"] = w.n ? json(w.n->get_str()) : json(nullptr);
    witnesses.push_back(std::move(entry));
  }
  return json{{"lattice", anti.name()},
              {"norm", norm},
              {"count", witnesses.size()},
              {"witnesses", witnesses}};
}

struct MarkmanCase {
  ModelPtr k3;
  std::vector<MukaiVector> list_a, list_b;
  Rat big_n;
};

MarkmanCase markman_case(const json& params, bool allow_tol) {
  check_keys(params,
             allow_tol ? std::vector<std::string>{"r", "c1", "n", "tol"}
                       : std::vector<std::string>{"r", "c1", "n"},
             "params");
  long r = get_int(params, "r");
  Rat n = get_rat(params, "n");
  ModelPtr k3 = make_k3(k3_full_lattice());
  QVec c1 = params.contains("c1") ? get_rat_vector(params.at("c1"), "c1") : zero_vec(k3->ns.rank());
  if (c1.size() != static_cast<size_t>(k3->ns.rank()))
    throw std::invalid_argument("c1 must have 22 coordinates (U^3 + E8(-1)^2 basis)");
  if (!vec_is_integral(c1)) throw std::invalid_argument("c1 must be integral");
  std::vector<QVec> basis;
  for (int j = 0; j < k3->ns.rank(); ++j) {
    QVec e = zero_vec(k3->ns.rank());
    e[static_cast<size_t>(j)] = Rat(1);
    basis.push_back(std::move(e));
  }
  QVec c1_over_r = vec_scale(Rat(1, r), c1);
  auto [list_a, list_b] = markman_class_lists(k3, r, c1_over_r, n, basis);
  CohClass v(k3, Rat(r), c1, n);
  Rat big_n = (mukai_pairing(v, v) + 2) / 2;
  return MarkmanCase{std::move(k3), std::move(list_a), std::move(list_b), std::move(big_n)};
}

json cmd_markman_check(const json& params) {
  MarkmanCase mc = markman_case(params, /*allow_tol=*/false);
  GramCheck check = gram_equality_check(mc.list_a, mc.list_b);
  return json{{"equal", check.equal},
              {"max_deviation", rat_str(check.max_deviation)},
              {"N", rat_str(mc.big_n)},
              {"list_size", mc.list_a.size()}};
}

json cmd_isometry(const json& params) {
  MarkmanCase mc = markman_case(params, /*allow_tol=*/true);
  double tol = 1e-9;
  if (params.contains("tol")) {
    if (!params.at("tol").is_number()) throw std::invalid_argument("tol must be a number");
    tol = params.at("tol").get<double>();
  }
  QMat gram = mukai_space_gram(mc.k3);
  std::vector<QVec> v_list, w_list;
  for (const auto& v : mc.list_a) v_list.push_back(mukai_coords(v.cls));
  for (const auto& w : mc.list_b) w_list.push_back(mukai_coords(w.cls));
  NumericIsometry iso = construct_isometry(gram, v_list, w_list, tol);
  std::ostringstream gd, id;
  gd << std::scientific << std::setprecision(3) << iso.gram_deviation;
  id << std::scientific << std::setprecision(3) << iso.image_deviation;
  return json{{"ok", true},
              {"dimension", gram.size()},
              {"gram_deviation", gd.str()},
              {"image_deviation", id.str()}};
}

json cmd_fock_trace(const json& params) {
  check_keys(params, {"dims", "traces", "order"}, "params");
  if (!params.contains("dims") || !params.contains("traces"))
    throw std::invalid_argument("fock-trace requires dims and traces");
  auto to_longs = [](const json& v, const std::string& ctx) {
    if (!v.is_array()) throw std::invalid_argument(ctx + " must be an array");
    std::vector<long> out;
    for (const auto& e : v) {
      if (!e.is_number_integer()) throw std::invalid_argument(ctx + " entries must be integers");
      out.push_back(e.get<long>());
    }
    return out;
  };
  GradedTrace g(to_longs(params.at("dims"), "dims"), to_longs(params.at("traces"), "traces"));
  long order = get_int(params, "order");
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  return json{{"lefschetz_number", lefschetz_number(g)},
              {"coefficients", series_json(fock_trace_series(g, static_cast<int>(order)))}};
}

void print_table(const json& result, std::ostream& out, int indent = 0) {
  std::string pad(static_cast<size_t>(indent), ' ');
  size_t width = 0;
  for (const auto& [key, value] : result.items()) {
    (void)value;
    width = std::max(width, key.size());
  }
  for (const auto& [key, value] : result.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      print_table(value, out, indent + 2);
    } else if (value.is_array()) {
      out << pad << key << ":";
      for (const auto& e : value) out << " " << (e.is_string() ? e.get<std::string>() : e.dump());
      out << "\n";
    } else {
      out << pad << std::left << std::setw(static_cast<int>(width) + 2) << key
          << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace

int run_job(const nlohmann::json& job, std::ostream& out) {
  try {
    check_keys(job, {"command", "params", "output"}, "job");
    if (!job.contains("command") || !job.at("command").is_string())
      throw std::invalid_argument("job requires a string 'command'");
    std::string command = job.at("command").get<std::string>();
    json params = job.contains("params") ? job.at("params") : json::object();
    if (!params.is_object()) throw std::invalid_argument("params must be an object");
    std::string output = "json";
    if (job.contains("output")) {
      if (!job.at("output").is_string()) throw std::invalid_argument("output must be a string");
      output = job.at("output").get<std::string>();
      if (output != "json" && output != "table")
        throw std::invalid_argument("output must be 'json' or 'table'");
    }

    json result;
    if (command == "pair")
      result = cmd_pair(params);
    else if (command == "vdim")
      result = cmd_vdim(params);
    else if (command == "evir")
      result = cmd_evir(params);
    else if (command == "goettsche")
      result = cmd_goettsche(params);
    else if (command == "fix-euler")
      result = cmd_fix_euler(params);
    else if (command == "beauville-search")
      result = cmd_beauville_search(params);
    else if (command == "markman-check")
      result = cmd_markman_check(params);
    else if (command == "isometry")
      result = cmd_isometry(params);
    else if (command == "fock-trace")
      result = cmd_fock_trace(params);
    else
      throw std::invalid_argument("unknown command '" + command + "'");

    if (output == "table")
      print_table(result, out);
    else
      out << result.dump(2) << "\n";
    return 0;
  } catch (const std::invalid_argument& e) {
    out << json{{"error", {{"kind", "validation"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << json{{"error", {{"kind", "internal"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 3;
  }
}

}  // namespace enrq
