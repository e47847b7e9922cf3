// alcwalk: command-line front end for the alcove-walk multiplicity library.
// Talks to the shared library exclusively through its C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alcovewalks/alcovewalks.h"

namespace {

using nlohmann::json;

struct DatumDeleter {
  void operator()(aw_datum* d) const { aw_datum_free(d); }
};
using DatumPtr = std::unique_ptr<aw_datum, DatumDeleter>;

struct StringDeleter {
  void operator()(char* s) const { aw_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(aw_status st) { return st == AW_ERR_INTERNAL ? 2 : 1; }

[[noreturn]] void die(aw_status st) {
  std::cerr << "error: " << aw_last_error() << "\n";
  std::exit(exit_code_for(st));
}

DatumPtr open_datum(const std::string& spec) {
  aw_datum* d = nullptr;
  std::ifstream file(spec);
  if (file.good()) {
    std::stringstream ss;
    ss << file.rdbuf();
    aw_status st = aw_datum_new_config(ss.str().c_str(), &d);
    if (st != AW_OK) die(st);
  } else {
    aw_status st = aw_datum_new_preset(spec.c_str(), &d);
    if (st != AW_OK) die(st);
  }
  return DatumPtr(d);
}

std::vector<long long> parse_vector(const aw_datum* d, const std::string& s, const char* what) {
  std::vector<long long> v;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) continue;
      try {
        v.push_back(std::stoll(cur));
      } catch (const std::exception&) {
        std::cerr << "error: bad integer '" << cur << "' in --" << what << "\n";
        std::exit(1);
      }
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (static_cast<int>(v.size()) != aw_datum_rank(d)) {
    std::cerr << "error: --" << what << " needs " << aw_datum_rank(d) << " integers\n";
    std::exit(1);
  }
  return v;
}

std::vector<int> parse_levi(const std::string& s) {
  std::vector<int> v;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) v.push_back(std::stoi(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return v;
}

std::string poly_text(const json& coeffs) {
  if (coeffs.empty()) return "0";
  std::string s;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    long long c = coeffs[static_cast<std::size_t>(i)].get<long long>();
    if (c == 0) continue;
    if (!s.empty())
      s += (c > 0) ? " + " : " - ";
    else if (c < 0)
      s += "-";
    long long a = c < 0 ? -c : c;
    if (i == 0) {
      s += std::to_string(a);
    } else {
      if (a != 1) s += std::to_string(a) + "*";
      s += (i == 1) ? "q" : "q^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string join_strings(const json& arr, const std::string& sep) {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += sep;
    s += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return s;
}

void print_walk_line(const json& w) {
  std::string type = join_strings(w["type_word"], " ");
  std::string labels = join_strings(w["labels"], " ");
  std::cout << "  type [" << type << "]  labels [" << labels << "]  cell q^" << w["cplus"]
            << "*(q-1)^" << w["fplus"] << "  end " << join_strings(w["end_vertex"], ",") << "\n";
}

void print_mult_report(const std::string& text, bool as_json) {
  if (as_json) {
    std::cout << text << "\n";
    return;
  }
  json j = json::parse(text);
  long long mult = j["multiplicity"].get<long long>();
  bool family_nonempty = j["family_walk_count"].get<long long>() > 0;
  std::cout << "multiplicity: " << mult;
  if (mult == 0) std::cout << " (family nonempty: " << (family_nonempty ? "true" : "false") << ")";
  std::cout << "\n";
  std::cout << "dimension bound: " << j["dimension_bound"] << "\n";
  long long walks = 0;
  for (const auto& e : j["per_w"]) walks += e["max_walk_count"].get<long long>();
  if (walks > 0) {
    std::cout << "maximal walks (" << walks << "):\n";
    for (const auto& e : j["per_w"])
      for (const auto& w : e["max_walks"]) print_walk_line(w);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alcwalk: weight, branching and tensor multiplicities from positively folded alcove walks"};
  app.require_subcommand(1);

  std::string datum, mu_s, lambda_s, nu_s, levi_s, svg_path, type_s, word_s, end_s;
  bool as_json = false, max_dim_only = false;
  int max_len = 6;

  auto add_datum = [&](CLI::App* c) {
    c->add_option("--datum", datum, "preset name or datum config file")->required();
  };

  CLI::App* mult = app.add_subcommand("mult", "multiplicity queries");
  mult->require_subcommand(1);
  CLI::App* mw = mult->add_subcommand("weight", "weight multiplicity dim V_mu(lambda)");
  CLI::App* mb = mult->add_subcommand("branch", "branching multiplicity [V_mu : V^M_lambda]");
  CLI::App* mt = mult->add_subcommand("tensor", "tensor multiplicity [V_mu (x) V_lambda : V_nu]");
  for (CLI::App* c : {mw, mb, mt}) {
    add_datum(c);
    c->add_option("--mu", mu_s, "dominant coweight")->required();
    c->add_option("--lambda", lambda_s, "coweight")->required();
    c->add_flag("--json", as_json, "print the JSON report");
  }
  mb->add_option("--levi", levi_s, "Levi subset: comma-separated simple root indices (1-based)");
  mt->add_option("--nu", nu_s, "dominant coweight")->required();

  CLI::App* walks = app.add_subcommand("walks", "walk enumeration and pictures");
  walks->require_subcommand(1);
  CLI::App* we = walks->add_subcommand("enumerate", "enumerate positively folded walks of one type");
  add_datum(we);
  we->add_option("--type-of", type_s, "coweight v: walks of the type of (t_{-v})_0")->required();
  we->add_option("--word", word_s, "explicit reduced word, e.g. s1,s0,s2");
  we->add_option("--levi", levi_s, "orientation Levi subset (default: torus)");
  we->add_option("--end-vertex", end_s, "endpoint vertex constraint");
  we->add_flag("--max-dim-only", max_dim_only, "keep only walks of maximal dimension");
  we->add_flag("--json", as_json, "print the JSON report");
  CLI::App* wr = walks->add_subcommand("render", "render the maximal weight walks as SVG (rank 2)");
  add_datum(wr);
  wr->add_option("--mu", mu_s, "dominant coweight")->required();
  wr->add_option("--lambda", lambda_s, "coweight whose orbit to draw");
  wr->add_option("--svg", svg_path, "output file (default: stdout)");

  CLI::App* paving = app.add_subcommand("paving", "cell polynomial report for a family");
  add_datum(paving);
  paving->add_option("--mu", mu_s, "dominant coweight")->required();
  paving->add_option("--lambda", lambda_s, "coweight")->required();
  paving->add_option("--nu", nu_s, "tensor target (convolution paving when given)");
  paving->add_option("--levi", levi_s, "Levi subset");
  paving->add_flag("--json", as_json, "print the JSON report");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  add_datum(verify);
  verify->add_option("--max-len", max_len, "maximal type length (default 6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  DatumPtr d = open_datum(datum);

  auto vec_arg = [&](const std::string& s, const char* what) { return parse_vector(d.get(), s, what); };

  if (mw->parsed() || mb->parsed()) {
    auto mu = vec_arg(mu_s, "mu");
    auto lambda = vec_arg(lambda_s, "lambda");
    std::vector<int> levi = parse_levi(levi_s);
    char* out = nullptr;
    aw_status st = mw->parsed() ? aw_report_weight(d.get(), mu.data(), lambda.data(), &out)
                                : aw_report_branch(d.get(), mu.data(), lambda.data(), levi.data(),
                                                   static_cast<int>(levi.size()), &out);
    if (st != AW_OK) die(st);
    CString guard(out);
    print_mult_report(out, as_json);
    return 0;
  }

  if (mt->parsed()) {
    auto mu = vec_arg(mu_s, "mu");
    auto lambda = vec_arg(lambda_s, "lambda");
    auto nu = vec_arg(nu_s, "nu");
    char* out = nullptr;
    aw_status st = aw_report_tensor(d.get(), mu.data(), lambda.data(), nu.data(), &out);
    if (st != AW_OK) die(st);
    CString guard(out);
    print_mult_report(out, as_json);
    return 0;
  }

  if (we->parsed()) {
    auto type_of = vec_arg(type_s, "type-of");
    std::vector<int> levi = parse_levi(levi_s);
    std::vector<long long> end;
    if (!end_s.empty()) end = vec_arg(end_s, "end-vertex");
    char* out = nullptr;
    aw_status st = aw_walks_enumerate(d.get(), type_of.data(), word_s.empty() ? nullptr : word_s.c_str(),
                                      levi.data(), static_cast<int>(levi.size()),
                                      end.empty() ? nullptr : end.data(), max_dim_only ? 1 : 0, &out);
    if (st != AW_OK) die(st);
    CString guard(out);
    if (as_json) {
      std::cout << out << "\n";
    } else {
      json j = json::parse(std::string(out));
      std::cout << "type [" << join_strings(j["type_word"], " ") << "]  walks: " << j["walk_count"]
                << "  total cells: " << poly_text(j["cell_polynomial"]) << "\n";
      for (const auto& w : j["walks"]) print_walk_line(w);
    }
    return 0;
  }

  if (wr->parsed()) {
    auto mu = vec_arg(mu_s, "mu");
    std::vector<long long> lambda;
    if (!lambda_s.empty()) lambda = vec_arg(lambda_s, "lambda");
    char* out = nullptr;
    aw_status st = aw_render_walks_svg(d.get(), mu.data(), lambda.empty() ? nullptr : lambda.data(), &out);
    if (st != AW_OK) die(st);
    CString guard(out);
    if (svg_path.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(svg_path, std::ios::binary);
      if (!f) {
        std::cerr << "error: cannot write " << svg_path << "\n";
        return 1;
      }
      f << out;
    }
    return 0;
  }

  if (paving->parsed()) {
    auto mu = vec_arg(mu_s, "mu");
    auto lambda = vec_arg(lambda_s, "lambda");
    std::vector<long long> nu;
    if (!nu_s.empty()) nu = vec_arg(nu_s, "nu");
    std::vector<int> levi = parse_levi(levi_s);
    char* out = nullptr;
    aw_status st = aw_report_paving(d.get(), mu.data(), lambda.data(), nu.empty() ? nullptr : nu.data(),
                                    levi.data(), static_cast<int>(levi.size()), &out);
    if (st != AW_OK) die(st);
    CString guard(out);
    if (as_json) {
      std::cout << out << "\n";
    } else {
      json j = json::parse(std::string(out));
      std::cout << "family walks: " << j["family_walk_count"] << "\n";
      std::cout << "total cell polynomial: " << poly_text(j["cell_polynomial"]) << "\n";
      std::cout << "dimension bound: " << j["dimension_bound"] << "\n";
      for (const auto& e : j["per_w"]) {
        std::cout << "  type [" << join_strings(e["type_word"], " ") << "]  walks " << e["walk_count"]
                  << "  cells " << poly_text(e["cell_polynomial"]) << "\n";
      }
    }
    return 0;
  }

  if (verify->parsed()) {
    char* report = nullptr;
    int ok = 0;
    aw_status st = aw_verify(d.get(), max_len, &report, &ok);
    if (st != AW_OK) die(st);
    CString guard(report);
    std::cout << report;
    if (!ok) {
      std::cerr << "verify: internal invariant FAILED\n";
      return 2;
    }
    std::cout << "verify: all checks passed\n";
    return 0;
  }

  return 1;
}
