// fjump command-line front end. Talks to libfjump exclusively through the
// C API in fjump.h; output is deterministic (canonical Groebner bases,
// sorted JSON keys) so runs are byte-comparable.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "fjump.h"

using nlohmann::json;

namespace {

struct RingDeleter {
  void operator()(fjump_ring* r) const { fjump_ring_free(r); }
};
struct PolyDeleter {
  void operator()(fjump_poly* p) const { fjump_poly_free(p); }
};
struct IdealDeleter {
  void operator()(fjump_ideal* i) const { fjump_ideal_free(i); }
};
using RingPtr = std::unique_ptr<fjump_ring, RingDeleter>;
using PolyPtr = std::unique_ptr<fjump_poly, PolyDeleter>;
using IdealPtr = std::unique_ptr<fjump_ideal, IdealDeleter>;

int exit_code(fjump_status s) {
  switch (s) {
    case FJUMP_OK:
      return 0;
    case FJUMP_ERROR_PARSE:
      return 2;
    case FJUMP_ERROR_PRECONDITION:
      return 3;
    case FJUMP_ERROR_CAP_EXCEEDED:
    case FJUMP_ERROR_OVERFLOW:
      return 4;
    default:
      return 1;
  }
}

struct CliError {
  fjump_status status;
  std::string message;
};

void check(fjump_status s, const std::string& context) {
  if (s != FJUMP_OK) throw CliError{s, context + ": " + fjump_last_error()};
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  fjump_free_string(s);
  return out;
}

struct Options {
  std::string ring_text;
  std::string poly_text;
  std::string config_path;
  uint32_t cap = 0;  // 0 = library default
  bool paranoid = false;

  fjump_options fj() const { return fjump_options{cap, paranoid ? 1 : 0}; }
};

// TOML-like key=value lines; '#' starts a comment. Flags override the file.
void apply_config(Options& opt, bool cap_flag_set, bool paranoid_flag_set) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw CliError{FJUMP_ERROR_PARSE, "cannot open config file " + opt.config_path};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw CliError{FJUMP_ERROR_PARSE, "config line " + std::to_string(lineno) + ": expected key=value"};
    auto trim = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key == "cap") {
      if (!cap_flag_set) opt.cap = uint32_t(std::stoul(value));
    } else if (key == "paranoid") {
      if (!paranoid_flag_set) opt.paranoid = value == "true" || value == "1";
    } else if (key == "order") {
      if (value != "grevlex")
        throw CliError{FJUMP_ERROR_PARSE,
                       "config line " + std::to_string(lineno) + ": only grevlex is supported"};
    } else {
      throw CliError{FJUMP_ERROR_PARSE, "config line " + std::to_string(lineno) + ": unknown key " + key};
    }
  }
}

RingPtr parse_ring(const Options& opt) {
  fjump_ring* r = nullptr;
  check(fjump_ring_parse(opt.ring_text.c_str(), &r), "ring");
  return RingPtr(r);
}

PolyPtr parse_poly(const fjump_ring* ring, std::string text) {
  if (text == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  }
  fjump_poly* p = nullptr;
  check(fjump_poly_parse(ring, text.c_str(), &p), "polynomial");
  return PolyPtr(p);
}

IdealPtr parse_ideal(const fjump_ring* ring, const std::string& text) {
  fjump_ideal* i = nullptr;
  check(fjump_ideal_parse_json(ring, text.c_str(), &i), "ideal");
  return IdealPtr(i);
}

json ideal_json(const fjump_ideal* I) {
  char* s = fjump_ideal_to_json(const_cast<fjump_ideal*>(I));
  if (!s) throw CliError{FJUMP_ERROR_INTERNAL, std::string("serialization: ") + fjump_last_error()};
  return json::parse(take_string(s));
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

// CSV field for an ideal: generators joined by ';' (they contain no commas).
std::string ideal_csv(const json& gens) {
  std::string out;
  for (const auto& g : gens) {
    if (!out.empty()) out += ";";
    out += g.get<std::string>();
  }
  return out;
}

int run_sweep(const Options& opt, uint32_t e, unsigned jobs) {
  RingPtr ring = parse_ring(opt);
  PolyPtr f = parse_poly(ring.get(), opt.poly_text);
  uint64_t p = fjump_ring_characteristic(ring.get());
  int64_t d = 1;
  for (uint32_t i = 0; i < e; ++i) d *= int64_t(p);
  d -= 1;

  struct Row {
    bool jumping = false;
    std::string alpha;
    std::string ideal;
    fjump_status status = FJUMP_OK;
    std::string error;
  };
  std::vector<Row> rows;
  rows.resize(size_t(d));
  std::mutex next_mu;
  int64_t next_r = 1;
  auto worker = [&] {
    while (true) {
      int64_t r;
      {
        std::lock_guard<std::mutex> lock(next_mu);
        if (next_r > d) return;
        r = next_r++;
      }
      Row& row = rows[size_t(r - 1)];
      row.alpha = std::to_string(r) + "/" + std::to_string(d);
      int is_jumping = 0;
      fjump_ideal* cert = nullptr;
      fjump_options fo = opt.fj();
      fjump_status s = fjump_is_jumping(f.get(), row.alpha.c_str(), &fo, &is_jumping, &cert, nullptr);
      row.status = s;
      if (s == FJUMP_OK) {
        row.jumping = is_jumping != 0;
        row.ideal = ideal_csv(ideal_json(cert));
      } else {
        row.error = fjump_last_error();
      }
      fjump_ideal_free(cert);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::cout << "r,alpha,is_jumping,ideal\n";
  for (const auto& row : rows) {
    if (row.status != FJUMP_OK) throw CliError{row.status, "sweep at alpha " + row.alpha + ": " + row.error};
    std::cout << row.alpha.substr(0, row.alpha.find('/')) << "," << row.alpha << ","
              << (row.jumping ? "true" : "false") << "," << row.ideal << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"F-jumping numbers, generalized test ideals, and F-Jacobian ideals "
               "of hypersurfaces over finite fields"};
  app.require_subcommand(1);

  Options opt;
  std::string alpha, exponent, ideal_text, seed_text, by_text;
  uint64_t q = 0;
  uint32_t sweep_e = 1;
  unsigned jobs = 1;
  bool trace = false;

  auto add_common = [&](CLI::App* cmd, bool needs_poly) {
    cmd->add_option("--ring", opt.ring_text, "ring, e.g. F13[x,y]")->required();
    if (needs_poly)
      cmd->add_option("--poly", opt.poly_text, "polynomial f ('-' reads stdin)")->required();
    cmd->add_option("--cap", opt.cap, "iteration cap for stabilizing chains");
    cmd->add_flag("--paranoid", opt.paranoid, "verify one extra step after stabilization");
    cmd->add_option("--config", opt.config_path, "key=value config file (cap, paranoid)");
  };

  CLI::App* tau = app.add_subcommand("tau", "generalized test ideal tau(f^c)");
  add_common(tau, true);
  tau->add_option("--exp", exponent, "exponent c as n or n/d")->required();

  CLI::App* tau_eps = app.add_subcommand("tau-eps", "left limit tau(f^(alpha-eps))");
  add_common(tau_eps, true);
  tau_eps->add_option("--alpha", alpha, "alpha as r/(p^e-1) or auto:n/m")->required();

  CLI::App* jump = app.add_subcommand("jump", "decide whether alpha is an F-jumping number");
  add_common(jump, true);
  jump->add_option("--alpha", alpha, "alpha as r/(p^e-1) or auto:n/m")->required();
  jump->add_flag("--trace", trace, "include the F-flag in the output");

  CLI::App* sweep = app.add_subcommand("sweep", "classify alpha = r/(p^e-1) for r = 1..p^e-1");
  add_common(sweep, true);
  sweep->add_option("--e", sweep_e, "Frobenius step e")->required();
  sweep->add_option("--jobs", jobs, "worker threads (affects wall time only)");

  CLI::App* fjac = app.add_subcommand("fjac", "F-Jacobian ideal from a seed");
  add_common(fjac, true);
  fjac->add_option("--seed", seed_text, "seed ideal as a JSON array of polynomials")->required();
  fjac->add_flag("--trace", trace, "include the flag in the output");

  CLI::App* fedder = app.add_subcommand("fedder", "Fedder's F-purity criterion at the origin");
  add_common(fedder, true);

  CLI::App* froot = app.add_subcommand("froot", "Frobenius root I^[1/q]");
  add_common(froot, false);
  froot->add_option("--ideal", ideal_text, "ideal as a JSON array")->required();
  froot->add_option("--q", q, "q = p^e")->required();

  CLI::App* bpower = app.add_subcommand("bpower", "bracket power I^[q]");
  add_common(bpower, false);
  bpower->add_option("--ideal", ideal_text, "ideal as a JSON array")->required();
  bpower->add_option("--q", q, "q = p^e")->required();

  CLI::App* colon = app.add_subcommand("colon", "colon ideal (I : g) or (I : J)");
  add_common(colon, false);
  colon->add_option("--ideal", ideal_text, "ideal I as a JSON array")->required();
  colon->add_option("--poly", opt.poly_text, "divisor g");
  colon->add_option("--by", by_text, "divisor ideal J as a JSON array");

  CLI::App* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_common(gb, false);
  gb->add_option("--ideal", ideal_text, "ideal as a JSON array")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* sub = app.get_subcommands().front();
    apply_config(opt, sub->count("--cap") > 0, sub->count("--paranoid") > 0);

    if (sweep->parsed()) return run_sweep(opt, sweep_e, jobs);

    RingPtr ring = parse_ring(opt);
    fjump_options fo = opt.fj();

    if (tau->parsed()) {
      PolyPtr f = parse_poly(ring.get(), opt.poly_text);
      fjump_ideal* out = nullptr;
      check(fjump_tau(f.get(), exponent.c_str(), &fo, &out), "tau");
      IdealPtr guard(out);
      emit(ideal_json(out));
    } else if (tau_eps->parsed()) {
      PolyPtr f = parse_poly(ring.get(), opt.poly_text);
      fjump_ideal* out = nullptr;
      check(fjump_tau_minus_epsilon(f.get(), alpha.c_str(), &fo, &out), "tau-eps");
      IdealPtr guard(out);
      emit(ideal_json(out));
    } else if (jump->parsed()) {
      PolyPtr f = parse_poly(ring.get(), opt.poly_text);
      int is_jumping = 0;
      fjump_ideal* cert = nullptr;
      char* trace_json = nullptr;
      check(fjump_is_jumping(f.get(), alpha.c_str(), &fo, &is_jumping, &cert,
                             trace ? &trace_json : nullptr),
            "jump");
      IdealPtr guard(cert);
      json out = {{"is_jumping", is_jumping != 0}, {"ideal", ideal_json(cert)}};
      if (trace) out["flag"] = json::parse(take_string(trace_json));
      emit(out);
    } else if (fjac->parsed()) {
      PolyPtr f = parse_poly(ring.get(), opt.poly_text);
      IdealPtr seed = parse_ideal(ring.get(), seed_text);
      fjump_ideal* out = nullptr;
      char* trace_json = nullptr;
      check(fjump_fjacobian(f.get(), seed.get(), &fo, &out, trace ? &trace_json : nullptr), "fjac");
      IdealPtr guard(out);
      int fpure = 0;
      check(fjump_fedder_fpure(f.get(), &fpure), "fedder");
      int is_unit = 0;
      check(fjump_ideal_is_unit(out, &is_unit), "fjac");
      json jf = ideal_json(out);
      json labels = {{"fpure", fpure != 0}, {"fregular_inferred", is_unit != 0}};
      // Isolated-singularity report label when J_F is (1) or the maximal ideal.
      {
        json vars = json::parse(take_string(fjump_ring_variables(ring.get())));
        IdealPtr m = parse_ideal(ring.get(), vars.dump());
        int eq = 0;
        check(fjump_ideal_equal(out, m.get(), &eq), "fjac");
        if (is_unit)
          labels["isolated_classification"] = "F-regular";
        else if (eq)
          labels["isolated_classification"] = "maximal-ideal";
      }
      json result = {{"fjacobian", jf}, {"labels", labels}};
      if (trace) result["flag"] = json::parse(take_string(trace_json));
      emit(result);
    } else if (fedder->parsed()) {
      PolyPtr f = parse_poly(ring.get(), opt.poly_text);
      int out = 0;
      check(fjump_fedder_fpure(f.get(), &out), "fedder");
      std::cout << (out ? "true" : "false") << "\n";
    } else if (froot->parsed() || bpower->parsed()) {
      IdealPtr I = parse_ideal(ring.get(), ideal_text);
      fjump_ideal* out = nullptr;
      if (froot->parsed())
        check(fjump_frobenius_root(I.get(), q, &out), "froot");
      else
        check(fjump_bracket_power(I.get(), q, &out), "bpower");
      IdealPtr guard(out);
      emit(ideal_json(out));
    } else if (colon->parsed()) {
      IdealPtr I = parse_ideal(ring.get(), ideal_text);
      fjump_ideal* out = nullptr;
      if (!by_text.empty()) {
        IdealPtr J = parse_ideal(ring.get(), by_text);
        check(fjump_colon_ideal(I.get(), J.get(), &out), "colon");
      } else if (!opt.poly_text.empty()) {
        PolyPtr g = parse_poly(ring.get(), opt.poly_text);
        check(fjump_colon_poly(I.get(), g.get(), &out), "colon");
      } else {
        throw CliError{FJUMP_ERROR_PRECONDITION, "colon needs --poly or --by"};
      }
      IdealPtr guard(out);
      emit(ideal_json(out));
    } else if (gb->parsed()) {
      IdealPtr I = parse_ideal(ring.get(), ideal_text);
      fjump_ideal* out = nullptr;
      check(fjump_groebner_basis(I.get(), &out), "gb");
      IdealPtr guard(out);
      emit(ideal_json(out));
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return exit_code(e.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
