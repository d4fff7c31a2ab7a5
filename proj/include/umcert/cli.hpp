#pragma once

// Single command-line entry point. Machine-readable JSON goes to stdout
// (compact by default, indented plus a rendered summary under --pretty);
// exit codes: 0 ok, 1 domain error, 2 usage error.

#include "umcert/json_io.hpp"
#include "umcert/umcert.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace umcert {

struct CommandResult {
  int exit_code = 0;
  std::string output;  // complete stdout text
};

namespace cli_detail {

inline RingKind parse_ring(const std::string& name) {
  if (name == "gaussian") return RingKind::gaussian;
  if (name == "eisenstein") return RingKind::eisenstein;
  throw domain_error("unknown ring '" + name + "' (gaussian|eisenstein)");
}

// "[[e,e],[e,e]]" with entries free of brackets/commas
inline std::array<std::string, 4> split_mat2(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s += ch;
  require(s.size() >= 9 && s.substr(0, 2) == "[[" &&
              s.substr(s.size() - 2) == "]]",
          "matrix must look like [[a,b],[c,d]]");
  std::string inner = s.substr(2, s.size() - 4);
  size_t mid = inner.find("],[");
  require(mid != std::string::npos, "matrix must have two rows");
  auto split_pair = [](const std::string& row) {
    size_t comma = row.find(',');
    require(comma != std::string::npos && row.find(',', comma + 1) == std::string::npos,
            "matrix row must have two entries");
    return std::pair<std::string, std::string>(row.substr(0, comma),
                                               row.substr(comma + 1));
  };
  auto [a, b] = split_pair(inner.substr(0, mid));
  auto [c, d] = split_pair(inner.substr(mid + 3));
  return {a, b, c, d};
}

inline Mat2 parse_mat2(RingKind kind, const std::string& text) {
  auto e = split_mat2(text);
  return {parse_quad(kind, e[0]), parse_quad(kind, e[1]),
          parse_quad(kind, e[2]), parse_quad(kind, e[3])};
}

inline ZnMat2 parse_zn_mat2(const Int& n, const std::string& text) {
  auto e = split_mat2(text);
  return {n, parse_int(e[0]), parse_int(e[1]), parse_int(e[2]),
          parse_int(e[3])};
}

inline PolyRow parse_row(const std::string& text) {
  std::vector<IntPoly> entries;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      entries.push_back(parse_poly(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  entries.push_back(parse_poly(cur));
  return PolyRow(std::move(entries));
}

inline void render_pretty(std::ostringstream& out, const Json& envelope) {
  if (envelope.contains("payload") && envelope["payload"].contains("summary")) {
    out << "summary:\n";
    for (const auto& line : envelope["payload"]["summary"])
      out << "  " << line.get<std::string>() << "\n";
  }
  out << envelope.dump(2) << "\n";
}

}  // namespace cli_detail

// Parses argv (without the program name), runs the matching subcommand, and
// returns the full stdout text plus the process exit code.
inline CommandResult run_command(const std::vector<std::string>& args) {
  using cli_detail::parse_ring;
  namespace cd = cli_detail;

  CLI::App app{"exact certificates for power residue symbols, SK1 invariants, "
               "unimodular rows and finite-ring stable ranges"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable rendering");

  std::string ring = "gaussian";
  std::string num, den, value, ideal_text, a_text, b_text, matrix_text, row_text,
      theta_text;
  unsigned degree = 2;
  long modulus = 0, conductor = 0, deg_bound = 1, coeff_bound = 3, bound = 8;
  bool exhaustive = false;

  CLI::App* c_symbol = app.add_subcommand("symbol", "m-th power residue symbol");
  c_symbol->add_option("--ring", ring);
  c_symbol->add_option("--num", num)->required();
  c_symbol->add_option("--den", den)->required();
  c_symbol->add_option("--m", degree)->required();

  std::string factor_ring = "integer";
  CLI::App* c_factor = app.add_subcommand("factor", "prime factorization");
  c_factor->add_option("--ring", factor_ring);
  c_factor->add_option("--value", value)->required();

  CLI::App* c_bmsr = app.add_subcommand("bms-r", "Bass-Milnor-Serre divisor r(I)");
  c_bmsr->add_option("--ring", ring);
  c_bmsr->add_option("--ideal", ideal_text)->required();

  CLI::App* c_complete = app.add_subcommand("complete", "complete (a, b) to SL2(S, I)");
  c_complete->add_option("--ring", ring);
  c_complete->add_option("--a", a_text)->required();
  c_complete->add_option("--b", b_text)->required();
  c_complete->add_option("--ideal", ideal_text)->required();

  CLI::App* c_sk1 = app.add_subcommand("sk1", "SK1 invariant of a matrix in SL2(S, I)");
  c_sk1->add_option("--ring", ring);
  c_sk1->add_option("--matrix", matrix_text)->required();
  c_sk1->add_option("--ideal", ideal_text)->required();

  CLI::App* c_unimod = app.add_subcommand("unimodular", "Bezout certificate or obstruction");
  c_unimod->add_option("--row", row_text)->required();

  CLI::App* c_stab = app.add_subcommand("stability", "non-stability obstruction pipeline");
  c_stab->add_option("--row", row_text)->required();
  c_stab->add_option("--ring", ring);
  c_stab->add_option("--theta", theta_text);
  c_stab->add_option("--conductor", conductor);

  CLI::App* c_search = app.add_subcommand("stability-search", "bounded stabilizer scan");
  c_search->add_option("--row", row_text)->required();
  c_search->add_option("--deg", deg_bound);
  c_search->add_option("--coeff", coeff_bound);

  CLI::App* c_sr = app.add_subcommand("sr", "stable rank of Z/n by exhaustion");
  c_sr->add_option("--modulus", modulus)->required();

  CLI::App* c_lift = app.add_subcommand("sl2-lift", "lift SL2(Z/n) to SL2(Z)");
  c_lift->add_option("--modulus", modulus)->required();
  c_lift->add_option("--matrix", matrix_text)->required();

  CLI::App* c_ge2 = app.add_subcommand("ge2", "elementary decompositions over Z/n");
  c_ge2->add_option("--modulus", modulus)->required();
  c_ge2->add_flag("--exhaustive", exhaustive);
  c_ge2->add_option("--matrix", matrix_text);

  CLI::App* c_lemma = app.add_subcommand("lemma-check", "stable-row / SL2-lift equivalence");
  c_lemma->add_option("--modulus", modulus)->required();
  c_lemma->add_option("--bound", bound);

  CLI::App* c_paper = app.add_subcommand(
      "reproduce-paper", "run the full certificate chain for the headline row");
  (void)c_paper;

  std::vector<std::string> argv_copy = args;
  try {
    std::vector<const char*> argv;
    argv.push_back("umcert");
    for (const std::string& s : argv_copy) argv.push_back(s.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return {0, app.help() + "\n"};
  } catch (const CLI::ParseError& e) {
    Json envelope = {{"schema", "umcert.v1"},
                     {"status", "error"},
                     {"error", std::string("usage: ") + e.what()},
                     {"diagnostics", Json::array()},
                     {"elapsed_ms", 0}};
    return {2, envelope.dump() + "\n"};
  }

  std::string command;
  std::function<Json()> handler;

  if (c_symbol->parsed()) {
    command = "symbol";
    handler = [&]() {
      RingKind kind = parse_ring(ring);
      QuadInt b = parse_quad(kind, num);
      PrincipalIdeal ideal(parse_quad(kind, den));
      RootOfUnity z = symbol({b, ideal, degree});
      Json payload = to_json(kind, z);
      payload["query"] = {{"num", to_json(b)}, {"den", to_json(ideal)}, {"m", degree}};
      return payload;
    };
  } else if (c_factor->parsed()) {
    command = "factor";
    handler = [&]() -> Json {
      if (factor_ring == "integer") return to_json(factor_int(parse_int(value)));
      RingKind kind = parse_ring(factor_ring);
      return to_json(factor(parse_quad(kind, value)));
    };
  } else if (c_bmsr->parsed()) {
    command = "bms-r";
    handler = [&]() {
      RingKind kind = parse_ring(ring);
      return to_json(r_of_ideal(kind, PrincipalIdeal(parse_quad(kind, ideal_text))));
    };
  } else if (c_complete->parsed()) {
    command = "complete";
    handler = [&]() {
      RingKind kind = parse_ring(ring);
      PrincipalIdeal ideal(parse_quad(kind, ideal_text));
      Mat2 m = complete_sl2_rel(parse_quad(kind, a_text), parse_quad(kind, b_text), ideal);
      Json payload = {{"matrix", to_json(m)},
                      {"det", format_quad(det(m))},
                      {"in_sl2_rel", in_sl2_rel(m, ideal).ok}};
      return payload;
    };
  } else if (c_sk1->parsed()) {
    command = "sk1";
    handler = [&]() {
      RingKind kind = parse_ring(ring);
      PrincipalIdeal ideal(parse_quad(kind, ideal_text));
      return to_json(sk1_invariant(cd::parse_mat2(kind, matrix_text), ideal));
    };
  } else if (c_unimod->parsed()) {
    command = "unimodular";
    handler = [&]() { return to_json(unimodular_certificate(cd::parse_row(row_text))); };
  } else if (c_stab->parsed()) {
    command = "stability";
    handler = [&]() {
      PolyRow row = cd::parse_row(row_text);
      ObstructionReport rep = [&]() {
        if (theta_text.empty()) return obstruction_auto(row);
        RingKind kind = parse_ring(ring);
        QuadInt theta = parse_quad(kind, theta_text);
        Int f = conductor > 0 ? Int(conductor) : int_gcd(theta.a, theta.b);
        return obstruction(row, kind, theta, f);
      }();
      Json payload = to_json(rep);
      payload["verified"] = verify_obstruction_report(rep);
      return payload;
    };
  } else if (c_search->parsed()) {
    command = "stability-search";
    handler = [&]() {
      return to_json(search_stabilizer(cd::parse_row(row_text), deg_bound, coeff_bound));
    };
  } else if (c_sr->parsed()) {
    command = "sr";
    handler = [&]() {
      require(modulus >= 2, "sr: modulus must be at least 2");
      require(modulus <= 1024, "sr: modulus exceeds exhaustion bound 1024");
      Int n(modulus);
      unsigned rank = stable_rank(n);
      Json payload = {{"modulus", to_decimal(n)},
                      {"stable_rank", rank},
                      {"rows_checked", um_rows(n, rank + 1).size()}};
      return payload;
    };
  } else if (c_lift->parsed()) {
    command = "sl2-lift";
    handler = [&]() {
      require(modulus >= 2, "sl2-lift: modulus must be at least 2");
      ZnMat2 m = cd::parse_zn_mat2(Int(modulus), matrix_text);
      IntMat2 lift = sl2_lift(m);
      return Json{{"input", to_json(m)},
                  {"lift", to_json(lift)},
                  {"det", to_decimal(lift.det())}};
    };
  } else if (c_ge2->parsed()) {
    command = "ge2";
    handler = [&]() -> Json {
      require(modulus >= 2, "ge2: modulus must be at least 2");
      Int n(modulus);
      if (!exhaustive) {
        require(!matrix_text.empty(), "ge2: need --matrix or --exhaustive");
        ZnMat2 m = cd::parse_zn_mat2(n, matrix_text);
        ElementaryWord word = e2_decompose_mod(m);
        return {{"matrix", to_json(m)},
                {"word", to_json(word)},
                {"recomposes", recompose_mod(word, n) == m}};
      }
      require(modulus <= 16, "ge2: exhaustive bound is 16");
      unsigned long count = 0;
      size_t max_len = 0;
      for (Int a = 0; a < n; ++a)
        for (Int b = 0; b < n; ++b)
          for (Int c = 0; c < n; ++c)
            for (Int d = 0; d < n; ++d) {
              if (floor_mod(a * d - b * c, n) != 1) continue;
              ZnMat2 m(n, a, b, c, d);
              ElementaryWord word = e2_decompose_mod(m);
              if (!(recompose_mod(word, n) == m))
                internal_error("ge2: recomposition failed");
              ++count;
              max_len = std::max(max_len, word.moves.size());
            }
      return {{"modulus", to_decimal(n)},
              {"count", count},
              {"all_recompose", true},
              {"max_word_length", max_len}};
    };
  } else if (c_lemma->parsed()) {
    command = "lemma-check";
    handler = [&]() {
      require(modulus >= 2, "lemma-check: modulus must be at least 2");
      return to_json(check_stable_row_lemma(Int(modulus), Int(bound)));
    };
  } else if (c_paper->parsed()) {
    command = "reproduce-paper";
    handler = [&]() {
      Json summary = Json::array();
      PolyRow row = cd::parse_row("1+x,12,x^2+16");
      BezoutCertificate cert = require_unimodular(row);
      summary.push_back(std::string("row (x+1, 12, x^2+16): Bezout certificate ") +
                        (verify_certificate(cert) ? "verified" : "FAILED"));
      RingKind kind = RingKind::gaussian;
      PrincipalIdeal ideal(QuadInt::from_int(kind, 4));
      BmsDivisor divisor = r_of_ideal(kind, ideal);
      summary.push_back("r(4*Z[i]) = " + std::to_string(divisor.r));
      Mat2 completion = complete_sl2_rel(QuadInt(kind, 1, 4),
                                         QuadInt::from_int(kind, 12), ideal);
      Sk1Certificate sk1 = sk1_invariant(completion, ideal);
      summary.push_back("completion of (1+4i, 12) mod 4Z[i]: sk1 invariant = " +
                        format_quad(embed_root(kind, sk1.value)));
      ObstructionReport rep = obstruction(row, kind, QuadInt(kind, 0, 4), Int(4));
      summary.push_back(std::string("obstruction at theta = 4i, conductor 4: verdict ") +
                        verdict_name(rep.verdict));
      bool ok = verify_certificate(cert) && divisor.r == 2 &&
                sk1.value == RootOfUnity(2, 1) &&
                rep.verdict == Verdict::not_stable &&
                verify_obstruction_report(rep);
      return Json{{"row", to_json(row)},
                  {"certificate", to_json(cert)},
                  {"divisor", to_json(divisor)},
                  {"completion", to_json(completion)},
                  {"sk1", to_json(sk1)},
                  {"report", to_json(rep)},
                  {"summary", summary},
                  {"all_ok", ok}};
    };
  } else {
    internal_error("run_command: no subcommand matched");
  }

  Json envelope = {{"schema", "umcert.v1"}, {"command", command}};
  auto start = std::chrono::steady_clock::now();
  int exit_code = 0;
  try {
    Json payload = handler();
    envelope["status"] = "ok";
    envelope["payload"] = std::move(payload);
    envelope["diagnostics"] = Json::array();
  } catch (const not_unimodular_error& e) {
    envelope["status"] = "error";
    envelope["error"] = e.what();
    envelope["obstruction"] = to_json(e.obstruction);
    envelope["diagnostics"] = Json::array();
    exit_code = 1;
  } catch (const domain_error& e) {
    envelope["status"] = "error";
    envelope["error"] = e.what();
    envelope["diagnostics"] = Json::array();
    exit_code = 1;
  }
  auto end = std::chrono::steady_clock::now();
  long long ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
  // reproduce-paper output is byte-for-byte deterministic; pin its timing
  envelope["elapsed_ms"] = command == "reproduce-paper" ? 0 : ms;

  std::ostringstream out;
  if (pretty)
    cli_detail::render_pretty(out, envelope);
  else
    out << envelope.dump() << "\n";
  return {exit_code, out.str()};
}

}  // namespace umcert
