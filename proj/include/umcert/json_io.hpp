#pragma once

// JSON serialization for every public type. Integers of unbounded size are
// always emitted as decimal strings; small counts are plain JSON numbers.

#include "umcert/bms.hpp"
#include "umcert/finite_rings.hpp"
#include "umcert/int.hpp"
#include "umcert/intpoly.hpp"
#include "umcert/numtheory.hpp"
#include "umcert/quad.hpp"
#include "umcert/residue.hpp"
#include "umcert/stability.hpp"
#include "umcert/unimodular.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace umcert {

using Json = nlohmann::ordered_json;

inline Json to_json(const Int& v) { return to_decimal(v); }

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const IntFactorization& f) {
  Json factors = Json::array();
  for (const auto& pf : f.factors)
    factors.push_back({{"prime", to_json(pf.prime)}, {"exponent", pf.exponent}});
  return {{"sign", f.sign}, {"factors", factors}};
}

inline Json to_json(const QuadInt& x) {
  return {{"kind", ring_name(x.kind)},
          {"a", to_json(x.a)},
          {"b", to_json(x.b)},
          {"text", format_quad(x)}};
}

inline Json to_json(const PrincipalIdeal& ideal) {
  return {{"generator", to_json(ideal.generator())}};
}

inline Json to_json(const QuadFactorization& f) {
  Json factors = Json::array();
  for (const auto& pf : f.factors)
    factors.push_back({{"prime", to_json(pf.prime)},
                       {"norm", to_json(norm(pf.prime))},
                       {"exponent", pf.exponent}});
  return {{"unit", to_json(f.unit)}, {"factors", factors}};
}

inline Json to_json(RingKind kind, const RootOfUnity& z) {
  return {{"order", z.order},
          {"exponent", z.exponent},
          {"embed", format_quad(embed_root(kind, z))}};
}

inline Json to_json(const Mat2& m) {
  return {{"kind", ring_name(m.kind())},
          {"rows", Json::array({Json::array({format_quad(m.a), format_quad(m.b)}),
                                Json::array({format_quad(m.c), format_quad(m.d)})})}};
}

inline Json to_json(const BmsDivisor& d) {
  Json log = Json::array();
  for (const auto& e : d.per_prime_log)
    log.push_back({{"p", to_json(e.p)},
                   {"ord_p_m", e.ord_p_m},
                   {"minimand", to_json(e.minimand)},
                   {"floor_pre_clamp", to_json(e.floor_pre_clamp)},
                   {"j", e.j}});
  return {{"ring", ring_name(d.ring)},
          {"ideal", to_json(d.ideal)},
          {"m", d.m},
          {"r", d.r},
          {"per_prime_log", log}};
}

inline Json to_json(const Sk1Certificate& c) {
  return {{"matrix", to_json(c.matrix)},
          {"ideal", to_json(c.ideal)},
          {"r", c.divisor.r},
          {"divisor", to_json(c.divisor)},
          {"value", to_json(c.ideal.kind(), c.value)}};
}

inline Json to_json(const IntPoly& f) {
  Json coeffs = Json::array();
  for (const Int& c : f.coeffs()) coeffs.push_back(to_decimal(c));
  return {{"coeffs", coeffs}, {"text", format_poly(f)}};
}

inline Json to_json(const PolyRow& row) {
  Json out = Json::array();
  for (const IntPoly& f : row.entries) out.push_back(to_json(f));
  return out;
}

inline Json to_json(const BezoutCertificate& c) {
  Json witnesses = Json::array();
  for (const IntPoly& w : c.witnesses) witnesses.push_back(to_json(w));
  return {{"unimodular", true},
          {"row", to_json(c.row)},
          {"witnesses", witnesses},
          {"d_stage", to_json(c.d_stage)},
          {"verified", verify_certificate(c)}};
}

inline Json to_json(const NonUnimodularObstruction& o) {
  Json out = {{"unimodular", false},
              {"kind", o.kind == NonUnimodularObstruction::Kind::common_complex_root
                           ? "common_complex_root"
                           : "mod_p"},
              {"gcd", to_json(o.gcd)}};
  if (o.kind == NonUnimodularObstruction::Kind::mod_p)
    out["p"] = to_json(o.p);
  return out;
}

inline Json to_json(const UnimodularResult& r) {
  if (const auto* cert = std::get_if<BezoutCertificate>(&r)) return to_json(*cert);
  return to_json(std::get<NonUnimodularObstruction>(r));
}

inline Json to_json(const ObstructionReport& rep) {
  return {{"row", to_json(rep.row)},
          {"ring", ring_name(rep.ring)},
          {"theta", to_json(rep.theta)},
          {"conductor", to_json(rep.conductor)},
          {"ideal", to_json(rep.ideal)},
          {"row_certificate", to_json(rep.row_certificate)},
          {"completion", to_json(rep.completion)},
          {"divisor", to_json(rep.divisor)},
          {"value", to_json(rep.ring, rep.value)},
          {"verdict", verdict_name(rep.verdict)}};
}

inline Json to_json(const StabilizerResult& r) {
  if (const auto* w = std::get_if<StabilizerWitness>(&r))
    return {{"found", true},
            {"s1", to_json(w->s1)},
            {"s2", to_json(w->s2)},
            {"certificate", to_json(w->certificate)}};
  const auto& nf = std::get<StabilizerNotFound>(r);
  return {{"found", false},
          {"search_space", nf.search_space},
          {"note", "exhausted the bounded scan; absence of a witness at these "
                   "bounds is not a proof of non-stability"}};
}

inline Json to_json(const ZnRow& row) {
  Json values = Json::array();
  for (const Int& v : row.values) values.push_back(to_decimal(v));
  return {{"modulus", to_decimal(row.n)}, {"values", values}};
}

inline Json to_json(const ZnMat2& m) {
  return {{"modulus", to_decimal(m.n)},
          {"rows", Json::array({Json::array({to_decimal(m.a), to_decimal(m.b)}),
                                Json::array({to_decimal(m.c), to_decimal(m.d)})})}};
}

inline Json to_json(const IntMat2& m) {
  return {{"rows", Json::array({Json::array({to_decimal(m.a), to_decimal(m.b)}),
                                Json::array({to_decimal(m.c), to_decimal(m.d)})})}};
}

inline Json to_json(const ElementaryWord& w) {
  Json moves = Json::array();
  for (const ElementaryMove& e : w.moves)
    moves.push_back({{"i", e.i}, {"j", e.j}, {"amount", to_decimal(e.amount)}});
  return moves;
}

inline Json to_json(const LemmaReport& r) {
  Json out = {{"modulus", to_decimal(r.n)},
              {"rows_checked", r.rows_checked},
              {"lifts_checked", r.lifts_checked},
              {"holds", r.holds}};
  if (r.counterexample) {
    Json row = Json::array();
    for (const Int& v : *r.counterexample) row.push_back(to_decimal(v));
    out["counterexample"] = row;
  }
  return out;
}

inline Json to_json(const UnitLiftReport& r) {
  Json units = Json::array();
  for (const UnitLift& u : r.units) {
    Json e = {{"unit", to_decimal(u.unit)}};
    e["lift"] = u.lift ? Json(to_decimal(*u.lift)) : Json(nullptr);
    units.push_back(e);
  }
  return {{"source", r.source_modulus ? Json(to_decimal(*r.source_modulus))
                                      : Json("Z")},
          {"target", to_decimal(r.target_modulus)},
          {"all_lift", r.all_lift},
          {"units", units}};
}

}  // namespace umcert
