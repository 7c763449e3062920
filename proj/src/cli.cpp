#include "blockfact/cli.hpp"

#include <sstream>

#include "blockfact/blocks.hpp"
#include "blockfact/errors.hpp"
#include "blockfact/zoo.hpp"

namespace blockfact {
namespace cli {

namespace {

SearchOptions search_options(const Options& opts) { return {opts.seed, opts.attempts}; }

Json position_to_json(const PositionRecord& p) {
  Json j;
  j["position"] = p.position;
  j["term_dim"] = p.term_dim;
  j["incoming_rank"] = p.incoming_rank;
  j["outgoing_kernel_dim"] = p.outgoing_kernel_dim;
  j["exact"] = p.exact;
  return j;
}

Json exactness_to_json(const ExactnessCertificate& cert) {
  Json j;
  Json positions = Json::array();
  for (const auto& p : cert.positions) positions.push_back(position_to_json(p));
  j["positions"] = std::move(positions);
  j["all_exact"] = cert.all_exact();
  j["notes"] = cert.notes;
  return j;
}

std::string render_analyze_text(const Json& j) {
  std::ostringstream out;
  out << "analyze " << j["input_digest"].get<std::string>() << "\n";
  out << "dim: " << j["dim"].get<int>() << "  seed: " << j["seed"].get<std::uint64_t>() << "\n";
  out << "blocks: " << j["blocks"].size() << "\n";
  out << "  idx  dim  semisimple  split       indecomposable  status\n";
  for (const auto& b : j["blocks"]) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-3d  %-3d  %-10s  %-10s  %-14s  %s\n",
                  b["index"].get<int>(), b["dim"].get<int>(),
                  b["semisimple"].get<bool>() ? "yes" : "no",
                  b["split"].get<std::string>().c_str(),
                  b["indecomposable"].get<std::string>().c_str(),
                  b["status"].get<std::string>().c_str());
    out << line;
  }
  out << "semisimple: " << (j["semisimple"].get<bool>() ? "yes" : "no") << "\n";
  out << "factorizable: " << j["factorizable"].get<std::string>();
  if (!j["factorizable_reason"].get<std::string>().empty())
    out << " (" << j["factorizable_reason"].get<std::string>() << ")";
  out << "\n";
  return out.str();
}

}  // namespace

Json analyze_to_json(const Algebra& a, const std::string& digest, const Options& opts) {
  const SearchOptions sopts = search_options(opts);
  const BlockDecomposition dec = central_idempotents(a, sopts);

  Json j;
  j["command"] = "analyze";
  j["input_digest"] = digest;
  j["seed"] = opts.seed;
  j["attempts"] = opts.attempts;
  j["dim"] = a.dim();

  Json blocks = Json::array();
  for (int i = 0; i < dec.block_count(); ++i) {
    const Algebra& block = dec.blocks[i];
    Json b;
    b["index"] = i;
    b["dim"] = block.dim();
    const bool ss = is_semisimple(block);
    b["semisimple"] = ss;
    std::string split = "-";
    if (ss) {
      WedderburnResult w = wedderburn_split(block, {opts.seed + std::uint64_t(i), opts.attempts});
      if (auto* iso = std::get_if<MatrixAlgebraIso>(&w))
        split = "M" + std::to_string(iso->n);
      else
        split = "not over Q";
    }
    b["split"] = split;
    const IndecomposabilityResult ind = is_indecomposable(regular_bimodule(block), sopts);
    b["indecomposable"] = to_string(ind.verdict);
    b["status"] = to_string(dec.statuses[i]);
    Json e = Json::array();
    for (const auto& c : dec.idempotents[i].coeffs) e.push_back(render_rational(c));
    b["idempotent"] = std::move(e);
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  j["block_dims"] = dec.dimension_multiset();
  j["semisimple"] = is_semisimple(a);

  FactorizeResult fr = factorize_semisimple(a, dec, sopts);
  if (auto* cert = std::get_if<FactorizationCertificate>(&fr)) {
    j["factorizable"] = "yes";
    j["factorizable_reason"] = "";
    Json summands = Json::array();
    for (const auto& [x, y] : cert->summands) {
      Json s;
      s["left_dim"] = x.dim();
      s["right_dim"] = y.dim();
      summands.push_back(std::move(s));
    }
    j["certificate"] = Json{{"summands", std::move(summands)},
                            {"iso", matrix_to_json(cert->iso.map)}};
  } else {
    const auto& refusal = std::get<FactorizationRefusal>(fr);
    j["factorizable"] = "no";
    j["factorizable_reason"] = refusal.detail;
    j["certificate"] = nullptr;
  }
  return j;
}

Outcome cmd_analyze(const std::string& path, const Options& opts) {
  const std::string bytes = read_file(path);
  const Algebra a = algebra_from_json(parse_document(bytes, path));
  const Json j = analyze_to_json(a, digest_string(bytes), opts);
  return {opts.machine ? dump_document(j) : render_analyze_text(j), 0, Json()};
}

Outcome cmd_factorize(const std::string& path, const Options& opts) {
  const std::string bytes = read_file(path);
  const Algebra a = algebra_from_json(parse_document(bytes, path));
  const SearchOptions sopts = search_options(opts);
  const BlockDecomposition dec = central_idempotents(a, sopts);
  FactorizeResult fr = factorize_semisimple(a, dec, sopts);

  Json j;
  j["command"] = "factorize";
  j["input_digest"] = digest_string(bytes);
  j["seed"] = opts.seed;
  std::ostringstream text;
  text << "factorize " << digest_string(bytes) << "\n";
  if (auto* cert = std::get_if<FactorizationCertificate>(&fr)) {
    j["factorizable"] = "yes";
    Json summands = Json::array();
    text << "factorizable: yes; summands:";
    for (const auto& [x, y] : cert->summands) {
      summands.push_back(Json{{"left_dim", x.dim()}, {"right_dim", y.dim()}});
      text << " " << x.dim() << "x" << y.dim();
    }
    text << "\n";
    j["summands"] = std::move(summands);
    j["iso"] = matrix_to_json(cert->iso.map);
  } else {
    const auto& refusal = std::get<FactorizationRefusal>(fr);
    j["factorizable"] = "no";
    j["reason"] = refusal.detail;
    j["first_offending_block"] = refusal.block_index;
    j["obstruction"] = refusal.reason == FactorizationRefusal::Reason::NonSemisimple
                           ? "non-semisimple"
                           : "non-split simple block";
    text << "factorizable: no (" << refusal.detail << ")\n";
  }
  return {opts.machine ? dump_document(j) : text.str(), 0, Json()};
}

Outcome cmd_resolve(const std::string& path, int depth, bool verify, const Options& opts) {
  const std::string bytes = read_file(path);
  const Algebra a = algebra_from_json(parse_document(bytes, path));
  const SearchOptions sopts = search_options(opts);
  const BlockDecomposition dec = central_idempotents(a, sopts);
  const FactorizationResolution res = factorization_resolution(a, dec, depth, opts.cap, sopts);

  Json j;
  j["command"] = "resolve";
  j["input_digest"] = digest_string(bytes);
  j["seed"] = opts.seed;
  j["depth"] = depth;
  j["cap"] = opts.cap;
  Json blocks = Json::array();
  for (const auto& b : res.blocks) {
    Json bj;
    bj["index"] = b.block_index;
    bj["dim"] = b.block_dim;
    bj["kind"] = to_string(b.kind);
    bj["length"] = b.length;
    if (b.kind == BlockResolutionSummary::Kind::Wedderburn) bj["n"] = b.matrix_rank;
    blocks.push_back(std::move(bj));
  }
  j["blocks"] = std::move(blocks);
  Json term_dims = Json::array();
  for (int i = 0; i < res.complex.term_count(); ++i) term_dims.push_back(res.complex.term(i).dim());
  j["term_dims"] = std::move(term_dims);
  Json certs = Json::array();
  for (const auto& c : res.term_certificates) {
    Json sj = Json::array();
    for (const auto& [x, y] : c.summands)
      sj.push_back(Json{{"left_dim", x.dim()}, {"right_dim", y.dim()}});
    certs.push_back(std::move(sj));
  }
  j["term_summands"] = std::move(certs);
  j["notes"] = res.complex.notes();

  bool ok = true;
  if (verify) {
    const ExactnessCertificate cert = verify_exactness(res.complex);
    j["exactness"] = exactness_to_json(cert);
    ok = cert.all_exact();
  }
  const Json doc = complex_to_json(res.complex);
  j["complex_digest"] = digest_string(dump_document(doc));

  std::ostringstream text;
  text << "resolve " << j["input_digest"].get<std::string>() << " depth " << depth << "\n";
  for (const auto& b : j["blocks"]) {
    text << "  block " << b["index"].get<int>() << " (dim " << b["dim"].get<int>() << "): "
         << b["kind"].get<std::string>() << ", length " << b["length"].get<int>();
    if (b.contains("n")) text << ", n=" << b["n"].get<int>();
    text << "\n";
  }
  if (verify)
    text << "exactness: " << (ok ? "all positions exact" : "FAILED") << "\n";
  for (const auto& n : res.complex.notes()) text << "note: " << n << "\n";
  text << "complex digest: " << j["complex_digest"].get<std::string>() << "\n";

  return {opts.machine ? dump_document(j) : text.str(), ok ? 0 : 1, doc};
}

Outcome cmd_verify(const std::string& path, const Options& opts) {
  const std::string bytes = read_file(path);
  const Json doc = parse_document(bytes, path);
  Json j;
  j["command"] = "verify";
  j["input_digest"] = digest_string(bytes);
  std::ostringstream text;
  text << "verify " << digest_string(bytes) << "\n";
  int code = 0;
  try {
    const ChainComplex c = complex_from_json(doc);
    const ExactnessCertificate cert = verify_exactness(c);
    j["well_formed"] = true;
    j["exactness"] = exactness_to_json(cert);
    const bool roundtrip = dump_document(complex_to_json(c)) == bytes;
    j["roundtrip_exact"] = roundtrip;
    code = (cert.all_exact() && roundtrip) ? 0 : 1;
    text << "complex axioms: pass\n";
    for (const auto& p : cert.positions)
      text << "  position " << p.position << ": dim " << p.term_dim << ", incoming rank "
           << p.incoming_rank << ", outgoing kernel " << p.outgoing_kernel_dim << ", "
           << (p.exact ? "exact" : "NOT EXACT") << "\n";
    text << "round-trip: " << (roundtrip ? "bit-exact" : "DIFFERS") << "\n";
  } catch (const InputError& e) {
    // Well-formed JSON whose data fails the complex checks is a verification
    // failure, not a malformed input.
    j["well_formed"] = false;
    j["error"] = e.what();
    code = 1;
    text << "complex axioms: FAIL (" << e.what() << ")\n";
  }
  j["ok"] = (code == 0);
  return {opts.machine ? dump_document(j) : text.str(), code, Json()};
}

Outcome cmd_zoo(const ZooRequest& req) {
  Algebra a = [&]() -> Algebra {
    if (req.family == "dual") return zoo::dual_numbers();
    if (req.family == "matrix") return zoo::matrix_algebra(req.n);
    if (req.family == "exterior") return zoo::even_exterior(req.two_d);
    if (req.family == "upper") return zoo::upper_triangular(req.n);
    if (req.family == "triplet") return zoo::triplet_zhu(req.p);
    if (req.family == "sf") return zoo::sf_zhu(req.d);
    throw InputError("unknown zoo family '" + req.family + "'");
  }();
  if (req.scrambled) a = zoo::scramble(a, req.scramble_seed);
  return {"", 0, algebra_to_json(a)};
}

}  // namespace cli
}  // namespace blockfact
