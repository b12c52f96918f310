// Command-line front end: batch computations over documents in the small
// expression language. Every command prints text or JSON (--format, or the
// WEYL_FORMAT environment variable) and exits nonzero with a machine-readable
// error kind on stderr when something fails.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "weyl/faces.hpp"
#include "weyl/matrix.hpp"
#include "weyl/parser.hpp"
#include "weyl/printer.hpp"
#include "weyl/series.hpp"
#include "weyl/structure.hpp"

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

std::int64_t microseconds_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                               start)
      .count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw weyl::error(weyl::errc::io_error, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct CommandContext {
  std::string format;  // "text" or "json"
  std::int64_t parse_us = 0;
  Clock::time_point compute_start = Clock::now();

  weyl::SourceDocument load(const std::string& path) {
    Clock::time_point t0 = Clock::now();
    weyl::SourceDocument doc = weyl::parse_document(read_file(path));
    parse_us = microseconds_since(t0);
    compute_start = Clock::now();
    return doc;
  }

  void emit(const std::string& command, json inputs, json result,
            json witnesses, const std::string& text) {
    if (format == "json") {
      json out;
      out["command"] = command;
      out["inputs"] = std::move(inputs);
      out["result"] = std::move(result);
      out["witnesses"] = std::move(witnesses);
      std::int64_t compute_us = microseconds_since(compute_start);
      out["timings"] = {{"parse_us", parse_us},
                        {"compute_us", compute_us},
                        {"total_us", parse_us + compute_us}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << text << "\n";
    }
  }
};

const weyl::Endomorphism& need_map(const weyl::SourceDocument& doc,
                                   const std::string& name) {
  const weyl::Endomorphism* map = doc.find_map(name);
  if (!map)
    throw weyl::error(weyl::errc::invalid_argument,
                      "no map named '" + name + "' in the document");
  return *map;
}

const weyl::Element& need_element(const weyl::SourceDocument& doc,
                                  const std::string& name) {
  const weyl::Element* e = doc.find_element(name);
  if (!e)
    throw weyl::error(weyl::errc::invalid_argument,
                      "no element named '" + name + "' in the document");
  return *e;
}

void require_certified(const weyl::Endomorphism& sigma,
                       const std::string& name) {
  weyl::Certification cert = weyl::certify_automorphism(sigma);
  if (!cert.certified)
    throw weyl::error(weyl::errc::not_an_automorphism,
                      "map '" + name + "' is not certified: " + cert.detail);
}

weyl::Mat read_matrix_file(const std::string& path) {
  std::string text = read_file(path);
  std::vector<std::vector<weyl::Scalar>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::string trimmed = line.substr(0, line.find('#'));
    std::istringstream entries(trimmed);
    std::vector<weyl::Scalar> row;
    std::string entry;
    while (entries >> entry) {
      std::optional<weyl::Scalar> value = weyl::scalar_from_string(entry);
      if (!value)
        throw weyl::error(weyl::errc::invalid_argument,
                          "bad rational entry '" + entry + "'");
      row.push_back(*value);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty())
    throw weyl::error(weyl::errc::invalid_argument, "empty matrix file");
  weyl::Mat m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.front().size())
      throw weyl::error(weyl::errc::invalid_argument,
                        "ragged matrix: row " + std::to_string(i + 1));
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      m.at(i, j) = rows[i][j];
  }
  if (m.rows() != m.cols())
    throw weyl::error(weyl::errc::invalid_argument, "matrix must be square");
  return m;
}

json images_json(const weyl::Endomorphism& sigma) {
  json out = json::object();
  for (std::uint32_t i = 0; i < sigma.signature().s(); ++i)
    out[sigma.signature().generator_name(i)] = weyl::print(sigma.image(i));
  return out;
}

void run_invert(CommandContext& ctx, const std::string& file,
                const std::string& map_name, std::optional<int> cap) {
  weyl::SourceDocument doc = ctx.load(file);
  const weyl::Endomorphism& sigma = need_map(doc, map_name);
  std::optional<weyl::Integer> cap_override;
  if (cap) cap_override = weyl::Integer(*cap);
  weyl::Endomorphism inverse = weyl::invert(sigma, cap_override);
  json result;
  result["images"] = images_json(inverse);
  result["degree"] = weyl::degree_of(inverse);
  ctx.emit("invert", {{"file", file}, {"map", map_name}}, std::move(result),
           json::array(), weyl::print(inverse, map_name + "_inv"));
}

void run_verify(CommandContext& ctx, const std::string& file,
                const std::string& map_name, const std::string& inverse_name) {
  weyl::SourceDocument doc = ctx.load(file);
  const weyl::Endomorphism& sigma = need_map(doc, map_name);
  const weyl::Endomorphism& tau = need_map(doc, inverse_name);
  weyl::Endomorphism id = weyl::Endomorphism::identity(sigma.signature());
  bool verified =
      compose(sigma, tau) == id && compose(tau, sigma) == id;
  ctx.emit("verify",
           {{"file", file}, {"map", map_name}, {"inverse", inverse_name}},
           {{"verified", verified}}, json::array(),
           verified ? "verified: true" : "verified: false");
}

void run_certify(CommandContext& ctx, const std::string& file,
                 const std::string& map_name) {
  weyl::SourceDocument doc = ctx.load(file);
  const weyl::Endomorphism& sigma = need_map(doc, map_name);
  weyl::Certification cert = weyl::certify_automorphism(sigma);
  json witnesses = json::array();
  std::string text;
  if (cert.certified) {
    text = "certified";
  } else {
    json w;
    w["detail"] = cert.detail;
    if (cert.witness_pair) {
      w["i"] = sigma.signature().generator_name(cert.witness_pair->first);
      w["j"] = sigma.signature().generator_name(cert.witness_pair->second);
    }
    witnesses.push_back(std::move(w));
    text = "not certified: " + cert.detail;
  }
  ctx.emit("certify", {{"file", file}, {"map", map_name}},
           {{"certified", cert.certified}}, std::move(witnesses), text);
}

void run_degree(CommandContext& ctx, const std::string& file,
                const std::string& map_name, bool dual) {
  weyl::SourceDocument doc = ctx.load(file);
  const weyl::Endomorphism& sigma = need_map(doc, map_name);
  int deg = weyl::degree_of(sigma);
  weyl::Integer bound = weyl::inversion_degree_bound(sigma);
  json result;
  result["degree"] = deg;
  result["bound"] = bound.get_str();
  std::ostringstream text;
  text << "deg sigma = " << deg << "\n";
  text << "bound (deg sigma)^(s-1) = " << bound.get_str();
  if (dual) {
    const weyl::AlgebraSignature& sig = sigma.signature();
    json duals = json::object();
    int inverse_degree = 0;
    for (std::uint32_t i = 0; i < sig.s(); ++i) {
      std::optional<int> di =
          weyl::dual_degree(sigma, weyl::Element::generator(sig, i));
      duals[sig.generator_name(i)] = di.value_or(0);
      inverse_degree = std::max(inverse_degree, di.value_or(0));
      text << "\ndeg'(" << sig.generator_name(i) << ") = " << di.value_or(0);
    }
    result["dual_degrees"] = std::move(duals);
    result["inverse_degree"] = inverse_degree;
    bool within = weyl::Integer(inverse_degree) <= bound;
    result["bound_satisfied"] = within;
    text << "\ndeg sigma^-1 = " << inverse_degree;
    text << "\nbound satisfied: " << (within ? "true" : "false");
  }
  ctx.emit("degree", {{"file", file}, {"map", map_name}, {"dual", dual}},
           std::move(result), json::array(), text.str());
}

void run_faces(CommandContext& ctx, const std::string& file,
               const std::vector<std::string>& map_names,
               const std::string& side) {
  if (map_names.size() != 2)
    throw weyl::error(weyl::errc::invalid_argument,
                      "faces needs exactly two --map names");
  weyl::SourceDocument doc = ctx.load(file);
  const weyl::Endomorphism& sigma = need_map(doc, map_names[0]);
  const weyl::Endomorphism& tau = need_map(doc, map_names[1]);
  require_certified(sigma, map_names[0]);
  require_certified(tau, map_names[1]);
  bool left = side == "left";
  weyl::FaceComparison cmp = weyl::faces_distinguish(sigma, tau, left);
  json witnesses = json::array();
  std::string text;
  if (cmp.equal) {
    text = "equal";
  } else {
    const weyl::AlgebraSignature& sig = sigma.signature();
    auto [i, j] = *cmp.witness;
    weyl::FaceImage fs = left ? weyl::left_face(i, sigma.image(j))
                              : weyl::right_face(i, sigma.image(j));
    weyl::FaceImage ft = left ? weyl::left_face(i, tau.image(j))
                              : weyl::right_face(i, tau.image(j));
    json w;
    w["i"] = sig.generator_name(i);
    w["j"] = sig.generator_name(j);
    w["face_a"] = weyl::print(fs, sig);
    w["face_b"] = weyl::print(ft, sig);
    witnesses.push_back(std::move(w));
    text = "witness: i=" + sig.generator_name(i) +
           " j=" + sig.generator_name(j) + "\nface_a = " +
           weyl::print(fs, sig) + "\nface_b = " + weyl::print(ft, sig);
  }
  ctx.emit("faces",
           {{"file", file},
            {"map_a", map_names[0]},
            {"map_b", map_names[1]},
            {"side", side}},
           {{"equal", cmp.equal}}, std::move(witnesses), text);
}

void run_darboux(CommandContext& ctx, const std::string& matrix_file) {
  Clock::time_point t0 = Clock::now();
  weyl::Mat lambda = read_matrix_file(matrix_file);
  ctx.parse_us = microseconds_since(t0);
  ctx.compute_start = Clock::now();
  weyl::CommutatorMatrix form{lambda};
  weyl::DarbouxBasis basis = weyl::darboux_basis(form);
  auto [n, m] = weyl::classify(form);
  json jrows = json::array();
  std::ostringstream text;
  text << "n = " << basis.pairs << "\nm = " << basis.kernel_dim << "\nJ:";
  for (std::size_t i = 0; i < basis.change_of_basis.rows(); ++i) {
    json row = json::array();
    text << "\n";
    for (std::size_t j = 0; j < basis.change_of_basis.cols(); ++j) {
      std::string entry =
          weyl::scalar_to_string(basis.change_of_basis.at(i, j));
      row.push_back(entry);
      text << (j ? " " : "") << entry;
    }
    jrows.push_back(std::move(row));
  }
  json result;
  result["n"] = basis.pairs;
  result["m"] = basis.kernel_dim;
  result["rank_n"] = n;
  result["rank_m"] = m;
  result["change_of_basis"] = std::move(jrows);
  ctx.emit("darboux", {{"matrix", matrix_file}}, std::move(result),
           json::array(), text.str());
}

void run_series_invert(CommandContext& ctx, const std::string& file,
                       const std::string& map_name, int order) {
  if (order < 0)
    throw weyl::error(weyl::errc::invalid_argument,
                      "--order must be nonnegative");
  weyl::SourceDocument doc = ctx.load(file);
  if (doc.signature.n() != 0)
    throw weyl::error(weyl::errc::invalid_argument,
                      "series inversion needs a commutative algebra (n=0)");
  const weyl::Endomorphism& sigma = need_map(doc, map_name);
  std::uint32_t m = doc.signature.m();
  std::uint32_t N = static_cast<std::uint32_t>(order);
  std::vector<weyl::TruncatedSeries> images;
  for (std::uint32_t i = 0; i < m; ++i) {
    weyl::TruncatedSeries::TermMap terms;
    for (const auto& [alpha, c] : sigma.image(i).terms()) {
      if (alpha.total() > N) continue;
      terms.emplace(alpha, c);
    }
    images.push_back(weyl::TruncatedSeries::from_terms(m, N, std::move(terms)));
  }
  weyl::SeriesEndomorphism series =
      weyl::SeriesEndomorphism::make(m, N, std::move(images));
  weyl::SeriesEndomorphism inverse = weyl::series_invert(series);
  json result;
  json jimages = json::object();
  std::ostringstream text;
  for (std::uint32_t i = 0; i < m; ++i) {
    std::string name = doc.signature.generator_name(i);
    jimages[name] = weyl::print(inverse.images[i]);
    if (i) text << "\n";
    text << name << " -> " << weyl::print(inverse.images[i]) << ";";
  }
  result["images"] = std::move(jimages);
  result["order"] = order;
  ctx.emit("series-invert",
           {{"file", file}, {"map", map_name}, {"order", order}},
           std::move(result), json::array(), text.str());
}

void run_taylor(CommandContext& ctx, const std::string& file,
                const std::string& element_name) {
  weyl::SourceDocument doc = ctx.load(file);
  const weyl::Element& a = need_element(doc, element_name);
  auto coefficients = weyl::taylor_expand(a);
  json table = json::array();
  std::ostringstream text;
  bool first = true;
  for (const auto& [alpha, c] : coefficients) {
    json row;
    row["monomial"] = weyl::print_monomial(doc.signature, alpha);
    row["alpha"] = alpha.exponents();
    row["value"] = weyl::scalar_to_string(c);
    table.push_back(std::move(row));
    if (!first) text << "\n";
    text << weyl::print_monomial(doc.signature, alpha) << ": "
         << weyl::scalar_to_string(c);
    first = false;
  }
  if (coefficients.empty()) text << "0";
  ctx.emit("taylor", {{"file", file}, {"element", element_name}},
           {{"coefficients", std::move(table)}}, json::array(), text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for Weyl algebras with polynomial "
               "coefficients"};
  app.require_subcommand(1);

  std::string format = "text";
  if (const char* env = std::getenv("WEYL_FORMAT")) {
    std::string value(env);
    if (value == "json" || value == "text") format = value;
  }

  std::string file, map_name, inverse_name, element_name, matrix_file;
  std::vector<std::string> face_maps;
  std::string side = "right";
  std::optional<int> cap;
  int order = 0;
  bool dual = false;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* invert = app.add_subcommand("invert", "Invert an automorphism");
  invert->add_option("file", file)->required();
  invert->add_option("--map", map_name)->required();
  invert->add_option("--cap", cap, "Override the degree budget");
  add_format(invert);

  CLI::App* verify =
      app.add_subcommand("verify", "Check that two maps compose to the identity");
  verify->add_option("file", file)->required();
  verify->add_option("--map", map_name)->required();
  verify->add_option("--inverse", inverse_name)->required();
  add_format(verify);

  CLI::App* certify =
      app.add_subcommand("certify", "Local-nilpotency automorphism test");
  certify->add_option("file", file)->required();
  certify->add_option("--map", map_name)->required();
  add_format(certify);

  CLI::App* degree = app.add_subcommand("degree", "Degree and inverse-degree report");
  degree->add_option("file", file)->required();
  degree->add_option("--map", map_name)->required();
  degree->add_flag("--dual", dual, "Compute dual degrees (deg sigma^-1)");
  add_format(degree);

  CLI::App* faces =
      app.add_subcommand("faces", "Compare two automorphisms by their faces");
  faces->add_option("file", file)->required();
  faces->add_option("--map", face_maps, "Two map names (repeat the flag)")
      ->required();
  faces->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
  add_format(faces);

  CLI::App* darboux =
      app.add_subcommand("darboux", "Symplectic normal form of a rational antisymmetric matrix");
  darboux->add_option("--matrix", matrix_file)->required();
  add_format(darboux);

  CLI::App* series =
      app.add_subcommand("series-invert", "Invert a power-series automorphism");
  series->add_option("file", file)->required();
  series->add_option("--map", map_name)->required();
  series->add_option("--order", order, "Truncation order")->required();
  add_format(series);

  CLI::App* taylor =
      app.add_subcommand("taylor", "Coefficient table through the projection formula");
  taylor->add_option("file", file)->required();
  taylor->add_option("--element", element_name)->required();
  add_format(taylor);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    nlohmann::ordered_json err;
    err["error"] = "invalid_argument";
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }

  CommandContext ctx;
  ctx.format = format;
  try {
    if (invert->parsed()) run_invert(ctx, file, map_name, cap);
    if (verify->parsed()) run_verify(ctx, file, map_name, inverse_name);
    if (certify->parsed()) run_certify(ctx, file, map_name);
    if (degree->parsed()) run_degree(ctx, file, map_name, dual);
    if (faces->parsed()) run_faces(ctx, file, face_maps, side);
    if (darboux->parsed()) run_darboux(ctx, matrix_file);
    if (series->parsed()) run_series_invert(ctx, file, map_name, order);
    if (taylor->parsed()) run_taylor(ctx, file, element_name);
  } catch (const weyl::error& e) {
    nlohmann::ordered_json err;
    err["error"] = e.kind_name();
    err["message"] = e.what();
    std::cerr << err.dump() << "\n";
    return 1;
  }
  return 0;
}
