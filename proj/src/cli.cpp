#include "posetcube/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "posetcube/compression.hpp"
#include "posetcube/embedding.hpp"
#include "posetcube/error.hpp"
#include "posetcube/io.hpp"
#include "posetcube/search.hpp"

namespace posetcube {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::BadParameter, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct PosetSource {
  std::string file;
  std::string named;
  std::optional<int> param;

  void attach(CLI::App* sub) {
    auto* file_opt = sub->add_option("file", file, "poset file (text or JSON)");
    auto* named_opt =
        sub->add_option("--named", named, "catalog poset name (see `posetcube catalog`)");
    sub->add_option("--param", param, "size parameter for the named poset")->needs(named_opt);
    named_opt->excludes(file_opt);
  }

  bool present() const { return !file.empty() || !named.empty(); }

  Poset load() const {
    if (!named.empty()) return named_poset(named, param);
    return parse_poset_document(read_file(file)).to_poset();
  }
};

std::string flag_marks(bool height_bound, bool width_bound) {
  std::string s;
  if (height_bound) s += 'H';
  if (width_bound) s += 'W';
  return s.empty() ? "-" : s;
}

std::string covers_summary(const PosetDocument& doc) {
  if (doc.covers.empty()) return "-";
  std::string s;
  for (const auto& [a, b] : doc.covers) {
    if (!s.empty()) s += ' ';
    s += a + "<" + b;
  }
  return s;
}

void emit_survey_table_row(std::ostream& out, int index, const SurveyEntry& entry) {
  const PosetDocument doc = poset_to_document(entry.poset);
  out << std::setw(4) << index << "  " << std::setw(4) << entry.size << "  " << std::setw(2)
      << entry.h_star << "  " << std::setw(2) << entry.w_star << "  " << std::setw(5)
      << flag_marks(entry.attains_height_bound, entry.attains_width_bound) << "  "
      << covers_summary(doc) << std::endl;
}

void emit_survey_jsonl_row(std::ostream& out, int index, const SurveyEntry& entry) {
  ordered_json j;
  j["index"] = index;
  j["size"] = entry.size;
  j["h_star"] = entry.h_star;
  j["w_star"] = entry.w_star;
  j["attains_height_bound"] = entry.attains_height_bound;
  j["attains_width_bound"] = entry.attains_width_bound;
  j["poset"] = ordered_json::parse(emit_poset_json(poset_to_document(entry.poset)));
  j["witness"] = ordered_json::parse(emit_embedding_json(entry.witness, entry.poset));
  out << j.dump() << std::endl;
}

void emit_probe(std::ostream& out, const std::string& format) {
  const ProbeResult probe = antichain_plus_chain_probe(4);
  if (format == "jsonl") {
    ordered_json j;
    j["probe"] = "antichain_plus_chain";
    j["k"] = 4;
    j["size"] = probe.size;
    j["h_star"] = probe.h_star;
    j["w_star"] = probe.w_star;
    j["predicted_height"] = probe.predicted_height;
    j["predicted_width"] = probe.predicted_width;
    j["height_matches_prediction"] = probe.h_star == probe.predicted_height;
    j["width_matches_prediction"] = probe.w_star == probe.predicted_width;
    const Poset p = named_poset("antichain_plus_chain", 4);
    j["witness"] = ordered_json::parse(emit_embedding_json(probe.witness, p));
    out << j.dump() << std::endl;
    return;
  }
  out << "probe antichain_plus_chain(4): h* = " << probe.h_star << " (predicted "
      << probe.predicted_height << "), w* = " << probe.w_star << " (predicted "
      << probe.predicted_width << ")";
  std::vector<std::string> diffs;
  if (probe.h_star != probe.predicted_height) diffs.push_back("height");
  if (probe.w_star != probe.predicted_width) diffs.push_back("width");
  if (!diffs.empty()) {
    out << "  [";
    for (size_t i = 0; i < diffs.size(); ++i) out << (i ? " and " : "") << diffs[i];
    out << " differ from prediction]";
  }
  out << std::endl;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"optimal embeddings of finite posets in hypercubes"};
  app.name("posetcube");
  app.require_subcommand(0, 1);

  PosetSource hstar_src;
  auto* hstar_cmd = app.add_subcommand("hstar", "exact hypercube-height h* with a witness");
  hstar_src.attach(hstar_cmd);

  PosetSource wstar_src;
  auto* wstar_cmd = app.add_subcommand("wstar", "exact hypercube-width w* with a witness");
  wstar_src.attach(wstar_cmd);

  PosetSource embed_src;
  int embed_width = 0;
  int embed_height = 0;
  auto* embed_cmd =
      app.add_subcommand("embed", "search for an induced copy within a width/height budget");
  embed_src.attach(embed_cmd);
  embed_cmd->add_option("--width", embed_width, "coordinate budget")
      ->required()
      ->check(CLI::NonNegativeNumber);
  embed_cmd->add_option("--height", embed_height, "layer budget (max set size)")
      ->required()
      ->check(CLI::NonNegativeNumber);

  std::string compress_poset_file;
  std::string compress_embedding_file;
  bool compress_two_layered = false;
  bool compress_show_trace = false;
  auto* compress_cmd =
      app.add_subcommand("compress", "rewrite a valid embedding to width <= |P|");
  compress_cmd->add_option("poset", compress_poset_file, "poset file")->required();
  compress_cmd->add_option("embedding", compress_embedding_file, "embedding JSON file")->required();
  compress_cmd->add_flag("--two-layer", compress_two_layered, "use the two-layered algorithm");
  compress_cmd->add_flag("--trace", compress_show_trace, "also print the compression trace JSON");

  std::string verify_poset_file;
  std::string verify_embedding_file;
  auto* verify_cmd = app.add_subcommand("verify", "check the induced-copy condition");
  verify_cmd->add_option("poset", verify_poset_file, "poset file")->required();
  verify_cmd->add_option("embedding", verify_embedding_file, "embedding JSON file")->required();

  int survey_max_size = 0;
  std::string survey_output;
  std::string survey_format = "table";
  int survey_threads = 0;
  auto* survey_cmd =
      app.add_subcommand("survey", "exact (h*, w*) census over all posets up to a size");
  survey_cmd->add_option("--max-size", survey_max_size, "largest poset size (1..6)")->required();
  survey_cmd->add_option("--output", survey_output, "write results to a file instead of stdout");
  survey_cmd->add_option("--format", survey_format, "table or jsonl")
      ->check(CLI::IsMember({"table", "jsonl"}));
  survey_cmd->add_option("--threads", survey_threads, "worker threads (0 = hardware)")
      ->check(CLI::NonNegativeNumber);

  auto* catalog_cmd = app.add_subcommand("catalog", "list the named posets");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (hstar_cmd->parsed() || wstar_cmd->parsed()) {
      const bool is_height = hstar_cmd->parsed();
      const PosetSource& src = is_height ? hstar_src : wstar_src;
      if (!src.present()) {
        err << "provide a poset file or --named NAME" << std::endl;
        return 2;
      }
      const Poset p = src.load();
      const SearchResult r = is_height ? hypercube_height(p) : hypercube_width(p);
      out << (is_height ? "h* = " : "w* = ") << r.value << "\n"
          << emit_embedding_json(r.witness, p) << std::endl;
      return 0;
    }

    if (embed_cmd->parsed()) {
      if (!embed_src.present()) {
        err << "provide a poset file or --named NAME" << std::endl;
        return 2;
      }
      const Poset p = embed_src.load();
      const auto witness = find_embedding(p, embed_width, embed_height);
      if (!witness) {
        out << "none" << std::endl;
        return 1;
      }
      out << emit_embedding_json(*witness, p) << std::endl;
      return 0;
    }

    if (compress_cmd->parsed()) {
      const Poset p = parse_poset_document(read_file(compress_poset_file)).to_poset();
      const Embedding e = parse_embedding_json(read_file(compress_embedding_file), p);
      const auto [compressed, trace] =
          compress_two_layered ? compress_two_layer(p, e) : compress_general(p, e);
      out << emit_embedding_json(compressed, p) << "\n";
      if (compress_show_trace) out << emit_trace_json(trace, p) << "\n";
      out.flush();
      return 0;
    }

    if (verify_cmd->parsed()) {
      const Poset p = parse_poset_document(read_file(verify_poset_file)).to_poset();
      const Embedding e = parse_embedding_json(read_file(verify_embedding_file), p);
      const EmbeddingReport report = verify_induced(p, e);
      out << (report.valid ? "valid" : "invalid") << "\n"
          << "height = " << report.height << "\n"
          << "width = " << report.width << "\n";
      for (const auto& v : report.violations) out << "violation: " << v.reason << "\n";
      out.flush();
      return report.valid ? 0 : 1;
    }

    if (survey_cmd->parsed()) {
      std::ofstream file_out;
      std::ostream* dest = &out;
      if (!survey_output.empty()) {
        file_out.open(survey_output);
        if (!file_out) {
          throw Error(ErrorKind::BadParameter, "cannot write \"" + survey_output + "\"");
        }
        dest = &file_out;
      }
      if (survey_format == "table") {
        *dest << "   #  size  h*  w*  bound  covers" << std::endl;
      }
      int index = 0;
      SurveyOptions options;
      options.threads = survey_threads;
      survey(survey_max_size, options, [&](const SurveyEntry& entry) {
        ++index;
        if (survey_format == "table") {
          emit_survey_table_row(*dest, index, entry);
        } else {
          emit_survey_jsonl_row(*dest, index, entry);
        }
      });
      emit_probe(*dest, survey_format);
      return 0;
    }

    if (catalog_cmd->parsed()) {
      out << "chain --param K                 total order on K elements\n"
          << "antichain --param K             K pairwise-incomparable elements\n"
          << "butterfly                       two minimal elements below two maximal elements\n"
          << "v --param R                     one minimal element below R incomparable maximal "
             "elements\n"
          << "diamond                         bottom, two incomparable middle elements, top\n"
          << "antichain_plus_chain --param K  C(K,K/2)-antichain above a chain of K/2 elements "
             "(K even)\n";
      out.flush();
      return 0;
    }

    err << app.help();
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << std::endl;
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << std::endl;
    return 1;
  }
}

}  // namespace posetcube
