#include "posetpart/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "posetpart/enumeration.hpp"
#include "posetpart/error.hpp"
#include "posetpart/partition.hpp"
#include "posetpart/poset_map.hpp"
#include "posetpart/text_format.hpp"

namespace posetpart::cli {

namespace {

struct Options {
  std::string command;
  std::vector<std::string> poset_files;
  std::vector<std::string> generated;
  std::string partition_file;
  std::string map_file;
  std::string kind;
  std::string route = "blocks";
  std::string system = "repi-mono";
  std::size_t bound = 0;
  bool has_bound = false;
};

// Failure tied to an input file or to the command line.
struct UsageError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"cannot read '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename F>
auto from_file(const std::string& path, F&& parse) -> decltype(parse(std::string_view{})) {
  const std::string text = read_file(path);
  try {
    return parse(std::string_view(text));
  } catch (const Error& e) {
    throw UsageError{path + ": " + e.what()};
  }
}

PosetDocument generated_poset(const std::string& request) {
  const auto colon = request.find(':');
  const std::string shape = request.substr(0, colon);
  std::size_t n = 0;
  try {
    if (colon == std::string::npos) throw std::invalid_argument(request);
    std::size_t used = 0;
    n = std::stoul(request.substr(colon + 1), &used);
    if (used != request.size() - colon - 1) throw std::invalid_argument(request);
  } catch (const std::exception&) {
    throw UsageError{"--generate expects chain:N or antichain:N, got '" + request + "'"};
  }
  if (shape == "chain") return {"C" + std::to_string(n), generate(Shape::chain, n)};
  if (shape == "antichain") return {"A" + std::to_string(n), generate(Shape::antichain, n)};
  throw UsageError{"--generate expects chain:N or antichain:N, got '" + request + "'"};
}

PartitionKind parse_kind(const std::string& kind) {
  if (kind == "monotone") return PartitionKind::monotone;
  if (kind == "regular") return PartitionKind::regular;
  return PartitionKind::open;
}

Route parse_route(const std::string& route) {
  if (route == "quasiorders") return Route::quasiorders;
  if (route == "fibres") return Route::fibres;
  return Route::blocks;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Session {
 public:
  Session(const Options& options, std::ostream& out) : options_(options), out_(out) {
    for (const auto& path : options.poset_files) {
      posets_.push_back(from_file(path, [](std::string_view t) { return parse_poset(t); }));
    }
    for (const auto& request : options.generated) posets_.push_back(generated_poset(request));
    if (!options.partition_file.empty()) {
      partition_ = from_file(options.partition_file,
                             [this](std::string_view t) { return parse_partition(t, posets_); });
    }
    if (!options.map_file.empty()) {
      map_ = from_file(options.map_file,
                       [this](std::string_view t) { return parse_map(t, posets_); });
    }
  }

  int dispatch() {
    const std::string& c = options_.command;
    if (c == "validate") return validate();
    if (c == "classify") return classify_partition();
    if (c == "enumerate") return enumerate();
    if (c == "count") return count_partitions();
    if (c == "factorize") return factorize_map();
    if (c == "crosscheck") return crosscheck();
    return dot();
  }

 private:
  const PosetDocument& poset() const {
    if (partition_) {
      for (const auto& doc : posets_) {
        if (doc.name == partition_->poset_name) return doc;
      }
    }
    if (posets_.empty()) throw UsageError{"no poset given (use --poset or --generate)"};
    return posets_.front();
  }

  const PartitionDocument& partition() const {
    if (!partition_) throw UsageError{options_.command + " needs --partition"};
    return *partition_;
  }

  PartitionKind kind() const {
    if (options_.kind.empty()) throw UsageError{options_.command + " needs --kind"};
    return parse_kind(options_.kind);
  }

  int validate() {
    if (posets_.empty() && !partition_ && !map_) throw UsageError{"nothing to validate"};
    for (const auto& doc : posets_) {
      out_ << "poset " << doc.name << ": " << doc.poset.size() << " elements, "
           << doc.poset.cover_relation().pair_count() << " cover pairs\n";
    }
    if (partition_) {
      out_ << "partition of " << partition_->poset_name << ": " << partition_->support.block_count()
           << " blocks" << (partition_->order ? ", ordered" : "") << "\n";
    }
    if (map_) {
      out_ << "map " << map_->name << ": " << map_->dom_name << " -> " << map_->cod_name << "\n";
    }
    out_ << "ok\n";
    return kExitOk;
  }

  int classify_partition() {
    const PartitionDocument& doc = partition();
    const Poset& p = poset().poset;
    if (doc.order) {
      const PartitionClass cls = classify(p, OrderedPartition(doc.support, *doc.order));
      out_ << "monotone: " << yes_no(cls.monotone) << "\n"
           << "regular: " << yes_no(cls.regular) << "\n"
           << "open: " << yes_no(cls.open) << "\n";
      return kExitOk;
    }
    const std::size_t orders = count_monotone_orders(p, doc.support);
    out_ << "support: " << format_support(p, doc.support) << "\n";
    out_ << "monotone: " << orders << (orders == 1 ? " order" : " orders") << "\n";
    auto show = [&](const char* name, const std::optional<Relation>& order) {
      out_ << name << ": "
           << (order ? format_ordered_partition(p, OrderedPartition(doc.support, *order)) : "none")
           << "\n";
    };
    show("regular", regular_order(p, doc.support));
    show("open", open_order(p, doc.support));
    return kExitOk;
  }

  int enumerate() {
    const Poset& p = poset().poset;
    const PartitionKind k = kind();
    const Route route = parse_route(options_.route);
    const EnumerationReport report =
        route == Route::fibres
            ? enumerate_partitions_via_fibres(p, k, options_.has_bound ? options_.bound : p.size())
            : enumerate_partitions(p, k, route,
                                   options_.has_bound ? std::optional(options_.bound)
                                                      : std::nullopt);
    out_ << "count: " << report.count() << "\n";
    for (const auto& item : report.items) out_ << format_ordered_partition(p, item) << "\n";
    return kExitOk;
  }

  int count_partitions() {
    const Poset& p = poset().poset;
    const Route route = parse_route(options_.route);
    auto count_of = [&](PartitionKind k) {
      if (route == Route::fibres) {
        return enumerate_partitions_via_fibres(p, k, options_.has_bound ? options_.bound : p.size())
            .count();
      }
      return enumerate_partitions(p, k, route).count();
    };
    if (!options_.kind.empty()) {
      out_ << count_of(parse_kind(options_.kind)) << "\n";
      return kExitOk;
    }
    for (PartitionKind k : kAllKinds) out_ << to_string(k) << ": " << count_of(k) << "\n";
    return kExitOk;
  }

  int factorize_map() {
    if (!map_) throw UsageError{"factorize needs --map"};
    const bool regular_epi = options_.system == "repi-mono";
    const Factorisation fac = factorize(map_->map, regular_epi
                                                       ? FactorisationSystem::regular_epi_mono
                                                       : FactorisationSystem::epi_regular_mono);
    const std::string mid = map_->name + "_mid";
    out_ << "# " << map_->name << " = second . first ("
         << (regular_epi ? "regular epi, mono" : "epi, regular mono") << ")\n";
    out_ << serialize_poset(fac.mid, mid) << "\n";
    out_ << serialize_map(fac.first, map_->name + "_first", map_->dom_name, mid) << "\n";
    out_ << serialize_map(fac.second, map_->name + "_second", mid, map_->cod_name);
    return kExitOk;
  }

  int crosscheck() {
    const PosetDocument& doc = poset();
    const std::size_t bound = options_.has_bound ? options_.bound : doc.poset.size();
    const CrossCheckReport report = cross_check(doc.poset, bound);
    out_ << "poset " << doc.name << ": " << doc.poset.size() << " elements, codomain bound "
         << bound << "\n";
    for (PartitionKind k : kAllKinds) {
      const RouteCounts& c = report.counts_for(k);
      out_ << to_string(k) << ": blocks " << c.blocks << ", quasiorders " << c.quasiorders
           << ", fibres " << c.fibres << "\n";
    }
    out_ << "agreement: " << yes_no(report.agreement) << "\n";
    if (report.first_discrepancy) {
      const Discrepancy& d = *report.first_discrepancy;
      out_ << "first discrepancy: " << to_string(d.kind) << " "
           << format_ordered_partition(doc.poset, d.witness) << " found by "
           << to_string(d.found_by) << ", missed by " << to_string(d.missed_by) << "\n";
      return kExitNegative;
    }
    return kExitOk;
  }

  int dot() {
    const PosetDocument& doc = poset();
    out_ << to_dot(doc.poset, doc.name);
    return kExitOk;
  }

  const Options& options_;
  std::ostream& out_;
  std::vector<PosetDocument> posets_;
  std::optional<PartitionDocument> partition_;
  std::optional<MapDocument> map_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options options;
  CLI::App app{"Partitions of finite posets: classify, enumerate, count, factorize, crosscheck",
               "posetpart"};
  app.add_option("command", options.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(
          {"validate", "classify", "enumerate", "count", "factorize", "crosscheck", "dot"}));
  app.add_option("--poset", options.poset_files, "Poset file (repeatable)");
  app.add_option("--generate", options.generated, "Generated poset: chain:N or antichain:N");
  app.add_option("--partition", options.partition_file, "Partition file");
  app.add_option("--map", options.map_file, "Map file");
  app.add_option("--kind", options.kind, "Partition kind")
      ->check(CLI::IsMember({"monotone", "regular", "open"}));
  app.add_option("--route", options.route, "Enumeration route")
      ->check(CLI::IsMember({"blocks", "quasiorders", "fibres"}));
  auto* bound = app.add_option("--bound", options.bound,
                               "Codomain bound for the fibres route and crosscheck; size guard "
                               "override for the other routes");
  app.add_option("--system", options.system, "Factorisation system")
      ->check(CLI::IsMember({"repi-mono", "epi-rmono"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  options.has_bound = bound->count() > 0;

  try {
    Session session(options, out);
    return session.dispatch();
  } catch (const UsageError& e) {
    err << "error: " << e.message << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace posetpart::cli
