// Command line front end: builds the crystals, checks them against the
// shipped golden data, and exports graphs, tables, walls, and patterns.
//
// Exit codes: 0 success, 1 failed verification or error, 2 usage,
// 3 resource limit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "yw/cartan.hpp"
#include "yw/data.hpp"
#include "yw/energy.hpp"
#include "yw/errors.hpp"
#include "yw/graph.hpp"
#include "yw/path_model.hpp"
#include "yw/perfect_crystal.hpp"
#include "yw/render.hpp"
#include "yw/tensor.hpp"
#include "yw/walls.hpp"

namespace {

yw::Algebra parseAlgebra(const std::string& name) {
  auto a = yw::algebraFromName(name);
  if (!a) throw CLI::ValidationError("--algebra", "unknown algebra " + name);
  return *a;
}

void writeOut(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + path);
  out << text;
}

std::vector<std::string> splitKey(const std::string& key, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : key) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

yw::YoungWall parseWallKey(const yw::PerfectCrystal& b,
                           const std::string& key) {
  yw::YoungWall w;
  if (key == "ground" || key.empty()) return w;
  for (const std::string& part : splitKey(key, '|')) {
    std::size_t open = part.rfind('(');
    if (open == std::string::npos || part.back() != ')') {
      throw std::runtime_error("bad wall column '" + part +
                               "', want label(shift)");
    }
    std::string label = part.substr(0, open);
    int shift = std::stoi(part.substr(open + 1, part.size() - open - 2));
    auto v = b.vertexByLabel(label);
    if (!v) throw std::runtime_error("unknown class label '" + label + "'");
    w.cols.push_back({*v, shift});
  }
  return w;
}

yw::LambdaPath parsePathKey(const yw::PerfectCrystal& b,
                            const std::string& key) {
  yw::LambdaPath p;
  if (key == "ground" || key.empty()) return p;
  for (const std::string& part : splitKey(key, '|')) {
    auto v = b.vertexByLabel(part);
    if (!v) throw std::runtime_error("unknown class label '" + part + "'");
    p.dev.push_back(*v);
  }
  return p;
}

struct Op {
  bool lower;
  int i;
};

std::vector<Op> parseOps(const std::vector<std::string>& words) {
  std::vector<Op> ops;
  for (const std::string& w : words) {
    if (w.size() != 2 || (w[0] != 'f' && w[0] != 'e') || w[1] < '0' ||
        w[1] >= '0' + yw::kRank) {
      throw std::runtime_error("bad operator '" + w +
                               "', want f0..f4 or e0..e4");
    }
    ops.push_back({w[0] == 'f', w[1] - '0'});
  }
  return ops;
}

yw::GoldenEnergyTable loadGoldenEnergy(yw::Algebra a) {
  return yw::parseEnergyCsv(yw::loadDataset(yw::energyDataset(a)));
}

yw::ConstancyReport constancyParallel(const yw::PerfectCrystal& b,
                                      const yw::EnergyTable& h, int window,
                                      int workers) {
  if (workers <= 1) return yw::checkAffineConstancy(b, h, window);
  std::vector<yw::ConstancyReport> parts(workers);
  std::vector<std::thread> threads;
  int n = b.size();
  for (int w = 0; w < workers; ++w) {
    int lo = n * w / workers;
    int hi = n * (w + 1) / workers;
    threads.emplace_back([&, w, lo, hi] {
      parts[w] = yw::checkAffineConstancy(b, h, window, lo, hi);
    });
  }
  for (auto& t : threads) t.join();
  yw::ConstancyReport merged;
  for (const auto& p : parts) {
    merged.checkedMoves += p.checkedMoves;
    if (!p.ok && merged.ok) {
      merged.ok = false;
      merged.detail = p.detail;
    }
  }
  return merged;
}

struct CheckPrinter {
  bool allOk = true;

  void line(bool ok, const std::string& what, const std::string& detail = "") {
    std::cout << (ok ? "ok:   " : "FAIL: ") << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    allOk = allOk && ok;
  }
};

bool verifyAlgebra(yw::Algebra a, int depth, int window, int workers,
                   std::size_t maxNodes) {
  CheckPrinter out;
  std::cout << "== " << yw::algebraName(a) << " ==\n";

  yw::PerfectCrystal b = yw::PerfectCrystal::build(a);
  auto golden = yw::parseEdgeTsv(yw::loadDataset(yw::edgesDataset(a)));
  auto arrowCmp = yw::compareArrowsWithGolden(b, golden);
  out.line(arrowCmp.ok(),
           "crystal arrows match golden edge list (" +
               std::to_string(b.arrows().size()) + " arrows)",
           arrowCmp.ok() ? ""
                         : std::to_string(arrowCmp.missing.size()) +
                               " missing, " +
                               std::to_string(arrowCmp.unexpected.size()) +
                               " unexpected");

  auto perfect = yw::checkPerfect(b);
  out.line(perfect.ok(), "level-1 perfectness conditions", perfect.detail);

  yw::EnergyTable h = yw::computeEnergy(b);
  yw::EnergyTable hs = yw::computeEnergyShuffled(b, 0x9e3779b97f4a7c15ULL);
  out.line(h == hs, "energy propagation is order independent");

  auto goldenH = loadGoldenEnergy(a);
  auto energyCmp = yw::compareWithGolden(b, h, goldenH);
  out.line(energyCmp.ok(),
           "energy table matches golden (" + std::to_string(b.size()) + "x" +
               std::to_string(b.size()) + ")",
           energyCmp.ok()
               ? ""
               : std::to_string(energyCmp.mismatches.size()) + " mismatches");

  auto constancy = constancyParallel(b, h, window, workers);
  out.line(constancy.ok,
           "affine energy invariant under crystal moves, window " +
               std::to_string(window) + " (" +
               std::to_string(constancy.checkedMoves) + " moves)",
           constancy.detail);

  yw::WallModelContext reduced(b, h, yw::WallModel::Reduced);
  yw::WallModelContext proper(b, h, yw::WallModel::Proper);
  yw::PathModelContext paths(b, h);
  yw::EnumLimits limits{maxNodes, depth};

  try {
    auto gWallF = yw::enumerate(reduced, "reduced", reduced.ground(),
                                yw::Direction::FOnly, limits);
    auto gWallBoth = yw::enumerate(reduced, "reduced", reduced.ground(),
                                   yw::Direction::Both, limits);
    auto gPath = yw::enumerate(paths, "path", paths.ground(),
                               yw::Direction::FOnly, limits);
    auto gProper = yw::enumerate(proper, "proper", proper.ground(),
                                 yw::Direction::Both, limits);

    auto isoPW = yw::anchoredIsomorphic(gPath, gWallF);
    out.line(isoPW.ok,
             "reduced walls realise the path crystal to depth " +
                 std::to_string(depth) + " (" +
                 std::to_string(gWallF.nodes.size()) + " nodes)",
             isoPW.detail);

    auto isoFB = yw::anchoredIsomorphic(gWallF, gWallBoth);
    out.line(isoFB.ok, "raising adds nothing to the lowering closure",
             isoFB.detail);

    auto isoPR = yw::anchoredIsomorphic(gProper, gWallBoth);
    out.line(isoPR.ok,
             "ground component of the proper model is the reduced model",
             isoPR.detail);
  } catch (const yw::ResourceLimitError& e) {
    out.line(false, "wall enumeration", e.what());
  }

  auto seeds = proper.properSeeds(2, 1);
  bool seedsOk = true;
  std::string seedDetail;
  for (const auto& w : seeds) {
    auto counts = proper.blockCounts(w);
    bool nonneg = true;
    for (int c : counts) nonneg = nonneg && c >= 0;
    if (!proper.contains(w) || !nonneg) {
      seedsOk = false;
      seedDetail = proper.key(w);
      break;
    }
  }
  out.line(seedsOk,
           "enumerated proper walls are valid with nonnegative block counts "
           "(" + std::to_string(seeds.size()) + " walls)",
           seedDetail);

  return out.allOk;
}

int selfTestPerturb(yw::Algebra a, std::size_t arrowIndex) {
  yw::PerfectCrystal b = yw::PerfectCrystal::build(a);
  yw::PerfectCrystal p = yw::perturbArrowForTest(b, arrowIndex);
  auto golden = yw::parseEdgeTsv(yw::loadDataset(yw::edgesDataset(a)));
  auto cmp = yw::compareArrowsWithGolden(p, golden);
  bool arrowsDetected = !cmp.ok();
  bool energyDetected = false;
  std::string energyNote;
  try {
    yw::EnergyTable h = yw::computeEnergy(p);
    auto e = yw::compareWithGolden(p, h, loadGoldenEnergy(a));
    energyDetected = !e.ok();
    energyNote = energyDetected
                     ? std::to_string(e.mismatches.size()) + " table mismatches"
                     : "table unexpectedly matches";
  } catch (const std::exception& e) {
    energyDetected = true;
    energyNote = std::string("propagation rejected the graph: ") + e.what();
  }
  std::cout << "perturbed arrow " << arrowIndex << ": edge comparison "
            << (arrowsDetected ? "detected" : "MISSED") << " ("
            << cmp.missing.size() << " missing, " << cmp.unexpected.size()
            << " unexpected); energy check "
            << (energyDetected ? "detected" : "MISSED") << " (" << energyNote
            << ")\n";
  return arrowsDetected && energyDetected ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"level-1 perfect crystals, energy tables, and Young walls for "
               "the twisted E6 and untwisted F4 affine types"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string algebraName = "e6-2";
  app.add_option("-a,--algebra", algebraName, "algebra: e6-2 or f4-1")
      ->check(CLI::IsMember({"e6-2", "f4-1"}));

  // graph
  auto* graphCmd = app.add_subcommand(
      "graph", "enumerate a crystal model and print it as DOT or JSON");
  std::string model = "crystal", direction = "both", format = "dot",
              outPath = "-";
  int depth = -1;
  std::size_t maxNodes = 1'000'000;
  graphCmd->add_option("-m,--model", model, "crystal|affine|reduced|proper|path")
      ->check(CLI::IsMember({"crystal", "affine", "reduced", "proper", "path"}));
  graphCmd->add_option("-d,--depth", depth,
                       "ball radius in operator steps (required for infinite "
                       "models)");
  graphCmd->add_option("--direction", direction, "f|e|both")
      ->check(CLI::IsMember({"f", "e", "both"}));
  graphCmd->add_option("-f,--format", format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));
  graphCmd->add_option("-o,--output", outPath, "output file, - for stdout");
  graphCmd->add_option("--max-nodes", maxNodes, "node cap before aborting");

  // energy
  auto* energyCmd = app.add_subcommand(
      "energy", "compute the energy table and print or check it");
  bool energyCheck = false;
  std::optional<std::uint64_t> energySeed;
  energyCmd->add_flag("--check", energyCheck,
                      "compare against the golden table instead of printing");
  energyCmd->add_option("--seed", energySeed,
                        "shuffle propagation order with this seed");
  energyCmd->add_option("-o,--output", outPath, "output file, - for stdout");

  // wall
  auto* wallCmd = app.add_subcommand(
      "wall", "inspect a wall and apply crystal operators to it");
  std::string wallKey = "ground", wallModelName = "reduced";
  std::vector<std::string> applyWords;
  wallCmd->add_option("-w,--wall", wallKey,
                      "wall as class(shift)|class(shift)|..., position 0 "
                      "first; 'ground' for the empty wall");
  wallCmd->add_option("--model", wallModelName, "reduced|proper")
      ->check(CLI::IsMember({"reduced", "proper"}));
  wallCmd->add_option("--apply", applyWords,
                      "operators to apply in order, e.g. f0 f1 e0");

  // path
  auto* pathCmd = app.add_subcommand(
      "path", "inspect a deviation sequence and apply crystal operators");
  std::string pathKey = "ground";
  bool pathAsWall = false;
  pathCmd->add_option("-p,--path", pathKey,
                      "path as label|label|..., position 0 first");
  pathCmd->add_option("--apply", applyWords, "operators to apply in order");
  pathCmd->add_flag("--as-wall", pathAsWall,
                    "also print the corresponding reduced wall");

  // pattern
  auto* patternCmd =
      app.add_subcommand("pattern", "print the block pattern as ASCII art");
  int periods = 2;
  patternCmd->add_option("--periods", periods, "number of periods to draw")
      ->check(CLI::PositiveNumber);

  // cartan
  auto* cartanCmd =
      app.add_subcommand("cartan", "print the Cartan datum as JSON");

  // data
  auto* dataCmd =
      app.add_subcommand("data", "list or dump the embedded golden data");
  std::string dumpName;
  dataCmd->add_option("--dump", dumpName, "print this data file verbatim");

  // verify
  auto* verifyCmd = app.add_subcommand(
      "verify", "run the verification battery against the golden data");
  bool verifyAll = false;
  int vDepth = 5, vWindow = 3, vWorkers = 1;
  std::optional<std::size_t> perturbIndex;
  verifyCmd->add_flag("--all", verifyAll, "verify both algebras");
  verifyCmd->add_option("--depth", vDepth, "wall/path enumeration depth");
  verifyCmd->add_option("--window", vWindow, "affinization shift window");
  verifyCmd->add_option("--workers", vWorkers, "threads for the sweep")
      ->check(CLI::PositiveNumber);
  verifyCmd->add_option("--max-nodes", maxNodes, "node cap before aborting");
  verifyCmd->add_option(
      "--self-test-perturb", perturbIndex,
      "damage this arrow and require the checks to notice; exit 0 when the "
      "damage is detected");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    yw::Algebra algebra = parseAlgebra(algebraName);

    if (graphCmd->parsed()) {
      yw::Direction dir = direction == "f"   ? yw::Direction::FOnly
                          : direction == "e" ? yw::Direction::EOnly
                                             : yw::Direction::Both;
      if (model != "crystal" && depth < 0) {
        std::cerr << "error: --depth is required for model " << model << "\n";
        return 2;
      }
      yw::EnumLimits limits{maxNodes,
                            depth < 0 ? std::numeric_limits<int>::max() : depth};
      yw::PerfectCrystal b = yw::PerfectCrystal::build(algebra);
      yw::CrystalGraph g;
      if (model == "crystal") {
        g = yw::enumerate(yw::ClassicalView{&b}, model, b.empty(), dir, limits);
      } else if (model == "affine") {
        g = yw::enumerate(yw::AffineView{&b}, model,
                          yw::AffineVertex{b.empty(), 0}, dir, limits);
      } else {
        yw::EnergyTable h = yw::computeEnergy(b);
        if (model == "path") {
          yw::PathModelContext ctx(b, h);
          g = yw::enumerate(ctx, model, ctx.ground(), dir, limits);
        } else {
          yw::WallModelContext ctx(b, h,
                                   model == "reduced" ? yw::WallModel::Reduced
                                                      : yw::WallModel::Proper);
          g = yw::enumerate(ctx, model, ctx.ground(), dir, limits);
        }
      }
      writeOut(outPath, format == "dot" ? yw::toDot(g) : yw::toJson(g));
      return 0;
    }

    if (energyCmd->parsed()) {
      yw::PerfectCrystal b = yw::PerfectCrystal::build(algebra);
      yw::EnergyTable h = energySeed ? yw::computeEnergyShuffled(b, *energySeed)
                                     : yw::computeEnergy(b);
      auto golden = loadGoldenEnergy(algebra);
      if (energyCheck) {
        auto cmp = yw::compareWithGolden(b, h, golden);
        if (cmp.ok()) {
          std::cout << "energy table matches golden (" << b.size() << "x"
                    << b.size() << ")\n";
          return 0;
        }
        for (const auto& m : cmp.mismatches) {
          std::cout << "mismatch at row " << m.rowLabel << ", column "
                    << m.colLabel << ": golden " << m.expected << ", computed "
                    << m.actual << "\n";
        }
        return 1;
      }
      writeOut(outPath, yw::energyTableToCsv(b, h, golden.rowLabels,
                                             golden.columnLabels));
      return 0;
    }

    if (wallCmd->parsed()) {
      yw::PerfectCrystal b = yw::PerfectCrystal::build(algebra);
      yw::EnergyTable h = yw::computeEnergy(b);
      yw::WallModelContext ctx(b, h,
                               wallModelName == "reduced"
                                   ? yw::WallModel::Reduced
                                   : yw::WallModel::Proper);
      yw::YoungWall w = ctx.canonical(parseWallKey(b, wallKey));
      if (!ctx.contains(w)) {
        std::cerr << "error: " << ctx.key(w) << " is not in the "
                  << wallModelName << " model\n";
        return 1;
      }
      for (const Op& op : parseOps(applyWords)) {
        auto next = op.lower ? ctx.ftilde(w, op.i) : ctx.etilde(w, op.i);
        std::cout << (op.lower ? "f" : "e") << op.i << ": ";
        if (!next) {
          std::cout << "undefined on " << ctx.key(w) << "\n";
          return 1;
        }
        w = *next;
        std::cout << ctx.key(w) << "\n";
      }
      std::cout << yw::renderWallText(ctx, w);
      std::cout << "key:    " << ctx.key(w) << "\n";
      std::cout << "weight: " << ctx.weight(w).toString() << "\n";
      std::cout << "eps:   ";
      for (int i = 0; i < yw::kRank; ++i) std::cout << ' ' << ctx.epsilon(w, i);
      std::cout << "\nphi:   ";
      for (int i = 0; i < yw::kRank; ++i) std::cout << ' ' << ctx.phi(w, i);
      std::cout << "\nadjacent energies:";
      for (int v : ctx.fockAdjacentEnergies(w)) std::cout << ' ' << v;
      std::cout << "\n";
      return 0;
    }

    if (pathCmd->parsed()) {
      yw::PerfectCrystal b = yw::PerfectCrystal::build(algebra);
      yw::EnergyTable h = yw::computeEnergy(b);
      yw::PathModelContext ctx(b, h);
      yw::LambdaPath p = ctx.canonical(parsePathKey(b, pathKey));
      for (const Op& op : parseOps(applyWords)) {
        auto next = op.lower ? ctx.ftilde(p, op.i) : ctx.etilde(p, op.i);
        std::cout << (op.lower ? "f" : "e") << op.i << ": ";
        if (!next) {
          std::cout << "undefined on " << ctx.key(p) << "\n";
          return 1;
        }
        p = *next;
        std::cout << ctx.key(p) << "\n";
      }
      std::cout << "key:    " << ctx.key(p) << "\n";
      std::cout << "weight: " << ctx.weight(p).toString() << "\n";
      if (pathAsWall) {
        yw::WallModelContext walls(b, h, yw::WallModel::Reduced);
        yw::YoungWall w = ctx.toWall(walls, p);
        std::cout << "reduced wall " << walls.key(w) << ":\n"
                  << yw::renderWallText(walls, w);
      }
      return 0;
    }

    if (patternCmd->parsed()) {
      std::string json = yw::loadDataset(yw::patternDataset(algebra));
      std::cout << yw::renderPattern(json, periods);
      return 0;
    }

    if (cartanCmd->parsed()) {
      std::cout << yw::CartanDatum::get(algebra).toJson() << "\n";
      return 0;
    }

    if (dataCmd->parsed()) {
      if (!dumpName.empty()) {
        for (int d = 0; d < yw::kDatasetCount; ++d) {
          auto ds = static_cast<yw::Dataset>(d);
          if (yw::datasetFileName(ds) == dumpName) {
            std::cout << yw::loadDataset(ds);
            return 0;
          }
        }
        std::cerr << "error: no data file named " << dumpName << "\n";
        return 2;
      }
      for (int d = 0; d < yw::kDatasetCount; ++d) {
        auto ds = static_cast<yw::Dataset>(d);
        auto text = yw::loadDataset(ds);
        char sum[32];
        std::snprintf(sum, sizeof sum, "%016llx",
                      static_cast<unsigned long long>(yw::fnv1a64(text)));
        std::cout << yw::datasetFileName(ds) << "  " << text.size()
                  << " bytes  fnv1a64=" << sum << "\n";
      }
      return 0;
    }

    if (verifyCmd->parsed()) {
      if (perturbIndex) return selfTestPerturb(algebra, *perturbIndex);
      bool ok = true;
      if (verifyAll) {
        ok = verifyAlgebra(yw::Algebra::E6_2, vDepth, vWindow, vWorkers,
                           maxNodes) &&
             ok;
        ok = verifyAlgebra(yw::Algebra::F4_1, vDepth, vWindow, vWorkers,
                           maxNodes) &&
             ok;
      } else {
        ok = verifyAlgebra(algebra, vDepth, vWindow, vWorkers, maxNodes);
      }
      std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
      return ok ? 0 : 1;
    }
  } catch (const yw::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
