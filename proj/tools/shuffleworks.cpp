// shuffleworks: in-place perfect shuffles and two-round swap networks.
//
// Subcommands: shuffle, factor, network, profile, selftest, bench.
// Data goes to stdout, diagnostics to stderr. Exit codes: 0 ok, 1 self-test
// failure, 2 parse error, 3 arity error, 4 index overflow.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "shuffleworks/shuffleworks.hpp"

namespace sw = shuffleworks;

namespace {

int code(sw::ExitCode c) { return static_cast<int>(c); }

sw::RulerMode ruler_mode_from_env() {
  const char* raw = std::getenv("SHUFFLEWORKS_POPCNT");
  if (raw == nullptr) return sw::RulerMode::kAuto;
  const std::string_view v(raw);
  if (v == "auto" || v.empty()) return sw::RulerMode::kAuto;
  if (v == "on") return sw::RulerMode::kHardware;
  if (v == "off") return sw::RulerMode::kCounter;
  std::cerr << "warning: SHUFFLEWORKS_POPCNT=" << v << " not one of auto|on|off; using auto\n";
  return sw::RulerMode::kAuto;
}

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sw::ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> tokenize(const std::string& text) {
  std::istringstream in(text);
  return {std::istream_iterator<std::string>(in), std::istream_iterator<std::string>()};
}

std::size_t parse_index(const std::string& tok) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos) {
    throw sw::ParseError("not a non-negative integer: '" + tok + "'");
  }
  errno = 0;
  const unsigned long long v = std::strtoull(tok.c_str(), nullptr, 10);
  if (errno == ERANGE) throw sw::OverflowError("integer too large: " + tok);
  return static_cast<std::size_t>(v);
}

// ---------------------------------------------------------------------------
// shuffle

struct ShuffleOptions {
  std::string input;
  std::string output;
  std::size_t k = 2;
  bool k_given = false;
  std::string method = "auto";
  bool records = false;
  bool in_place = false;
  bool stats = false;
  unsigned parallel = 0;
};

template <class SwapFn>
sw::ShuffleReport run_plan(sw::ShufflePlan plan, std::size_t n, std::size_t k, SwapFn&& swap,
                           unsigned threads) {
  const bool two_round = plan == sw::ShufflePlan::kBitrevPower || plan == sw::ShufflePlan::kModinv;
  if (threads > 1 && two_round) {
    const auto net = plan == sw::ShufflePlan::kBitrevPower
                         ? sw::build_bitrev_network(sw::ShuffleSpec(n, k))
                         : sw::build_modinv_network(n, k);
    sw::apply_network_parallel(net, swap, threads);
    sw::ShuffleReport report;
    report.plan = plan;
    report.swaps = net.total_swaps();
    report.rounds = net.rounds.size();
    return report;
  }
  return sw::run_in_place(plan, n, k, swap, ruler_mode_from_env());
}

void print_stats(const sw::ShuffleReport& r) {
  std::cerr << "swaps=" << r.swaps << " rounds=" << r.rounds
            << " euclid_iters=" << r.euclid_iterations << '\n';
}

int cmd_shuffle(const ShuffleOptions& opt) {
  const auto method = sw::parse_shuffle_method(opt.method);
  if (!method) throw sw::ParseError("unknown method '" + opt.method + "'");

  if (!opt.records) {
    if (opt.in_place) throw sw::ParseError("--in-place requires --records");
    auto tokens = tokenize(slurp(opt.input));
    if (tokens.empty()) throw sw::ParseError("no tokens in input");
    const auto plan = sw::resolve_plan(*method, tokens.size(), opt.k);
    sw::ShuffleReport report;
    if (plan == sw::ShufflePlan::kOracle) {
      tokens = sw::oracle_shuffle(tokens, opt.k);
    } else {
      report = run_plan(
          plan, tokens.size(), opt.k,
          [&](std::size_t i, std::size_t j) { tokens[i].swap(tokens[j]); }, opt.parallel);
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < tokens.size(); ++i) out << (i ? " " : "") << tokens[i];
    out << '\n';
    if (opt.output.empty()) {
      std::cout << out.str();
    } else {
      std::ofstream f(opt.output);
      f << out.str();
    }
    if (opt.stats) print_stats(report);
    return 0;
  }

  const auto check_arity = [&](const sw::RecordHeader& h) {
    if (opt.k_given && h.arity != opt.k) {
      throw sw::ParseError("--k " + std::to_string(opt.k) + " disagrees with file arity " +
                           std::to_string(h.arity));
    }
  };

  if (opt.in_place) {
    if (opt.input.empty() || opt.input == "-") throw sw::ParseError("--in-place needs a file path");
    sw::MappedRecordFile file(opt.input);
    check_arity(file.header());
    const auto view = file.records();
    const auto plan = sw::resolve_plan(*method, view.size(), file.header().arity);
    if (plan == sw::ShufflePlan::kOracle) throw sw::ParseError("--method oracle is not in-place");
    const auto report = run_plan(
        plan, view.size(), file.header().arity,
        [&view](std::size_t i, std::size_t j) { view.swap(i, j); }, opt.parallel);
    if (opt.stats) print_stats(report);
    return 0;
  }

  std::istringstream in(slurp(opt.input));
  sw::RecordFile file = sw::read_record_file(in);
  check_arity(file.header);
  const std::size_t n = file.header.count;
  const std::size_t k = file.header.arity;
  const auto plan = sw::resolve_plan(*method, n, k);
  sw::ShuffleReport report;
  if (plan == sw::ShufflePlan::kOracle) {
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    const auto src = sw::oracle_shuffle(ids, k);
    const std::size_t r = file.header.record_size;
    std::vector<std::uint8_t> body(file.body.size());
    for (std::size_t pos = 0; pos < n; ++pos) {
      std::copy_n(file.body.begin() + static_cast<std::ptrdiff_t>(src[pos] * r), r,
                  body.begin() + static_cast<std::ptrdiff_t>(pos * r));
    }
    file.body = std::move(body);
  } else {
    const sw::RecordView view(file.body, file.header.record_size);
    report = run_plan(
        plan, n, k, [&view](std::size_t i, std::size_t j) { view.swap(i, j); }, opt.parallel);
  }
  if (opt.output.empty()) {
    sw::write_record_file(std::cout, file);
    std::cout.flush();
  } else {
    std::ofstream f(opt.output, std::ios::binary);
    sw::write_record_file(f, file);
  }
  if (opt.stats) print_stats(report);
  return 0;
}

// ---------------------------------------------------------------------------
// factor

std::string cycle_notation(const sw::Involution& inv) {
  if (inv.is_identity()) return "()";
  std::string out;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const std::size_t j = inv(i);
    if (j < i) continue;
    out += j == i ? "(" + std::to_string(i) + ")"
                  : "(" + std::to_string(i) + " " + std::to_string(j) + ")";
  }
  return out;
}

sw::Permutation read_permutation(const std::string& text) {
  std::vector<std::size_t> map;
  for (const auto& tok : tokenize(text)) map.push_back(parse_index(tok));
  return sw::Permutation(std::move(map));
}

int cmd_factor(const std::string& perm_text, bool enumerate) {
  std::string text = perm_text;
  if (text.empty()) std::getline(std::cin, text);
  const sw::Permutation p = read_permutation(text);
  if (!enumerate) {
    const auto pair = sw::factor_permutation(p);
    std::cout << cycle_notation(pair.s) << '\n' << cycle_notation(pair.t) << '\n';
    return 0;
  }
  if (p.size() == 0 || sw::cycle_decompose(p).cycles.size() != 1) {
    throw sw::ParseError("--enumerate needs a single-cycle permutation");
  }
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto pair = sw::factor_permutation(p, k);
    std::cout << cycle_notation(pair.s) << '\n' << cycle_notation(pair.t) << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// network

struct NetworkOptions {
  std::size_t k = 2;
  unsigned exponent = 0;
  std::size_t size = 0;
  std::string perm;
  bool perm_given = false;
  std::string method;
  std::string format = "text";
};

int cmd_network(const NetworkOptions& opt) {
  sw::SwapNetwork net;
  if (opt.perm_given) {
    if (!opt.method.empty() && opt.method != "factorization") {
      throw sw::ParseError("--perm only supports --method factorization");
    }
    net = sw::build_network(read_permutation(opt.perm));
  } else {
    std::size_t n = opt.size;
    if (n == 0) {
      if (opt.exponent == 0) throw sw::ParseError("give --size, --exp or --perm");
      n = sw::ShuffleSpec::power(opt.k, opt.exponent).size();
    }
    const std::string method = opt.method.empty() ? "bitrev" : opt.method;
    sw::NetworkMethod m;
    if (method == "bitrev") {
      m = sw::NetworkMethod::kBitrev;
    } else if (method == "modinv") {
      m = sw::NetworkMethod::kModinv;
    } else if (method == "factorization") {
      m = sw::NetworkMethod::kFactorization;
    } else {
      throw sw::ParseError("unknown method '" + method + "'");
    }
    net = sw::build_network(m, n, opt.k);
  }
  if (opt.format == "text") {
    std::cout << sw::emit_text(net);
  } else if (opt.format == "dot") {
    std::cout << sw::emit_dot(net);
  } else {
    throw sw::ParseError("unknown format '" + opt.format + "'");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// profile

int cmd_profile(std::size_t k, const std::string& range, std::size_t step) {
  const auto dots = range.find("..");
  std::uint64_t lo = 0, hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_index(range);
  } else {
    lo = parse_index(range.substr(0, dots));
    hi = parse_index(range.substr(dots + 2));
  }
  if (lo < 1 || hi < lo || step == 0) throw sw::ParseError("invalid --m-range " + range);
  std::cout << "N,euclid_iterations,gcd_calls,swaps\n";
  for (const auto& row : sw::op_count_profile(lo, hi, k, step)) {
    std::cout << row.n << ',' << row.ops.euclid_iterations << ',' << row.ops.gcd_calls << ','
              << row.ops.swaps << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------------------
// selftest

class SelfTest {
 public:
  explicit SelfTest(bool inject_fault) : inject_fault_(inject_fault) {}

  void check(bool ok, const std::string& what) {
    ++total_;
    if (ok) {
      ++passed_;
    } else {
      std::cerr << "FAIL " << what << '\n';
    }
  }

  // Swap callable over ids; with fault injection the very first swap of the
  // run is dropped.
  auto swapper(std::vector<std::size_t>& ids) {
    return [this, &ids](std::size_t i, std::size_t j) {
      if (inject_fault_ && !fault_used_) {
        fault_used_ = true;
        return;
      }
      std::swap(ids[i], ids[j]);
    };
  }

  void run(std::size_t max_n) {
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (std::size_t k : {2, 3, 4, 5, 7}) {
        if (n % k != 0) continue;
        run_case(n, k);
      }
    }
  }

  std::size_t passed() const { return passed_; }
  std::size_t total() const { return total_; }

 private:
  void run_case(std::size_t n, std::size_t k) {
    const std::string tag = " N=" + std::to_string(n) + " k=" + std::to_string(k);
    std::vector<std::size_t> ids(n);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    const auto expected = sw::oracle_shuffle(ids, k);

    auto work = ids;
    sw::shuffle_modinv_with(n, k, swapper(work));
    check(work == expected, "modinv" + tag);

    const sw::ShuffleSpec spec(n, k);
    if (spec.is_power()) {
      work = ids;
      const auto counts = sw::shuffle_power_with(spec, swapper(work));
      check(work == expected, "bitrev" + tag);
      check(counts == sw::swap_counts(spec), "bitrev swap counts" + tag);
    }
    if (k == 2) {
      work = ids;
      sw::shuffle_general_k2_with(n, swapper(work));
      check(work == expected, "bitrev-reduced" + tag);
    }

    const auto pair = sw::factor_permutation(sw::in_shuffle_permutation(n, k));
    work = ids;
    sw::apply_involution(pair.t, swapper(work));
    sw::apply_involution(pair.s, swapper(work));
    check(work == expected, "factorization" + tag);

    const sw::ModContext ctx = sw::ModContext::for_size(n, k);
    const std::uint64_t m = ctx.modulus();
    bool laws = true;
    for (std::uint64_t x = 0; x < m && laws; ++x) {
      for (std::uint64_t r : {std::uint64_t{1}, std::uint64_t{k}}) {
        laws = laws && sw::j_map(r, sw::j_map(r, x, ctx), ctx) == x;
      }
      laws = laws && sw::compose_j(k, 1, x, ctx) == (k * x) % m;
    }
    check(laws, "involution laws" + tag);
  }

  bool inject_fault_;
  bool fault_used_ = false;
  std::size_t passed_ = 0;
  std::size_t total_ = 0;
};

int cmd_selftest(std::size_t max_n, bool inject_fault) {
  SelfTest t(inject_fault);
  t.run(max_n);
  if (t.total() == 0) {
    std::cout << "selftest: 0 checks run (max-n " << max_n << ")\n";
    return 0;
  }
  std::cout << "selftest: " << t.passed() << "/" << t.total() << " checks passed\n";
  return t.passed() == t.total() ? 0 : code(sw::ExitCode::kTestFailure);
}

// ---------------------------------------------------------------------------
// bench

int cmd_bench(const std::string& method_name, std::size_t k, std::size_t size,
              std::size_t record_size, unsigned repeat) {
  const auto method = sw::parse_shuffle_method(method_name);
  if (!method || *method == sw::ShuffleMethod::kOracle) {
    throw sw::ParseError("bench supports auto|bitrev|modinv");
  }
  const auto plan = sw::resolve_plan(*method, size, k);
  std::size_t bytes = 0;
  if (__builtin_mul_overflow(size, record_size, &bytes)) throw sw::OverflowError("N*R overflows");
  std::vector<std::uint8_t> buffer(bytes);
  for (std::size_t b = 0; b < bytes; ++b) buffer[b] = static_cast<std::uint8_t>(b * 131 + 7);
  const sw::RecordView view(buffer, record_size);

  std::cout << "method,N,k,record_size,seconds,swaps\n";
  for (unsigned rep = 0; rep < repeat; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    const auto report = sw::run_in_place(
        plan, size, k, [&view](std::size_t i, std::size_t j) { view.swap(i, j); },
        ruler_mode_from_env());
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    std::cout << sw::to_string(plan) << ',' << size << ',' << k << ',' << record_size << ','
              << elapsed.count() << ',' << report.swaps << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"In-place perfect shuffles and two-round swap networks"};
  app.require_subcommand(1);

  ShuffleOptions sh;
  auto* shuffle = app.add_subcommand("shuffle", "k-way perfect in-shuffle of a token list or record file");
  shuffle->add_option("input", sh.input, "input file (default: stdin)");
  auto* k_opt = shuffle->add_option("--k", sh.k, "shuffle arity (records: must match the file)");
  shuffle->add_option("--method", sh.method, "bitrev | modinv | auto | oracle")
      ->check(CLI::IsMember({"bitrev", "modinv", "auto", "oracle"}));
  auto* records = shuffle->add_flag("--records", sh.records, "input is an IVSH record file");
  shuffle->add_flag("--lines", "input is whitespace-separated tokens (default)")->excludes(records);
  shuffle->add_flag("--in-place", sh.in_place, "swap records directly in the file");
  shuffle->add_option("-o,--output", sh.output, "output file (default: stdout)");
  shuffle->add_flag("--stats", sh.stats, "print swap and operation counts to stderr");
  shuffle->add_option("--parallel", sh.parallel, "worker threads per swap round (0 or 1: serial)");

  std::string perm_text;
  bool enumerate = false;
  auto* factor = app.add_subcommand("factor", "write a permutation as two involutions S, T (apply T, then S)");
  factor->add_option("perm", perm_text, "image list, e.g. \"1 2 0\" (default: one line of stdin)");
  factor->add_flag("--enumerate", enumerate, "print all factorizations of a single-cycle input");

  NetworkOptions nw;
  auto* network = app.add_subcommand("network", "emit a two-round swap network");
  network->add_option("--k", nw.k, "shuffle arity");
  network->add_option("--exp,-n", nw.exponent, "exponent n, N = k^n");
  network->add_option("--size,-N", nw.size, "element count N");
  auto* perm_opt = network->add_option("--perm", nw.perm, "factor this permutation instead");
  network->add_option("--method", nw.method, "bitrev | modinv | factorization");
  network->add_option("--format", nw.format, "text | dot");

  std::size_t prof_k = 2, prof_step = 1;
  std::string prof_range;
  auto* profile = app.add_subcommand("profile", "CSV of operation counts of the modinv method");
  profile->add_option("--k", prof_k, "shuffle arity");
  profile->add_option("--m-range", prof_range, "lo..hi (values of M)")->required();
  profile->add_option("--step", prof_step, "step between M values");

  std::size_t max_n = 64;
  bool inject_fault = false;
  auto* selftest = app.add_subcommand("selftest", "check every method against the oracle");
  selftest->add_option("--max-n", max_n, "largest N to check");
  selftest->add_flag("--inject-fault", inject_fault)->group("");

  std::string bench_method = "auto";
  std::size_t bench_k = 2, bench_size = 0, bench_record = 8;
  unsigned bench_log2 = 20, bench_repeat = 1;
  auto* bench = app.add_subcommand("bench", "time an in-place shuffle of synthetic records");
  bench->add_option("--method", bench_method, "auto | bitrev | modinv");
  bench->add_option("--k", bench_k, "shuffle arity");
  bench->add_option("--log2n", bench_log2, "N = 2^log2n when --size is absent");
  bench->add_option("--size,-N", bench_size, "element count N");
  bench->add_option("--record-size", bench_record, "bytes per record");
  bench->add_option("--repeat", bench_repeat, "number of timed runs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return code(sw::ExitCode::kParse);
  }

  try {
    if (shuffle->parsed()) {
      sh.k_given = k_opt->count() > 0;
      return cmd_shuffle(sh);
    }
    if (factor->parsed()) return cmd_factor(perm_text, enumerate);
    if (network->parsed()) {
      nw.perm_given = perm_opt->count() > 0;
      return cmd_network(nw);
    }
    if (profile->parsed()) return cmd_profile(prof_k, prof_range, prof_step);
    if (selftest->parsed()) return cmd_selftest(max_n, inject_fault);
    if (bench->parsed()) {
      if (bench_size == 0) {
        if (bench_log2 >= 63) throw sw::OverflowError("--log2n too large");
        bench_size = std::size_t{1} << bench_log2;
      }
      return cmd_bench(bench_method, bench_k, bench_size, bench_record, bench_repeat);
    }
  } catch (const sw::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return code(sw::ExitCode::kParse);
  }
  return 0;
}
