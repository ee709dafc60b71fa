#include "unital/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "unital/acceptance.hpp"
#include "unital/errors.hpp"
#include "unital/translations.hpp"
#include "unital/unital_io.hpp"
#include "unital/unitals.hpp"
#include "unital/zoo.hpp"

namespace unital::cli {

namespace {

using nlohmann::ordered_json;

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Options {
  std::string construct_kind;
  int q = 0;
  std::string out_path;
  std::string in_path;
  std::uint32_t z1 = 0, z2 = 0;
  std::string check;
  std::optional<int> param;
  unsigned jobs = 1;
  bool all = false;
};

void emit(std::ostream &out, const std::string &path, const std::string &text) {
  if (path.empty())
    out << text;
  else
    design::write_unital_file(path, text);
}

int do_construct(const Options &o, std::ostream &out) {
  if (o.construct_kind == "hermitian") {
    if (o.q == 0)
      throw CLI::RequiredError("--q");
    const auto u = unitals::hermitian_unital(o.q);
    emit(out, o.out_path,
         design::serialize_unital(u, unitals::hermitian_b_infinity(o.q)));
  } else {
    const auto c = unitals::sl23_construction();
    emit(out, o.out_path, design::serialize_unital(c.unital, c.b_infinity));
  }
  return kPass;
}

ordered_json audit_json(const design::Audit &a, int declared_q) {
  ordered_json j;
  j["valid"] = a.valid && a.q == declared_q;
  j["q"] = declared_q;
  j["inferred_q"] = a.q;
  j["points"] = a.points;
  j["blocks"] = a.blocks;
  j["violations"] = ordered_json::array();
  for (const auto &v : a.violations) {
    ordered_json w;
    w["kind"] = v.kind;
    w["witness"] = v.witness;
    w["message"] = v.message;
    j["violations"].push_back(std::move(w));
  }
  if (a.valid && a.q != declared_q)
    j["violations"].push_back({{"kind", "declared order"},
                               {"witness", ordered_json::array()},
                               {"message", "header says q " +
                                               std::to_string(declared_q)}});
  return j;
}

int do_verify(const Options &o, std::ostream &out) {
  const auto f = design::read_unital_file(o.in_path);
  const auto a = design::audit_unital(f.structure);
  const auto j = audit_json(a, f.q);
  out << j.dump(2) << '\n';
  return j["valid"].get<bool>() ? kPass : kFail;
}

int do_classify(const Options &o, std::ostream &out, std::ostream &err) {
  const auto f = design::read_unital_file(o.in_path);
  const auto u = design::verify_unital(f.structure);
  if (u.q() != f.q)
    throw ParseError(2, "header q " + std::to_string(f.q) +
                            " does not match the design order " +
                            std::to_string(u.q()));
  if (o.z1 >= u.point_count() || o.z2 >= u.point_count())
    throw CLI::ValidationError("--z1/--z2", "point out of range");
  try {
    const auto r = translations::classify(u, o.z1, o.z2);
    out << translations::to_json(r).dump(2) << '\n';
    return r.family == "unknown" || !r.semiregular ? kFail : kPass;
  } catch (const DomainError &e) {
    err << "classification hypothesis failed: " << e.what() << '\n';
    return kFail;
  }
}

int do_zoo(const Options &o, std::ostream &out, std::ostream &err) {
  std::vector<std::pair<std::string, std::optional<int>>> tasks;
  const auto &reg = zoo::registry();
  auto add = [&](const zoo::CheckSpec &s, std::optional<int> p) {
    if (s.params.empty()) {
      if (p)
        throw CLI::ValidationError("--param", s.name + " takes no parameter");
      tasks.push_back({s.name, std::nullopt});
    } else if (p) {
      tasks.push_back({s.name, p});
    } else {
      for (int x : s.params)
        tasks.push_back({s.name, x});
    }
  };
  if (o.check == "all") {
    if (o.param)
      throw CLI::ValidationError("--param", "not allowed with all");
    for (const auto &s : reg)
      add(s, std::nullopt);
  } else {
    auto it = std::find_if(reg.begin(), reg.end(),
                           [&](const auto &s) { return s.name == o.check; });
    if (it == reg.end())
      throw CLI::ValidationError("check", "unknown zoo check " + o.check);
    add(*it, o.param);
  }

  std::vector<std::optional<zoo::CheckResult>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < tasks.size();) {
      try {
        results[i] = zoo::run_check(tasks[i].first, tasks[i].second).front();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(o.jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  int code = kPass;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (errors[i]) {
      try {
        std::rethrow_exception(errors[i]);
      } catch (const DomainError &e) {
        err << tasks[i].first << ": " << e.what() << '\n';
        code = kUsage;
        continue;
      }
    }
    out << zoo::to_json(*results[i]).dump() << '\n';
    if (!results[i]->pass && code == kPass)
      code = kFail;
  }
  return code;
}

int do_report(const Options &o, std::ostream &out) {
  if (!o.all)
    throw CLI::RequiredError("--all");
  int failed = 0;
  acceptance::run_all([&](const auto &r) {
    out << acceptance::format_line(r) << std::endl;
    failed += !r.pass;
  });
  return failed ? kFail : kPass;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Finite unitals, their translation groups and group checks",
               "unital"};
  app.require_subcommand(1);
  Options o;

  auto *construct = app.add_subcommand("construct", "Build a unital file");
  construct->add_option("kind", o.construct_kind, "hermitian or sl23")
      ->required()
      ->check(CLI::IsMember({"hermitian", "sl23"}));
  construct->add_option("--q", o.q, "Order of the hermitian unital");
  construct->add_option("--out", o.out_path, "Output file (default stdout)");

  auto *verify = app.add_subcommand("verify", "Audit a unital file");
  verify->add_option("--in", o.in_path, "Unital file")->required();

  auto *classify = app.add_subcommand("classify", "Classify from two translation centers");
  classify->add_option("--in", o.in_path, "Unital file")->required();
  classify->add_option("--z1", o.z1, "First center")->required();
  classify->add_option("--z2", o.z2, "Second center")->required();

  auto *zoo_cmd = app.add_subcommand("zoo", "Run a group-theoretic check");
  zoo_cmd->add_option("check", o.check, "Check name or all")->required();
  zoo_cmd->add_option("--param", o.param, "Single parameter value");
  zoo_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto *report = app.add_subcommand("report", "Run the acceptance suite");
  report->add_flag("--all", o.all, "Run every criterion");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (*construct)
      return do_construct(o, out);
    if (*verify)
      return do_verify(o, out);
    if (*classify)
      return do_classify(o, out, err);
    if (*zoo_cmd)
      return do_zoo(o, out, err);
    return do_report(o, out);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  } catch (const ParseError &e) {
    err << "input error: " << e.what() << '\n';
    return kUsage;
  } catch (const design::UnitalViolation &e) {
    err << "input is not a unital: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionError &e) {
    err << "construction error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << '\n';
    return kFail;
  }
}

} // namespace unital::cli
