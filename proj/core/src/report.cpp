#include "matsec/report.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "matsec/types.hpp"

namespace matsec {

namespace {

using nlohmann::json;

std::string format_double(double x) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  out << x;
  return out.str();
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw ValidationError(ValidationIssue::kInvalidParams, "cannot write report file " + path);
  }
  out << text;
}

}  // namespace

ReportFormat report_format_from_string(const std::string& name) {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  throw ValidationError(ValidationIssue::kInvalidParams, "unknown report format '" + name + "'");
}

std::string stats_csv(const RunStats& stats) {
  std::ostringstream out;
  out << "instance,algorithm,trials,seed,mean_w,ci_lo,ci_hi,opt_w,ratio\n";
  out << stats.instance_name << ',' << stats.algorithm << ',' << stats.trials << ',' << stats.seed
      << ',' << format_double(stats.mean_weight) << ',' << format_double(stats.ci_lo) << ','
      << format_double(stats.ci_hi) << ',' << format_double(stats.opt_weight) << ','
      << format_double(stats.ratio) << '\n';
  return out.str();
}

std::string frequencies_csv(const RunStats& stats) {
  std::ostringstream out;
  out << "instance,algorithm,element,frequency\n";
  for (size_t f = 0; f < stats.selection_frequency.size(); ++f) {
    out << stats.instance_name << ',' << stats.algorithm << ',' << f << ','
        << format_double(stats.selection_frequency[f]) << '\n';
  }
  return out.str();
}

std::string stats_json(const RunStats& stats) {
  json doc;
  doc["instance"] = stats.instance_name;
  doc["algorithm"] = stats.algorithm;
  doc["trials"] = stats.trials;
  doc["seed"] = stats.seed;
  doc["q"] = stats.q;
  doc["phase2_order"] = stats.phase2_order;
  doc["mean_w"] = stats.mean_weight;
  doc["std_w"] = stats.std_weight;
  doc["ci_lo"] = stats.ci_lo;
  doc["ci_hi"] = stats.ci_hi;
  doc["opt_w"] = stats.opt_weight;
  doc["ratio"] = stats.ratio;
  doc["selection_frequency"] = stats.selection_frequency;
  doc["wall_time_sec"] = stats.wall_time_sec;
  return doc.dump(2);
}

RunStats parse_stats_json(const std::string& text) {
  try {
    const json doc = json::parse(text);
    RunStats stats;
    stats.instance_name = doc.at("instance").get<std::string>();
    stats.algorithm = doc.at("algorithm").get<std::string>();
    stats.trials = doc.at("trials").get<long long>();
    stats.seed = doc.at("seed").get<std::uint64_t>();
    stats.q = doc.at("q").get<double>();
    stats.phase2_order = doc.at("phase2_order").get<std::string>();
    stats.mean_weight = doc.at("mean_w").get<double>();
    stats.std_weight = doc.at("std_w").get<double>();
    stats.ci_lo = doc.at("ci_lo").get<double>();
    stats.ci_hi = doc.at("ci_hi").get<double>();
    stats.opt_weight = doc.at("opt_w").get<double>();
    stats.ratio = doc.at("ratio").get<double>();
    stats.selection_frequency = doc.at("selection_frequency").get<std::vector<double>>();
    stats.wall_time_sec = doc.at("wall_time_sec").get<double>();
    return stats;
  } catch (const json::exception& e) {
    throw ValidationError(ValidationIssue::kInvalidParams,
                          std::string("malformed stats JSON: ") + e.what());
  }
}

std::string exact_report_json(const ExactReport& report) {
  json doc;
  doc["instance"] = report.instance_name;
  doc["algorithm"] = report.algorithm;
  doc["q"] = report.q;
  doc["opt"] = report.opt;
  doc["opt_w"] = report.opt_weight;
  doc["expected_w"] = report.expected_weight;
  doc["ratio"] = report.ratio;
  doc["selection_prob"] = report.selection_prob;
  doc["solitary_prob"] = report.solitary_prob;
  doc["z_expectation"] = report.z_expectation;
  doc["part_max_expected"] = report.part_max_expected;
  doc["violations"] = report.violations;
  doc["transversals_checked"] = report.transversals_checked;
  return doc.dump(2);
}

std::string exact_report_csv(const ExactReport& report) {
  std::ostringstream out;
  out << "instance,algorithm,q,opt_w,expected_w,ratio,violations\n";
  out << report.instance_name << ',' << report.algorithm << ',' << format_double(report.q) << ','
      << format_double(report.opt_weight) << ',' << format_double(report.expected_weight) << ','
      << format_double(report.ratio) << ',' << report.violations.size() << '\n';
  return out.str();
}

void emit_report(const RunStats& stats, ReportFormat format, const std::string& path) {
  if (format == ReportFormat::kJson) {
    write_text(stats_json(stats) + "\n", path);
    return;
  }
  write_text(stats_csv(stats), path);
  if (!path.empty() && path != "-" && !stats.selection_frequency.empty()) {
    write_text(frequencies_csv(stats), path + ".freq.csv");
  }
}

void emit_report(const ExactReport& report, ReportFormat format, const std::string& path) {
  if (format == ReportFormat::kJson) {
    write_text(exact_report_json(report) + "\n", path);
    return;
  }
  write_text(exact_report_csv(report), path);
}

}  // namespace matsec
