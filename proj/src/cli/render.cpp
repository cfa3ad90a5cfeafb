#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "fairkit/cli.hpp"

namespace fairkit::cli {
namespace {

// Minimal JSON writer. Output numbers must carry exactly 12 significant
// digits, which general-purpose serializers (shortest round-trip printing)
// do not provide.
void append_json_string(std::string& out, std::string_view s) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

class TableWriter {
 public:
  void line(std::string_view s) {
    out_ += s;
    out_ += '\n';
  }
  void kv(std::string_view key, std::string_view value) {
    out_ += "  ";
    out_ += pad(std::string(key), 18);
    out_ += ' ';
    out_ += value;
    out_ += '\n';
  }
  void kv(std::string_view key, double value) {
    kv(key, format_number(value));
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

std::vector<std::size_t> column_widths(
    const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  return widths;
}

void append_table(std::string& out,
                  const std::vector<std::vector<std::string>>& rows) {
  const auto widths = column_widths(rows);
  for (const auto& row : rows) {
    out += " ";
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += ' ';
      out += i + 1 == row.size() ? row[i] : pad(row[i], widths[i]);
    }
    out += '\n';
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string_view to_string(window::Metric m) {
  switch (m) {
    case window::Metric::response:
      return "response";
    case window::Metric::throughput:
      return "throughput";
    case window::Metric::power:
      return "power";
    case window::Metric::window:
      return "window";
  }
  return "unknown";
}

std::string render_report(const ReportDocument& doc, Format format) {
  if (format == Format::json_like) {
    std::string out = "{\n  \"report\": \"fairness\",\n  \"input\": {";
    out += "\"metric\": ";
    append_json_string(out, doc.metric);
    out += ", \"users\": " + std::to_string(doc.users);
    out += ", \"mean\": " + format_number(doc.mean);
    out += ", \"min\": " + format_number(doc.min);
    out += ", \"max\": " + format_number(doc.max) + "},\n";
    out += "  \"indices\": {\"fairness\": " + format_number(doc.fairness);
    out += ", \"discrimination\": " + format_number(doc.discrimination);
    out += ", \"fair_mark\": " + format_number(doc.fair_mark);
    if (doc.generalized_r) {
      out += ", \"generalized_r\": " + format_number(*doc.generalized_r);
      out += ", \"generalized\": " + format_number(*doc.generalized_value);
    }
    out += "},\n  \"legacy\": {\"variance_sample\": ";
    out += doc.variance_sample ? format_number(*doc.variance_sample) : "null";
    out += ", \"cov_population\": " + format_number(doc.cov_pop);
    out += ", \"min_max_ratio\": " + format_number(doc.min_max_ratio);
    out += "},\n  \"per_user\": [";
    for (std::size_t i = 0; i < doc.per_user.size(); ++i) {
      const auto& row = doc.per_user[i];
      out += i == 0 ? "\n" : ",\n";
      out += "    {\"id\": ";
      append_json_string(out, row.id);
      out += ", \"value\": " + format_number(row.value);
      out += ", \"perceived\": " + format_number(row.perceived);
      out += ", \"class\": \"" + std::string(core::to_string(row.cls)) + "\"}";
    }
    out += doc.per_user.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
  }

  TableWriter w;
  w.line("fairness report");
  w.kv("metric", doc.metric);
  w.kv("users", std::to_string(doc.users));
  w.kv("mean", doc.mean);
  w.kv("min", doc.min);
  w.kv("max", doc.max);
  w.line("indices");
  w.kv("fairness", doc.fairness);
  w.kv("discrimination", doc.discrimination);
  w.kv("fair-mark", doc.fair_mark);
  if (doc.generalized_r) {
    w.kv("generalized(r=" + format_number(*doc.generalized_r) + ")",
         format_number(*doc.generalized_value));
  }
  w.line("legacy");
  w.kv("variance-sample",
       doc.variance_sample ? format_number(*doc.variance_sample) : "n/a");
  w.kv("cov-population", doc.cov_pop);
  w.kv("min-max-ratio", doc.min_max_ratio);
  w.line("per-user");
  std::string out = w.take();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "value", "perceived", "class"});
  for (const auto& row : doc.per_user) {
    rows.push_back({row.id, format_number(row.value),
                    format_number(row.perceived),
                    std::string(core::to_string(row.cls))});
  }
  append_table(out, rows);
  return out;
}

std::string render_window(const WindowReport& rep, Format format) {
  if (format == Format::json_like) {
    std::string out = "{\n  \"report\": \"window\",\n  \"scenario\": {";
    out += "\"hops\": " + std::to_string(rep.hops);
    out += ", \"circuits\": " + std::to_string(rep.circuits);
    out += ", \"total_window\": " + std::to_string(rep.total_window) + "},\n";
    out += "  \"fairness\": {\"selected\": \"" +
           std::string(to_string(rep.selected)) + "\"";
    out += ", \"window\": " + format_number(rep.window_fairness);
    out += ", \"throughput\": " + format_number(rep.throughput_fairness);
    out += ", \"power\": " + format_number(rep.power_fairness);
    out += ", \"response\": " + format_number(rep.response_fairness);
    out += "},\n  \"per_user\": [";
    for (std::size_t i = 0; i < rep.per_user.size(); ++i) {
      const auto& row = rep.per_user[i];
      out += i == 0 ? "\n" : ",\n";
      out += "    {\"id\": " + std::to_string(row.id);
      out += ", \"window\": " + std::to_string(row.window);
      out += ", \"throughput\": " + format_number(row.throughput);
      out += ", \"response\": " + format_number(row.response);
      out += ", \"power\": " + format_number(row.power) + "}";
    }
    out += rep.per_user.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
  }

  TableWriter w;
  w.line("window report");
  w.kv("hops", std::to_string(rep.hops));
  w.kv("circuits", std::to_string(rep.circuits));
  w.kv("total-window", std::to_string(rep.total_window));
  w.line("fairness");
  w.kv("selected", to_string(rep.selected));
  w.kv("window", rep.window_fairness);
  w.kv("throughput", rep.throughput_fairness);
  w.kv("power", rep.power_fairness);
  w.kv("response", rep.response_fairness);
  w.line("per-user");
  std::string out = w.take();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"id", "window", "throughput", "response", "power"});
  for (const auto& row : rep.per_user) {
    rows.push_back({std::to_string(row.id), std::to_string(row.window),
                    format_number(row.throughput),
                    format_number(row.response), format_number(row.power)});
  }
  append_table(out, rows);
  return out;
}

std::string render_cof(const CofReport& rep, Format format) {
  if (format == Format::json_like) {
    std::string out = "{\n  \"report\": \"cof\",\n  \"distribution\": ";
    append_json_string(out, rep.description);
    out += ",\n  \"moments\": {\"m1\": " + format_number(rep.m1);
    out += ", \"m2\": " + format_number(rep.m2) + "},\n";
    out += "  \"coefficient_of_fairness\": " + format_number(rep.cof);
    if (rep.monte_carlo) {
      const auto& mc = *rep.monte_carlo;
      out += ",\n  \"monte_carlo\": {\"samples\": " +
             std::to_string(mc.samples);
      out += ", \"seed\": " + std::to_string(mc.seed);
      out += ", \"estimate\": " + format_number(mc.estimate);
      out += ", \"std_error\": " + format_number(mc.std_error) + "}";
    }
    out += "\n}\n";
    return out;
  }

  TableWriter w;
  w.line("coefficient of fairness");
  w.kv("distribution", rep.description);
  w.kv("m1", rep.m1);
  w.kv("m2", rep.m2);
  w.kv("cof", rep.cof);
  if (rep.monte_carlo) {
    const auto& mc = *rep.monte_carlo;
    w.line("monte carlo");
    w.kv("samples", std::to_string(mc.samples));
    w.kv("seed", std::to_string(mc.seed));
    w.kv("estimate", mc.estimate);
    w.kv("std-error", mc.std_error);
  }
  return w.take();
}

std::string render_bound(const BoundCurve& curve) {
  std::string out = "gamma,fairness\n";
  for (const auto& [gamma, fairness] : curve.points) {
    out += format_number(gamma);
    out += ',';
    out += format_number(fairness);
    out += '\n';
  }
  out += "# min," + format_number(curve.minimum.gamma_star) + ',' +
         format_number(curve.minimum.f_min) + '\n';
  return out;
}

}  // namespace fairkit::cli
