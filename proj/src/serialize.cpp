#include "pbwchar/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace pbwchar {

using nlohmann::ordered_json;

std::string to_json(const SeriesDocument& doc) {
  ordered_json j;
  j["level"] = doc.level;
  j["qmax"] = doc.series.q_max();
  j["method"] = doc.method;
  j["terms"] = ordered_json::array();
  for (const auto& [d, c] : doc.series.terms()) {
    ordered_json t;
    t["q"] = d.q;
    t["z"] = d.z;
    t["u"] = d.u;
    t["c"] = c.get_str();
    j["terms"].push_back(std::move(t));
  }
  return j.dump() + "\n";
}

SeriesDocument from_json(const std::string& text) {
  try {
    const auto j = ordered_json::parse(text);
    SeriesDocument doc;
    doc.level = j.at("level").get<int>();
    doc.method = j.at("method").get<std::string>();
    doc.series = Series3(j.at("qmax").get<int>());
    for (const auto& t : j.at("terms")) {
      BigInt c;
      if (c.set_str(t.at("c").get<std::string>(), 10) != 0)
        throw SeriesError("from_json: coefficient is not a decimal integer");
      const TriDegree d{t.at("q").get<int>(), t.at("z").get<int>(), t.at("u").get<int>()};
      if (d.q > doc.series.q_max()) throw SeriesError("from_json: term beyond qmax at " + to_string(d));
      doc.series.add_term(d, c);
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw SeriesError(std::string("from_json: ") + e.what());
  }
}

std::string to_csv(const Series3& s) {
  std::ostringstream os;
  os << "q,z,u,c\n";
  for (const auto& [d, c] : s.terms()) os << d.q << ',' << d.z << ',' << d.u << ',' << c.get_str() << '\n';
  return os.str();
}

}  // namespace pbwchar
