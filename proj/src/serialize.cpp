#include "serialize.hpp"

#include <fstream>

namespace digitfn {

namespace {

Rat rat_from_node(const nlohmann::json& n) {
  if (n.is_string()) return rat_from_string(n.get<std::string>());
  if (n.is_number_integer()) return Rat(n.get<long>());
  fail(Errc::parse, "rational entries must be integers or \"p/q\" strings");
}

RatVec vec_from_node(const nlohmann::json& n) {
  if (!n.is_array()) fail(Errc::parse, "expected an array of rationals");
  RatVec v;
  v.reserve(n.size());
  for (const auto& x : n) v.push_back(rat_from_node(x));
  return v;
}

nlohmann::ordered_json vec_to_node(const RatVec& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Rat& x : v) out.push_back(rat_to_string(x));
  return out;
}

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, path + ": " + e.what());
  }
  return j;
}

}  // namespace

LinearRepresentation rep_from_json(const nlohmann::json& j) {
  try {
    LinearRepresentation R;
    R.q = j.at("q").get<unsigned>();
    R.u = vec_from_node(j.at("u"));
    R.v = vec_from_node(j.at("v"));
    R.dim = R.u.size();
    const auto& ms = j.at("M");
    if (!ms.is_array()) fail(Errc::parse, "M must be an array of matrices");
    for (const auto& mj : ms) {
      RatMat m;
      for (const auto& row : mj) m.push_back(vec_from_node(row));
      R.M.push_back(std::move(m));
    }
    R.validate();
    return R;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("bad representation file: ") + e.what());
  }
}

nlohmann::ordered_json rep_to_json(const LinearRepresentation& R) {
  nlohmann::ordered_json j;
  j["q"] = R.q;
  j["u"] = vec_to_node(R.u);
  nlohmann::ordered_json ms = nlohmann::ordered_json::array();
  for (const RatMat& m : R.M) {
    nlohmann::ordered_json mj = nlohmann::ordered_json::array();
    for (const RatVec& row : m) mj.push_back(vec_to_node(row));
    ms.push_back(mj);
  }
  j["M"] = ms;
  j["v"] = vec_to_node(R.v);
  return j;
}

LinearRepresentation rep_from_file(const std::string& path) {
  return rep_from_json(parse_file(path));
}

Transducer transducer_from_json(const nlohmann::json& j) {
  try {
    Transducer T;
    T.q = j.at("q").get<unsigned>();
    for (const auto& s : j.at("states")) T.names.push_back(s.get<std::string>());
    auto state_index = [&](const std::string& name) -> size_t {
      for (size_t i = 0; i < T.names.size(); ++i)
        if (T.names[i] == name) return i;
      fail(Errc::parse, "unknown transducer state: " + name);
    };
    T.initial = state_index(j.at("initial").get<std::string>());
    T.delta.assign(T.names.size(), std::vector<Transducer::Arc>(T.q));
    std::vector<std::vector<bool>> seen(T.names.size(), std::vector<bool>(T.q, false));
    for (const auto& t : j.at("transitions")) {
      size_t from = state_index(t.at(0).get<std::string>());
      unsigned digit = t.at(1).get<unsigned>();
      if (digit >= T.q) fail(Errc::parse, "transition digit out of range");
      if (seen[from][digit]) fail(Errc::parse, "duplicate transition (nondeterministic)");
      seen[from][digit] = true;
      T.delta[from][digit] = {state_index(t.at(2).get<std::string>()), rat_from_node(t.at(3))};
    }
    for (size_t s = 0; s < T.names.size(); ++s)
      for (unsigned d = 0; d < T.q; ++d)
        if (!seen[s][d])
          fail(Errc::parse, "missing transition from " + T.names[s] + " on digit " + std::to_string(d));
    T.final_output.assign(T.names.size(), Rat(0));
    for (const auto& f : j.at("final"))
      T.final_output[state_index(f.at(0).get<std::string>())] = rat_from_node(f.at(1));
    T.validate();
    return T;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse, std::string("bad transducer file: ") + e.what());
  }
}

nlohmann::ordered_json transducer_to_json(const Transducer& T) {
  nlohmann::ordered_json j;
  j["q"] = T.q;
  j["states"] = T.names;
  j["initial"] = T.names[T.initial];
  nlohmann::ordered_json ts = nlohmann::ordered_json::array();
  for (size_t s = 0; s < T.size(); ++s)
    for (unsigned d = 0; d < T.q; ++d) {
      const auto& a = T.delta[s][d];
      ts.push_back({T.names[s], d, T.names[a.next], rat_to_string(a.output)});
    }
  j["transitions"] = ts;
  nlohmann::ordered_json fs = nlohmann::ordered_json::array();
  for (size_t s = 0; s < T.size(); ++s) fs.push_back({T.names[s], rat_to_string(T.final_output[s])});
  j["final"] = fs;
  return j;
}

Transducer transducer_from_file(const std::string& path) {
  return transducer_from_json(parse_file(path));
}

}  // namespace digitfn
