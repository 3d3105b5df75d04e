#include "edgeposet/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "edgeposet/error.hpp"

namespace edgeposet {

std::vector<int> mask_points(Element mask) {
  std::vector<int> points;
  for (int i = 0; i < 32; ++i)
    if (static_cast<std::uint32_t>(mask) >> i & 1U) points.push_back(i);
  return points;
}

SweepRecord analyse_bn_action(const PermGroup& group, std::size_t oracle_threshold) {
  const auto start = std::chrono::steady_clock::now();
  const PosetAction action = induced_bn_action(group);
  SweepRecord r;
  r.generators = group.generator_string();
  r.order = group.order();
  r.n = group.degree();

  const QMap q = q_map(action);
  r.quotient_ranks = q.base_quotient.poset.rank_vector();
  r.edge_quotient_ranks = q.edge_quotient.poset.rank_vector();
  r.quotient_edge_ranks = q.edges_of_quotient.poset().rank_vector();
  r.q_bijective = q.bijective;
  r.q_isomorphism = q.isomorphism;
  r.h_quotient_ranks = quotient(action_on_edges(action, EdgeKind::H).action).poset.rank_vector();

  const CctResult direct = is_cct(action, CctMethod::Direct);
  r.cct = direct.cct;
  r.witness = direct.triple;
  const bool agree = is_cct(action, CctMethod::Dual).cct == r.cct &&
                     is_cct(q, CctMethod::QBijective).cct == r.cct &&
                     is_cct(q, CctMethod::RankCounts).cct == r.cct;
  if (!agree) throw Error(ErrorKind::Internal, "CCT methods disagree for " + r.generators);

  r.quotient_edges = peck_report(q.edges_of_quotient.poset(), oracle_threshold);
  if (r.cct && !r.quotient_edges.peck)
    throw Error(ErrorKind::Internal, "CCT action with non-Peck edge quotient: " + r.generators);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SweepRecord> run_sweep(const std::vector<PermGroup>& groups, unsigned jobs,
                                   std::size_t oracle_threshold) {
  std::vector<SweepRecord> records(groups.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < groups.size(); i = next++) {
      try {
        records[i] = analyse_bn_action(groups[i], oracle_threshold);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(groups.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::stable_sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.order, a.generators) < std::tie(b.order, b.generators);
  });
  return records;
}

nlohmann::json to_json(const PeckReport& r) {
  return {{"rank_vector", r.rank_vector},
          {"symmetric", r.symmetric},
          {"unimodal", r.unimodal},
          {"d", r.d},
          {"strongly_sperner", r.strongly_sperner},
          {"peck", r.peck},
          {"unitary_peck", r.unitary_peck},
          {"lefschetz_ranks", r.lefschetz_ranks}};
}

nlohmann::json to_json(const SweepRecord& r) {
  nlohmann::json j = {{"generators", r.generators},
                      {"order", r.order},
                      {"n", r.n},
                      {"cct", r.cct},
                      {"quotient_ranks", r.quotient_ranks},
                      {"edge_quotient_ranks", r.edge_quotient_ranks},
                      {"quotient_edge_ranks", r.quotient_edge_ranks},
                      {"h_quotient_ranks", r.h_quotient_ranks},
                      {"quotient_edges", to_json(r.quotient_edges)},
                      {"q_bijective", r.q_bijective},
                      {"q_is_isomorphism", r.q_isomorphism},
                      {"millis", r.millis}};
  if (r.witness)
    j["witness"] = {{"x", mask_points(r.witness->x)},
                    {"y", mask_points(r.witness->y)},
                    {"z", mask_points(r.witness->z)}};
  else
    j["witness"] = nullptr;
  return j;
}

namespace {

template <typename T>
std::string joined(const std::vector<T>& values, char sep = ' ') {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? std::string(1, sep) : "") << values[i];
  return out.str();
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

std::string sweep_csv_header() {
  return "order,generators,n,cct,witness,quotient_ranks,edge_quotient_ranks,quotient_edge_ranks,"
         "h_quotient_ranks,peck,unitary_peck,q_bijective,q_is_isomorphism,millis";
}

std::string to_csv_row(const SweepRecord& r) {
  std::string witness;
  if (r.witness)
    witness = "{" + joined(mask_points(r.witness->x)) + "};{" + joined(mask_points(r.witness->y)) +
              "};{" + joined(mask_points(r.witness->z)) + "}";
  std::ostringstream out;
  out << r.order << ',' << csv_quote(r.generators) << ',' << r.n << ',' << (r.cct ? "true" : "false")
      << ',' << csv_quote(witness) << ',' << csv_quote(joined(r.quotient_ranks)) << ','
      << csv_quote(joined(r.edge_quotient_ranks)) << ',' << csv_quote(joined(r.quotient_edge_ranks))
      << ',' << csv_quote(joined(r.h_quotient_ranks)) << ',' << (r.quotient_edges.peck ? "true" : "false")
      << ',' << (r.quotient_edges.unitary_peck ? "true" : "false") << ','
      << (r.q_bijective ? "true" : "false") << ',' << (r.q_isomorphism ? "true" : "false") << ','
      << r.millis;
  return out.str();
}

}  // namespace edgeposet
