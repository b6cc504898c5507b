#include "lendepth/chaincert.hpp"

#include <sstream>

#include "lendepth/errors.hpp"

namespace lendepth {

namespace {

constexpr std::string_view kHeader = "# lendepth chain certificate";

std::string one_line(std::string s) {
  for (char& ch : s)
    if (ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
  return s;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Uncertifiable: return "Uncertifiable";
    case Verdict::Refuted: return "Refuted";
  }
  return "Uncertifiable";
}

void check_structure(const ChainCertificate& cert) {
  if (cert.nodes.empty()) throw StructuralError("certificate has no nodes", {});
  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i + 1 < cert.nodes.size(); ++i)
    if (cert.nodes[i + 1].dim() >= cert.nodes[i].dim()) bad.push_back(i + 1);
  if (!bad.empty()) throw StructuralError("dimension does not strictly decrease", bad);
  if (!cert.nodes.back().is_trivial())
    throw StructuralError("last node must be the trivial group", {cert.nodes.size() - 1});
  if (!cert.steps.empty() && cert.steps.size() != cert.nodes.size() - 1)
    throw StructuralError("expected " + std::to_string(cert.nodes.size() - 1) + " steps, found " +
                              std::to_string(cert.steps.size()),
                          {});
}

VerificationReport verify(const ChainCertificate& cert, const MaxSubgroupDatabase& db) {
  check_structure(cert);
  VerificationReport rep;
  rep.length = cert.length();
  bool all_certified = true, any_refuted = false;
  for (std::size_t i = 0; i + 1 < cert.nodes.size(); ++i) {
    StepReport s;
    s.index = i;
    s.parent = cert.nodes[i];
    s.child = cert.nodes[i + 1];
    if (auto w = db.is_maximal_step(s.parent, s.child, cert.characteristic)) {
      s.verdict = Verdict::Certified;
      s.reason = w->citation;
      s.witness = std::move(w);
    } else if (auto r = db.refutes(s.parent, s.child, cert.characteristic)) {
      s.verdict = Verdict::Refuted;
      s.reason = r->citation;
      any_refuted = true;
    } else {
      s.verdict = Verdict::Uncertifiable;
      s.reason = "no stored fact or pattern covers this step";
    }
    all_certified &= s.verdict == Verdict::Certified;
    rep.steps.push_back(std::move(s));
  }
  rep.overall = any_refuted ? Verdict::Refuted : all_certified ? Verdict::Certified : Verdict::Uncertifiable;
  return rep;
}

std::size_t length_of(const ChainCertificate& cert) {
  check_structure(cert);
  return cert.length();
}

ChainCertificate annotate(Characteristic c, std::vector<GroupDescriptor> nodes, const MaxSubgroupDatabase& db) {
  ChainCertificate cert{c, std::move(nodes), {}};
  for (std::size_t i = 0; i + 1 < cert.nodes.size(); ++i) {
    if (auto w = db.is_maximal_step(cert.nodes[i], cert.nodes[i + 1], c))
      cert.steps.push_back({w->kind, w->citation});
    else
      cert.steps.push_back({StepKind::TableCited, ""});
  }
  return cert;
}

std::string serialize(const ChainCertificate& cert) {
  std::string out;
  out += kHeader;
  out += "\nformat 1\nchar " + cert.characteristic.to_string() + "\n";
  for (const auto& n : cert.nodes) out += "node " + n.render() + "\n";
  for (const auto& s : cert.steps) out += "step " + to_string(s.kind) + "\t" + one_line(s.citation) + "\n";
  return out;
}

ChainCertificate parse_certificate(std::string_view text) {
  ChainCertificate cert;
  bool have_format = false, have_char = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t start = pos;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto space = line.find(' ');
    std::string_view key = line.substr(0, space);
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
    try {
      if (key == "format") {
        if (rest != "1") throw ParseError("unsupported certificate format `" + std::string(rest) + "`", start);
        have_format = true;
      } else if (key == "char") {
        std::uint64_t v = 0;
        for (char ch : rest) {
          if (ch < '0' || ch > '9' || v > (~std::uint64_t{0} - 9) / 10)
            throw ParseError("bad characteristic", start);
          v = v * 10 + static_cast<std::uint64_t>(ch - '0');
        }
        if (rest.empty()) throw ParseError("bad characteristic", start);
        cert.characteristic = Characteristic::from_value(v);
        have_char = true;
      } else if (key == "node") {
        cert.nodes.push_back(parse_descriptor(rest));
      } else if (key == "step") {
        auto tab = rest.find('\t');
        std::string_view kind = rest.substr(0, tab);
        std::string cite = tab == std::string_view::npos ? std::string() : std::string(rest.substr(tab + 1));
        cert.steps.push_back({step_kind_from_string(kind), std::move(cite)});
      } else {
        throw ParseError("unknown certificate record `" + std::string(key) + "`", start);
      }
    } catch (const ParseError& e) {
      if (e.position() == start) throw;
      throw ParseError(std::string("certificate line: ") + e.what(), start);
    } catch (const Error& e) {
      throw ParseError(std::string("certificate line: ") + e.what(), start);
    }
  }
  if (!have_format) throw ParseError("missing `format 1` record", 0);
  if (!have_char) throw ParseError("missing `char` record", 0);
  return cert;
}

std::string render_chain(const ChainCertificate& cert) {
  std::string out;
  for (std::size_t i = 0; i < cert.nodes.size(); ++i) {
    if (i) out += " > ";
    out += cert.nodes[i].render();
  }
  return out;
}

std::vector<GroupDescriptor> parse_chain(std::string_view text) {
  std::vector<GroupDescriptor> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t gt = text.find('>', pos);
    std::string_view part = text.substr(pos, gt == std::string_view::npos ? std::string_view::npos : gt - pos);
    try {
      out.push_back(parse_descriptor(part));
    } catch (const ParseError& e) {
      throw ParseError(std::string("chain node ") + std::to_string(out.size()) + ": " + e.what(), pos + e.position());
    }
    if (gt == std::string_view::npos) break;
    pos = gt + 1;
  }
  return out;
}

}  // namespace lendepth
