#include "mub/io.hpp"

#include <fstream>
#include <sstream>

#include "mub/errors.hpp"

namespace mub {

namespace {

int64_t ipow(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int log_base(int64_t value, int64_t p) {
  int n = 0;
  int64_t t = 1;
  while (t < value) {
    t *= p;
    ++n;
  }
  return t == value ? n : -1;
}

struct LineReader {
  std::istringstream in;
  int lineno = 0;

  explicit LineReader(const std::string& text) : in(text) {}

  std::string next() {
    std::string line;
    if (!std::getline(in, line)) fail(Errc::ParseError, "unexpected end of file at line " + std::to_string(lineno + 1));
    ++lineno;
    return line;
  }

  bool eof() { return in.peek() == EOF; }

  [[noreturn]] void error(const std::string& what) {
    fail(Errc::ParseError, what + " (line " + std::to_string(lineno) + ")");
  }
};

int64_t parse_tagged(LineReader& r, const std::string& token, const std::string& tag) {
  if (token.rfind(tag, 0) != 0) r.error("expected " + tag + "<value>, got '" + token + "'");
  try {
    return std::stoll(token.substr(tag.size()));
  } catch (const std::exception&) {
    r.error("malformed integer in '" + token + "'");
  }
}

std::vector<int32_t> parse_int_row(LineReader& r, const std::string& line, size_t expected) {
  std::istringstream is(line);
  std::vector<int32_t> row;
  int64_t v;
  while (is >> v) row.push_back(static_cast<int32_t>(v));
  if (row.size() != expected)
    r.error("expected " + std::to_string(expected) + " integers, got " + std::to_string(row.size()));
  return row;
}

}  // namespace

std::string serialize_mubset(const MubSet& m) {
  std::ostringstream os;
  os << "MUBSET version=1\n";
  if (m.root.type == Root::Type::fourth)
    os << "ROOT i\n";
  else
    os << "ROOT zeta p=" << m.root.p << "\n";
  os << "DIM N=" << m.dim << "\n";
  os << "FRAMES " << m.frames.size() << "\n";
  for (const Orthoframe& f : m.frames) {
    switch (f.kind) {
      case Orthoframe::Kind::standard:
        os << "FRAME standard\n";
        break;
      case Orthoframe::Kind::exponent: {
        os << "FRAME exp label=" << f.label << "\n";
        for (int64_t a = 0; a < f.dim; ++a) {
          for (int64_t v = 0; v < f.dim; ++v) {
            if (v) os << ' ';
            os << static_cast<int>(f.exp_at(a, v));
          }
          os << '\n';
        }
        break;
      }
      case Orthoframe::Kind::dense:
        fail(Errc::IoError, "dense frames have no MUBSET file encoding");
    }
  }
  return os.str();
}

MubSet parse_mubset(const std::string& text) {
  LineReader r(text);
  {
    std::istringstream is(r.next());
    std::string tag, version;
    is >> tag >> version;
    if (tag != "MUBSET" || version != "version=1") r.error("expected 'MUBSET version=1'");
  }
  Root root = Root::fourth_root();
  bool doubled = false;  // zeta(2) exponents embed into i with doubled exponents
  {
    std::istringstream is(r.next());
    std::string tag, kind;
    is >> tag >> kind;
    if (tag != "ROOT") r.error("expected ROOT line");
    if (kind == "i") {
      root = Root::fourth_root();
    } else if (kind == "zeta") {
      std::string ptok;
      is >> ptok;
      const int64_t p = parse_tagged(r, ptok, "p=");
      if (p == 2) {
        root = Root::fourth_root();
        doubled = true;
      } else {
        root = Root::zeta(p);
      }
    } else {
      r.error("unknown root '" + kind + "'");
    }
  }
  int64_t n_dim = 0;
  {
    std::istringstream is(r.next());
    std::string tag, ntok;
    is >> tag >> ntok;
    if (tag != "DIM") r.error("expected DIM line");
    n_dim = parse_tagged(r, ntok, "N=");
    if (n_dim < 2) r.error("dimension must be at least 2");
  }
  int64_t frame_count = 0;
  {
    std::istringstream is(r.next());
    std::string tag;
    is >> tag >> frame_count;
    if (tag != "FRAMES" || frame_count < 1) r.error("expected FRAMES <count>");
  }
  const int64_t p = root.type == Root::Type::fourth ? 2 : root.p;
  const int n = log_base(n_dim, p);
  if (n < 0) fail(Errc::ParseError, "dimension is not a power of the root characteristic");
  const int64_t file_ord = doubled ? 2 : root.order();

  MubSet m;
  m.p = p;
  m.n = n;
  m.dim = n_dim;
  m.root = root;
  m.prov.family = "file";
  for (int64_t fi = 0; fi < frame_count; ++fi) {
    std::string header = r.next();
    std::istringstream is(header);
    std::string tag, kind;
    is >> tag >> kind;
    if (tag != "FRAME") r.error("expected FRAME line");
    if (kind == "standard") {
      m.frames.push_back(standard_frame(n_dim, root));
      continue;
    }
    if (kind != "exp") r.error("unknown frame kind '" + kind + "'");
    const size_t pos = header.find("label=");
    if (pos == std::string::npos) r.error("exp frame without label");
    std::string label = header.substr(pos + 6);
    std::vector<uint8_t> exps;
    exps.reserve(static_cast<size_t>(n_dim * n_dim));
    for (int64_t a = 0; a < n_dim; ++a) {
      std::vector<int32_t> row = parse_int_row(r, r.next(), static_cast<size_t>(n_dim));
      for (int32_t e : row) {
        if (e < 0 || e >= file_ord) r.error("exponent " + std::to_string(e) + " out of range");
        exps.push_back(static_cast<uint8_t>(doubled ? 2 * e : e));
      }
    }
    m.frames.push_back(exponent_frame(root, n_dim, std::move(exps), std::move(label)));
  }
  return m;
}

namespace {

void serialize_members(std::ostringstream& os, const std::vector<Subspace>& members) {
  for (const Subspace& s : members) {
    os << "MEMBER\n";
    for (int i = 0; i < s.dim(); ++i) {
      for (int c = 0; c < s.ambient; ++c) {
        if (c) os << ' ';
        os << s.rows.at(i, c);
      }
      os << '\n';
    }
  }
}

}  // namespace

std::string serialize_spread(const SymplecticSpread& s) {
  std::ostringstream os;
  os << "SPREAD p=" << s.space.p << " n=" << s.space.n << "\n";
  serialize_members(os, s.members);
  return os.str();
}

std::string serialize_orthospread(const OrthogonalSpread& s) {
  std::ostringstream os;
  os << "ORTHOSPREAD p=2 n=" << s.space.n << "\n";
  serialize_members(os, s.members);
  return os.str();
}

SpreadFileData parse_spread(const std::string& text) {
  LineReader r(text);
  SpreadFileData data;
  {
    std::istringstream is(r.next());
    std::string tag, ptok, ntok;
    is >> tag >> ptok >> ntok;
    if (tag == "SPREAD")
      data.orthogonal = false;
    else if (tag == "ORTHOSPREAD")
      data.orthogonal = true;
    else
      r.error("expected SPREAD or ORTHOSPREAD header");
    data.p = parse_tagged(r, ptok, "p=");
    data.n = static_cast<int>(parse_tagged(r, ntok, "n="));
    if (!is_prime(data.p)) r.error("p must be prime");
    if (data.orthogonal && data.p != 2) r.error("orthogonal spreads require p = 2");
    if (data.n < 1) r.error("n must be positive");
  }
  while (!r.eof()) {
    std::string line = r.next();
    if (line.empty()) continue;
    if (line != "MEMBER") r.error("expected MEMBER, got '" + line + "'");
    MatZp rows = MatZp::zero(data.p, data.n, 2 * data.n);
    for (int i = 0; i < data.n; ++i) {
      std::vector<int32_t> vals = parse_int_row(r, r.next(), static_cast<size_t>(2 * data.n));
      for (int c = 0; c < 2 * data.n; ++c) {
        if (vals[static_cast<size_t>(c)] < 0 || vals[static_cast<size_t>(c)] >= data.p)
          r.error("entry out of range [0, p)");
        rows.at(i, c) = vals[static_cast<size_t>(c)];
      }
    }
    data.members.push_back(make_subspace(data.p, 2 * data.n, std::move(rows)));
  }
  if (data.members.empty()) fail(Errc::ParseError, "spread file has no members");
  return data;
}

std::string serialize_plane(const AffinePlane& plane) {
  std::ostringstream os;
  os << "PLANE order=" << plane.order << "\n";
  for (const auto& line : plane.lines) {
    for (size_t i = 0; i < line.size(); ++i) {
      if (i) os << ' ';
      os << line[i];
    }
    os << '\n';
  }
  return os.str();
}

AffinePlane parse_plane(const std::string& text) {
  LineReader r(text);
  AffinePlane plane;
  {
    std::istringstream is(r.next());
    std::string tag, otok;
    is >> tag >> otok;
    if (tag != "PLANE") r.error("expected PLANE header");
    plane.order = parse_tagged(r, otok, "order=");
    if (plane.order < 2) r.error("plane order must be at least 2");
  }
  int64_t p = 2;
  while (plane.order % p != 0) ++p;
  if (log_base(plane.order, p) < 0) fail(Errc::ParseError, "plane order is not a prime power");
  plane.p = p;
  plane.provenance = "file";
  const int64_t expected_lines = plane.order * plane.order + plane.order;
  for (int64_t li = 0; li < expected_lines; ++li) {
    std::vector<int32_t> line = parse_int_row(r, r.next(), static_cast<size_t>(plane.order));
    plane.lines.push_back(std::move(line));
  }
  return plane;
}

std::string export_vectors(const MubSet& m) {
  std::ostringstream os;
  os << "MUBVECTORS version=1\n";
  if (m.root.type == Root::Type::fourth)
    os << "ROOT i\n";
  else
    os << "ROOT zeta p=" << m.root.p << "\n";
  os << "DIM N=" << m.dim << "\n";
  os << "COUNT " << m.frames.size() * static_cast<size_t>(m.dim) << "\n";
  os << "SCALE 1/sqrt(N)\n";
  for (const Orthoframe& f : m.frames) {
    os << "FRAME " << f.label << "\n";
    for (int64_t a = 0; a < m.dim; ++a) {
      const std::vector<CycInt> row = f.row_vector(a);
      for (int64_t v = 0; v < m.dim; ++v) {
        if (v) os << ' ';
        const auto cs = row[static_cast<size_t>(v)].coeffs();
        for (size_t c = 0; c < cs.size(); ++c) {
          if (c) os << ',';
          os << cs[c];
        }
      }
      os << '\n';
    }
  }
  return os.str();
}

std::string sniff_format(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  is >> tag;
  return tag;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::IoError, "cannot write " + path);
  out << contents;
  if (!out) fail(Errc::IoError, "write failed for " + path);
}

}  // namespace mub
