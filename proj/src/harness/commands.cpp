#include "f4v/harness/commands.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>
#include <map>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "f4v/exactalg/parse.hpp"
#include "f4v/invariants/delta.hpp"
#include "f4v/kernels/sweep.hpp"
#include "f4v/reps/vector_io.hpp"
#include "f4v/stability/stability.hpp"
#include "f4v/stability/witness_io.hpp"

namespace f4v {

using nlohmann::ordered_json;

namespace {

std::uint32_t parse_uint(std::string_view s, std::size_t pos, const char* what) {
  std::uint32_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) throw ParseError(std::string("bad ") + what, pos);
  return v;
}

const FieldCtx& make_field(std::uint32_t p, std::uint32_t k, std::size_t pos) {
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime", pos);
  if (k == 0) throw ParseError("extension degree must be positive", pos);
  return k == 1 ? FieldCtx::prime(p) : FieldCtx::extension(p, k);
}

bool is_keyword(const std::string& vec, std::string_view kw) { return vec == kw; }

template <class T>
VmVector<T> all_ones_dual_cyclic(int m, const T& one) {
  return dual_cyclic<T>(m, {one, one, one, one, one});
}

SymVector sym_vector(int m, const std::string& vec) {
  if (is_keyword(vec, "generic")) return generic_vector(m);
  if (is_keyword(vec, "dual-cyclic")) {
    const auto& names = dual_cyclic_labels(m);
    std::array<IntPoly, 5> c;
    for (int i = 0; i < 5; ++i) c[i] = int_poly_var(label_vars(m), names[i]);
    return dual_cyclic<IntPoly>(m, c);
  }
  return parse_sym_vector(vec, m);
}

IntVector int_vector(int m, const std::string& vec) {
  if (is_keyword(vec, "generic")) throw ParseError("'generic' needs --field sym", 0);
  if (is_keyword(vec, "dual-cyclic")) return all_ones_dual_cyclic<Integer>(m, Integer(1));
  return parse_int_vector(vec, m);
}

FieldVector field_vector(int m, const std::string& vec, const FieldCtx& f) {
  if (is_keyword(vec, "generic")) throw ParseError("'generic' needs --field sym", 0);
  if (is_keyword(vec, "dual-cyclic")) return all_ones_dual_cyclic<FieldElem>(m, FieldElem::one(f));
  return parse_field_vector(vec, m, f);
}

void check_m(int m) {
  if (!supported_m(m)) throw ParseError("unsupported m=" + std::to_string(m), 0);
}

// Maps library exceptions onto exit codes.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const PreconditionError& e) {
    err << e.what() << "\n";
    return kExitPrecondition;
  } catch (const ReductionFailed& e) {
    err << "reduction failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::length_error& e) {
    err << e.what() << "\n";
    return kExitFail;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace

FieldSpec parse_field_spec(std::string_view text) {
  if (text == "Z") return {FieldSpec::Kind::Integers, nullptr};
  if (text == "sym") return {FieldSpec::Kind::Symbolic, nullptr};
  if (text.rfind("Fpk:", 0) == 0) {
    auto rest = text.substr(4);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected Fpk:<p>,<k>", 4);
    auto p = parse_uint(rest.substr(0, comma), 4, "characteristic");
    auto k = parse_uint(rest.substr(comma + 1), 5 + comma, "degree");
    return {FieldSpec::Kind::Finite, &make_field(p, k, 4)};
  }
  if (text.rfind("Fp:", 0) == 0) {
    return {FieldSpec::Kind::Finite, &make_field(parse_uint(text.substr(3), 3, "characteristic"), 1, 3)};
  }
  if (text.size() > 1 && text[0] == 'F') {
    auto rest = text.substr(1);
    auto caret = rest.find('^');
    auto p = parse_uint(rest.substr(0, caret), 1, "characteristic");
    std::uint32_t k = 1;
    if (caret != std::string_view::npos) k = parse_uint(rest.substr(caret + 1), 2 + caret, "degree");
    return {FieldSpec::Kind::Finite, &make_field(p, k, 1)};
  }
  throw ParseError("unknown field '" + std::string(text) + "' (Z, sym, Fp:<p>, Fpk:<p>,<k>, F<p>, F<p>^<k>)", 0);
}

Cocharacter parse_lambda(std::string_view text, int m) {
  std::string s;
  for (char ch : text) {
    if (ch != '(' && ch != ')' && ch != ' ') s.push_back(ch);
  }
  Cocharacter c{frame_for(m), {}};
  std::size_t start = 0;
  for (int i = 0; i < 4; ++i) {
    auto comma = s.find(',', start);
    if ((i < 3) != (comma != std::string::npos)) throw ParseError("expected four integers s1,s2,s3,s4", start);
    std::string_view item(s.data() + start, (comma == std::string::npos ? s.size() : comma) - start);
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), c.s[i]);
    if (ec != std::errc() || end != item.data() + item.size() || item.empty()) throw ParseError("bad integer", start);
    start = comma + 1;
  }
  return c;
}

int cmd_delta(int m, const std::string& vec, const std::string& field, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_m(m);
    const FieldSpec spec = parse_field_spec(field);
    ordered_json j;
    switch (spec.kind) {
      case FieldSpec::Kind::Symbolic:
        j["delta"] = delta(sym_vector(m, vec)).to_string();
        break;
      case FieldSpec::Kind::Integers:
        j["delta"] = to_string(delta(int_vector(m, vec)));
        break;
      case FieldSpec::Kind::Finite: {
        const FieldElem d = delta(field_vector(m, vec, *spec.field));
        j["delta"] = d.to_string();
        j["stable"] = !d.is_zero();
        break;
      }
    }
    out << j.dump() << "\n";
    return kExitOk;
  });
}

int cmd_enumerate(int m, std::uint32_t p, unsigned k, bool histogram, const GlobalOptions& g, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&]() -> int {
    check_m(m);
    const FieldCtx& f = make_field(p, k, 0);
    ordered_json j;
    j["m"] = m;
    j["field"] = f.name();
    if (k == 1) {
      SweepOptions opt;
      opt.threads = g.threads;
      SweepResult r = sweep(m, p, opt);
      j["total"] = r.total;
      j["stable_count"] = r.stable_count;
      if (r.first_stable) {
        FieldVector v{m, {}};
        for (auto x : sweep_vector(m, p, *r.first_stable)) v.entries.push_back(FieldElem(f, x));
        j["first_stable"] = {{"index", *r.first_stable}, {"vector", format_vector(v)}};
      } else {
        j["first_stable"] = nullptr;
      }
      if (histogram) {
        ordered_json h = ordered_json::object();
        for (const auto& [value, count] : r.histogram) h[std::to_string(value)] = count;
        j["histogram"] = h;
      }
      out << j.dump() << "\n";
      return kExitOk;
    }

    // Extension fields: generic evaluation, index digits base q with label 0 least significant.
    const std::uint64_t q = f.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim(m); ++i) {
      total *= q;
      if (total > kSweepLimit) throw std::length_error("sweep of " + f.name() + "^" + std::to_string(dim(m)) + " exceeds 2^22 vectors");
    }
    auto vector_at = [&](std::uint64_t idx) {
      FieldVector v{m, {}};
      for (std::size_t i = 0; i < dim(m); ++i) {
        v.entries.push_back(FieldElem(f, static_cast<std::uint32_t>(idx % q)));
        idx /= q;
      }
      return v;
    };
    struct Part {
      std::uint64_t stable = 0;
      std::optional<std::uint64_t> first;
      std::map<std::uint32_t, std::uint64_t> hist;
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(g.threads, static_cast<unsigned>(total)));
    std::vector<Part> parts(threads);
    auto work = [&](unsigned t) {
      const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const FieldElem d = delta(vector_at(idx));
        if (!d.is_zero()) {
          ++parts[t].stable;
          if (!parts[t].first) parts[t].first = idx;
        }
        ++parts[t].hist[d.raw()];
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work, t);
    work(0);
    for (auto& th : pool) th.join();
    Part all;
    for (const auto& part : parts) {
      all.stable += part.stable;
      if (!all.first && part.first) all.first = part.first;
      for (const auto& [value, count] : part.hist) all.hist[value] += count;
    }
    j["total"] = total;
    j["stable_count"] = all.stable;
    if (all.first) {
      j["first_stable"] = {{"index", *all.first}, {"vector", format_vector(vector_at(*all.first))}};
    } else {
      j["first_stable"] = nullptr;
    }
    if (histogram) {
      ordered_json h = ordered_json::object();
      for (const auto& [value, count] : all.hist) h[FieldElem(f, value).to_string()] = count;
      j["histogram"] = h;
    }
    out << j.dump() << "\n";
    return kExitOk;
  });
}

int cmd_destabilize(int m, const std::string& vec, const std::string& field, unsigned max_ext, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    check_m(m);
    const FieldSpec spec = parse_field_spec(field);
    if (spec.kind != FieldSpec::Kind::Finite) throw ParseError("destabilize needs a finite field", 0);
    const FieldVector v = field_vector(m, vec, *spec.field);
    const Witness w = destabilize(v, max_ext);
    if (!verify_witness(v, w)) {
      err << "witness failed verification\n";
      return kExitFail;
    }
    out << witness_to_json(w).dump() << "\n";
    return kExitOk;
  });
}

int cmd_weights(int m, const std::string& lambda, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_m(m);
    const Cocharacter c = parse_lambda(lambda, m);
    const auto w = cochar_weights(m, c);
    ordered_json j = ordered_json::object();
    const auto& b = basis(m);
    for (std::size_t i = 0; i < w.size(); ++i) j[b[i].name] = w[i];
    out << j.dump() << "\n";
    return kExitOk;
  });
}

int cmd_verify_paper(const std::vector<std::string>& only, const GlobalOptions& g, std::ostream& out, std::ostream& err,
                     const FormulaCatalog* catalog) {
  return guarded(err, [&] {
    CheckOptions opt;
    opt.only = only;
    opt.seed = g.seed;
    opt.cases = g.cases;
    opt.threads = g.threads;
    opt.catalog = catalog;
    std::size_t passed = 0, failed = 0;
    auto reports = run_checks(opt, [&](const CheckReport& r) {
      out << report_to_json(r).dump() << "\n" << std::flush;
      (r.status == CheckStatus::Fail ? failed : passed) += 1;
    });
    if (reports.empty()) {
      err << "no checks match the filter\n";
      return kExitParse;
    }
    err << passed << " passed, " << failed << " failed\n";
    return failed ? kExitFail : kExitOk;
  });
}

}  // namespace f4v
