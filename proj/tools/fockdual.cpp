#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fockdual/characters.hpp"
#include "fockdual/errors.hpp"
#include "fockdual/glhat.hpp"
#include "fockdual/jsonio.hpp"
#include "fockdual/literals.hpp"
#include "fockdual/lr.hpp"
#include "fockdual/winfinity.hpp"

namespace fd = fockdual;

namespace {

fd::Category sign_of(const std::string& s) {
  return s == "+" ? fd::Category::OPlus : fd::Category::OMinus;
}

fd::EnumerationBox symmetric_box(fd::Int b) { return fd::EnumerationBox{-b, b}; }

std::string series_text(const std::vector<fd::Integer>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (d == 0) {
      os << coeffs[d];
    } else {
      if (coeffs[d] != 1) os << coeffs[d];
      os << 'q';
      if (d > 1) os << '^' << d;
    }
  }
  if (first) os << '0';
  return os.str();
}

struct SplitArg {
  int m = 0;
  int n = 0;
};

SplitArg parse_split(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--split wants M,N");
  SplitArg s;
  s.m = std::stoi(text.substr(0, comma));
  s.n = std::stoi(text.substr(comma + 1));
  if (s.m < 0 || s.n < 0) throw std::invalid_argument("--split wants non-negative M,N");
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tensor decompositions and Fock-space character checks"};
  app.require_subcommand(1);
  app.set_config("--config");

  std::string arg_lam, arg_mu, arg_nu, arg_a, arg_b, arg_m, arg_split;
  std::string arg_sign = "+";
  fd::Int arg_box = 6;
  int arg_order = 12;
  int arg_upto = 10;
  int arg_n = 1;
  std::optional<fd::Int> arg_window;
  bool as_json = false;

  auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", as_json, "machine output"); };

  auto* c_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  c_lr->add_option("--lam", arg_lam)->required();
  c_lr->add_option("--mu", arg_mu)->required();
  c_lr->add_option("--nu", arg_nu)->required();
  c_lr->callback([&] {
    std::cout << fd::lr_coefficient(fd::parse_partition(arg_lam), fd::parse_partition(arg_mu),
                                    fd::parse_partition(arg_nu))
              << "\n";
  });

  auto* c_restrict = app.add_subcommand("restrict", "restriction to a block-diagonal subgroup");
  c_restrict->add_option("--lam", arg_lam)->required();
  c_restrict->add_option("--split", arg_split, "M,N")->required();
  add_json(c_restrict);
  c_restrict->callback([&] {
    const auto split = parse_split(arg_split);
    const auto lam = fd::parse_generalized(arg_lam);
    const auto terms = fd::restrict_weight(lam, split.m, split.n);
    if (as_json) {
      std::cout << fd::dump_json(fd::restriction_json(lam, split.m, split.n, terms));
      return;
    }
    for (const auto& t : terms) {
      std::cout << "mu=" << fd::format_tuple(t.mu) << " nu=" << fd::format_tuple(t.nu) << " x"
                << t.mult << "\n";
    }
  });

  auto* c_tgl = app.add_subcommand("tensor-gl", "tensor decomposition of primitive labels");
  c_tgl->add_option("--sign", arg_sign)->check(CLI::IsMember({"+", "-", "f"}));
  c_tgl->add_option("--mu", arg_mu)->required();
  c_tgl->add_option("--nu", arg_nu)->required();
  c_tgl->add_option("--box", arg_box, "symmetric enumeration window");
  add_json(c_tgl);
  c_tgl->callback([&] {
    const fd::Category cat = static_cast<fd::Category>(arg_sign[0]);
    const fd::PrimitiveLabel a{cat, fd::parse_generalized(arg_mu)};
    const fd::PrimitiveLabel b{cat, fd::parse_generalized(arg_nu)};
    const auto dec = fd::tensor_category(a, b, symmetric_box(arg_box));
    if (as_json) {
      std::cout << fd::dump_json(fd::to_json(dec, cat, a.level() + b.level()));
      return;
    }
    for (const auto& [label, mult] : dec.terms) {
      std::cout << fd::format_tuple(label.lam) << " x" << mult << "\n";
    }
  });

  auto* c_tw = app.add_subcommand("tensor-w", "tensor decomposition of primitive modules");
  c_tw->add_option("--a", arg_a)->required();
  c_tw->add_option("--b", arg_b)->required();
  c_tw->add_option("--box", arg_box, "symmetric enumeration window per shared class");
  add_json(c_tw);
  c_tw->callback([&] {
    const auto a = fd::canonicalize(fd::parse_wmodule(arg_a));
    const auto b = fd::canonicalize(fd::parse_wmodule(arg_b));
    const auto dec = fd::tensor_w(a, b, symmetric_box(arg_box));
    if (as_json) {
      std::cout << fd::dump_json(fd::to_json(dec, a.central_charge() + b.central_charge()));
      return;
    }
    for (const auto& [mod, mult] : dec.terms) {
      std::cout << fd::format_wmodule(mod) << " x" << mult << "\n";
    }
  });

  auto* c_exp = app.add_subcommand("exponents", "exponent multiset of a primitive module");
  c_exp->add_option("--m", arg_m)->required();
  add_json(c_exp);
  c_exp->callback([&] {
    const auto mod = fd::canonicalize(fd::parse_wmodule(arg_m));
    const auto exp = fd::exponents(mod);
    if (as_json) {
      std::cout << fd::dump_json(fd::exponents_json(exp));
      return;
    }
    std::cout << "charge " << exp.charge() << "\n";
    for (const auto& [r, m] : exp.entries) {
      std::cout << fd::format_rational(r) << " x" << m << "\n";
    }
  });

  auto* c_xi = app.add_subcommand("xi", "Taylor data of the quotient generating function");
  c_xi->add_option("--m", arg_m)->required();
  c_xi->add_option("--upto", arg_upto);
  add_json(c_xi);
  c_xi->callback([&] {
    const auto mod = fd::canonicalize(fd::parse_wmodule(arg_m));
    const fd::DeltaSeries d{fd::exponents(mod), mod.central_charge()};
    const auto xi = fd::delta_xi(d, arg_upto);
    if (as_json) {
      std::cout << fd::dump_json(fd::xi_json(xi));
      return;
    }
    for (std::size_t i = 0; i < xi.size(); ++i) {
      std::cout << "xi_" << i << " = " << fd::format_rational(xi[i]) << "\n";
    }
  });

  auto* c_iso = app.add_subcommand("iso", "isomorphism test for primitive modules");
  c_iso->add_option("--a", arg_a)->required();
  c_iso->add_option("--b", arg_b)->required();
  c_iso->callback([&] {
    std::cout << (fd::is_isomorphic(fd::parse_wmodule(arg_a), fd::parse_wmodule(arg_b)) ? "true"
                                                                                        : "false")
              << "\n";
  });

  auto* c_char = app.add_subcommand("char", "graded branching function of a label");
  c_char->add_option("--lam", arg_lam)->required();
  c_char->add_option("--sign", arg_sign)->check(CLI::IsMember({"+", "-"}));
  c_char->add_option("--order", arg_order, "q truncation order");
  c_char->add_option("--window", arg_window, "charge window");
  add_json(c_char);
  c_char->callback([&] {
    const auto lam = fd::parse_generalized(arg_lam);
    const fd::Category sign = sign_of(arg_sign);
    const fd::Int w =
        arg_window ? *arg_window : fd::charge_window_for(lam, sign, arg_order);
    const auto b = fd::branching_function(lam, sign, arg_order, w);
    if (as_json) {
      std::cout << fd::dump_json(fd::branching_json(b, w));
      return;
    }
    std::cout << series_text(b.series) << "\n";
  });

  auto* c_fock = app.add_subcommand("fock-verify", "degreewise duality check of a Fock character");
  c_fock->add_option("--n", arg_n)->check(CLI::NonNegativeNumber);
  c_fock->add_option("--sign", arg_sign)->check(CLI::IsMember({"+", "-"}));
  c_fock->add_option("--order", arg_order, "q truncation order");
  c_fock->add_option("--window", arg_window, "charge window");
  c_fock->callback([&] {
    const fd::Category sign = sign_of(arg_sign);
    const fd::Int w =
        arg_window ? *arg_window : fd::default_charge_window(arg_n, sign, arg_order);
    const auto series = fd::fock_series(arg_n, sign, arg_order, w);
    for (int d = 0; d <= series.order; ++d) {
      std::cout << "q^" << d << ": " << series.coeffs[static_cast<std::size_t>(d)].coeffs.size()
                << " terms\n";
    }
    std::cout << "PASS n=" << arg_n << " sign=" << arg_sign << " order=" << arg_order
              << " window=" << w << "\n";
  });

  auto* c_tc = app.add_subcommand("tensor-char", "character check of a tensor decomposition");
  c_tc->add_option("--mu", arg_mu)->required();
  c_tc->add_option("--nu", arg_nu)->required();
  c_tc->add_option("--sign", arg_sign)->check(CLI::IsMember({"+", "-"}));
  c_tc->add_option("--order", arg_order, "q truncation order");
  std::optional<fd::Int> tc_box;
  c_tc->add_option("--box", tc_box, "symmetric enumeration window");
  add_json(c_tc);
  c_tc->callback([&] {
    const auto mu = fd::parse_generalized(arg_mu);
    const auto nu = fd::parse_generalized(arg_nu);
    const fd::Category sign = sign_of(arg_sign);
    std::optional<fd::EnumerationBox> box;
    if (tc_box) box = symmetric_box(*tc_box);
    const auto report = fd::verify_tensor_characters(mu, nu, sign, arg_order, box);
    if (as_json) {
      std::cout << fd::dump_json(fd::tensor_char_json(mu, nu, sign, arg_order, report));
      return;
    }
    std::cout << "box [" << report.box.lo << "," << report.box.hi << "]\n";
    std::cout << "lambda terms: " << report.lambda_terms.size() << "\n";
    for (std::size_t d = 0; d < report.residual.size(); ++d) {
      std::cout << "q^" << d << ": residual " << report.residual[d] << "\n";
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << "\n";
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const fd::DomainError& e) {
    std::cerr << "error[" << e.name() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
