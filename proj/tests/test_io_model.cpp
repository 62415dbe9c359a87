#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "generators.hpp"
#include "leeyang/error.hpp"
#include "leeyang/io.hpp"
#include "leeyang/model.hpp"
#include "oracles.hpp"

using namespace leeyang;
using namespace leeyang::model;
using nlohmann::json;

namespace {

template <class F>
bool throws_kind(ErrorKind kind, F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("double formatting round trips") {
  gen::Rng rng(1);
  for (int k = 0; k < 500; ++k) {
    const double v = std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.index(0, 80)) - 40);
    CHECK(io::parse_double(io::format_double(v)) == v);
  }
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(throws_kind(ErrorKind::Io, [] { io::parse_double("1.5x"); }));
  CHECK(throws_kind(ErrorKind::Io, [] { io::parse_double(""); }));
}

TEST_CASE("coefficient and coupling CSV round trips") {
  gen::Rng rng(2);
  const auto a = rng.alphas(37);
  std::stringstream s;
  io::write_coefficients_csv(s, a);
  CHECK(s.str().rfind("n,re_alpha,im_alpha\n0,", 0) == 0);
  CHECK(io::read_coefficients_csv(s) == a);

  const CouplingSequence ps(rng.couplings(20));
  std::stringstream c;
  io::write_couplings_csv(c, ps);
  const auto back = io::read_couplings_csv(c);
  REQUIRE(back.size() == ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) CHECK(back[i] == ps[i]);

  std::stringstream wrong("n,x,y\n0,1,2\n");
  CHECK(throws_kind(ErrorKind::Io, [&] { io::read_coefficients_csv(wrong); }));
  std::stringstream ragged("n,re_alpha,im_alpha\n0,0.1\n");
  CHECK(throws_kind(ErrorKind::Io, [&] { io::read_coefficients_csv(ragged); }));
}

TEST_CASE("zeros CSV") {
  const auto z = spectral::lee_yang_zeros(CouplingSequence({0.4, 1.2, 0.7}));
  std::stringstream s;
  io::write_zeros_csv(s, z);
  std::string header;
  std::getline(s, header);
  CHECK(header == "k,theta,re,im,circle_deviation");
  s.seekg(0);
  const auto back = io::read_zeros_csv(s, 3);
  CHECK(back.phases() == z.phases());
  CHECK(back.chain_length() == 3);
}

TEST_CASE("ids, gap and histogram CSV") {
  const spectral::EigenphaseList two({0.25, 0.75}, 2);
  std::ostringstream ids;
  io::write_ids_csv(ids, spectral::ids(two, spectral::Normalization::PerOperator));
  CHECK(ids.str() == "theta,value\n0.25,0.5\n0.75,1\n");

  spectral::Gap g{0.2, 0.6, 0.4, 1.0, std::nullopt};
  std::ostringstream gaps;
  io::write_gaps_csv(gaps, {g});
  CHECK(gaps.str() ==
        "left_theta,right_theta,length,label,n,m,residual\n"
        "0.20000000000000001,0.59999999999999998,0.40000000000000002,1,,,\n");

  std::ostringstream hist;
  io::write_histogram_csv(hist, spectral::gap_histogram(two, 1));
  CHECK(hist.str() == "bin_left,bin_right,count,proportion\n0,0.5,2,1\n");
}

TEST_CASE("model spec JSON round trip") {
  ModelSpec s;
  s.kind = ModelKind::Sft;
  s.length = 300;
  s.transition = {{0.2, 0.8}, {0.6, 0.4}};
  s.couplings = {{'a', 0.3}, {'b', 1.1}};
  s.explicit_alphas = {cplx(0.1, 0.2)};
  s.label_generators = std::vector<double>{0.25, 0.5};
  s.rules = {{'a', "ab"}, {'b', "a"}};
  CHECK(io::model_spec_from_json(io::to_json(s)) == s);
  CHECK(io::model_spec_from_json(json::parse(io::to_json(s).dump())) == s);
  CHECK(io::model_spec_from_json(json::object()) == ModelSpec{});

  io::RunConfig c;
  c.model = s;
  c.m_max = 12;
  c.normalization = spectral::Normalization::PerOperator;
  c.tolerances.zeros = 1e-6;
  CHECK(io::run_config_from_json(json::parse(io::to_json(c).dump())) == c);
}

TEST_CASE("configuration errors") {
  CHECK(throws_kind(ErrorKind::Config, [] { io::model_spec_from_json(json{{"knd", "sft"}}); }));
  CHECK(throws_kind(ErrorKind::Config, [] { io::model_spec_from_json(json{{"kind", "henon"}}); }));
  CHECK(throws_kind(ErrorKind::Config, [] { io::run_config_from_json(json{{"m_max", -1}}); }));
  CHECK(throws_kind(ErrorKind::Config,
                    [] { io::run_config_from_json(json{{"tolerances", {{"zeros", 0.0}}}}); }));
  CHECK(throws_kind(ErrorKind::Config,
                    [] { io::run_config_from_json(json{{"tolerances", {{"speed", 1.0}}}}); }));
  CHECK(throws_kind(ErrorKind::Config, [] { io::parse_normalization("both"); }));
  CHECK(io::parse_normalization(io::to_string(spectral::Normalization::PerPaper)) ==
        spectral::Normalization::PerPaper);
}

TEST_CASE("fibonacci model") {
  const auto m = build_model(ModelSpec{});
  CHECK(m.pipeline == Pipeline::Ising);
  REQUIRE(m.couplings);
  CHECK(m.couplings->size() == 144);
  CHECK(m.alphas[0].real() == doctest::Approx(std::exp(-4.0 / 3.0)));
  CHECK(m.group.generators().size() == 1);
  const auto z = model_zeros(m);
  CHECK(z.size() == 288);
  CHECK(z.chain_length() == 144);
  CHECK(z.max_deviation() <= 1e-10);
  ModelSpec cmv;
  cmv.pipeline = Pipeline::Cmv;
  cmv.iterations = 4;
  CHECK(build_model(cmv).pipeline == Pipeline::Cmv);
}

TEST_CASE("substitution and sft models") {
  ModelSpec s;
  s.kind = ModelKind::Substitution;
  s.rules = {{'a', "ab"}, {'b', "ba"}};
  s.length = 16;
  const auto m = build_model(s);
  CHECK(m.couplings->size() == 16);
  CHECK(m.group.generators().empty());

  ModelSpec t;
  t.kind = ModelKind::Sft;
  t.transition = {{0.5, 0.5}, {1.0, 0.0}};
  t.length = 50;
  const auto k = build_model(t);
  CHECK(k.couplings->size() == 50);
  CHECK_FALSE(k.group.generators().empty());
  t.transition = {{0.0, 1.0}, {1.0, 0.0}};
  CHECK(throws_kind(ErrorKind::Domain, [&] { build_model(t); }));
  t.transition = {{0.5, 0.5}, {1.0, 0.0}};
  t.length = 0;
  CHECK(throws_kind(ErrorKind::Config, [&] { build_model(t); }));
}

TEST_CASE("cat-map model meets the precision gate") {
  ModelSpec s;
  s.kind = ModelKind::CatMap;
  s.length = 200;
  const auto m = build_model(s);
  CHECK(m.precision_bits == dynamics::cat_map_bits(200));
  CHECK(m.pipeline == Pipeline::Ising);
  const auto twice = recompute_doubled_precision(m);
  double worst = 0.0;
  for (std::size_t i = 0; i < m.alphas.size(); ++i) worst = std::max(worst, std::abs(twice[i] - m.alphas[i]));
  CHECK(worst <= 1e-14);
  s.precision_bits = 1000;
  CHECK(build_model(s).precision_bits == 1000);
}

TEST_CASE("sign-indefinite samples go through the discriminant") {
  ModelSpec s;
  s.kind = ModelKind::SkewShift;
  s.sampling = SamplingKind::PureCosine;
  s.length = 12;
  const auto m = build_model(s);
  CHECK(m.pipeline == Pipeline::Cmv);
  CHECK_FALSE(m.couplings);
  CHECK(model_zeros(m).size() == 12);
  s.pipeline = Pipeline::Ising;
  CHECK(throws_kind(ErrorKind::Domain, [&] { build_model(s); }));

  ModelSpec u;
  u.kind = ModelKind::Uamo;
  u.length = 9;
  const auto um = build_model(u);
  CHECK(um.pipeline == Pipeline::Cmv);
  const auto z = model_zeros(um);
  CHECK(z.size() == 9);
  CHECK(oracle::multiset_distance(
            z.phases(), oracle::discriminant_phases({um.alphas.values().begin(), um.alphas.values().end()})) <= 1e-8);
}

TEST_CASE("explicit lists") {
  ModelSpec s;
  s.kind = ModelKind::ExplicitList;
  CHECK(throws_kind(ErrorKind::Config, [&] { build_model(s); }));
  s.explicit_couplings = {0.5, 0.7};
  const auto m = build_model(s);
  CHECK(m.pipeline == Pipeline::Ising);
  s.explicit_alphas = {cplx(0.1)};
  CHECK(throws_kind(ErrorKind::Config, [&] { build_model(s); }));

  const std::string path = "leeyang_test_couplings.csv";
  {
    std::ofstream out(path);
    io::write_couplings_csv(out, CouplingSequence({0.5, 0.7}));
  }
  ModelSpec f;
  f.kind = ModelKind::ExplicitList;
  f.source_csv = path;
  const auto fm = build_model(f);
  CHECK(fm.couplings->size() == 2);
  CHECK((*fm.couplings)[1] == 0.7);
  std::remove(path.c_str());
  CHECK(throws_kind(ErrorKind::Io, [&] { build_model(f); }));

  ModelSpec g;
  g.kind = ModelKind::ExplicitList;
  g.explicit_alphas = {cplx(0.2), cplx(0.4)};
  g.label_generators = std::vector<double>{};
  const auto gm = build_model(g);
  CHECK(gm.pipeline == Pipeline::Ising);
  CHECK((*gm.couplings)[0] == doctest::Approx(-0.5 * std::log(0.2)));
  CHECK(gm.group.generators().empty());
}
