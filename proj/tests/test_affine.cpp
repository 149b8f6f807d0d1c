#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "sp4hecke/affine.hpp"
#include "sp4hecke/levi.hpp"

using namespace sp4hecke;

namespace {
Pt pt(const Rat& a, const Rat& b) { return {a, b}; }

bool same_action(const AffineWeyl& w, const Pt& in, const Pt& out) {
    Pt got = w.apply(in);
    return got[0] == out[0] && got[1] == out[1];
}

// Sample of rational test points.
const std::vector<Pt> kSamplePoints = {
    pt(Rat(1, 4), Rat(1, 4)), pt(Rat(3, 8), Rat(1, 8)), pt(Rat(-2, 3), Rat(7, 5)),
    pt(Rat(0), Rat(0)),       pt(Rat(5, 2), Rat(-1, 2)), pt(Rat(11, 7), Rat(2))};
}  // namespace

TEST_CASE("affine root evaluation") {
    Pt p = pt(Rat(1, 4), Rat(1, 4));
    REQUIRE(eval_affine_root({kDelta, 0}, p) == Rat(1, 2));
    REQUIRE(eval_affine_root({-kDelta, 1}, p) == Rat(1, 2));
    for (const Rat& t : {Rat(0), Rat(1, 3), Rat(-5, 7)})
        REQUIRE(eval_affine_root({kAlpha, 0}, pt(t, t)) == 0);
    REQUIRE(eval_affine_root({kBeta, 0}, p) == Rat(1, 2));
    REQUIRE(eval_affine_root({kGamma, 0}, p) == Rat(1, 2));
}

TEST_CASE("c2 root system data") {
    REQUIRE(all_roots().size() == 8);
    for (const Root& r : all_roots()) {
        int len2 = r.c1 * r.c1 + r.c2 * r.c2;
        REQUIRE((len2 == 2 || len2 == 4));
        REQUIRE(is_root(-r));
    }
    REQUIRE(kCoxeterNumber == 4);
    REQUIRE(simple_affine_roots()[0] == AffineRoot{kAlpha, 0});
    REQUIRE(simple_affine_roots()[1] == AffineRoot{kBeta, 0});
    REQUIRE(simple_affine_roots()[2] == AffineRoot{-kDelta, 1});
    // All simple affine roots take the value 1/h at the barycenter x0.
    Pt x0 = pt(Rat(3, 8), Rat(1, 8));
    for (const AffineRoot& psi : simple_affine_roots())
        REQUIRE(eval_affine_root(psi, x0) == Rat(1, kCoxeterNumber));
}

TEST_CASE("reflections act as expected") {
    AffineWeyl s_a = reflection({kAlpha, 0});
    AffineWeyl s_d = reflection({kDelta, 0});
    AffineWeyl s_1md = reflection({-kDelta, 1});
    for (const Pt& x : kSamplePoints) {
        REQUIRE(same_action(s_a, x, pt(x[1], x[0])));
        REQUIRE(same_action(s_d, x, pt(-x[0], x[1])));
        REQUIRE(same_action(s_1md, x, pt(Rat(1) - x[0], x[1])));
    }
    // reflection(psi) fixes the wall of psi pointwise.
    REQUIRE(same_action(s_1md, pt(Rat(1, 2), Rat(0)), pt(Rat(1, 2), Rat(0))));

    for (const Root& grad : all_roots())
        for (int lvl = -3; lvl <= 3; ++lvl) {
            AffineWeyl s = reflection({grad, lvl});
            REQUIRE(s.compose(s) == AffineWeyl{});
            REQUIRE(s.preserves_root_set());
            // The reflection fixes its own wall: psi(s(x)) = -psi(x).
            for (const Pt& x : kSamplePoints)
                REQUIRE(eval_affine_root({grad, lvl}, s.apply(x)) ==
                        -eval_affine_root({grad, lvl}, x));
        }
}

TEST_CASE("composition and inverse") {
    AffineWeyl s_a = reflection({kAlpha, 0});
    AffineWeyl s_b = reflection({kBeta, 0});
    AffineWeyl s_c = reflection({-kDelta, 1});
    AffineWeyl w = s_a.compose(s_b).compose(s_c);
    REQUIRE(w.compose(w.inverse()) == AffineWeyl{});
    REQUIRE(w.inverse().compose(w) == AffineWeyl{});
    // Associativity of composition.
    REQUIRE(s_a.compose(s_b.compose(s_c)) == s_a.compose(s_b).compose(s_c));
}

TEST_CASE("pullback action on affine roots") {
    AffineWeyl s_a = reflection({kAlpha, 0});
    AffineWeyl s_c = reflection({-kDelta, 1});
    AffineWeyl w = s_a.compose(s_c).compose(s_a.compose(reflection({kBeta, 0})));
    for (const Root& grad : {kAlpha, kBeta, kGamma, kDelta})
        for (int lvl : {-2, -1, 0, 1, 2}) {
            AffineRoot psi{grad, lvl};
            AffineRoot moved = act_on_root(w, psi);
            AffineWeyl winv = w.inverse();
            for (const Pt& x : kSamplePoints)
                REQUIRE(eval_affine_root(moved, x) ==
                        eval_affine_root(psi, winv.apply(x)));
        }
}

TEST_CASE("regions contain their sample points") {
    Region sigma = Region::alcove_sigma();
    Region sigma_p = Region::alcove_sigma_prime();
    Region rho = Region::square_rho();
    REQUIRE(sigma.contains(pt(Rat(3, 8), Rat(1, 8))));
    REQUIRE_FALSE(sigma.contains(pt(Rat(1, 8), Rat(3, 8))));
    REQUIRE(sigma_p.contains(pt(Rat(1, 8), Rat(3, 8))));
    REQUIRE(rho.contains(pt(Rat(1, 4), Rat(1, 4))));
    REQUIRE_FALSE(rho.contains(pt(Rat(3, 4), Rat(1, 4))));
    REQUIRE(Region::strip(LeviCase::SL2xGL1).contains(pt(Rat(100), Rat(1, 4))));
    REQUIRE(Region::strip(LeviCase::GL2).contains(pt(Rat(-100), Rat(Rat(201, 2)))));
}

TEST_CASE("strip stabilizers, small windows") {
    auto id = AffineWeyl{};
    AffineWeyl w_d = reflection({kDelta, 0});
    AffineWeyl w_1md = reflection({-kDelta, 1});

    auto case1_0 = strip_stabilizer_elements(LeviCase::SL2xGL1, 0);
    REQUIRE(case1_0.size() == 1);
    REQUIRE(case1_0[0].w == id);

    auto case1_1 = strip_stabilizer_elements(LeviCase::SL2xGL1, 1);
    REQUIRE(case1_1.size() == 3);
    auto has = [](const auto& v, const AffineWeyl& w) {
        return std::any_of(v.begin(), v.end(),
                           [&](const auto& e) { return e.w == w; });
    };
    REQUIRE(has(case1_1, id));
    REQUIRE(has(case1_1, w_d));
    REQUIRE(has(case1_1, w_1md));

    AffineWeyl t_n = w_d.compose(reflection({-kBeta, 1}));
    auto case2_1 = strip_stabilizer_elements(LeviCase::GL2, 1);
    REQUIRE(has(case2_1, t_n));
    REQUIRE(has(case2_1, reflection({kAlpha, 0})));
    // Counts: 2 elements of gallery length 0, then 4 per positive length.
    REQUIRE(case2_1.size() == 6);
    REQUIRE(strip_stabilizer_elements(LeviCase::GL2, 0).size() == 2);
    REQUIRE(strip_stabilizer_elements(LeviCase::SL2xGL1, 4).size() == 9);
    REQUIRE(strip_stabilizer_elements(LeviCase::GL2, 4).size() == 18);
}

TEST_CASE("every stabilizer element preserves its strip") {
    for (LeviCase c : {LeviCase::SL2xGL1, LeviCase::GL2})
        for (const auto& e : strip_stabilizer_elements(c, 4))
            REQUIRE(preserves_strip(e.w, c));
    // A reflection moving the strip is rejected.
    REQUIRE_FALSE(preserves_strip(reflection({kDelta, 0}), LeviCase::GL2));
    REQUIRE_THROWS_AS(gallery_length(reflection({kBeta, 0}), LeviCase::SL2xGL1),
                      std::domain_error);
}

TEST_CASE("gallery lengths match reduced words") {
    AffineWeyl w_d = reflection({kDelta, 0});
    AffineWeyl w_1md = reflection({-kDelta, 1});
    REQUIRE(gallery_length(AffineWeyl{}, LeviCase::SL2xGL1) == 0);
    REQUIRE(gallery_length(w_d, LeviCase::SL2xGL1) == 1);
    REQUIRE(gallery_length(w_d.compose(w_1md), LeviCase::SL2xGL1) == 2);

    // Case 1: gallery length equals the word length in {w_d, w_{1-d}}.
    for (const auto& e : strip_stabilizer_elements(LeviCase::SL2xGL1, 4))
        REQUIRE(gallery_length(e.w, LeviCase::SL2xGL1) ==
                static_cast<long>(e.word.size()));

    // Case 2: gallery length equals the number of t_n letters.
    for (const auto& e : strip_stabilizer_elements(LeviCase::GL2, 4)) {
        long tn_count = std::count(e.word.begin(), e.word.end(), 0);
        REQUIRE(gallery_length(e.w, LeviCase::GL2) == tn_count);
    }
}

TEST_CASE("wall crossing roots") {
    AffineWeyl w_d = reflection({kDelta, 0});
    auto crossed = wall_crossing_roots(w_d, LeviCase::SL2xGL1);
    std::set<std::pair<std::pair<int, int>, int>> got;
    for (const auto& r : crossed) got.insert({{r.grad.c1, r.grad.c2}, r.level});
    REQUIRE(got == std::set<std::pair<std::pair<int, int>, int>>{
                       {{1, 1}, 0}, {{2, 0}, 0}});  // e1+e2 and delta

    AffineWeyl t_n = w_d.compose(reflection({-kBeta, 1}));
    crossed = wall_crossing_roots(t_n, LeviCase::GL2);
    got.clear();
    for (const auto& r : crossed) got.insert({{r.grad.c1, r.grad.c2}, r.level});
    REQUIRE(got == std::set<std::pair<std::pair<int, int>, int>>{
                       {{2, 0}, 0}, {{0, -2}, 1}, {{1, -1}, 1}});  // delta, 1-b, 1+a

    REQUIRE(wall_crossing_roots(AffineWeyl{}, LeviCase::SL2xGL1).empty());

    // Cardinality = 2m (case 1) and 3m (case 2) for all gallery lengths <= 4.
    for (const auto& e : strip_stabilizer_elements(LeviCase::SL2xGL1, 4))
        REQUIRE(wall_crossing_roots(e.w, LeviCase::SL2xGL1).size() ==
                2 * static_cast<std::size_t>(gallery_length(e.w, LeviCase::SL2xGL1)));
    for (const auto& e : strip_stabilizer_elements(LeviCase::GL2, 4))
        REQUIRE(wall_crossing_roots(e.w, LeviCase::GL2).size() ==
                3 * static_cast<std::size_t>(gallery_length(e.w, LeviCase::GL2)));
}

namespace {
// Breadth-first enumeration of affine Weyl elements by word length in the
// simple reflections.
std::vector<AffineWeyl> weyl_ball(int radius) {
    std::vector<AffineWeyl> gens;
    for (const AffineRoot& psi : simple_affine_roots())
        gens.push_back(reflection(psi));
    std::vector<AffineWeyl> ball = {AffineWeyl{}};
    std::size_t frontier = 0;
    for (int d = 0; d < radius; ++d) {
        std::size_t end = ball.size();
        for (std::size_t i = frontier; i < end; ++i)
            for (const auto& g : gens) {
                AffineWeyl next = ball[i].compose(g);
                if (std::find(ball.begin(), ball.end(), next) == ball.end())
                    ball.push_back(next);
            }
        frontier = end;
    }
    return ball;
}
}  // namespace

TEST_CASE("simple transitivity on alcoves") {
    // For alcove representatives w1(sigma), w2(sigma) with w1, w2 in a small
    // ball, exactly one element of a larger ball maps the first to the second.
    auto small = weyl_ball(3);
    auto large = weyl_ball(8);
    Pt c = pt(Rat(3, 8), Rat(1, 8));  // interior point of sigma
    for (const auto& w1 : small)
        for (const auto& w2 : small) {
            Pt from = w1.apply(c);
            Pt to = w2.apply(c);
            int count = 0;
            for (const auto& w : large)
                if (w.apply(from) == to) ++count;
            REQUIRE(count == 1);
        }
}

TEST_CASE("type Cn root data") {
    for (int n = 1; n <= 6; ++n) {
        auto rs = RootSystemC::make(n);
        REQUIRE(static_cast<int>(rs.simple_roots.size()) == n);
        REQUIRE(rs.coxeter_number == 2 * n);
        auto roots = rs.all_roots();
        REQUIRE(static_cast<int>(roots.size()) == 2 * n * n);
        std::set<std::vector<int>> root_set(roots.begin(), roots.end());
        for (const auto& r : roots) {
            int len2 = 0;
            for (int c : r) len2 += c * c;
            REQUIRE((len2 == 2 || len2 == 4));
            std::vector<int> neg(r.size());
            std::transform(r.begin(), r.end(), neg.begin(), [](int c) { return -c; });
            REQUIRE(root_set.count(neg) == 1);
        }
        REQUIRE(root_set.count(rs.highest_root) == 1);
    }
}

TEST_CASE("levi solver on the two rank-2 shapes") {
    // GL(1) x Sp(2): solution line (x1, 1/4), forced value 1/2.
    auto sol = levi_common_point({{1}, 1});
    REQUIRE(sol.has_value());
    REQUIRE(sol->common_value == Rat(1, 2));
    REQUIRE(sol->dimension == 1);
    REQUIRE(sol->example_point[1] == Rat(1, 4));

    // GL(2): solution line x1 - x2 = 1/2, forced value 1/2.
    sol = levi_common_point({{2}, 0});
    REQUIRE(sol.has_value());
    REQUIRE(sol->common_value == Rat(1, 2));
    REQUIRE(sol->dimension == 1);
    REQUIRE(sol->example_point[0] - sol->example_point[1] == Rat(1, 2));
}

TEST_CASE("levi dichotomies") {
    // Mixed GL blocks of different sizes (both >= 2): inconsistent.
    REQUIRE_FALSE(levi_common_point({{3, 2}, 0}).has_value());
    REQUIRE_FALSE(levi_common_point({{4, 2}, 0}).has_value());
    // GL(a) with Sp(2m), a != 2m (a, m > 1): inconsistent.
    REQUIRE_FALSE(levi_common_point({{3}, 2}).has_value());
    REQUIRE_FALSE(levi_common_point({{2}, 2}).has_value());
    // GL(2m) x Sp(2m): consistent, value 1/(2m).
    auto sol = levi_common_point({{2}, 1});  // inside Sp(6)
    REQUIRE(sol.has_value());
    REQUIRE(sol->common_value == Rat(1, 2));
    sol = levi_common_point({{4}, 2});  // inside Sp(12)
    REQUIRE(sol.has_value());
    REQUIRE(sol->common_value == Rat(1, 4));
    // GL(1) factors are free riders.
    sol = levi_common_point({{1, 1}, 1});
    REQUIRE(sol.has_value());
    REQUIRE(sol->common_value == Rat(1, 2));
    REQUIRE(sol->dimension == 2);
    // The pure torus has no affine simple roots: absent.
    REQUIRE_FALSE(levi_common_point({{1, 1, 1}, 0}).has_value());
    REQUIRE_FALSE(levi_common_point({{}, 0}).has_value());
}

TEST_CASE("levi solver agrees with the closed-form rule, n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& shape : enumerate_levi_shapes(n)) {
            auto sol = levi_common_point(shape);
            REQUIRE(sol.has_value() == levi_admissible_by_rule(shape));
            if (sol) {
                // The value is 1/scale for the common scale.
                int scale = shape.sp_half_rank >= 1 ? 2 * shape.sp_half_rank : 0;
                for (int k : shape.gl_blocks)
                    if (k >= 2) scale = k;
                REQUIRE(sol->common_value == Rat(1, scale));
                // Each GL block contributes one free parameter.
                REQUIRE(sol->dimension ==
                        static_cast<int>(shape.gl_blocks.size()));
            }
        }
    // Spot checks against the classification families.
    for (int n = 2; n <= 6; ++n)
        REQUIRE(levi_common_point({{1}, n - 1}).has_value());  // GL(1) x Sp(2n-2)
    REQUIRE(levi_common_point({{2}, 1}).has_value());          // GL(2) x Sp(2) in Sp(6)
    REQUIRE(levi_common_point({{2, 2}, 1}).has_value());       // in Sp(10)
    REQUIRE(levi_common_point({{3, 3}, 0}).has_value());       // Siegel-type, Sp(12)
}
