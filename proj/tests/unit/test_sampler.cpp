#include <gtest/gtest.h>

#include <cmath>

#include <ness/analysis.hpp>
#include <ness/correlations.hpp>
#include <ness/parallel.hpp>
#include <ness/sampler.hpp>

using namespace ness;

namespace {

SampleSpec small_spec(std::size_t count = 400)
{
    SampleSpec spec;
    spec.count = count;
    spec.seed = 99;
    return spec;
}

} // namespace

TEST(Parallel, CoversEveryIndexOnce)
{
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) EXPECT_EQ(h, 1);
}

TEST(Parallel, RethrowsWorkerException)
{
    EXPECT_THROW(parallel_for(50, 3, [](std::size_t i) {
                     if (i == 17) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
}

TEST(SampleSpec, Validation)
{
    auto spec = small_spec();
    EXPECT_NO_THROW(spec.validate());
    spec.count = 0;
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec = small_spec();
    spec.G = {2.0, 1.0};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec = small_spec();
    spec.N_a = {-1.0, 1.0};
    EXPECT_THROW(spec.validate(), std::invalid_argument);
    spec = small_spec();
    spec.kappa_b = 0.0;
    EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(Sampler, DrawsStayInRanges)
{
    const auto spec = small_spec();
    const auto pts = sample_steady_states(spec);
    ASSERT_EQ(pts.size(), spec.count);
    for (const auto& p : pts) {
        EXPECT_GE(p.params.omega_a, 0.0);
        EXPECT_LT(p.params.omega_a, 3.0);
        EXPECT_GE(p.params.G, 0.0);
        EXPECT_LT(p.params.G, 2.0);
        EXPECT_LT(p.params.N_a, 10.0);
        EXPECT_LT(p.params.N_b, 10.0);
        EXPECT_EQ(p.params.kappa_a, 0.5);
        EXPECT_EQ(p.params.kappa_b, 1.0);
    }
}

TEST(Sampler, IndependentOfWorkerCount)
{
    const auto spec = small_spec();
    const auto one = sample_steady_states(spec, 1);
    const auto four = sample_steady_states(spec, 4);
    ASSERT_EQ(one.size(), four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].params, four[i].params);
        EXPECT_EQ(one[i].pi_s, four[i].pi_s);
        EXPECT_EQ(one[i].discord, four[i].discord);
    }
}

TEST(Sampler, SeedChangesDraws)
{
    auto spec = small_spec(10);
    const auto a = sample_steady_states(spec);
    spec.seed = 100;
    const auto b = sample_steady_states(spec);
    EXPECT_NE(a[0].params.omega_a, b[0].params.omega_a);
}

TEST(Sampler, PointsMatchDirectEvaluation)
{
    const auto pts = sample_steady_states(small_spec(50));
    int unstable = 0;
    for (const auto& p : pts) {
        const auto r = analyze_steady_state(p.params);
        EXPECT_EQ(p.stable, r.stable);
        if (!p.stable) {
            ++unstable;
            EXPECT_EQ(p.pi_s, 0.0);
            continue;
        }
        EXPECT_EQ(p.pi_s, r.entropy.pi_s);
        EXPECT_EQ(p.mutual_info, r.correlations.renyi2_I);
        EXPECT_EQ(p.discord, r.correlations.discord_a_given_b);
        EXPECT_EQ(p.entangled, p.log_neg > 0.0);
    }
    EXPECT_GT(unstable, 0);
}

TEST(BoundCurves, Configurations)
{
    const auto up = bound_configuration(BoundKind::mutual_info, BoundRole::upper, 0.5, 1.0, 10.0);
    EXPECT_EQ(up.omega_a, 1.0);
    EXPECT_EQ(up.N_a, 0.0);
    EXPECT_EQ(up.N_b, 0.0);
    const auto lo = bound_configuration(BoundKind::mutual_info, BoundRole::lower, 0.5, 1.0, 10.0);
    EXPECT_EQ(lo.omega_a, 0.0);
    EXPECT_EQ(lo.N_b, 10.0);
    const auto d = bound_configuration(BoundKind::discord, BoundRole::upper, 0.5, 1.0, 10.0);
    EXPECT_EQ(d.omega_a, 0.0);
    EXPECT_EQ(d.N_b, 0.0);
    EXPECT_THROW(bound_configuration(BoundKind::discord, BoundRole::lower, 0.5, 1.0, 10.0), std::invalid_argument);
}

TEST(BoundCurves, MonotoneAndTruncatedAtStabilityEdge)
{
    const auto curve = bound_curve(BoundKind::mutual_info, BoundRole::upper, 0.5, 1.0, 2.0, 201);
    ASSERT_GT(curve.points.size(), 10u);
    EXPECT_TRUE(curve.truncated);
    EXPECT_NEAR(curve.G_stop, 1.585, 0.01);
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        EXPECT_GT(curve.points[i].pi_s, curve.points[i - 1].pi_s);
        EXPECT_GT(curve.points[i].value, curve.points[i - 1].value);
    }
    EXPECT_NEAR(curve.points.front().pi_s, 0.0, 1e-14);
}

TEST(BoundCurves, InterpolationAndRootFindingAgree)
{
    const auto curve = bound_curve(BoundKind::discord, BoundRole::upper, 0.5, 1.0, 2.0, 401);
    const double pi = curve.points[curve.points.size() / 3].pi_s * 1.01;
    EXPECT_NEAR(curve.interpolate(pi), bound_value_at(curve, pi), 1e-4 * bound_value_at(curve, pi));
    EXPECT_TRUE(std::isnan(curve.interpolate(-1.0)));
    EXPECT_TRUE(std::isnan(curve.interpolate(curve.points.back().pi_s * 2.0)));
}

TEST(BoundCurves, RootFindingHitsTarget)
{
    const auto curve = bound_curve(BoundKind::mutual_info, BoundRole::lower, 0.5, 1.0, 2.0, 51);
    for (double pi : {1e-3, 0.1, 1.0}) {
        const double v = bound_value_at(curve, pi);
        ASSERT_TRUE(std::isfinite(v));
        EXPECT_GT(v, 0.0);
    }
    const auto upper = bound_curve(BoundKind::mutual_info, BoundRole::upper, 0.5, 1.0, 2.0, 51);
    EXPECT_TRUE(std::isnan(bound_value_at(upper, 1e6)));
}

TEST(BoundCurves, LowerAsymptote)
{
    EXPECT_NEAR(asymptotic_min_mutual_info(0.5, 1.0), 0.5 * std::log(20.625), 1e-3);
    EXPECT_NEAR(asymptotic_min_mutual_info(0.5, 1.0), 1.513252, 1e-6);
    const auto p = bound_configuration(BoundKind::mutual_info, BoundRole::lower, 0.5, 1.0, 10.0);
    auto q = p;
    q.G = 1e3;
    const auto r = analyze_steady_state(q);
    ASSERT_TRUE(r.stable);
    EXPECT_NEAR(r.correlations.renyi2_I, asymptotic_min_mutual_info(0.5, 1.0), 1e-3);
}
