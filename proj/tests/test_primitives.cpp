#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "linklogic/error.hpp"
#include "linklogic/primitives/balance.hpp"
#include "linklogic/primitives/crosscheck.hpp"
#include "linklogic/primitives/lock.hpp"
#include "support.hpp"

namespace lp = linklogic::primitives;
using linklogic::testing::Gen;

TEST(Lock, SetExamples) {
  EXPECT_EQ(lp::lock_set({0, 0}, 0, 1), (lp::LockState{1, 0}));
  EXPECT_THROW(lp::lock_set({1, 0}, 1, 1), linklogic::BindingViolation);
  EXPECT_EQ(lp::lock_set({1, 0}, 0, 0), (lp::LockState{0, 0}));
  EXPECT_EQ(lp::lock_set({0, 0}, 1, 0), (lp::LockState{0, 0}));
}

TEST(Lock, LockedSides) {
  EXPECT_TRUE(lp::lock_is_locked({1, 0}, 1));
  EXPECT_FALSE(lp::lock_is_locked({1, 0}, 0));
  EXPECT_FALSE(lp::lock_is_locked({0, 0}, 0));
  EXPECT_FALSE(lp::lock_is_locked({0, 0}, 1));
  EXPECT_TRUE(lp::lock_is_locked({0, 1}, 0));
}

TEST(Lock, StateMachineNeverReachesBothAndNeverDeadlocks) {
  // Breadth-first over every (side, value) event from the rest state.
  std::set<std::pair<int, int>> seen{{0, 0}};
  std::deque<lp::LockState> todo{{0, 0}};
  while (!todo.empty()) {
    const auto s = todo.front();
    todo.pop_front();
    for (int side : {0, 1})
      for (int v : {0, 1}) {
        lp::LockState n;
        try {
          n = lp::lock_set(s, side, v);
        } catch (const linklogic::BindingViolation&) {
          continue;
        }
        ASSERT_FALSE(n.input0 == 1 && n.input1 == 1);
        if (seen.insert({n.input0, n.input1}).second) todo.push_back(n);
      }
  }
  EXPECT_EQ(seen.size(), 3u);
  for (auto [a, b] : seen) {
    lp::LockState s{a, b};
    s = lp::lock_set(lp::lock_set(s, 0, 0), 1, 0);
    EXPECT_EQ(s, (lp::LockState{0, 0}));
  }
}

TEST(Balance, ActuateExamples) {
  auto s = lp::balance_actuate({0, true, false, 0, 0});
  EXPECT_EQ(s.output1, 1);
  EXPECT_EQ(s.output0, 0);
  EXPECT_THROW(lp::balance_actuate({0, false, false, 0, 0}), linklogic::BothSidesFree);
  EXPECT_THROW(lp::balance_actuate({0, true, true, 0, 0}), linklogic::BothSidesLocked);
}

TEST(Balance, AllEightCombinations) {
  for (int l0 : {0, 1})
    for (int l1 : {0, 1})
      for (int in : {0, 1}) {
        lp::BalanceState st;
        try {
          st = lp::balance_settle(l0, l1, in);
        } catch (const linklogic::BothSidesFree&) {
          EXPECT_TRUE(in == 1 && !l0 && !l1);
          continue;
        } catch (const linklogic::BothSidesLocked&) {
          EXPECT_TRUE(in == 1 && l0 && l1);
          continue;
        }
        EXPECT_FALSE(st.output0 == 1 && st.output1 == 1);
        if (in == 0) EXPECT_EQ(st.output0 + st.output1, 0);
        if (in == 1) {
          EXPECT_EQ(st.output0, l1 ? 1 : 0);
          EXPECT_EQ(st.output1, l0 ? 1 : 0);
        }
        const auto rel = lp::balance_release(st);
        EXPECT_EQ(rel.output0 + rel.output1 + rel.input, 0);
      }
}

TEST(Crosscheck, CanonicalGeometryPasses) {
  const auto rep = lp::crosscheck_lock({});
  EXPECT_TRUE(rep.passed());
  EXPECT_NO_THROW(rep.raise_if_failed());
  EXPECT_GE(rep.items.size(), 9u);
}

TEST(Crosscheck, LongConnectingLinkIsReported) {
  linklogic::kinematics::LockGeometry g;
  g.r = 1.2;
  const auto rep = lp::crosscheck_lock(g);
  EXPECT_FALSE(rep.passed());
  EXPECT_THROW(rep.raise_if_failed(), linklogic::CrosscheckFailed);
}

TEST(Crosscheck, SmallActivationAnglePasses) {
  linklogic::kinematics::LockGeometry g;
  g.theta_on = 0.2;
  EXPECT_TRUE(lp::crosscheck_lock(g).passed());
}

TEST(Crosscheck, RandomGeometriesPass) {
  Gen gen(21);
  for (int n = 0; n < 5; ++n) {
    linklogic::kinematics::LockGeometry g;
    g.L = gen.uniform(0.5, 2.0);
    g.r = g.L;
    g.theta_on = gen.uniform(0.3, 1.0);
    EXPECT_TRUE(lp::crosscheck_lock(g).passed()) << "L=" << g.L << " on=" << g.theta_on;
  }
}
