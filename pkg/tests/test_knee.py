#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Knee 기반 이상치 필터 테스트

이 모듈은 누적 분포 계산, knee 판정, 수동 순위 지정을 테스트합니다.
"""

import math
import os
import random
import sys
import unittest

# 상위 디렉토리 추가하여 모듈 임포트 가능하게 함
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.exceptions import EmptyCdf, EmptyTable, OverrideOutOfRange
from core.models import CdfPoint, ClusterEntry, ClusterTable, MetaParam
from outlier_filter.knee import build_cdf, detect_knee, filter_outliers


def make_table(frequencies):
    """{패턴: 빈도}로 ClusterTable을 만듭니다 (멤버는 자리 표시 문자열)."""
    entries = {
        MetaParam(pattern): ClusterEntry(members=tuple(f"{pattern}#{i}" for i in range(count)), frequency=count)
        for pattern, count in frequencies.items()
    }
    return ClusterTable(entries=entries, total=sum(frequencies.values()))


def make_cdf(fractions):
    return [CdfPoint(rank=k, cumulative_fraction=v) for k, v in enumerate(fractions, start=1)]


def oracle_distances(fractions):
    """첫 점과 끝 점을 잇는 직선까지의 거리를 점-직선 공식으로 직접 계산합니다."""
    count = len(fractions)
    x1, y1 = 1 / count, fractions[0]
    x2, y2 = 1.0, fractions[-1]
    length = math.hypot(x2 - x1, y2 - y1)
    distances = []
    for k, v in enumerate(fractions, start=1):
        u = k / count
        if length == 0:
            distances.append(0.0)
        else:
            distances.append(abs((y2 - y1) * u - (x2 - x1) * v + x2 * y1 - y2 * x1) / length)
    return distances


def origin_gaps(fractions):
    """원점과 (1, 1)을 잇는 대각선 y = u 까지의 거리 (v - u) / sqrt(2)"""
    count = len(fractions)
    return [abs(v - k / count) / math.sqrt(2) for k, v in enumerate(fractions, start=1)]


class TestBuildCdf(unittest.TestCase):
    """누적 분포 테스트 클래스"""

    def test_fractions(self):
        table = make_table({"A": 900, "B": 50, "C": 30, "D": 10, "E": 5, "F": 3, "G": 1, "H": 1})
        fractions = [point.cumulative_fraction for point in build_cdf(table)]
        expected = [0.900, 0.950, 0.980, 0.990, 0.995, 0.998, 0.999, 1.000]
        for actual, wanted in zip(fractions, expected):
            self.assertAlmostEqual(actual, wanted, places=9)
        self.assertEqual(fractions[-1], 1.0)

    def test_single_cluster(self):
        self.assertEqual([p.cumulative_fraction for p in build_cdf(make_table({"A": 1}))], [1.0])

    def test_tie_order(self):
        table = make_table({"B": 2, "A": 2})
        self.assertEqual([p.cumulative_fraction for p in build_cdf(table)], [0.5, 1.0])
        self.assertEqual([str(m) for m, _ in table.ranked()], ["A", "B"])

    def test_empty_table(self):
        with self.assertRaises(EmptyTable):
            build_cdf(ClusterTable(entries={}, total=0))


class TestDetectKnee(unittest.TestCase):
    """knee 판정 테스트 클래스"""

    def test_skewed_vector(self):
        """첫 클러스터가 질량 대부분을 차지하면 knee는 1"""
        fractions = [0.900, 0.950, 0.980, 0.990, 0.995, 0.998, 0.999, 1.000]
        self.assertEqual(detect_knee(make_cdf(fractions)), 1)

    def test_two_equal_clusters_keep_all(self):
        self.assertEqual(detect_knee(make_cdf([0.5, 1.0])), 2)

    def test_dominant_cluster_with_one_rare_cluster(self):
        self.assertEqual(detect_knee(make_cdf([100 / 101, 1.0])), 1)

    def test_uniform_flat_fallback(self):
        self.assertEqual(detect_knee(make_cdf([k / 10 for k in range(1, 11)])), 10)

    def test_empty(self):
        with self.assertRaises(EmptyCdf):
            detect_knee([])

    def test_matches_oracle(self):
        """무작위 치우친 빈도 벡터 100개에서 독립 계산과 일치"""
        rng = random.Random(99)
        for _ in range(100):
            count = rng.randint(2, 30)
            frequencies = sorted((int(rng.paretovariate(1.2) * 10) + 1 for _ in range(count)), reverse=True)
            total = sum(frequencies)
            running = 0
            fractions = []
            for value in frequencies:
                running += value
                fractions.append(running / total)
            fractions[-1] = 1.0
            gaps = origin_gaps(fractions)
            distances = oracle_distances(fractions)
            knee = detect_knee(make_cdf(fractions))
            msg = str(frequencies)
            if max(gaps) < 0.01:
                self.assertEqual(knee, count, msg=msg)
            elif gaps.index(max(gaps)) == 0:
                self.assertEqual(knee, 1, msg=msg)
            elif max(distances) < 0.01:
                self.assertAlmostEqual(gaps[knee - 1], max(gaps), places=12, msg=msg)
            else:
                self.assertGreater(knee, 1, msg=msg)
                self.assertAlmostEqual(distances[knee - 1], max(distances), places=12, msg=msg)

    def test_flat_vectors_keep_all(self):
        for count in range(1, 20):
            table = make_table({f"A{chr(97 + i)}": 7 for i in range(count)})
            self.assertEqual(filter_outliers(table).knee_rank, count)


class TestFilterOutliers(unittest.TestCase):
    """이상치 필터 테스트 클래스"""

    def test_illustrative_table(self):
        table = make_table({"X_d": 500, "x_d": 300, "x_xd": 150, "q#": 3, "zdz": 1})
        result = filter_outliers(table)
        self.assertEqual([str(m) for m in result.retained], ["X_d", "x_d", "x_xd"])
        self.assertEqual([str(m) for m in result.filtered], ["q#", "zdz"])
        self.assertFalse(result.overridden)

    def test_dominant_cluster_filters_rare_clusters(self):
        table = make_table({"X_d": 950, "q#": 5, "zdz": 4, "d.x": 4, "~x~": 3, "@d": 2})
        result = filter_outliers(table)
        self.assertEqual([str(m) for m in result.retained], ["X_d"])
        self.assertEqual(len(result.filtered), 5)
        self.assertTrue(result.from_origin)

    def test_two_clusters_with_rare_second(self):
        result = filter_outliers(make_table({"X_d": 100, "x!": 1}))
        self.assertEqual([str(m) for m in result.filtered], ["x!"])

    def test_elbow_uses_first_point_chord(self):
        result = filter_outliers(make_table({"X_d": 500, "x_d": 300, "x_xd": 150, "q#": 3, "zdz": 1}))
        self.assertFalse(result.from_origin)
        self.assertAlmostEqual(result.distances[0], 0.0, places=12)

    def test_single_cluster(self):
        result = filter_outliers(make_table({"X_d": 5}))
        self.assertEqual(len(result.retained), 1)
        self.assertEqual(result.filtered, [])

    def test_override(self):
        table = make_table({"X_d": 500, "x_d": 300, "x_xd": 150, "q#": 3})
        result = filter_outliers(table, override=1)
        self.assertEqual([str(m) for m in result.retained], ["X_d"])
        self.assertTrue(result.overridden)
        self.assertEqual(len(filter_outliers(table, override=2).retained), 2)
        for bad in (0, 5):
            with self.assertRaises(OverrideOutOfRange):
                filter_outliers(table, override=bad)

    def test_scale_invariance(self):
        frequencies = {"X_d": 40, "x_d": 25, "d": 9, "q#": 2, "zdz": 1}
        base = filter_outliers(make_table(frequencies)).knee_rank
        scaled = filter_outliers(make_table({k: v * 3 for k, v in frequencies.items()})).knee_rank
        self.assertEqual(base, scaled)

    def test_monotone_threshold(self):
        rng = random.Random(5)
        for _ in range(50):
            frequencies = {f"A{chr(97 + i)}": rng.randint(1, 200) for i in range(rng.randint(1, 12))}
            result = filter_outliers(make_table(frequencies))
            if result.filtered:
                self.assertGreaterEqual(
                    min(frequencies[str(m)] for m in result.retained),
                    max(frequencies[str(m)] for m in result.filtered),
                )

    def test_frame(self):
        result = filter_outliers(make_table({"X_d": 500, "x_d": 300, "x_xd": 150, "q#": 3, "zdz": 1}))
        frame = result.to_frame()
        self.assertEqual(list(frame.columns), ["metaparam", "frequency", "rank", "cumulative_fraction", "retained", "distance"])
        self.assertEqual(frame["retained"].tolist(), [True, True, True, False, False])


if __name__ == "__main__":
    unittest.main()
