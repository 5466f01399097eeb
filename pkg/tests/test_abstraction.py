#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
MetaParam 추상화 및 LCS 테스트

이 모듈은 문자 변환/압축, 클러스터 테이블, 최장 공통 부분 수열을 테스트합니다.
"""

import itertools
import os
import random
import sys
import unittest

# 상위 디렉토리 추가하여 모듈 임포트 가능하게 함
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from abstraction.lcs import common_subsequence, is_subsequence, lcs_pair, leftmost_embedding
from abstraction.metaparam import build_cluster_table, corpus_common_subsequence, transform_and_compress
from core.exceptions import InvalidExample
from core.models import Example, MetaParam


def brute_force_lcs_length(a, b):
    """a의 모든 부분 수열을 나열하여 b의 부분 수열인 것 중 가장 긴 길이를 구합니다."""
    for length in range(len(a), 0, -1):
        for indices in itertools.combinations(range(len(a)), length):
            if is_subsequence("".join(a[i] for i in indices), b):
                return length
    return 0


class TestTransformAndCompress(unittest.TestCase):
    """MetaParam 변환 테스트 클래스"""

    def test_examples(self):
        """대표 예제 변환"""
        self.assertEqual(str(transform_and_compress("SMS_123456")), "X_d")
        self.assertEqual(str(transform_and_compress("123")), "d")
        self.assertEqual(str(transform_and_compress("a")), "x")
        self.assertEqual(str(transform_and_compress("ab-你好--7")), "x-z-d")
        self.assertEqual(str(transform_and_compress("你好2024")), "zd")

    def test_empty_input(self):
        with self.assertRaises(InvalidExample):
            transform_and_compress("")

    def test_no_consecutive_repeats(self):
        """결과에는 연속된 동일 기호가 없어야 함"""
        rng = random.Random(7)
        alphabet = "aZ9_-你 .b"
        for _ in range(500):
            raw = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 12)))
            pattern = str(transform_and_compress(raw))
            for left, right in zip(pattern, pattern[1:]):
                self.assertNotEqual(left, right)

    def test_length_monotonicity(self):
        """MetaParam은 원래 예제보다 길 수 없음"""
        rng = random.Random(11)
        alphabet = "aZ9_-你 .b(x)"
        for _ in range(500):
            raw = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 16)))
            self.assertLessEqual(len(str(transform_and_compress(raw))), len(raw), msg=raw)

    def test_canonical_form_idempotence(self):
        """임의 기호열을 정규화한 결과를 다시 정규화해도 같아야 함"""
        rng = random.Random(13)
        alphabet = "dxXz_-.!"
        for _ in range(500):
            text = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 16)))
            once = MetaParam.canonicalize(text)
            self.assertEqual(MetaParam.canonicalize(str(once)), once, msg=text)
            self.assertEqual(MetaParam(str(once)), once)

    def test_uncompressed_metaparam_rejected(self):
        with self.assertRaises(ValueError):
            MetaParam("dd")
        self.assertEqual(str(MetaParam.canonicalize("ddx__")), "dx_")


class TestClusterTable(unittest.TestCase):
    """클러스터 테이블 테스트 클래스"""

    def test_grouping(self):
        table = build_cluster_table([Example(raw) for raw in ["SMS_1", "SMS_23", "abc"]])
        self.assertEqual(table.total, 3)
        self.assertEqual(table[MetaParam("X_d")].frequency, 2)
        self.assertEqual(table[MetaParam("x")].frequency, 1)
        self.assertEqual(table[MetaParam("X_d")].members, ("SMS_1", "SMS_23"))

    def test_empty_corpus(self):
        table = build_cluster_table([])
        self.assertEqual(len(table), 0)
        self.assertEqual(table.total, 0)

    def test_single_cluster(self):
        table = build_cluster_table([Example("A7")] * 100)
        self.assertEqual(len(table), 1)
        self.assertEqual(table[MetaParam("Xd")].frequency, 100)

    def test_order_and_partition_invariance(self):
        """입력 순서와 병렬 작업 수에 관계없이 같은 테이블"""
        rng = random.Random(3)
        raws = ["SMS_%d" % rng.randint(0, 999) for _ in range(60)]
        raws += ["x%dy" % rng.randint(0, 99) for _ in range(30)]
        raws += ["(0%d)" % rng.randint(10, 99) for _ in range(10)]
        baseline = build_cluster_table([Example(raw) for raw in raws])

        shuffled = list(raws)
        rng.shuffle(shuffled)
        for workers in (1, 2, 4, 7):
            table = build_cluster_table([Example(raw) for raw in shuffled], workers=workers)
            self.assertEqual(table, baseline)

    def test_frequencies_sum_to_total(self):
        table = build_cluster_table([Example(raw) for raw in ["a", "b", "1", "A", "a1"]])
        self.assertEqual(sum(entry.frequency for entry in table.entries.values()), table.total)


class TestLcs(unittest.TestCase):
    """최장 공통 부분 수열 테스트 클래스"""

    def test_examples(self):
        self.assertEqual(lcs_pair("abc", "abc"), "abc")
        self.assertEqual(lcs_pair("ab", "ba"), "a")
        self.assertEqual(lcs_pair("SMS_12", "SMS_99"), "SMS_")
        self.assertEqual(lcs_pair("", "abc"), "")

    def test_phone_pair(self):
        """실제 최장 공통 부분 수열 길이를 따름"""
        self.assertEqual(lcs_pair("(021)64085875", "(010)64085875"), "(01)64085875")

    def test_common_subsequence(self):
        self.assertEqual(common_subsequence(["abc"]), "abc")
        self.assertEqual(common_subsequence(["(021)555", "(010)123"]), "(01)")
        self.assertEqual(common_subsequence(["xy", "ab"]), "")
        with self.assertRaises(ValueError):
            common_subsequence([])

    def test_common_subsequence_is_subsequence_of_all(self):
        rng = random.Random(11)
        for _ in range(200):
            strings = ["".join(rng.choice("abc(0)") for _ in range(rng.randint(1, 9))) for _ in range(rng.randint(1, 5))]
            result = common_subsequence(strings)
            for text in strings:
                self.assertTrue(is_subsequence(result, text))

    def test_brute_force_oracle(self):
        """길이 8 이하 {a,b,c} 문자열 쌍에서 전수 탐색과 길이가 같아야 함"""
        rng = random.Random(2024)
        for _ in range(10000):
            a = "".join(rng.choice("abc") for _ in range(rng.randint(0, 8)))
            b = "".join(rng.choice("abc") for _ in range(rng.randint(0, 8)))
            result = lcs_pair(a, b)
            self.assertEqual(len(result), brute_force_lcs_length(a, b), msg=f"{a!r}, {b!r}")
            self.assertTrue(is_subsequence(result, a))
            self.assertTrue(is_subsequence(result, b))

    def test_leftmost_embedding(self):
        self.assertEqual(leftmost_embedding("(0)5", "(021)5"), [0, 1, 4, 5])
        self.assertIsNone(leftmost_embedding("ba", "ab"))

    def test_corpus_common_subsequence(self):
        table = build_cluster_table([Example(raw) for raw in ["SMS_12", "SMS_99", "SMSa"]])
        self.assertEqual(corpus_common_subsequence(table), "SMS")


if __name__ == "__main__":
    unittest.main()
