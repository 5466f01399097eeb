#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
MetaParam 추상화 모듈

이 모듈은 예제 추상화 알고리즘의 두 단계를 구현합니다:
- Mapper: 예제를 문자 클래스 기호로 변환하고 연속 기호를 압축
- Reducer: MetaParam별로 멤버를 병합하고 빈도를 계산

Mapper 단계는 스레드 풀에서 병렬로 실행될 수 있으며, 병합은 결합·교환
법칙을 만족하므로 입력 순서나 분할 방식과 관계없이 같은 테이블이 나옵니다.
"""

import itertools
import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, Iterable, List, Sequence

from core.exceptions import InvalidExample
from core.models import ClusterEntry, ClusterTable, Example, MetaParam
from .lcs import common_subsequence

logger = logging.getLogger(__name__)

# 변환 규칙: 한자 -> z, 영문 소문자 -> x, 영문 대문자 -> X, 숫자 -> d, 나머지는 유지
CJK_FIRST = "\u4e00"
CJK_LAST = "\u9fff"

ClusterMap = Dict[MetaParam, List[str]]


def transform_char(ch: str) -> str:
    """문자 하나를 변환 규칙에 따라 기호로 바꿉니다."""
    if CJK_FIRST <= ch <= CJK_LAST:
        return "z"
    if "a" <= ch <= "z":
        return "x"
    if "A" <= ch <= "Z":
        return "X"
    if "0" <= ch <= "9":
        return "d"
    return ch


def transform_and_compress(raw: str) -> MetaParam:
    """
    예제를 MetaParam으로 변환합니다.

    Args:
        raw: 비어 있지 않은 예제 문자열

    Returns:
        연속 기호가 압축된 MetaParam (예: "SMS_123456" -> "X_d")
    """
    if not raw:
        raise InvalidExample("빈 문자열은 MetaParam으로 변환할 수 없습니다")
    symbols = (transform_char(ch) for ch in raw)
    return MetaParam("".join(symbol for symbol, _ in itertools.groupby(symbols)))


def map_partition(raws: Iterable[str]) -> ClusterMap:
    """Mapper: 예제 묶음 하나를 MetaParam별 멤버 목록으로 변환합니다."""
    clusters: ClusterMap = defaultdict(list)
    for raw in raws:
        clusters[transform_and_compress(raw)].append(raw)
    return clusters


def merge_cluster_maps(left: ClusterMap, right: ClusterMap) -> ClusterMap:
    """Reducer: 두 부분 결과를 병합합니다 (결합·교환 법칙 성립)."""
    merged: ClusterMap = defaultdict(list)
    for partial in (left, right):
        for metaparam, members in partial.items():
            merged[metaparam].extend(members)
    return merged


def _partition(items: Sequence[str], parts: int) -> List[Sequence[str]]:
    size = max(1, -(-len(items) // parts))
    return [items[start:start + size] for start in range(0, len(items), size)]


def build_cluster_table(examples: Sequence[Example], workers: int = 1) -> ClusterTable:
    """
    예제 목록으로 MetaParam 클러스터 테이블을 만듭니다.

    Args:
        examples: 코퍼스 예제 목록
        workers: Mapper 단계에 사용할 스레드 수

    Returns:
        키와 멤버가 정렬된 ClusterTable
    """
    raws = [example.raw for example in examples]
    if not raws:
        return ClusterTable(entries={}, total=0)

    partitions = _partition(raws, max(1, workers))
    if workers > 1 and len(partitions) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            partials = list(executor.map(map_partition, partitions))
    else:
        partials = [map_partition(part) for part in partitions]

    merged: ClusterMap = {}
    for partial in partials:
        merged = merge_cluster_maps(merged, partial)

    entries = {
        metaparam: ClusterEntry(members=tuple(sorted(merged[metaparam])), frequency=len(merged[metaparam]))
        for metaparam in sorted(merged)
    }
    logger.info(f"{len(raws)}개 예제에서 {len(entries)}개 MetaParam 클러스터 생성")
    return ClusterTable(entries=entries, total=len(raws))


def cluster_common_subsequence(entry: ClusterEntry) -> str:
    """클러스터 멤버(중복 제거, 정렬)의 공통 부분 수열"""
    return common_subsequence(entry.unique_members)


def corpus_common_subsequence(table: ClusterTable) -> str:
    """
    코퍼스 전체의 공통 부분 수열을 구합니다 (진단용).

    각 클러스터의 공통 부분 수열을 MetaParam 정렬 순서대로 다시 접습니다.
    """
    if not len(table):
        return ""
    per_cluster = [cluster_common_subsequence(table[metaparam]) for metaparam in sorted(table.entries)]
    return common_subsequence(per_cluster)
