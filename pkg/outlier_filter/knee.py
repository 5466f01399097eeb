#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Knee 지점 기반 이상치 필터 모듈

이 모듈은 다음 기능을 제공합니다:
- 클러스터 빈도의 누적 분포(CDF) 계산
- 정규화된 CDF에서 현(chord)까지의 수직 거리가 최대인 순위를 knee로 선택
  (최빈 클러스터가 압도적이면 원점 현, 그 밖에는 첫 점과 끝 점을 잇는 현)
- knee 순위 이하 클러스터는 정상, 나머지는 이상치로 분리

전제: 정상 예제가 이상치보다 훨씬 많다는 가정에서만 의미가 있습니다.
이 가정은 실행 중에 검사하지 않습니다.
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from core.exceptions import EmptyCdf, EmptyTable, OverrideOutOfRange
from core.models import CdfPoint, ClusterTable, MetaParam

logger = logging.getLogger(__name__)

DEFAULT_FLATNESS_EPS = 0.01


@dataclass(frozen=True)
class KneeResult:
    """knee 판정 결과"""

    knee_rank: int
    retained: List[MetaParam]
    filtered: List[MetaParam]
    cdf: List[CdfPoint]
    frequencies: List[int]
    distances: List[float]
    overridden: bool = False
    from_origin: bool = False

    def __post_init__(self):
        if len(self.retained) != self.knee_rank:
            raise ValueError("정상 클러스터 수가 knee 순위와 다릅니다")
        if len(self.retained) + len(self.filtered) != len(self.cdf):
            raise ValueError("정상/이상치 분할이 전체 클러스터를 덮지 않습니다")

    @property
    def ranked(self) -> List[MetaParam]:
        return self.retained + self.filtered

    def to_frame(self) -> pd.DataFrame:
        """클러스터별 진단 표 (metaparam, frequency, rank, cumulative_fraction, retained, distance)"""
        return pd.DataFrame(
            {
                "metaparam": [str(metaparam) for metaparam in self.ranked],
                "frequency": self.frequencies,
                "rank": [point.rank for point in self.cdf],
                "cumulative_fraction": [point.cumulative_fraction for point in self.cdf],
                "retained": [point.rank <= self.knee_rank for point in self.cdf],
                "distance": self.distances,
            }
        )


def build_cdf(table: ClusterTable) -> List[CdfPoint]:
    """
    클러스터 빈도의 누적 분포를 계산합니다.

    Args:
        table: 비어 있지 않은 클러스터 테이블

    Returns:
        빈도 내림차순(동률이면 MetaParam 사전순) 순위별 누적 비율
    """
    if not len(table) or table.total == 0:
        raise EmptyTable("클러스터 테이블이 비어 있습니다")

    frequencies = np.array([entry.frequency for _, entry in table.ranked()], dtype=np.int64)
    fractions = np.cumsum(frequencies) / float(table.total)
    # 부동소수점 누적 오차와 무관하게 마지막 점은 정확히 1.0
    fractions[-1] = 1.0
    return [CdfPoint(rank=rank, cumulative_fraction=float(value)) for rank, value in enumerate(fractions, start=1)]


def chord_distances(cdf: Sequence[CdfPoint], from_origin: bool = False) -> np.ndarray:
    """
    정규화 순위 u_k = k/K와 누적 비율 v_k로 이루어진 점들에서 현까지의 수직 거리를 계산합니다.

    Args:
        cdf: build_cdf 결과
        from_origin: True이면 원점 (0, 0)에서 끝 점까지의 현, False이면 첫 점에서 끝 점까지의 현

    Returns:
        순위별 거리 배열
    """
    count = len(cdf)
    coords = np.column_stack(
        (
            np.arange(1, count + 1, dtype=float) / count,
            np.array([point.cumulative_fraction for point in cdf], dtype=float),
        )
    )
    start = np.zeros(2) if from_origin else coords[0]
    line_vec = coords[-1] - start
    norm = np.sqrt(np.sum(line_vec ** 2))
    if norm == 0:
        return np.zeros(count)
    line_unit = line_vec / norm
    from_start = coords - start
    parallel = np.outer(from_start @ line_unit, line_unit)
    return np.sqrt(np.sum((from_start - parallel) ** 2, axis=1))


def locate_knee(cdf: Sequence[CdfPoint], flatness_eps: float = DEFAULT_FLATNESS_EPS) -> Tuple[int, np.ndarray, bool]:
    """
    knee 순위와 판정에 사용한 현의 거리를 구합니다.

    원점 현에서 첫 순위가 가장 멀면 최빈 클러스터 하나만 남깁니다.
    그렇지 않으면 첫 점 현에서 가장 먼 순위를 고릅니다.
    원점 현의 최대 거리가 flatness_eps보다 작으면 평탄한 분포로 보고 전체를 유지합니다.

    Returns:
        (knee 순위, 순위별 거리, 원점 현 사용 여부)
    """
    if not cdf:
        raise EmptyCdf("누적 분포가 비어 있습니다")

    count = len(cdf)
    origin = chord_distances(cdf, from_origin=True)
    # argmax는 동률일 때 가장 작은 순위를 고릅니다
    best = int(np.argmax(origin))
    if origin[best] < flatness_eps:
        logger.debug(f"평탄한 분포 (최대 거리 {origin[best]:.6f}), 모든 클러스터 유지")
        return count, origin, True
    if best == 0:
        return 1, origin, True

    first = chord_distances(cdf)
    elbow = int(np.argmax(first))
    if first[elbow] < flatness_eps:
        return best + 1, origin, True
    return elbow + 1, first, False


def detect_knee(cdf: Sequence[CdfPoint], flatness_eps: float = DEFAULT_FLATNESS_EPS) -> int:
    """
    누적 분포에서 knee 순위를 찾습니다.

    Args:
        cdf: build_cdf 결과
        flatness_eps: 최대 거리가 이 값보다 작으면 분포가 평탄하다고 보고 전체를 유지

    Returns:
        knee 순위 (1 이상 K 이하)
    """
    return locate_knee(cdf, flatness_eps)[0]


def filter_outliers(
    table: ClusterTable,
    override: Optional[int] = None,
    flatness_eps: float = DEFAULT_FLATNESS_EPS,
) -> KneeResult:
    """
    클러스터를 정상과 이상치로 분리합니다.

    Args:
        table: 클러스터 테이블
        override: 수동 knee 순위 (지정하면 자동 판정을 대체)
        flatness_eps: 평탄 분포 허용치

    Returns:
        KneeResult
    """
    cdf = build_cdf(table)
    ranked = table.ranked()

    if override is not None and not 1 <= override <= len(ranked):
        raise OverrideOutOfRange(f"knee 순위 {override}가 범위(1..{len(ranked)})를 벗어났습니다")
    detected, distances, from_origin = locate_knee(cdf, flatness_eps)
    knee_rank = override if override is not None else detected

    metaparams = [metaparam for metaparam, _ in ranked]
    result = KneeResult(
        knee_rank=knee_rank,
        retained=metaparams[:knee_rank],
        filtered=metaparams[knee_rank:],
        cdf=cdf,
        frequencies=[entry.frequency for _, entry in ranked],
        distances=[float(value) for value in distances],
        overridden=override is not None,
        from_origin=from_origin,
    )
    logger.info(
        f"knee 순위 {knee_rank}: 정상 클러스터 {len(result.retained)}개, "
        f"이상치 클러스터 {len(result.filtered)}개"
    )
    return result
