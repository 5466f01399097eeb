#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
최장 공통 부분 수열 모듈

이 모듈은 템플릿 앵커의 기반이 되는 LCS 계산을 제공합니다:
- 두 문자열의 LCS (좌측 우선 동률 처리)
- 여러 문자열에 대한 쌍별 LCS 좌측 접기
- 부분 수열의 좌측 우선 정렬 위치
"""

import logging
from typing import List, Optional, Sequence, Tuple

logger = logging.getLogger(__name__)


def _suffix_lengths(a: str, b: str) -> List[List[int]]:
    """lengths[i][j] = LCS(a[i:], b[j:])의 길이"""
    n, m = len(a), len(b)
    lengths = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(n - 1, -1, -1):
        row, below = lengths[i], lengths[i + 1]
        ch = a[i]
        for j in range(m - 1, -1, -1):
            if ch == b[j]:
                row[j] = below[j + 1] + 1
            else:
                row[j] = max(below[j], row[j + 1])
    return lengths


def lcs_alignment(a: str, b: str) -> List[Tuple[int, int]]:
    """
    두 문자열의 LCS를 구성하는 일치 위치 쌍을 반환합니다.

    길이가 같은 LCS가 여럿이면 a에서의 일치 위치가 사전순으로 가장 작은 것을
    고르고, 그 안에서 b의 위치도 가장 앞쪽을 고릅니다.

    Args:
        a: 첫 번째 문자열
        b: 두 번째 문자열

    Returns:
        (a 위치, b 위치) 목록
    """
    lengths = _suffix_lengths(a, b)
    pairs = []
    i, j = 0, 0
    remaining = lengths[0][0]
    while remaining:
        for candidate in range(i, len(a)):
            k = b.find(a[candidate], j)
            # b의 가장 앞 일치가 남은 길이를 가장 크게 보존합니다
            if k >= 0 and lengths[candidate + 1][k + 1] == remaining - 1:
                pairs.append((candidate, k))
                i, j = candidate + 1, k + 1
                remaining -= 1
                break
        else:
            raise RuntimeError("LCS 역추적 실패")
    return pairs


def lcs_pair(a: str, b: str) -> str:
    """
    두 문자열의 최장 공통 부분 수열을 반환합니다.

    Args:
        a: 첫 번째 문자열
        b: 두 번째 문자열

    Returns:
        LCS 문자열 (공통 문자가 없으면 빈 문자열)
    """
    if not a or not b:
        return ""
    if a == b:
        return a
    return "".join(a[i] for i, _ in lcs_alignment(a, b))


def common_subsequence(strings: Sequence[str]) -> str:
    """
    입력 순서대로 lcs_pair를 좌측 접기하여 모든 문자열의 공통 부분 수열을 구합니다.

    정확한 다중 문자열 LCS가 아니라 휴리스틱이므로 실제 최장보다 짧을 수 있습니다.

    Args:
        strings: 비어 있지 않은 문자열 목록

    Returns:
        모든 입력의 공통 부분 수열
    """
    if not strings:
        raise ValueError("공통 부분 수열을 구할 문자열이 없습니다")

    result = strings[0]
    for text in strings[1:]:
        if not result:
            break
        result = lcs_pair(result, text)
    return result


def leftmost_embedding(subsequence: str, text: str) -> Optional[List[int]]:
    """
    subsequence의 각 문자를 text에서 가장 앞쪽 위치에 대응시킵니다.

    Returns:
        문자별 위치 목록, 부분 수열이 아니면 None
    """
    positions = []
    cursor = 0
    for ch in subsequence:
        cursor = text.find(ch, cursor)
        if cursor < 0:
            return None
        positions.append(cursor)
        cursor += 1
    return positions


def is_subsequence(subsequence: str, text: str) -> bool:
    return leftmost_embedding(subsequence, text) is not None
