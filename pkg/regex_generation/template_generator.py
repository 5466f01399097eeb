#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
템플릿 생성 모듈

클러스터 멤버들의 공통 부분 수열을 앵커로 삼고, 연속되지 않은 앵커 문자
사이에 슬롯을 넣어 템플릿을 만듭니다.
- 앵커: 모든 멤버에서 좌측 우선 정렬 위치가 연속인 LCS 문자들의 최대 묶음
- 슬롯: 앵커 사이, 그리고 잔여 문자가 있는 경우 처음/끝의 가변 영역
"""

import logging
from typing import Dict, List, Optional, Sequence, Tuple

from abstraction.lcs import common_subsequence, leftmost_embedding
from core.exceptions import AlignmentFailure, EmptyCluster, InvalidExample
from core.models import Anchor, Element, SlotRef, Template

logger = logging.getLogger(__name__)


def _anchor_starts(member: str, anchors: Sequence[str]) -> List[int]:
    """앵커 문자들을 좌측 우선으로 대응시킨 뒤 앵커별 시작 위치를 구합니다."""
    positions = leftmost_embedding("".join(anchors), member)
    if positions is None:
        raise AlignmentFailure(f"앵커가 멤버의 부분 수열이 아닙니다: {member!r}")

    starts = []
    offset = 0
    for anchor in anchors:
        chunk = positions[offset:offset + len(anchor)]
        if chunk[-1] - chunk[0] != len(anchor) - 1:
            raise AlignmentFailure(f"앵커 {anchor!r}가 멤버 {member!r}에서 연속되지 않습니다")
        starts.append(chunk[0])
        offset += len(anchor)
    return starts


def align_member(
    member: str,
    anchors: Sequence[str],
    positions: Optional[Sequence[int]] = None,
    leading: bool = False,
    trailing: bool = False,
) -> List[str]:
    """
    멤버 문자열을 앵커 목록에 정렬하여 슬롯 채움 문자열을 구합니다.

    Args:
        member: 클러스터 멤버
        anchors: 순서대로 나열된 앵커 문자열
        positions: 앵커별 시작 위치 (없으면 좌측 우선 정렬로 계산)
        leading: 첫 앵커 앞 슬롯 존재 여부
        trailing: 마지막 앵커 뒤 슬롯 존재 여부

    Returns:
        슬롯 순서대로의 채움 문자열 목록
    """
    if not anchors:
        return [member]

    starts = list(positions) if positions is not None else _anchor_starts(member, anchors)
    fillings = []
    cursor = 0
    for k, (anchor, start) in enumerate(zip(anchors, starts)):
        if start < cursor or member[start:start + len(anchor)] != anchor:
            raise AlignmentFailure(f"앵커 {anchor!r}가 위치 {start}에 없습니다: {member!r}")
        gap = member[cursor:start]
        if k > 0 or leading:
            fillings.append(gap)
        elif gap:
            raise AlignmentFailure(f"선행 슬롯 없이 앞부분 잔여 문자가 있습니다: {member!r}")
        cursor = start + len(anchor)

    tail = member[cursor:]
    if trailing:
        fillings.append(tail)
    elif tail:
        raise AlignmentFailure(f"후행 슬롯 없이 뒷부분 잔여 문자가 있습니다: {member!r}")
    return fillings


def _split_runs(embeddings: Sequence[List[int]], length: int) -> List[Tuple[int, int]]:
    """모든 멤버에서 인접한 LCS 문자끼리 묶어 (시작, 끝) 구간 목록을 만듭니다."""
    runs = []
    start = 0
    for i in range(1, length):
        if any(positions[i] != positions[i - 1] + 1 for positions in embeddings):
            runs.append((start, i))
            start = i
    runs.append((start, length))
    return runs


def build_template(members: Sequence[str]) -> Template:
    """
    클러스터 멤버들로 템플릿을 만듭니다.

    Args:
        members: 비어 있지 않은 멤버 문자열 목록

    Returns:
        모든 멤버를 정확히 재구성하는 Template
    """
    if not members:
        raise EmptyCluster("템플릿을 만들 멤버가 없습니다")
    if any(not member for member in members):
        raise InvalidExample("빈 문자열 멤버는 허용되지 않습니다")

    unique = sorted(set(members))
    lcs = common_subsequence(unique)

    if not lcs:
        elements: Tuple[Element, ...] = (SlotRef(0),)
        fillings = tuple((member,) for member in members)
        logger.debug(f"공통 앵커 없음, 전체 문자열 슬롯 하나로 구성 ({len(unique)}개 고유 멤버)")
        return Template(elements=elements, members=tuple(members), fillings=fillings)

    embeddings: Dict[str, List[int]] = {}
    for member in unique:
        positions = leftmost_embedding(lcs, member)
        if positions is None:
            raise AlignmentFailure(f"공통 부분 수열이 멤버의 부분 수열이 아닙니다: {member!r}")
        embeddings[member] = positions

    runs = _split_runs(list(embeddings.values()), len(lcs))
    anchors = [lcs[start:end] for start, end in runs]
    leading = any(positions[0] > 0 for positions in embeddings.values())
    trailing = any(positions[-1] < len(member) - 1 for member, positions in embeddings.items())

    element_list: List[Element] = []
    slot_index = 0
    if leading:
        element_list.append(SlotRef(slot_index))
        slot_index += 1
    for k, anchor in enumerate(anchors):
        if k > 0:
            element_list.append(SlotRef(slot_index))
            slot_index += 1
        element_list.append(Anchor(anchor))
    if trailing:
        element_list.append(SlotRef(slot_index))

    aligned = {
        member: tuple(
            align_member(
                member,
                anchors,
                positions=[embeddings[member][start] for start, _ in runs],
                leading=leading,
                trailing=trailing,
            )
        )
        for member in unique
    }
    template = Template(
        elements=tuple(element_list),
        members=tuple(members),
        fillings=tuple(aligned[member] for member in members),
    )

    for index, member in enumerate(members):
        if template.reconstruct(index) != member:
            raise AlignmentFailure(f"템플릿이 멤버를 재구성하지 못했습니다: {member!r}")

    logger.debug(f"템플릿 생성: 앵커 {anchors}, 슬롯 {template.slot_count}개")
    return template
