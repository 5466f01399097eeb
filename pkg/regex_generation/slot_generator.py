#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
슬롯 생성 모듈

슬롯 하나의 채움 문자열 집합을 정규식 조각으로 바꾸는 단계별 파이프라인:
1. 중복 제거 및 길이 정보 계산
2. 대괄호 문자 클래스(coarse-grained) 생성
3. 유효성 검사 (원자 수 4 미만)
4. 계층적 추상화 트리를 따라 상위 노드로 추상화 (유효해질 때까지 반복)
5. 원자 통합
6. 수량자 생성
7. 이스케이프 및 최종 정규식 조립
"""

import logging
import re
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from abstraction.metaparam import transform_and_compress
from core.exceptions import CompileFailure, SoundnessViolation
from core.models import (
    GREEDY,
    LAZY,
    AbstractionTree,
    Anchor,
    Exact,
    LatticeNode,
    MetaParam,
    Quantifier,
    Range,
    RegexArtifact,
    Slot,
    Star,
    Template,
)
from .abstraction_tree import DEFAULT_TREE, escape_literal

logger = logging.getLogger(__name__)

MAX_ATOMS = 4

__all__ = [
    "SlotPipelineState",
    "dedup_and_lengths",
    "coarse_class",
    "is_valid",
    "abstract_up",
    "lift_until_valid",
    "order_atoms",
    "consolidate",
    "gen_quantifier",
    "render_quantifier",
    "run_slot_pipeline",
    "generate_slot_fragment",
    "escape_literal",
    "assemble_regex",
]


@dataclass(frozen=True)
class SlotPipelineState:
    """슬롯 생성 파이프라인의 단계별 결과"""

    unique_fillings: FrozenSet[str]
    min_len: int
    max_len: int
    coarse_atoms: FrozenSet[LatticeNode]
    atoms: FrozenSet[LatticeNode]
    lifts: int
    quantifier: Quantifier
    mode: str
    final_fragment: str

    def __post_init__(self):
        if not self.unique_fillings or self.min_len > self.max_len:
            raise ValueError("잘못된 슬롯 파이프라인 상태")

    def to_slot(self) -> Slot:
        return Slot(atoms=self.atoms, quantifier=self.quantifier, mode=self.mode)


def dedup_and_lengths(fillings: Sequence[str]) -> Tuple[FrozenSet[str], int, int]:
    """
    채움 문자열의 중복을 제거하고 최소/최대 길이를 계산합니다.

    Returns:
        (고유 채움 집합, 최소 길이, 최대 길이)
    """
    if not fillings:
        raise ValueError("채움 문자열이 없습니다")
    unique = frozenset(fillings)
    lengths = [len(text) for text in unique]
    return unique, min(lengths), max(lengths)


def coarse_class(unique: Iterable[str], tree: AbstractionTree = DEFAULT_TREE) -> FrozenSet[LatticeNode]:
    """모든 채움 문자열에 등장하는 문자의 리터럴 노드 집합"""
    return frozenset(tree.leaf(ch) for text in unique for ch in text)


def is_valid(atoms: FrozenSet[LatticeNode]) -> bool:
    return len(atoms) < MAX_ATOMS


def abstract_up(atoms: FrozenSet[LatticeNode], tree: AbstractionTree = DEFAULT_TREE) -> FrozenSet[LatticeNode]:
    """
    집합에서 가장 낮은 레벨의 원자들을 부모 노드로 올립니다.

    Args:
        atoms: 원자 집합
        tree: 추상화 트리

    Returns:
        중복이 제거된 새 원자 집합 (top만 남으면 그대로)
    """
    lowest = min(atom.level for atom in atoms)
    return frozenset(tree.parent(atom) if atom.level == lowest else atom for atom in atoms)


def lift_until_valid(
    atoms: FrozenSet[LatticeNode], tree: AbstractionTree = DEFAULT_TREE
) -> Tuple[FrozenSet[LatticeNode], int]:
    """유효해질 때까지 abstract_up을 반복하고 (결과, 반복 횟수)를 반환합니다."""
    lifts = 0
    while not is_valid(atoms):
        atoms = abstract_up(atoms, tree)
        lifts += 1
    return atoms, lifts


def order_atoms(atoms: Iterable[LatticeNode], tree: AbstractionTree = DEFAULT_TREE) -> List[LatticeNode]:
    """
    다른 원자에 포함되는 원자를 제거하고 정규 순서로 정렬합니다.

    정렬 순서: 레벨 내림차순, 문자 범주(소문자, 대문자, 숫자, 한자, 공백, 기타), 코드 포인트
    """
    atom_set = set(atoms)
    if tree.top in atom_set:
        return [tree.top]
    kept = [atom for atom in atom_set if not any(ancestor in atom_set for ancestor in tree.ancestors(atom))]
    return sorted(kept, key=LatticeNode.sort_key)


def consolidate(atoms: Iterable[LatticeNode], tree: AbstractionTree = DEFAULT_TREE) -> str:
    """
    원자들을 하나의 문자 클래스 표현으로 통합합니다.

    Returns:
        "[a-z0-9]" 같은 대괄호 표현, 원자가 하나면 대괄호 없이 (예: "a", ".")
    """
    ordered = order_atoms(atoms, tree)
    if len(ordered) == 1:
        return ordered[0].bare
    return "[" + "".join(atom.bracket_body for atom in ordered) + "]"


def gen_quantifier(min_len: int, max_len: int, bounded_star: bool = False) -> Quantifier:
    """
    길이 정보로 수량자를 만듭니다.

    Args:
        min_len: 최소 채움 길이
        max_len: 최대 채움 길이 (1 이상)
        bounded_star: 빈 문자열이 있을 때 "*" 대신 {0,max}를 사용

    Returns:
        Star, Exact 또는 Range
    """
    if max_len < 1 or min_len > max_len:
        raise ValueError(f"잘못된 길이 정보: ({min_len}, {max_len})")
    if min_len == 0:
        return Range(0, max_len) if bounded_star else Star()
    if min_len == max_len:
        return Exact(min_len)
    return Range(min_len, max_len)


def render_quantifier(quantifier: Quantifier, mode: str = GREEDY) -> str:
    suffix = quantifier.render()
    # 반복 표기가 없는 단일 원자에 "?"를 붙이면 선택 항목이 되므로 붙이지 않습니다
    if mode == LAZY and suffix:
        suffix += "?"
    return suffix


def run_slot_pipeline(
    fillings: Sequence[str],
    tree: AbstractionTree = DEFAULT_TREE,
    mode: str = GREEDY,
    bounded_star: bool = False,
) -> SlotPipelineState:
    """
    채움 문자열 목록에 슬롯 생성 파이프라인 전체를 적용합니다.

    Args:
        fillings: 슬롯 채움 문자열 목록 (모두 빈 문자열이면 안 됨)
        tree: 추상화 트리
        mode: greedy 또는 lazy
        bounded_star: "*" 대신 {0,max} 사용 여부

    Returns:
        SlotPipelineState
    """
    unique, min_len, max_len = dedup_and_lengths(fillings)
    if max_len == 0:
        raise ValueError("모든 채움 문자열이 비어 있는 슬롯은 생성할 수 없습니다")

    coarse = coarse_class(unique, tree)
    atoms, lifts = lift_until_valid(coarse, tree)
    quantifier = gen_quantifier(min_len, max_len, bounded_star)
    fragment = consolidate(atoms, tree) + render_quantifier(quantifier, mode)
    return SlotPipelineState(
        unique_fillings=unique,
        min_len=min_len,
        max_len=max_len,
        coarse_atoms=coarse,
        atoms=atoms,
        lifts=lifts,
        quantifier=quantifier,
        mode=mode,
        final_fragment=fragment,
    )


def generate_slot_fragment(
    fillings: Sequence[str],
    tree: AbstractionTree = DEFAULT_TREE,
    mode: str = GREEDY,
    bounded_star: bool = False,
) -> str:
    """채움 문자열 목록을 정규식 조각으로 변환합니다 (예: ["12", "345"] -> "[0-9]{2,3}")."""
    return run_slot_pipeline(fillings, tree, mode, bounded_star).final_fragment


def assemble_regex(
    template: Template,
    slot_fragments: Sequence[str],
    metaparam: Optional[MetaParam] = None,
    slots: Sequence[Slot] = (),
    rank: Optional[int] = None,
) -> RegexArtifact:
    """
    템플릿의 앵커(이스케이프)와 슬롯 조각을 요소 순서대로 이어 정규식을 만듭니다.

    생성된 정규식이 컴파일되지 않거나 학습 멤버를 완전 일치하지 못하면
    파이프라인 버그이므로 예외를 발생시킵니다.

    Returns:
        RegexArtifact
    """
    if len(slot_fragments) != template.slot_count:
        raise ValueError(f"슬롯 조각 수({len(slot_fragments)})가 슬롯 수({template.slot_count})와 다릅니다")

    parts = []
    for element in template.elements:
        if isinstance(element, Anchor):
            parts.append(escape_literal(element.text))
        else:
            parts.append(slot_fragments[element.index])
    regex = "".join(parts)

    try:
        compiled = re.compile(regex)
    except re.error as e:
        logger.error(f"정규식 컴파일 실패: {regex!r}: {e}")
        raise CompileFailure(f"정규식 컴파일 실패: {regex!r}: {e}") from e

    for member in sorted(set(template.members)):
        if compiled.fullmatch(member) is None:
            raise SoundnessViolation(f"정규식 {regex!r}가 학습 멤버 {member!r}와 일치하지 않습니다")

    if metaparam is None:
        metaparam = transform_and_compress(template.members[0]) if template.members else MetaParam("")

    return RegexArtifact(
        source_metaparam=metaparam,
        regex=regex,
        n_training_examples=len(template.members),
        template=template,
        slots=tuple(slots),
        rank=rank,
    )
