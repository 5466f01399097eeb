#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
도메인 모델 정의

이 모듈은 모든 단계가 공유하는 불변 데이터 타입을 정의합니다:
- 예제(Example)와 클러스터링 키(MetaParam)
- 클러스터 테이블과 누적 분포 점
- 템플릿(앵커/슬롯), 슬롯, 문자 클래스 격자
- 정규식 아티팩트와 평가 리포트
"""

import itertools
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple, Union

POSITIVE = "positive"
NEGATIVE = "negative"
LABELS = (POSITIVE, NEGATIVE)


@dataclass(frozen=True)
class Example:
    """코퍼스 또는 주석 데이터셋의 예제 하나"""

    raw: str
    label: Optional[str] = None
    span: Optional[str] = None
    context_left: Optional[str] = None
    context_right: Optional[str] = None
    outlier: Optional[bool] = None
    doc_id: Optional[str] = None

    def __post_init__(self):
        if self.label is not None and self.label not in LABELS:
            raise ValueError(f"알 수 없는 레이블: {self.label}")

    @property
    def document(self) -> str:
        """추출 대상 문서 (좌측 문맥 + 스팬 + 우측 문맥)"""
        if self.span is None:
            return self.raw
        return f"{self.context_left or ''}{self.span}{self.context_right or ''}"

    @property
    def is_positive(self) -> bool:
        return self.label == POSITIVE


@dataclass(frozen=True, order=True)
class MetaParam:
    """연속 중복이 압축된 추상 패턴 문자열 (클러스터링 키)"""

    pattern: str

    def __post_init__(self):
        for left, right in zip(self.pattern, self.pattern[1:]):
            if left == right:
                raise ValueError(f"압축되지 않은 MetaParam: {self.pattern!r}")

    @classmethod
    def canonicalize(cls, text: str) -> "MetaParam":
        """임의의 기호열에서 연속된 동일 기호를 하나로 합쳐 MetaParam을 만듭니다."""
        return cls("".join(symbol for symbol, _ in itertools.groupby(text)))

    def __str__(self) -> str:
        return self.pattern

    def __len__(self) -> int:
        return len(self.pattern)


@dataclass(frozen=True)
class ClusterEntry:
    """한 MetaParam에 속한 멤버 문자열과 빈도"""

    members: Tuple[str, ...]
    frequency: int

    @property
    def unique_members(self) -> List[str]:
        return sorted(set(self.members))


@dataclass(frozen=True)
class ClusterTable:
    """MetaParam별 클러스터 테이블"""

    entries: Dict[MetaParam, ClusterEntry]
    total: int

    def __post_init__(self):
        frequency_sum = sum(entry.frequency for entry in self.entries.values())
        if frequency_sum != self.total:
            raise ValueError(f"빈도 합({frequency_sum})이 전체 예제 수({self.total})와 다릅니다")

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, metaparam: MetaParam) -> bool:
        return metaparam in self.entries

    def __getitem__(self, metaparam: MetaParam) -> ClusterEntry:
        return self.entries[metaparam]

    def ranked(self) -> List[Tuple[MetaParam, ClusterEntry]]:
        """빈도 내림차순, 동률이면 MetaParam 사전순으로 정렬된 클러스터 목록"""
        return sorted(self.entries.items(), key=lambda item: (-item[1].frequency, item[0].pattern))


@dataclass(frozen=True)
class CdfPoint:
    """빈도 순위별 누적 비율"""

    rank: int
    cumulative_fraction: float


@dataclass(frozen=True)
class Anchor:
    """템플릿의 고정 문자열 요소"""

    text: str


@dataclass(frozen=True)
class SlotRef:
    """템플릿의 가변 슬롯 요소"""

    index: int


Element = Union[Anchor, SlotRef]


@dataclass(frozen=True)
class Template:
    """
    앵커와 슬롯이 교차하는 템플릿

    fillings[i][k]는 i번째 멤버가 k번째 슬롯에 채운 부분 문자열입니다.
    """

    elements: Tuple[Element, ...]
    members: Tuple[str, ...] = ()
    fillings: Tuple[Tuple[str, ...], ...] = ()

    def __post_init__(self):
        for left, right in zip(self.elements, self.elements[1:]):
            if type(left) is type(right):
                raise ValueError(f"인접한 동일 요소: {left!r}, {right!r}")
        if len(self.fillings) != len(self.members):
            raise ValueError("멤버 수와 슬롯 채움 목록 수가 다릅니다")

    @property
    def anchors(self) -> List[str]:
        return [element.text for element in self.elements if isinstance(element, Anchor)]

    @property
    def slot_count(self) -> int:
        return sum(1 for element in self.elements if isinstance(element, SlotRef))

    def slot_fillings(self, index: int) -> List[str]:
        """k번째 슬롯에 대한 모든 멤버의 채움 문자열"""
        return [member_fillings[index] for member_fillings in self.fillings]

    def reconstruct(self, member_index: int) -> str:
        """앵커와 멤버의 슬롯 채움을 요소 순서대로 이어 붙입니다."""
        member_fillings = self.fillings[member_index]
        parts = []
        for element in self.elements:
            if isinstance(element, Anchor):
                parts.append(element.text)
            else:
                parts.append(member_fillings[element.index])
        return "".join(parts)


@dataclass(frozen=True)
class LatticeNode:
    """
    문자 클래스 격자의 노드

    Attributes:
        name: 노드 식별자 (리터럴은 문자 자신)
        level: 0 = 리터럴, 숫자가 클수록 추상적
        category: 정렬용 문자 범주 (소문자, 대문자, 숫자, 한자, 공백, 기타 순)
        bracket_body: 대괄호 안에서의 표기
        bare: 단독으로 쓰일 때의 표기
    """

    name: str
    level: int
    category: int
    bracket_body: str
    bare: str

    @property
    def is_literal(self) -> bool:
        return self.level == 0

    def sort_key(self) -> Tuple[int, int, str]:
        return (-self.level, self.category, self.name)


@dataclass(frozen=True)
class AbstractionTree:
    """
    계층적 추상화 트리 (문자 클래스 격자)

    리터럴의 부모는 classify로 정해지고, 클래스 노드의 부모는 parents 표를 따릅니다.
    top은 자기 자신의 부모입니다.
    """

    top: LatticeNode
    classify: Callable[[str], LatticeNode] = field(repr=False)
    leaf: Callable[[str], LatticeNode] = field(repr=False)
    parents: Dict[str, LatticeNode] = field(default_factory=dict, repr=False)

    def parent(self, node: LatticeNode) -> LatticeNode:
        if node.is_literal:
            return self.classify(node.name)
        if node == self.top:
            return self.top
        return self.parents.get(node.name, self.top)

    def ancestors(self, node: LatticeNode) -> List[LatticeNode]:
        """node의 조상 목록 (자기 자신 제외, top 포함)"""
        chain = []
        current = node
        while current != self.top:
            current = self.parent(current)
            chain.append(current)
        return chain

    @property
    def depth(self) -> int:
        return self.top.level


@dataclass(frozen=True)
class Exact:
    """정확히 n회 반복"""

    count: int

    def render(self) -> str:
        return "" if self.count == 1 else f"{{{self.count}}}"


@dataclass(frozen=True)
class Range:
    """low 이상 high 이하 반복"""

    low: int
    high: int

    def __post_init__(self):
        if not (0 <= self.low <= self.high and self.high >= 1):
            raise ValueError(f"잘못된 반복 범위: {{{self.low},{self.high}}}")

    def render(self) -> str:
        return f"{{{self.low},{self.high}}}"


@dataclass(frozen=True)
class Star:
    """0회 이상 반복"""

    def render(self) -> str:
        return "*"


Quantifier = Union[Exact, Range, Star]

GREEDY = "greedy"
LAZY = "lazy"


@dataclass(frozen=True)
class Slot:
    """통합된 문자 클래스 원자 집합 + 수량자 + 매칭 모드"""

    atoms: FrozenSet[LatticeNode]
    quantifier: Quantifier
    mode: str = GREEDY

    def __post_init__(self):
        if not self.atoms:
            raise ValueError("슬롯에는 최소 하나의 원자가 필요합니다")
        if len(self.atoms) >= 4:
            raise ValueError(f"슬롯 원자 수가 너무 많습니다: {len(self.atoms)}")
        if self.mode not in (GREEDY, LAZY):
            raise ValueError(f"알 수 없는 매칭 모드: {self.mode}")


@dataclass(frozen=True)
class RegexArtifact:
    """클러스터 하나에 대해 생성된 정규식과 출처 정보"""

    source_metaparam: MetaParam
    regex: str
    n_training_examples: int
    template: Template
    slots: Tuple[Slot, ...] = ()
    rank: Optional[int] = None

    def compile(self) -> "re.Pattern":
        return re.compile(self.regex)

    def fullmatch(self, text: str) -> bool:
        return self.compile().fullmatch(text) is not None


@dataclass(frozen=True)
class EvalReport:
    """추출 평가 결과"""

    extractions: int
    correct: int
    positives: int
    precision: float
    recall: float
    f_measure: float
    noisy_precision: Optional[float] = None
    outlier_extractions: Optional[int] = None
    normal_examples: Optional[int] = None

    def __post_init__(self):
        if self.correct > self.extractions or self.correct > self.positives:
            raise ValueError("정답 추출 수가 추출 수 또는 양성 예제 수보다 큽니다")

    def to_dict(self) -> Dict[str, Optional[float]]:
        return {
            "extractions": self.extractions,
            "correct": self.correct,
            "positives": self.positives,
            "precision": self.precision,
            "recall": self.recall,
            "f_measure": self.f_measure,
            "noisy_precision": self.noisy_precision,
            "outlier_extractions": self.outlier_extractions,
            "normal_examples": self.normal_examples,
        }
