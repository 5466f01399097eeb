#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
추출 평가 모듈

이 모듈은 다음 기능을 제공합니다:
- 정규식 집합을 문서에 적용 (아티팩트 순서대로, 첫 번째 비어 있지 않은 일치 채택)
- 추출 수, 정답 추출 수, 양성 예제 수로 정밀도/재현율/F-measure 계산
- 잡음 정밀도: (정답 추출 - 이상치 추출) / 정상 예제 수
"""

import logging
import re
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Pattern, Sequence, Tuple

from core.exceptions import DivisionByZero
from core.models import POSITIVE, EvalReport, Example, RegexArtifact

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExtractionOutcome:
    """문서 하나의 추출 결과"""

    doc_id: str
    extracted: Optional[str]
    annotated_span: Optional[str]
    label: Optional[str]
    outlier: Optional[bool] = None
    artifact_index: Optional[int] = None

    def __post_init__(self):
        if self.extracted == "":
            raise ValueError("빈 문자열은 추출로 기록하지 않습니다")

    @property
    def is_extraction(self) -> bool:
        return self.extracted is not None

    @property
    def is_correct(self) -> bool:
        return self.is_extraction and self.label == POSITIVE and self.extracted == self.annotated_span


def leftmost_longest(pattern: Pattern, text: str) -> Optional[str]:
    """
    문서에서 가장 왼쪽에서 시작하는 비어 있지 않은 일치 중 가장 긴 것을 찾습니다.

    Args:
        pattern: 컴파일된 정규식
        text: 문서

    Returns:
        일치 문자열, 없으면 None
    """
    for start in range(len(text)):
        if pattern.match(text, start) is None:
            continue
        for end in range(len(text), start, -1):
            if pattern.fullmatch(text, start, end) is not None:
                return text[start:end]
    return None


def extract_document(patterns: Sequence[Pattern], document: str) -> Optional[Tuple[int, str]]:
    """아티팩트 순서대로 검색하여 (아티팩트 인덱스, 일치 문자열)을 반환합니다."""
    for index, pattern in enumerate(patterns):
        match = leftmost_longest(pattern, document)
        if match:
            return index, match
    return None


def run_extraction(artifacts: Sequence[RegexArtifact], docs: Sequence[Example], workers: int = 1) -> List[ExtractionOutcome]:
    """
    정규식 아티팩트 목록을 문서들에 적용합니다.

    아티팩트는 학습 클러스터 빈도 내림차순으로 주어진다고 가정하며,
    문서마다 처음으로 비어 있지 않은 일치를 낸 정규식의 결과를 채택합니다.

    Args:
        artifacts: 정규식 아티팩트 목록
        docs: 주석이 달린 문서 목록
        workers: 문서 처리에 사용할 스레드 수

    Returns:
        문서별 ExtractionOutcome 목록 (입력 순서 유지)
    """
    patterns = [re.compile(artifact.regex) for artifact in artifacts]

    def process(indexed_doc):
        position, doc = indexed_doc
        found = extract_document(patterns, doc.document)
        artifact_index, extracted = found if found else (None, None)
        return ExtractionOutcome(
            doc_id=doc.doc_id or str(position),
            extracted=extracted,
            annotated_span=doc.span,
            label=doc.label,
            outlier=doc.outlier,
            artifact_index=artifact_index,
        )

    indexed = list(enumerate(docs))
    if workers > 1 and len(indexed) > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            outcomes = list(executor.map(process, indexed))
    else:
        outcomes = [process(item) for item in indexed]

    logger.info(f"문서 {len(docs)}개 중 {sum(o.is_extraction for o in outcomes)}개에서 추출")
    return outcomes


def noisy_precision(correct: int, outlier_extractions: int, normal_examples: int) -> float:
    """
    잡음 정밀도를 계산합니다.

    Args:
        correct: 정답 추출 수
        outlier_extractions: 이상치 문서에서의 추출 수
        normal_examples: 정상 예제 수

    Returns:
        [0, 1] 범위로 잘린 (correct - outlier_extractions) / normal_examples
    """
    if normal_examples == 0:
        raise DivisionByZero("정상 예제 수가 0이라 잡음 정밀도를 계산할 수 없습니다")

    raw = (correct - outlier_extractions) / normal_examples
    if raw < 0.0 or raw > 1.0:
        clamped = min(1.0, max(0.0, raw))
        logger.warning(f"잡음 정밀도 {raw:.4f}가 [0, 1]을 벗어나 {clamped}로 조정됨")
        return clamped
    return raw


def _ratio(numerator: int, denominator: int) -> float:
    return numerator / denominator if denominator else 0.0


def score(outcomes: Sequence[ExtractionOutcome]) -> EvalReport:
    """
    추출 결과로 평가 리포트를 만듭니다.

    이상치 표시가 있는 결과가 하나라도 있으면 잡음 정밀도도 함께 계산합니다.
    정상 예제는 이상치로 표시되지 않은 양성 문서입니다.

    Returns:
        EvalReport
    """
    extractions = sum(1 for outcome in outcomes if outcome.is_extraction)
    correct = sum(1 for outcome in outcomes if outcome.is_correct)
    positives = sum(1 for outcome in outcomes if outcome.label == POSITIVE)

    precision = _ratio(correct, extractions)
    recall = _ratio(correct, positives)
    f_measure = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0

    noisy = None
    outlier_extractions = None
    normal_examples = None
    if any(outcome.outlier is not None for outcome in outcomes):
        outlier_extractions = sum(1 for outcome in outcomes if outcome.outlier and outcome.is_extraction)
        normal_examples = sum(1 for outcome in outcomes if not outcome.outlier and outcome.label == POSITIVE)
        if normal_examples:
            noisy = noisy_precision(correct, outlier_extractions, normal_examples)
        else:
            logger.warning("정상 예제가 없어 잡음 정밀도를 생략합니다")

    return EvalReport(
        extractions=extractions,
        correct=correct,
        positives=positives,
        precision=precision,
        recall=recall,
        f_measure=f_measure,
        noisy_precision=noisy,
        outlier_extractions=outlier_extractions,
        normal_examples=normal_examples,
    )
